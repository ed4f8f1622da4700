"""Tail-length statistics over all binary starts of a given length.

Everything here runs off one primitive: the vector of tail lengths for all
2^n packed starts.  Rows of the tail distribution, exact rational means,
prepend effects (does a 2 or 3 in front shorten or lengthen the tail), and
the share of each curl value all reduce to histograms and elementwise
compares of those vectors.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, NamedTuple, Optional, Tuple

import numpy as np

from . import backend
from .bits import PackedSeq, unpack
from .counts import CountTables
from .errors import CapExceeded, CurlError, FormulaOutOfRange, StepLimitExceeded
from .table import SuffixCNTable, default_table

TAIL_CAP = 24
_TAIL_STEP_LIMIT = 200


class TailRow(NamedTuple):
    n: int
    counts: Dict[int, int]
    mean: Fraction


class RottenReport(NamedTuple):
    rotten_count: int
    doubly_rotten_count: int
    examples: Tuple[Tuple[int, ...], ...]


class ThetaReport(NamedTuple):
    theta: Dict[int, Fraction]
    markov_estimate: float


@lru_cache(maxsize=3)
def _tau_vector(n: int, limit: int, threads: int) -> np.ndarray:
    """Tail length of every packed length-n start.  Treat as read-only."""
    table = default_table()
    kern = backend.kernels()
    out = np.empty(1 << n, dtype=np.uint8)
    bounds = backend.shard_bounds(0, 1 << n, threads)
    if len(bounds) == 1:
        kern.tail_tau_range(n, 0, 1 << n, table.codes, table.w, limit, out)
    else:
        with ThreadPoolExecutor(len(bounds)) as pool:
            list(pool.map(
                lambda lh: kern.tail_tau_range(n, lh[0], lh[1], table.codes,
                                               table.w, limit, out[lh[0]:lh[1]]),
                bounds))
    if (out == 255).any():
        raise StepLimitExceeded((), limit)
    return out


def _check_cap(n: int, cap: int) -> None:
    if not 1 <= n <= cap:
        raise CapExceeded("scan length %d outside 1..%d" % (n, cap))


def tail_row(n: int, cap: int = TAIL_CAP, threads: int = 1) -> TailRow:
    """Exact tail-length distribution at length n, including zero cells."""
    _check_cap(n, cap)
    tau = _tau_vector(n, _TAIL_STEP_LIMIT, threads)
    hist = np.bincount(tau)
    counts = {i: int(hist[i]) for i in range(hist.size)}
    mean = Fraction(sum(i * c for i, c in counts.items()), 1 << n)
    return TailRow(n, counts, mean)


def mean_tail(n: int, cap: int = TAIL_CAP, threads: int = 1) -> Fraction:
    """Average tail length over all 2^n starts, as an exact rational."""
    return tail_row(n, cap, threads).mean


def _prepend_taus(n: int, threads: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    # tails of s, 2.s and 3.s: a prepended symbol is the top bit at length n+1
    tau = _tau_vector(n, _TAIL_STEP_LIMIT, threads).astype(np.int16)
    tau1 = _tau_vector(n + 1, _TAIL_STEP_LIMIT, threads).astype(np.int16)
    half = 1 << n
    return tau, tau1[:half], tau1[half:]


def rotten_scan(n: int, cap: int = TAIL_CAP, threads: int = 1,
                max_examples: int = 5) -> RottenReport:
    """How many length-n starts lose tail length under some prepend.

    A start is rotten when prepending a 2 or a 3 strictly shortens its tail,
    and doubly rotten when both prepends do.  No doubly rotten start has
    ever turned up; one would be a real find, so report it loudly.
    """
    _check_cap(n, cap)
    tau, with2, with3 = _prepend_taus(n, threads)
    r2 = with2 < tau
    r3 = with3 < tau
    rotten = r2 | r3
    doubly = r2 & r3
    hits = np.flatnonzero(rotten)[:max_examples]
    examples = tuple(unpack(PackedSeq(int(s), n)) for s in hits)
    return RottenReport(int(rotten.sum()), int(doubly.sum()), examples)


def prefix_increase_scan(n: int, cap: int = TAIL_CAP, threads: int = 1) -> int:
    """How many length-n starts gain tail length under some prepend.

    Also verifies that no start gains under both prepends at once, which
    matches every length scanned so far; a witness raises loudly.
    """
    _check_cap(n, cap)
    tau, with2, with3 = _prepend_taus(n, threads)
    g2 = with2 > tau
    g3 = with3 > tau
    both = g2 & g3
    if both.any():
        witness = unpack(PackedSeq(int(np.flatnonzero(both)[0]), n))
        raise CurlError("start %s gains tail length under both prepends"
                        % (witness,))
    return int((g2 | g3).sum())


def essential_first_scan(n: int, cap: int = TAIL_CAP, threads: int = 1) -> int:
    """Count starts whose curl is only achieved with an empty leftover prefix.

    These are the s where every way of writing s = X . Y^k with k = curl(s)
    forces X to be empty.  Singletons count by convention.
    """
    _check_cap(n, cap)
    if n == 1:
        return 2  # no room for a leftover prefix at all
    table = default_table()
    kern = backend.kernels()
    bounds = backend.shard_bounds(0, 1 << n, threads)
    if len(bounds) == 1:
        return int(kern.essential_count_range(n, 0, 1 << n, table.codes, table.w))
    with ThreadPoolExecutor(len(bounds)) as pool:
        parts = pool.map(
            lambda lh: kern.essential_count_range(n, lh[0], lh[1],
                                                  table.codes, table.w), bounds)
        return sum(int(p) for p in parts)


def theta_stats(n: int, tables: CountTables) -> ThetaReport:
    """Share of each curl value at length n, plus the two-state chain estimate.

    theta_k = c(n,k)/2^n.  Modeling the extension as leaving the curl-2/3
    regime with probability 1-(theta_2+theta_3) per step predicts a mean
    escape time of n log 2 / log(1/(theta_2+theta_3)) appended terms.
    """
    theta = {k: Fraction(tables.get("c", n, k), 1 << n) for k in range(1, n + 1)}
    stay = theta.get(2, Fraction(0)) + theta.get(3, Fraction(0))
    if stay == 0:
        raise FormulaOutOfRange("chain estimate needs some curl-2/3 mass")
    est = n * math.log(2.0) / math.log(1.0 / float(stay))
    return ThetaReport(theta, est)
