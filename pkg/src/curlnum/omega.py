"""Searches for the longest tail any length-n start can reach.

Exhaustive mode sweeps all 2^n binary starts with the packed kernels and is
exact.  Pruned mode only generates starts that avoid an adjacent 3 3 and any
four-fold block repeat visible inside a sliding window, which is where the
record setters live; its results are reported as conjectural.  Both modes
reduce to (max tail, lexicographically least achiever, achiever count).
"""

from concurrent.futures import ThreadPoolExecutor
from typing import Dict, Iterator, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from . import backend
from .bits import PackedSeq, unpack
from .core import DEFAULT_STEP_LIMIT, extend_to_tail
from .errors import CapExceeded, CurlMismatch, StepLimitExceeded
from .fastcn import fast_tail_length
from .table import SuffixCNTable, default_table

OMEGA_EXHAUSTIVE_CAP = 26
PRUNED_CAP = 80
DEFAULT_BLOCK_BITS = 8
_SEARCH_STEP_LIMIT = 200
_KERNEL_LEN_CAP = 48  # pruned starts longer than this extend via python ints


class SearchReport(NamedTuple):
    n: int
    omega: int
    best: Tuple[int, ...]
    achiever_count: int
    mode: str
    conjectural: bool
    p2: Optional[bool] = None
    p3: Optional[bool] = None
    p4: Optional[bool] = None


class Construction(NamedTuple):
    start_len: int
    total_len: int
    tail: int


def has_adjacent_33(s: Sequence[int]) -> bool:
    return any(a == 3 and b == 3 for a, b in zip(s, s[1:]))


def has_four_repeat(s: Sequence[int]) -> bool:
    """True if some nonempty block occurs four times in a row anywhere."""
    s = tuple(s)
    n = len(s)
    for v in range(1, n // 4 + 1):
        for end in range(4 * v, n + 1):
            seg = s[end - 4 * v:end]
            if all(seg[x] == seg[x + v] for x in range(3 * v)):
                return True
    return False


def _window_ok(width: int) -> np.ndarray:
    """Per packed window: no adjacent 3 3, no four-fold repeat inside it."""
    w = np.arange(1 << width, dtype=np.int64)
    ok = np.ones(w.size, dtype=bool)
    if width >= 2:
        ok &= (w & (w >> 1) & ((1 << (width - 1)) - 1)) == 0
    for v in range(1, width // 4 + 1):
        m3 = (1 << (3 * v)) - 1
        for off in range(0, width - 4 * v + 1):
            t = w >> off
            ok &= ((t ^ (t >> v)) & m3) != 0
    return ok


class FollowTable:
    """Which length-b block may follow which, by the 2b-window checks."""

    def __init__(self, b: int, ok_single: np.ndarray, allowed: List[np.ndarray]):
        self.b = b
        self.ok_single = ok_single
        self.allowed = allowed

    @classmethod
    def build(cls, b: int) -> "FollowTable":
        if not 4 <= b <= 12:
            raise CapExceeded("block size %d outside 4..12" % b)
        ok1 = _window_ok(b)
        ok2 = _window_ok(2 * b)
        qs = np.arange(1 << b, dtype=np.int64)
        allowed = [np.flatnonzero(ok2[(p << b) | qs]) if ok1[p]
                   else np.empty(0, dtype=np.int64)
                   for p in range(1 << b)]
        return cls(b, ok1, allowed)


_FOLLOW_CACHE: Dict[int, FollowTable] = {}


def follow_table(b: int = DEFAULT_BLOCK_BITS) -> FollowTable:
    if b not in _FOLLOW_CACHE:
        _FOLLOW_CACHE[b] = FollowTable.build(b)
    return _FOLLOW_CACHE[b]


def _pruned_chunks(n: int, ft: FollowTable, chunk: int = 1 << 16) -> Iterator[np.ndarray]:
    """Packed pruned candidates of length n, in chunks, ascending."""
    if n <= ft.b:
        yield np.flatnonzero(_window_ok(n)).astype(np.uint64)
        return
    b = ft.b
    full, rem = divmod(n, b)
    buf: List[int] = []

    def push_tail(word: int, length: int, left: int) -> None:
        # symbol-by-symbol remainder with the same windowed checks
        if left == 0:
            buf.append(word)
            return
        for bit in (0, 1):
            w2 = (word << 1) | bit
            if w2 & 3 == 3:
                continue
            hit = False
            for v in range(1, min((length + 1) // 4, b // 2) + 1):
                if ((w2 ^ (w2 >> v)) & ((1 << (3 * v)) - 1)) == 0:
                    hit = True
                    break
            if not hit:
                push_tail(w2, length + 1, left - 1)

    mask_b = (1 << b) - 1
    stack: List[Tuple[int, int]] = [(int(p), 1)
                                    for p in np.flatnonzero(ft.ok_single)[::-1]]
    while stack:
        word, depth = stack.pop()
        if depth == full:
            if rem:
                push_tail(word, full * b, rem)
            else:
                buf.append(word)
            if len(buf) >= chunk:
                yield np.array(buf, dtype=np.uint64)
                buf = []
            continue
        for q in ft.allowed[word & mask_b][::-1]:
            stack.append(((word << b) | int(q), depth + 1))
    if buf:
        yield np.array(buf, dtype=np.uint64)


def _merge(parts) -> Tuple[int, int, int]:
    best_tau, best_s, count = -1, 0, 0
    for tau, s, cnt in parts:
        tau, s, cnt = int(tau), int(s), int(cnt)
        if tau < 0:
            raise StepLimitExceeded((), 0)
        if tau > best_tau:
            best_tau, best_s, count = tau, s, cnt
        elif tau == best_tau:
            count += cnt
            best_s = min(best_s, s)
    return best_tau, best_s, count


def _tail_py(word: int, n: int, table: SuffixCNTable, limit: int) -> int:
    # python-int extension for starts too long for the 192-bit kernels
    from .fastcn import packed_cn
    bits, length, tau = word, n, 0
    while True:
        k = packed_cn(bits, length, table).k
        if k == 1:
            return tau
        if k > 3:
            return tau + 1  # a value above 3 is unique and ends the run
        if tau >= limit:
            raise StepLimitExceeded(unpack(PackedSeq(bits, length)), tau)
        bits = (bits << 1) | (k - 2)
        length += 1
        tau += 1


def omega_search(n: int, mode: str = "exhaustive", cap: int = OMEGA_EXHAUSTIVE_CAP,
                 threads: int = 1, block_bits: int = DEFAULT_BLOCK_BITS,
                 step_limit: int = _SEARCH_STEP_LIMIT,
                 table: Optional[SuffixCNTable] = None) -> SearchReport:
    """Longest tail over length-n binary starts, exact or pruned.

    The reported best start is re-extended through the plain reference path
    as a cross-check before the report is returned.
    """
    if n < 1:
        raise CapExceeded("search needs n >= 1")
    if table is None:
        table = default_table()
    kern = backend.kernels()
    if mode == "exhaustive":
        if n > cap:
            raise CapExceeded("exhaustive search capped at %d" % cap)
        bounds = backend.shard_bounds(0, 1 << n, threads)
        if len(bounds) == 1:
            parts = [kern.tail_reduce_range(n, 0, 1 << n, table.codes, table.w,
                                            step_limit)]
        else:
            with ThreadPoolExecutor(len(bounds)) as pool:
                parts = list(pool.map(
                    lambda lh: kern.tail_reduce_range(n, lh[0], lh[1],
                                                      table.codes, table.w,
                                                      step_limit), bounds))
        tau, s, cnt = _merge(parts)
        best = unpack(PackedSeq(s, n))
        check = extend_to_tail(best, step_limit=max(step_limit, tau + 1))
        if check.tau != tau:
            raise CurlMismatch("kernel tail %d but reference says %d" % (tau, check.tau))
        return SearchReport(n, tau, best, cnt, "exhaustive", False)
    if mode != "pruned":
        raise ValueError("mode must be exhaustive or pruned: %r" % mode)
    if n > PRUNED_CAP:
        raise CapExceeded("pruned search capped at %d" % PRUNED_CAP)
    ft = follow_table(block_bits)
    if n <= _KERNEL_LEN_CAP:
        def work(seqs):
            return kern.tail_reduce_seqs(seqs, n, table.codes, table.w, step_limit)
    else:
        def work(seqs):
            out = (-1, 0, 0)
            for wd in seqs:
                t = _tail_py(int(wd), n, table, step_limit)
                out = _merge([out, (t, int(wd), 1)]) if out[0] >= 0 else (t, int(wd), 1)
            return out
    chunks = _pruned_chunks(n, ft)
    if threads > 1:
        with ThreadPoolExecutor(threads) as pool:
            parts = list(pool.map(work, chunks))
    else:
        parts = [work(ch) for ch in chunks]
    tau, s, cnt = _merge(parts)
    best = unpack(PackedSeq(s, n))
    check = extend_to_tail(best, step_limit=max(step_limit, tau + 1))
    if check.tau != tau:
        raise CurlMismatch("kernel tail %d but reference says %d" % (tau, check.tau))
    return SearchReport(n, tau, best, cnt, "pruned-P3P4", True,
                        p2=best[0] == 2, p3=not has_adjacent_33(best),
                        p4=not has_four_repeat(best))


def jump_points(n_max: int, mode: str = "exhaustive", **kwargs) -> List[int]:
    """All n <= n_max where the maximal tail beats every shorter length's."""
    out = []
    prev = -1
    for n in range(1, n_max + 1):
        om = omega_search(n, mode, **kwargs).omega
        if om > prev:
            out.append(n)
        prev = max(prev, om)
    return out


def construct_larger(s0: Sequence[int], step_limit: int = DEFAULT_STEP_LIMIT,
                     table: Optional[SuffixCNTable] = None) -> Construction:
    """Tail lower bound for a longer start built from s0's own extension.

    Extends s0 to its full tail E, then extends E followed by s0 again.  The
    resulting tail certifies a lower bound on the maximal tail at length
    |E| + |s0|.
    """
    s0 = tuple(s0)
    base = (fast_tail_length(s0, step_limit=step_limit, table=table)
            if set(s0) <= {2, 3} else extend_to_tail(s0, step_limit=step_limit))
    start = base.extension + s0
    ext = (fast_tail_length(start, step_limit=step_limit, table=table)
           if set(start) <= {2, 3} else extend_to_tail(start, step_limit=step_limit))
    return Construction(len(start), len(start) + ext.tau, ext.tau)
