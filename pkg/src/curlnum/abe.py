"""Suffix-extension counts over curl-1 sequences and the fast c(n,1) column.

For S of curl 1 and its length-i suffix u, three counts drive everything:

a(n,i)   how many S keep curl 1 when u is prepended once (u.S)
b(n,i)   how many survive prepending u and another full copy of S (S.u.S)
e(n,i,j) how many S have u.S surviving the b-style test at suffix length j

a falls back to c(n,1) minus a short sum of b cells, b falls back to a minus
a short sum of e cells (or to a smaller b cell), and e is enumerated
directly below a cap.  The mutual recursion shrinks its first argument
quickly, so column c(n,1) extends far past enumeration range at interactive
speed.

One printed rule needed correcting: for n/3 <= i <= n/2 the survivor count
b(n,i) is not 0 but exactly a(n,i); enumeration confirms this at every such
cell for n <= 14, and the corrected rule is forced by the published values
it feeds (for instance a(5,4) = c(5,1) - b(2,1) = 12 - 2 = 10).
"""

import os
from fractions import Fraction
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from . import backend
from .core import curling_number
from .counts import is_primitive
from .errors import (
    CapExceeded,
    CurlMismatch,
    IndexOutOfRange,
    MissingDependency,
    NotPrimitive,
)
from .table import SuffixCNTable, default_table

AB_BRUTE_CAP = 24
E_BRUTE_CAP = 20

_STORE_HEADER = "abestore 1"


class ABEStore:
    """Memo store for the a/b/e mutual recursion.

    Plain dicts guarded by the interpreter lock: concurrent reads are free,
    writes are one key at a time.  Persists as sorted `kind n i j value`
    lines under a version header.
    """

    def __init__(self, e_brute_cap: int = E_BRUTE_CAP):
        self.a: Dict[Tuple[int, int], int] = {}
        self.b: Dict[Tuple[int, int], int] = {}
        self.e: Dict[Tuple[int, int, int], int] = {}
        self.c1: Dict[int, int] = {}
        self.e_brute_cap = e_brute_cap

    def save(self, path: str) -> None:
        lines = [_STORE_HEADER]
        for (n, i), v in sorted(self.a.items()):
            lines.append("a %d %d 0 %d" % (n, i, v))
        for (n, i), v in sorted(self.b.items()):
            lines.append("b %d %d 0 %d" % (n, i, v))
        for n, v in sorted(self.c1.items()):
            lines.append("c1 %d 0 0 %d" % (n, v))
        for (n, i, j), v in sorted(self.e.items()):
            lines.append("e %d %d %d %d" % (n, i, j, v))
        tmp = path + ".tmp"
        with open(tmp, "w") as fh:
            fh.write("\n".join(lines) + "\n")
        os.replace(tmp, path)

    @classmethod
    def load(cls, path: str, e_brute_cap: int = E_BRUTE_CAP) -> "ABEStore":
        store = cls(e_brute_cap)
        with open(path) as fh:
            header = fh.readline().strip()
            if header != _STORE_HEADER:
                raise ValueError("unrecognized store header %r" % header)
            for line in fh:
                kind, n, i, j, v = line.split()
                n, i, j, v = int(n), int(i), int(j), int(v)
                if kind == "a":
                    store.a[(n, i)] = v
                elif kind == "b":
                    store.b[(n, i)] = v
                elif kind == "e":
                    store.e[(n, i, j)] = v
                elif kind == "c1":
                    store.c1[n] = v
                else:
                    raise ValueError("unrecognized record kind %r" % kind)
        return store


def _curl1_members(n: int, table: SuffixCNTable) -> np.ndarray:
    kern = backend.kernels()
    out = np.empty(1 << n, dtype=np.uint64)
    m = kern.cn1_filter_range(n, 0, 1 << n, table.codes, table.w, out)
    return out[: int(m)]


def abe_brute(kind: str, n: int, i: int, j: Optional[int] = None,
              table: Optional[SuffixCNTable] = None,
              cap: Optional[int] = None) -> int:
    """Count a/b/e cells by enumerating the curl-1 sequences of length n.

    The e enumeration tests a word of length 2(n+i)+j per sequence, so its
    default cap is lower; raising `cap` trades time for reach.
    """
    if kind not in ("a", "b", "e"):
        raise ValueError("kind must be a, b, or e: %r" % kind)
    if not 1 <= i < n:
        raise IndexOutOfRange("suffix length %d outside 1..%d" % (i, n - 1))
    limit = cap if cap is not None else (E_BRUTE_CAP if kind == "e" else AB_BRUTE_CAP)
    if n > limit:
        raise CapExceeded("abe_brute(%s, n=%d) above cap %d" % (kind, n, limit))
    if kind == "e":
        if j is None or not 1 <= j < n + i:
            raise IndexOutOfRange("b-test suffix length %r outside 1..%d"
                                  % (j, n + i - 1))
    elif j is not None:
        raise ValueError("j only applies to kind=e")
    if table is None:
        table = default_table()
    kern = backend.kernels()
    seqs = _curl1_members(n, table)
    if kind == "a":
        return int(kern.count_a(seqs, n, i, table.codes, table.w))
    if kind == "b":
        return int(kern.count_b(seqs, n, i, table.codes, table.w))
    return int(kern.count_e(seqs, n, i, j, table.codes, table.w))


def _c1(n: int, store: ABEStore, table: SuffixCNTable) -> int:
    if n in store.c1:
        return store.c1[n]
    if n == 1:
        v = 2
    else:
        v = 2 * _c1(n - 1, store, table)
        if n % 2 == 0:
            v -= _pprime1(n // 2, store, table)
    store.c1[n] = v
    return v


def _pprime1(m: int, store: ABEStore, table: SuffixCNTable) -> int:
    # robust primitive curl-1 count; equals a(m, m-1) once a suffix exists
    if m == 1:
        return 2
    return a_fast(m, m - 1, store, table=table)


def _e_fast(n: int, i: int, j: int, store: ABEStore,
            table: SuffixCNTable) -> int:
    key = (n, i, j)
    if key not in store.e:
        if n > store.e_brute_cap:
            raise MissingDependency("e", n, i, j)
        store.e[key] = abe_brute("e", n, i, j, table=table, cap=store.e_brute_cap)
    return store.e[key]


def a_fast(n: int, i: int, store: ABEStore,
           table: Optional[SuffixCNTable] = None) -> int:
    """a(n,i) as c(n,1) minus the b cells counting curls formed at the seam.

    Prepending the suffix u can only raise the curl via a block that spans
    the junction; bucketing those blocks by length m gives disjoint sets of
    size b(m, n-2m), with m starting at ceil((n-i)/2) for short suffixes and
    at floor(n/3)+1 once 3i >= n.
    """
    if not 1 <= i < n:
        raise IndexOutOfRange("suffix length %d outside 1..%d" % (i, n - 1))
    if table is None:
        table = default_table()
    if (n, i) in store.a:
        return store.a[(n, i)]
    lo = (n - i + 1) // 2 if 3 * i < n else n // 3 + 1
    hi = (n - 1) // 2
    v = _c1(n, store, table)
    for m in range(lo, hi + 1):
        v -= b_fast(m, n - 2 * m, store, table=table)
    store.a[(n, i)] = v
    return v


def b_fast(n: int, i: int, store: ABEStore,
           table: Optional[SuffixCNTable] = None) -> int:
    """b(n,i) by the three suffix-length regimes.

    3i < n: a(n,i) minus e cells for the junction blocks of the second test,
    over max(2i+1, floor((n+i)/3)+1) <= m <= floor((n+i-1)/2).  The lower
    bound is the proof's own range; at every such m the e arguments are
    inside their domain, and enumeration confirms the result cell by cell.
    n/3 <= i <= n/2: equal to a(n,i) (the corrected rule, see module note).
    2i > n: a(n,i) - b(i, n-i), the survivor bijection onto shorter cells.
    """
    if not 1 <= i < n:
        raise IndexOutOfRange("suffix length %d outside 1..%d" % (i, n - 1))
    if table is None:
        table = default_table()
    if (n, i) in store.b:
        return store.b[(n, i)]
    if 3 * i < n:
        v = a_fast(n, i, store, table=table)
        lo = max(2 * i + 1, (n + i) // 3 + 1)
        hi = (n + i - 1) // 2
        for m in range(lo, hi + 1):
            v -= _e_fast(m - i, i, n + i - 2 * m, store, table)
    elif 2 * i <= n:
        v = a_fast(n, i, store, table=table)
    else:
        v = a_fast(n, i, store, table=table) - b_fast(i, n - i, store, table=table)
    store.b[(n, i)] = v
    return v


class C1Result(NamedTuple):
    counts: List[int]
    ratios: List[Fraction]


def c1_recursive(n_max: int, store: ABEStore,
                 table: Optional[SuffixCNTable] = None) -> C1Result:
    """Column c(n,1) for n = 1..n_max with exact ratios c(n,1)/2^n.

    c(n,1) = 2 c(n-1,1), minus the robust primitive curl-1 count at n/2 when
    n is even; that count is a(n/2, n/2-1), reached through the memoized
    a/b/e recursion.  Ratios are exact rationals; callers round as needed.
    """
    if table is None:
        table = default_table()
    counts = []
    for n in range(1, n_max + 1):
        counts.append(_c1(n, store, table))
    ratios = [Fraction(v, 1 << n) for n, v in enumerate(counts, 1)]
    return C1Result(counts, ratios)


class Decomposition(NamedTuple):
    x: Tuple[int, ...]
    y: Tuple[int, ...]


def decompose_nonrobust(s: Sequence[int], k: int) -> Optional[Decomposition]:
    """Split a non-robust primitive sequence into its witnessing factors.

    Curl 1: s = X.Y.X with Y a proper suffix of X and X of curl 1; then
    Y.s = (YX)^2 is the suffix of s.s that curls past 1.  Curl k > 1:
    s = X(TX)^k with T a proper suffix of s, so T.s = (TX)^(k+1) curls past
    k.  Returns nothing exactly when s is robust, since either factorization
    exists precisely when some proper suffix of s.s beats k.
    """
    s = tuple(s)
    n = len(s)
    if not is_primitive(s):
        raise NotPrimitive("decomposition needs a primitive sequence")
    if curling_number(s).k != k:
        raise CurlMismatch("sequence has curl %d, not %d" % (curling_number(s).k, k))
    if k == 1:
        for ly in range(1, n):
            if (n - ly) % 2:
                continue
            lx = (n - ly) // 2
            if lx <= ly:
                continue
            x, y = s[:lx], s[lx:lx + ly]
            if s[lx + ly:] == x and x[lx - ly:] == y \
                    and curling_number(x).k == 1:
                return Decomposition(x, y)
        return None
    for lt in range(1, n):
        if (n - k * lt) % (k + 1):
            continue
        lx = (n - k * lt) // (k + 1)
        if lx < 1:
            break
        x, t = s[:lx], s[lx:lx + lt]
        if s == x + (t + x) * k and s[n - lt:] == t:
            return Decomposition(x, t)
    return None
