"""Counting tables over binary {2,3}-sequences.

c(n,k)  sequences of length n with curl k
p(n,k)  primitive ones (not a power of a shorter block)
q(n,k)  primitive with curl <= k (column prefix sums of p)
p'(n,k) primitive, curl k, and robust: no proper suffix of s.s curls past k
d(n,k)  2 c(n-1,k) - c(n,k)

Rows come from four methods that are cross-checked in the tests: full
enumeration (kernels), a row recurrence, closed forms valid for large k, and
a doubling construction that builds rows n0+1..2n0 out of the length-n0
classification.  Every cell remembers which method produced it.
"""

from math import gcd, isqrt
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from . import backend
from .core import curling_number
from .errors import (
    CapExceeded,
    EmptyInput,
    FormulaOutOfRange,
    MissingDependency,
    NotAPeriod,
    RobustnessUndefined,
)
from .table import SuffixCNTable, default_table

BRUTE_CAP = 24

PROVENANCE = {0: None, 1: "brute", 2: "recurrence", 3: "sqrt-formula", 4: "doubling"}
_PROV_CODE = {v: c for c, v in PROVENANCE.items() if v}


class Classification(NamedTuple):
    k: int
    pi: int
    primitive: bool
    robust: bool


def is_primitive(s: Sequence[int]) -> bool:
    """True unless s is T^j for some shorter block T and j >= 2."""
    s = tuple(s)
    n = len(s)
    if n == 0:
        raise EmptyInput("primitivity of empty sequence")
    for d in range(1, n // 2 + 1):
        if n % d == 0 and s[: n - d] == s[d:]:
            return False
    return True


def classify(s: Sequence[int]) -> Classification:
    """Curl, shortest block, primitivity and robustness of one sequence.

    Robustness is only defined for primitive sequences: an imprimitive input
    raises RobustnessUndefined.  The robustness test scans every proper
    suffix of s.s for a curl above k; prepending more than one copy cannot
    create anything new, so the doubled string decides it.
    """
    s = tuple(s)
    r = curling_number(s)
    if not is_primitive(s):
        raise RobustnessUndefined("robustness is undefined for %s" % (s,))
    ss = s + s
    robust = True
    for start in range(1, len(ss)):
        if curling_number(ss[start:]).k > r.k:
            robust = False
            break
    return Classification(r.k, r.pi, True, robust)


class CountTables:
    """Dense triangular count tables with per-cell provenance."""

    NAMES = ("c", "p", "q", "pprime", "d")

    def __init__(self, n_max: int):
        if not 1 <= n_max <= 63:
            raise CapExceeded("n_max %d outside 1..63 (row sums must fit 2^63)" % n_max)
        self.n_max = n_max
        self._vals = {name: np.zeros((n_max + 1, n_max + 1), dtype=np.int64)
                      for name in self.NAMES}
        self._prov = {name: np.zeros((n_max + 1, n_max + 1), dtype=np.uint8)
                      for name in self.NAMES}

    def has(self, name: str, n: int, k: int) -> bool:
        return (1 <= k <= n <= self.n_max
                and self._prov[name][n, k] != 0)

    def get(self, name: str, n: int, k: int) -> int:
        if k > n:
            # above the diagonal every table is identically zero
            return 0
        if not self.has(name, n, k):
            raise MissingDependency(name, n, k)
        return int(self._vals[name][n, k])

    def set(self, name: str, n: int, k: int, value: int, method: str) -> None:
        self._vals[name][n, k] = value
        self._prov[name][n, k] = _PROV_CODE[method]

    def provenance(self, name: str, n: int, k: int) -> Optional[str]:
        if not 1 <= k <= n <= self.n_max:
            return None
        return PROVENANCE[int(self._prov[name][n, k])]

    def row(self, name: str, n: int) -> List[int]:
        return [self.get(name, n, k) for k in range(1, n + 1)]

    def q_ext(self, m: int, j: int) -> int:
        """q with the boundary conventions: 0 for j <= 0, saturated past m."""
        if j <= 0:
            return 0
        return self.get("q", m, min(j, m))

    def pprime_ext(self, m: int, j: int) -> int:
        """p' with curl-0 convention: there are no sequences at curl 0."""
        if j <= 0:
            return 0
        return self.get("pprime", m, j)


def _class_rows(n: int, tab: SuffixCNTable, threads: int) -> np.ndarray:
    kern = backend.kernels()
    divs = np.array([d for d in range(1, n) if n % d == 0], dtype=np.int64)
    bounds = backend.shard_bounds(0, 1 << n, threads)
    outs = [np.zeros((3, n + 1), dtype=np.int64) for _ in bounds]
    if len(bounds) == 1:
        kern.class_counts_range(n, 0, 1 << n, tab.codes, tab.w, divs, outs[0])
    else:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(len(bounds)) as pool:
            list(pool.map(
                lambda ib: kern.class_counts_range(
                    n, ib[1][0], ib[1][1], tab.codes, tab.w, divs, outs[ib[0]]),
                enumerate(bounds)))
    total = outs[0]
    for extra in outs[1:]:
        total += extra
    return total


def brute_tables(n_max: int, threads: int = 1, cap: int = BRUTE_CAP,
                 table: Optional[SuffixCNTable] = None) -> CountTables:
    """Exact c/p/q/p'/d tables for 1 <= n <= n_max by full enumeration."""
    if n_max > cap:
        raise CapExceeded("brute_tables(%d) above cap %d" % (n_max, cap))
    if table is None:
        table = default_table()
    tables = CountTables(n_max)
    for n in range(1, n_max + 1):
        rows = _class_rows(n, table, threads)
        acc = 0
        for k in range(1, n + 1):
            tables.set("c", n, k, int(rows[0, k]), "brute")
            tables.set("p", n, k, int(rows[1, k]), "brute")
            tables.set("pprime", n, k, int(rows[2, k]), "brute")
            acc += int(rows[1, k])
            tables.set("q", n, k, acc, "brute")
        for k in range(1, n + 1):
            prev = tables.get("c", n - 1, k) if n >= 2 else 0
            tables.set("d", n, k, 2 * prev - tables.get("c", n, k), "brute")
    return tables


def _mobius(n: int) -> int:
    out = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            out = -out
        d += 1
    if n > 1:
        out = -out
    return out


def q_diagonal(n: int) -> int:
    """Number of primitive binary sequences of length n (= q(n,n))."""
    return sum(_mobius(n // d) * (1 << d) for d in range(1, n + 1) if n % d == 0)


def c_row_recurrence(n: int, tables: CountTables) -> List[int]:
    """Row c(n, 1..n) from the previous row plus p'/q cells at the divisors.

    c(n,k) = 2 c(n-1,k) + [k|n](p'(n/k, k-1) + q(n/k, k-2))
                        - [k+1|n](p'(n/(k+1), k) + q(n/(k+1), k-1))
    with c(n,k) = 2 for n in {k, k+1}.
    """
    out = []
    for k in range(1, n + 1):
        if n <= k + 1:
            out.append(2)
            continue
        v = 2 * tables.get("c", n - 1, k)
        if n % k == 0:
            m = n // k
            v += tables.pprime_ext(m, k - 1) + tables.q_ext(m, k - 2)
        if n % (k + 1) == 0:
            m = n // (k + 1)
            v -= tables.pprime_ext(m, k) + tables.q_ext(m, k - 1)
        out.append(v)
    return out


class SqrtBreakdown(NamedTuple):
    total: int
    by_pi: Dict[int, int]


def c_sqrt_formula(n: int, k: int, tables: CountTables) -> SqrtBreakdown:
    """c(n,k) split by shortest block length, valid once k >= floor(sqrt(n)).

    Blocks either leave room for a longer run (pi <= n/(k+1)) or exactly fit
    k repeats; both branches weigh q(pi, k-1) choices of a primitive block.
    The k = n and k = n-1 columns are the two constant-block edge cases.
    """
    if k in (n, n - 1) and n >= 2:
        return SqrtBreakdown(2, {1: 2})
    if n < 4 or k < isqrt(n):
        raise FormulaOutOfRange("closed form needs n >= 4 and k >= floor(sqrt n)")
    by_pi: Dict[int, int] = {}
    for pi in range(1, n // (k + 1) + 1):
        v = (1 << (n - (k + 1) * pi)) * ((1 << pi) - 1) * tables.q_ext(pi, k - 1)
        if v:
            by_pi[pi] = v
    lo = -((n + 1) // -(k + 1))  # ceil((n+1)/(k+1))
    for pi in range(lo, n // k + 1):
        v = (1 << (n - k * pi)) * tables.q_ext(pi, k - 1)
        if v:
            by_pi[pi] = by_pi.get(pi, 0) + v
    return SqrtBreakdown(sum(by_pi.values()), by_pi)


def d_value(n: int, k: int, method: str, tables: CountTables) -> int:
    """d(n,k) by one of three routes.

    definition: 2 c(n-1,k) - c(n,k) straight from the c table.
    pq: the exact divisor expression
        [k+1|n](p'(n/(k+1), k) + q(n/(k+1), k-1)) - [k|n](p'(n/k, k-1) + q(n/k, k-2)).
    sqrt: for n >= 4, k >= floor(sqrt(n)), the only contributions are
        +q(m,m) when n = m(k+1) and -q(m,m) when n = mk; each term is only
        proven once k is large enough to saturate the q column (k >= m for
        the plus side, k >= m+1 for the minus side), and FormulaOutOfRange
        signals the cells where that fails.
    """
    if method == "definition":
        prev = tables.get("c", n - 1, k) if n >= 2 else 0
        return 2 * prev - tables.get("c", n, k)
    if method == "pq":
        v = 0
        if n % (k + 1) == 0:
            m = n // (k + 1)
            v += tables.pprime_ext(m, k) + tables.q_ext(m, k - 1)
        if n % k == 0:
            m = n // k
            v -= tables.pprime_ext(m, k - 1) + tables.q_ext(m, k - 2)
        return v
    if method == "sqrt":
        if n < 4 or k < isqrt(n):
            raise FormulaOutOfRange("sqrt method needs n >= 4, k >= floor(sqrt n)")
        v = 0
        if n % (k + 1) == 0:
            m = n // (k + 1)
            if k < m:
                raise FormulaOutOfRange("plus term at (%d,%d) not saturated" % (n, k))
            v += tables.get("q", m, m)
        if n % k == 0:
            m = n // k
            if k < m + 1:
                raise FormulaOutOfRange("minus term at (%d,%d) not saturated" % (n, k))
            v -= tables.get("q", m, m)
        return v
    raise ValueError("method must be definition, pq, or sqrt: %r" % method)


def fine_wilf_period(s: Sequence[int], p: int, q: int) -> Optional[int]:
    """gcd(p, q) when the two periods are long enough to force it.

    Checks the claimed periods first (NotAPeriod if either fails); returns
    gcd(p,q) when len(s) >= p + q - gcd(p,q), None otherwise.
    """
    s = tuple(s)
    n = len(s)
    for per in (p, q):
        for i in range(n - per):
            if s[i] != s[i + per]:
                raise NotAPeriod("%d is not a period of the input" % per)
    g = gcd(p, q)
    if n < p + q - g:
        return None
    for i in range(n - g):
        assert s[i] == s[i + g], "forced period violated; input corrupt"
    return g


def _full_periods(m_bits: int, n0: int) -> List[int]:
    return [u for u in range(1, n0 + 1)
            if (m_bits ^ (m_bits >> u)) & ((1 << (n0 - u)) - 1) == 0]


def _tile(block: int, u: int, m: int) -> int:
    out = 0
    shift = 0
    while shift < m:
        out |= block << shift
        shift += u
    return out & ((1 << m) - 1)


def extend_tables_doubling(n0: int, threads: int = 1,
                           table: Optional[SuffixCNTable] = None) -> CountTables:
    """Rows n0+1 .. 2*n0 of c and p without enumerating 2^n sequences.

    Any length-n sequence is X.M with M its length-n0 suffix.  Curl candidates
    beyond curl(M) need a block length u that periodically covers all of M,
    and then the count of prefixes X sustaining that period for >= t more
    symbols is a single suffix-fixed subcube of the X cube.  Subcubes from
    different u are nested or disjoint, so each union is a short sum of
    powers of two.  Primitive counts follow by subtracting the powers T^j,
    whose blocks T are short enough to enumerate directly.
    """
    if not 2 <= n0 <= 24:
        raise CapExceeded("doubling base n0 %d outside 2..24" % n0)
    if table is None:
        table = default_table()
    from .fastcn import packed_cn

    n_max = 2 * n0
    tables = CountTables(n_max)

    # per-suffix data: curl of M, its full periods, the forced continuation
    # pattern of each (tiled to the widest prefix we will ever attach)
    m_top = n_max - n0
    info = []
    for mb in range(1 << n0):
        k0 = packed_cn(mb, n0, table).k
        pers = _full_periods(mb, n0)
        pats = [(u, _tile(mb >> (n0 - u), u, m_top)) for u in pers]
        info.append((k0, pats))

    c_rows = {n: np.zeros(n + 1, dtype=np.int64) for n in range(n0 + 1, n_max + 1)}
    for n in range(n0 + 1, n_max + 1):
        m = n - n0
        row = c_rows[n]
        mask_m = (1 << m) - 1
        for mb in range(1 << n0):
            k0, pats = info[mb]
            # events[k] = list of (t, pattern prefix) with  V >= k  iff some
            # event matches X's low t bits
            kmax = k0
            per_k: Dict[int, List[Tuple[int, int]]] = {}
            for u, pat in pats:
                k_lo = n0 // u + 1
                k_hi = (n0 + m) // u
                for k in range(k_lo, k_hi + 1):
                    t = k * u - n0
                    per_k.setdefault(k, []).append((t, pat & ((1 << t) - 1)))
                    if k > kmax:
                        kmax = k
            prev_union = 0  # |{X : V >= k+1}| while scanning k downward
            for k in range(kmax, k0, -1):
                events = sorted(per_k.get(k, ()))
                kept: List[Tuple[int, int]] = []
                for t, pat in events:
                    contained = False
                    for t2, pat2 in kept:
                        if pat & ((1 << t2) - 1) == pat2:
                            contained = True
                            break
                    if not contained:
                        kept.append((t, pat))
                union = sum(1 << (m - t) for t, _ in kept)
                if union < prev_union:
                    union = prev_union  # monotonic by construction; guard rounding
                row[k] += union - prev_union
                prev_union = union
            row[k0] += (mask_m + 1) - prev_union
        for k in range(1, n + 1):
            tables.set("c", n, k, int(row[k]), "doubling")

    # p rows: strip the imprimitive sequences T^(n/d), T primitive of length d
    for n in range(n0 + 1, n_max + 1):
        imprim = np.zeros(n + 1, dtype=np.int64)
        for d in range(1, n // 2 + 1):
            if n % d:
                continue
            for tb in range(1 << d):
                if any(d % u == 0 for u in _full_periods(tb, d)[:-1]):
                    continue  # a divisor period makes T itself a power
                k = packed_cn(_tile(tb, d, n), n, table).k
                imprim[k] += 1
        for k in range(1, n + 1):
            tables.set("p", n, k,
                       tables.get("c", n, k) - int(imprim[k]), "doubling")
    return tables
