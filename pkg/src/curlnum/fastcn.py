"""Fast curling number over packed sequences.

Same algorithm as the kernels but on Python ints, so any length works: seed
a bound from the suffix table, then scan candidate block lengths with
shift/XOR and count the matching run from the low end.  This path is the
overflow escape for the fixed-width kernels and the reference the kernels
are tested against at scale; core.curling_number stays the ground truth.
"""

from typing import Optional, Union

from .bits import PackedSeq, concat, pack, unpack
from .core import CurlResult, DEFAULT_STEP_LIMIT, ExtensionResult
from .errors import EmptyInput, StepLimitExceeded
from .table import SuffixCNTable, default_table

SeqLike = Union[PackedSeq, tuple, list, str]


def _as_packed(s: SeqLike) -> PackedSeq:
    if isinstance(s, PackedSeq):
        return s
    if isinstance(s, str):
        return pack(int(ch) for ch in s.strip())
    return pack(s)


def _window_block(wbits: int, t: int, w: int) -> int:
    for q in range(1, w // t + 1):
        x = (wbits ^ (wbits >> q)) & ((1 << (w - q)) - 1)
        run = (w - q) if x == 0 else (x & -x).bit_length() - 1
        if 1 + run // q >= t:
            return q
    return 1  # unreachable when the table is sound


def packed_cn(bits: int, n: int, table: Optional[SuffixCNTable]) -> CurlResult:
    """Exact (k, pi, x_len) of an n-bit packed sequence."""
    if n <= 0:
        raise EmptyInput("curling number of empty sequence")
    k_best = 1
    pi_best = 1
    p = 1
    seeded = 0
    if table is not None and n >= table.w:
        w = table.w
        t = int(table.codes[bits & ((1 << w) - 1)])
        if t == 1:
            p = w // 2 + 1
        elif t <= 3:
            k_best = t
            seeded = t
            p = w // (t + 1) + 1
    improved = False
    while p <= n // (k_best + 1):
        x = (bits ^ (bits >> p)) & ((1 << (n - p)) - 1)
        run = (n - p) if x == 0 else (x & -x).bit_length() - 1
        kp = 1 + run // p
        if kp > k_best:
            k_best = kp
            pi_best = p
            improved = True
        p += 1
    if seeded > 0 and not improved:
        w = table.w
        pi_best = _window_block(bits & ((1 << w) - 1), seeded, w)
    if k_best == 1:
        return CurlResult(1, 1, n - 1)
    return CurlResult(k_best, pi_best, n - k_best * pi_best)


def fast_curling_number(s: SeqLike, table: Optional[SuffixCNTable] = None) -> CurlResult:
    """Curling number of a {2,3}-sequence via the packed scan.

    Accepts a PackedSeq, a 2/3 iterable, or a '23...' string.  With no table
    given the process-default one is used.
    """
    ps = _as_packed(s)
    if table is None:
        table = default_table()
    return packed_cn(ps.bits, ps.len, table)


def fast_tail_length(s0: SeqLike, step_limit: int = DEFAULT_STEP_LIMIT,
                     table: Optional[SuffixCNTable] = None) -> ExtensionResult:
    """Tail extension of a {2,3} start, matching extend_to_tail's result.

    At most one appended value can leave {2,3}; it is necessarily the last
    element of the extension (the symbol occurs once, so the next curl is 1).
    """
    ps = _as_packed(s0)
    if table is None:
        table = default_table()
    cur = ps
    tau = 0
    while True:
        k = packed_cn(cur.bits, cur.len, table).k
        if k == 1:
            return ExtensionResult(tau, unpack(cur))
        if tau >= step_limit:
            raise StepLimitExceeded(unpack(cur), tau)
        if k > 3:
            return ExtensionResult(tau + 1, unpack(cur) + (k,))
        cur = concat(cur, PackedSeq(k - 2, 1))
        tau += 1
