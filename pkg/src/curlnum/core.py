"""Reference implementations over plain Python tuples.

Everything here is the slow, obviously-correct path.  The bit-packed kernels
in fastcn.py are checked against these functions, so keep this module free of
cleverness: direct scans, no caching, any integer alphabet.

The curling number of a nonempty sequence S is the largest k such that S ends
in k consecutive copies of some nonempty block Y; we also report the length
pi of the shortest such block and the length of the leftover prefix X with
S = X Y^k.  For k == 1 every single-element block witnesses, so pi is fixed
at 1 and X is everything but the last element.
"""

from typing import Iterable, NamedTuple, Sequence, Tuple

from .errors import ContainsOne, EmptyInput, LengthOne, StepLimitExceeded

DEFAULT_STEP_LIMIT = 10_000


class CurlResult(NamedTuple):
    k: int
    pi: int
    x_len: int


class ExtensionResult(NamedTuple):
    tau: int
    extension: Tuple[int, ...]


def _repeat_count(s: Sequence[int], p: int) -> int:
    # Number of trailing elements matching their p-shifted neighbour, i.e.
    # the length of the p-periodic suffix minus p.
    n = len(s)
    j = n - p - 1
    while j >= 0 and s[j] == s[j + p]:
        j -= 1
    run = n - p - 1 - j
    return 1 + run // p


def curling_number(s: Sequence[int]) -> CurlResult:
    """Curling number of s, with shortest block length and prefix length.

    Raises EmptyInput on an empty sequence.
    """
    n = len(s)
    if n == 0:
        raise EmptyInput("curling number of empty sequence")
    k_best = 1
    pi_best = 1
    p = 1
    # Any block length that could still improve on k_best satisfies
    # (k_best + 1) * p <= n, which shrinks the scan as k_best grows.
    while p <= n // (k_best + 1):
        k_p = _repeat_count(s, p)
        if k_p > k_best:
            k_best = k_p
            pi_best = p
        p += 1
    if k_best == 1:
        return CurlResult(1, 1, n - 1)
    return CurlResult(k_best, pi_best, n - k_best * pi_best)


def extend_to_tail(s: Iterable[int], step_limit: int = DEFAULT_STEP_LIMIT) -> ExtensionResult:
    """Append the curling number until it drops to 1.

    Returns the final sequence and tau, the number of elements appended.
    Raises EmptyInput on an empty start and StepLimitExceeded (carrying the
    sequence reached) if no curl of 1 shows up within step_limit appends.
    """
    cur = list(s)
    if not cur:
        raise EmptyInput("cannot extend empty sequence")
    tau = 0
    while True:
        k = curling_number(cur).k
        if k == 1:
            return ExtensionResult(tau, tuple(cur))
        if tau >= step_limit:
            raise StepLimitExceeded(cur, tau)
        cur.append(k)
        tau += 1


def gijswijt_prefix(m: int) -> Tuple[int, ...]:
    """First m terms of the self-curling sequence seeded with a single 1.

    Term 1 is 1 and every later term is the curling number of everything
    before it: 1, 1, 2, 1, 1, 2, 2, 2, 3, ...
    """
    if m <= 0:
        return ()
    cur = [1]
    while len(cur) < m:
        cur.append(curling_number(cur).k)
    return tuple(cur)


def is_weak(s0: Sequence[int], step_limit: int = DEFAULT_STEP_LIMIT) -> bool:
    """True if every step of the tail extension keeps a nonempty prefix X.

    A start is weak when, at each extension step before the tail, the whole
    sequence splits as X Y^k with X nonempty.  Equivalently the curling
    number must survive dropping the first element, which is what we check.
    Needs at least two elements: raises EmptyInput or LengthOne otherwise.
    """
    n = len(s0)
    if n == 0:
        raise EmptyInput("weakness of empty sequence")
    if n == 1:
        raise LengthOne("weakness needs at least two elements")
    cur = list(s0)
    steps = 0
    while True:
        k = curling_number(cur).k
        if k == 1:
            return True
        if curling_number(cur[1:]).k != k:
            return False
        if steps >= step_limit:
            raise StepLimitExceeded(cur, steps)
        cur.append(k)
        steps += 1


def check_merge(s0: Sequence[int], horizon: int, step_limit: int = DEFAULT_STEP_LIMIT) -> bool:
    """Extend s0 past its tail and compare the continuation with gijswijt_prefix.

    After the tail is reached, the next horizon appended terms are matched
    against the first horizon terms of the self-curling sequence.  Only
    defined for starts avoiding the symbol 1 (raises ContainsOne).
    """
    if 1 in tuple(s0):
        raise ContainsOne("merge check needs a 1-free start")
    cur = list(extend_to_tail(s0, step_limit=step_limit).extension)
    expect = gijswijt_prefix(horizon)
    for i in range(horizon):
        k = curling_number(cur).k
        if k != expect[i]:
            return False
        cur.append(k)
    return True
