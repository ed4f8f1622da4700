from fractions import Fraction
from itertools import product

import pytest

from curlnum import core
from curlnum.counts import brute_tables
from curlnum.errors import CapExceeded, FormulaOutOfRange
from curlnum.tails import (
    essential_first_scan,
    mean_tail,
    prefix_increase_scan,
    rotten_scan,
    tail_row,
    theta_stats,
)


def taus(n):
    return {s: core.extend_to_tail(s).tau for s in product((2, 3), repeat=n)}


def test_tail_row_matches_direct():
    for n in range(1, 10):
        t = taus(n)
        row = tail_row(n)
        direct = {}
        for v in t.values():
            direct[v] = direct.get(v, 0) + 1
        nonzero = {i: c for i, c in row.counts.items() if c}
        assert nonzero == direct, n
        assert sum(row.counts.values()) == 2 ** n
        assert sorted(row.counts) == list(range(max(direct) + 1))


def test_tail_row_mean():
    row = tail_row(6)
    total = sum(i * c for i, c in row.counts.items())
    assert row.mean == Fraction(total, 2 ** 6) == Fraction(3, 2)
    assert mean_tail(6) == row.mean


def test_tail_cap():
    with pytest.raises(CapExceeded):
        tail_row(25, cap=24)


def test_rotten_scan_matches_direct():
    for n in range(2, 11):
        t = taus(n)
        rotten = doubly = 0
        for s, tau in t.items():
            d2 = core.extend_to_tail((2,) + s).tau < tau
            d3 = core.extend_to_tail((3,) + s).tau < tau
            rotten += d2 or d3
            doubly += d2 and d3
        rep = rotten_scan(n)
        assert rep.rotten_count == rotten, n
        assert rep.doubly_rotten_count == doubly == 0, n


def test_rotten_examples_are_rotten():
    rep = rotten_scan(9, max_examples=3)
    assert len(rep.examples) == 3
    for s in rep.examples:
        tau = core.extend_to_tail(s).tau
        assert (core.extend_to_tail((2,) + s).tau < tau
                or core.extend_to_tail((3,) + s).tau < tau)


def test_prefix_increase_matches_direct():
    for n in range(2, 11):
        t = taus(n)
        gain = sum(
            1 for s, tau in t.items()
            if core.extend_to_tail((2,) + s).tau > tau
            or core.extend_to_tail((3,) + s).tau > tau
        )
        assert prefix_increase_scan(n) == gain, n


def rep_count(s, pi):
    n = len(s)
    j = 1
    while (j + 1) * pi <= n and s[n - (j + 1) * pi:n - j * pi] == s[n - pi:]:
        j += 1
    return j


def test_essential_first_matches_direct():
    # essential: every curl witness uses the whole sequence (empty leftover)
    for n in range(2, 11):
        count = 0
        for s in product((2, 3), repeat=n):
            k = core.curling_number(s).k
            witnesses = [pi for pi in range(1, n // 2 + 1) if rep_count(s, pi) == k]
            if k == 1:
                count += n == 1
            else:
                count += all(k * pi == n for pi in witnesses)
        assert essential_first_scan(n) == count, n


def test_essential_singletons():
    assert essential_first_scan(1) == 2


def test_theta_stats():
    tab = brute_tables(10)
    rep = theta_stats(10, tab)
    assert rep.theta[1] == Fraction(tab.get("c", 10, 1), 2 ** 10)
    assert rep.theta[2] == Fraction(tab.get("c", 10, 2), 2 ** 10)
    assert sum(rep.theta.values()) == 1
    assert rep.markov_estimate > 0


def test_theta_out_of_range():
    tab = brute_tables(1)
    with pytest.raises(FormulaOutOfRange):
        theta_stats(1, tab)
