from itertools import product
from math import isqrt

import pytest

from curlnum import core
from curlnum.counts import (
    CountTables,
    brute_tables,
    c_row_recurrence,
    c_sqrt_formula,
    classify,
    d_value,
    extend_tables_doubling,
    fine_wilf_period,
    is_primitive,
)
from curlnum.errors import FormulaOutOfRange, NotAPeriod, RobustnessUndefined


def test_is_primitive():
    assert is_primitive((2,))
    assert is_primitive((2, 3))
    assert not is_primitive((2, 2))
    assert not is_primitive((2, 3, 2, 3))
    assert not is_primitive((2, 3, 2, 3, 2, 3))
    assert is_primitive((2, 3, 2))
    assert is_primitive((2, 2, 3))


def test_classify_fields():
    c = classify((2, 2, 3))
    assert c.primitive
    assert c.k == 1
    c = classify((3, 2, 2))
    assert c.k == 2 and c.pi == 1


def test_classify_imprimitive_raises():
    with pytest.raises(RobustnessUndefined):
        classify((2, 3, 2, 3))


def test_robust_definition_small():
    # robust: no proper suffix of s+s curls above k
    for n in range(2, 10):
        for s in product((2, 3), repeat=n):
            if not is_primitive(s):
                continue
            c = classify(s)
            doubled = s + s
            expected = all(
                core.curling_number(doubled[i:]).k <= c.k
                for i in range(1, len(doubled))
            )
            assert c.robust == expected, s


def test_brute_tables_row_sums():
    tab = brute_tables(14)
    for n in range(1, 15):
        assert sum(tab.row("c", n)) == 2 ** n
        # primitive counts: cumulative q ends at the full primitive total
        assert tab.row("q", n)[-1] == sum(tab.row("p", n))


def test_brute_tables_small_rows():
    tab = brute_tables(6)
    assert tab.row("c", 1) == [2]
    assert tab.row("c", 2) == [2, 2]
    assert tab.row("c", 3) == [4, 2, 2]
    assert tab.row("c", 4) == [6, 6, 2, 2]
    assert tab.row("c", 5) == [12, 12, 4, 2, 2]
    assert tab.row("c", 6) == [20, 26, 10, 4, 2, 2]


def test_row_recurrence_matches_brute():
    tab = brute_tables(16)
    for n in range(3, 17):
        assert c_row_recurrence(n, tab) == tab.row("c", n)


def test_sqrt_formula_spot_values():
    tab = brute_tables(12)
    assert tab.get("c", 12, 3) == 660
    assert tab.get("c", 12, 4) == 286
    assert c_sqrt_formula(12, 3, tab).total == 660
    assert c_sqrt_formula(12, 4, tab).total == 286


def test_sqrt_formula_matches_brute_above_threshold():
    tab = brute_tables(14)
    for n in range(2, 15):
        for k in range(max(2, isqrt(n)), n + 1):
            assert c_sqrt_formula(n, k, tab).total == tab.get("c", n, k), (n, k)


def test_sqrt_formula_range_guard():
    tab = brute_tables(10)
    with pytest.raises(FormulaOutOfRange):
        c_sqrt_formula(10, 2, tab)


def test_d_value_methods_agree():
    tab = brute_tables(14)
    for n in range(2, 15):
        for k in range(1, n + 1):
            by_def = d_value(n, k, "definition", tab)
            assert d_value(n, k, "pq", tab) == by_def, (n, k)
            if n >= 4 and k >= isqrt(n):
                try:
                    by_sqrt = d_value(n, k, "sqrt", tab)
                except FormulaOutOfRange:
                    continue  # divisor term not yet saturated at this k
                assert by_sqrt == by_def, (n, k)


def test_d_value_signs():
    tab = brute_tables(4)
    assert d_value(2, 1, "definition", tab) == 2
    assert d_value(2, 2, "definition", tab) == -2


def test_doubling_matches_brute():
    brute = brute_tables(16)
    doubled = extend_tables_doubling(8)
    for n in range(9, 17):
        assert doubled.row("c", n) == brute.row("c", n)
        assert doubled.row("p", n) == brute.row("p", n)


def test_fine_wilf_period():
    # periods 2 and 3 on length >= 4 force period 1
    assert fine_wilf_period((2, 2, 2, 2), 2, 3) == 1
    # too short to combine: gcd not forced
    assert fine_wilf_period((2, 3, 2), 2, 3) is None
    with pytest.raises(NotAPeriod):
        fine_wilf_period((2, 3, 3), 2, 3)


def test_fine_wilf_exhaustive_small():
    # whenever p and q are both periods and n >= p + q - gcd, gcd is a period
    from math import gcd
    for n in range(2, 11):
        for s in product((2, 3), repeat=n):
            for p in range(1, n):
                for q in range(p + 1, n):
                    if any(s[i] != s[i - p] for i in range(p, n)):
                        continue
                    if any(s[i] != s[i - q] for i in range(q, n)):
                        continue
                    g = fine_wilf_period(s, p, q)
                    if n >= p + q - gcd(p, q):
                        assert g == gcd(p, q)
                        assert all(s[i] == s[i - g] for i in range(g, n))


def test_count_tables_extensions():
    tab = brute_tables(8)
    # q_ext saturates at the primitive total; both return 0 at curl <= 0
    assert tab.q_ext(5, 99) == sum(tab.row("p", 5))
    assert tab.q_ext(5, 0) == 0
    assert tab.pprime_ext(5, 0) == 0
    assert tab.pprime_ext(5, 2) == tab.get("pprime", 5, 2)
