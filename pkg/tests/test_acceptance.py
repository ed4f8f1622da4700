"""Acceptance gate: eleven criteria, one test (one pass/fail line) each.

Run as `pytest tests/test_acceptance.py -v`.  Heavy shared work (the
exhaustive record search and the length-24 brute tables) is computed once
per session.  Every expected constant below is pinned: integers are exact,
the two analog quantities carry their stated tolerances (1e-8 for the
limit ratio, the [2.60, 2.80] window for the mean tail).
"""

import random
import time
from fractions import Fraction
from itertools import product

import pytest

from curlnum import core, verify
from curlnum.abe import ABEStore, c1_recursive
from curlnum.counts import brute_tables, c_row_recurrence, c_sqrt_formula, extend_tables_doubling
from curlnum.formats import parse_seq, read_csv_rows
from curlnum.omega import construct_larger, jump_points, omega_search
from curlnum.tails import mean_tail, prefix_increase_scan, rotten_scan, tail_row
from curlnum.tails import essential_first_scan

THREADS = 4

OMEGA_BY_LENGTH = (0, 2, 2, 4, 4, 8, 8, 58, 59, 60, 112, 112, 112, 118, 118,
                   118, 118, 118, 119, 119, 119, 120, 120, 120, 120, 120)

JUMPS = (1, 2, 4, 6, 8, 9, 10, 11, 14, 19, 22)

RECORD_STARTS = {
    1: "2",
    2: "22",
    4: "2323",
    6: "222322",
    8: "23222323",
    9: "223222323",
    10: "2323222322",
    11: "22323222322",
    14: "22323222322323",
    19: "2232232322232232232",
    22: "2322322323222323223223",
}

START_48 = "223223232223222322322232232322232223223222322323"

C1_LIMIT = 0.27004339525895354325


@pytest.fixture(scope="session")
def omega_reports():
    return {n: omega_search(n, threads=THREADS) for n in range(1, 27)}


@pytest.fixture(scope="session")
def tables24():
    return brute_tables(24, threads=THREADS)


def test_criterion_01_omega_exact(omega_reports):
    for n in range(1, 27):
        assert omega_reports[n].omega == OMEGA_BY_LENGTH[n - 1], n
        assert not omega_reports[n].conjectural


def test_criterion_02_jump_points_and_achievers(omega_reports):
    got = [n for n in range(2, 23)
           if omega_reports[n].omega > omega_reports[n - 1].omega]
    assert [1] + got == list(JUMPS)
    assert jump_points(22, threads=THREADS) == list(JUMPS)
    for n, want in RECORD_STARTS.items():
        rep = omega_reports[n]
        assert "".join(map(str, rep.best)) == want, n
        # both length-1 starts sit at a tail already, so n=1 is a two-way tie
        assert rep.achiever_count == (2 if n == 1 else 1), n


def test_criterion_03_count_tables(tables24):
    golden = {}
    _, rows = read_csv_rows(verify.FIXTURE_DIR + "/curl_counts.csv")
    for table, n, k, value in rows:
        golden[(table, int(n), int(k))] = int(value)
    assert len(golden) == 389
    for (table, n, k), want in golden.items():
        assert tables24.get(table, n, k) == want, (table, n, k)
    # spot anchors straight from the printed tables
    assert golden[("c", 12, 3)] == 660
    assert golden[("c", 12, 4)] == 286
    assert golden[("d", 2, 1)] == 2
    assert golden[("d", 2, 2)] == -2
    for n in range(1, 25):
        assert sum(tables24.row("c", n)) == 2 ** n, n


def test_criterion_04_recurrence_and_closed_form(tables24):
    from math import isqrt
    for n in range(3, 25):
        assert c_row_recurrence(n, tables24) == tables24.row("c", n), n
    for n in range(2, 25):
        for k in range(max(2, isqrt(n)), n + 1):
            assert c_sqrt_formula(n, k, tables24).total == tables24.get("c", n, k), (n, k)
    assert c_sqrt_formula(12, 3, tables24).total == 660
    assert c_sqrt_formula(12, 4, tables24).total == 286


def test_criterion_05_doubling_trick(tables24):
    doubled = extend_tables_doubling(12, threads=THREADS)
    for n in range(13, 25):
        assert doubled.row("c", n) == tables24.row("c", n), n
        assert doubled.row("p", n) == tables24.row("p", n), n


def test_criterion_06_c1_recursion(tables24):
    res = c1_recursive(100, ABEStore(e_brute_cap=20))
    for n in range(1, 25):
        assert res.counts[n - 1] == tables24.get("c", n, 1), n
    assert abs(float(res.ratios[59]) - C1_LIMIT) < 1e-8
    for n in range(8, 101):
        assert res.counts[n - 1] > 0.27 * 2 ** n, n


def test_criterion_07_tail_distribution():
    golden = {}
    _, rows = read_csv_rows(verify.FIXTURE_DIR + "/tail_rows.csv")
    for n, i, count in rows:
        golden[(int(n), int(i))] = int(count)
    for n in range(1, 10):
        row = tail_row(n, threads=THREADS)
        for i, c in row.counts.items():
            assert c == golden.get((n, i), 0), (n, i)
    row22 = tail_row(22, threads=THREADS)
    for i in range(121):
        assert row22.counts.get(i, 0) == golden.get((22, i), 0), i
    assert row22.counts[120] == 1
    m = mean_tail(24, threads=THREADS)
    assert Fraction(26, 10) < m < Fraction(28, 10)


def test_criterion_08_prepend_scans():
    rotten_golden = (0, 1, 1, 0, 1, 1, 2, 4, 4, 8, 14, 11, 18, 30, 26, 24, 40,
                     35, 58, 69)
    increase_golden = (2, 1, 2, 1, 5, 3, 12, 9, 19, 16, 38, 20, 59, 42, 104, 65,
                       213, 111, 400, 245)
    essential_golden = (2, 2, 2, 4, 2, 8, 2, 10, 8, 14, 2, 40, 2, 40, 32, 88, 2,
                        192, 2, 324)
    for n in range(1, 21):
        rep = rotten_scan(n, threads=THREADS)
        assert rep.rotten_count == rotten_golden[n - 1], n
        assert rep.doubly_rotten_count == 0, n
        assert prefix_increase_scan(n, threads=THREADS) == increase_golden[n - 1], n
        assert essential_first_scan(n, threads=THREADS) == essential_golden[n - 1], n
    for p in (2, 3, 5, 7, 11, 13, 17, 19):
        assert essential_golden[p - 1] == 2, p


def test_criterion_09_generator_and_merge():
    g = core.gijswijt_prefix(220)
    assert g[:9] == (1, 1, 2, 1, 1, 2, 2, 2, 3)
    assert g[219] == 4 and 4 not in g[:219]
    rng = random.Random(20260819)
    for _ in range(200):
        n = rng.randint(1, 12)
        s0 = tuple(rng.choice((2, 3)) for _ in range(n))
        assert core.check_merge(s0, horizon=100, step_limit=2000), s0


def test_criterion_10_property_suites():
    suites = [
        verify.check_witness_block(n_max=14),
        verify.check_prepend_step(n_max=16),
        verify.check_robustness_agree(n_max=16),
        verify.check_curl1_decomposition(n_max=14),
        verify.check_highcurl_decomposition(n_max=14),
        verify.check_blocked_prefix_identity(n_max=14),
        verify.check_survivor_reflection(n_max=14),
        verify.check_survivor_band(n_max=14),
        verify.check_defect_sum(n_max=14),
        verify.check_fast_vs_oracle(n_max=18, random_cases=100000),
    ]
    for result in suites:
        assert result.status == "pass", (result.name, result.detail)


def test_criterion_11_larger_construction():
    s48 = parse_seq(START_48)
    assert len(s48) == 48
    t0 = time.perf_counter()
    r = construct_larger(s48)
    elapsed = time.perf_counter() - t0
    assert (r.start_len, r.total_len, r.tail) == (227, 596, 369)
    assert elapsed <= 1.0
