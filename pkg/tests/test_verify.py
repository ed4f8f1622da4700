import os
import shutil

import pytest

from curlnum.verify import FIXTURE_DIR, PAPER_TABLE_CHECKS, THEOREM_CHECKS, run_suite


def test_fixture_dir_ships_with_package():
    names = set(os.listdir(FIXTURE_DIR))
    for fixture in ("omega_by_length.csv", "achievers.csv", "curl_counts.csv",
                    "c1_column.csv", "tail_rows.csv", "rotten.csv",
                    "essential.csv", "prefix_increase.csv", "MANIFEST.csv"):
        assert fixture in names


def test_unknown_suite_rejected():
    with pytest.raises(ValueError):
        run_suite("everything")


def test_named_subset_runs_only_those():
    results = run_suite("paper-tables", names={"rotten.csv"}, threads=2)
    assert [r.name for r in results] == ["rotten.csv"]
    assert results[0].status == "pass"


def test_cap_skips_heavy_rows():
    results = run_suite("paper-tables", names={"rotten.csv"}, cap=6)
    assert results[0].status == "skip"
    assert "n=7" in results[0].detail


def test_corrupted_golden_cell_is_one_failure(tmp_path):
    # a single bad cell must surface as exactly one failure naming the cell
    work = tmp_path / "data"
    shutil.copytree(FIXTURE_DIR, work)
    path = work / "rotten.csv"
    lines = path.read_text().splitlines()
    assert lines[8] == "8,4"
    lines[8] = "8,5"
    path.write_text("\n".join(lines) + "\n")
    results = run_suite("paper-tables", fixtures_dir=str(work), threads=4)
    failed = [r for r in results if r.status == "fail"]
    assert len(failed) == 1
    assert failed[0].name == "rotten.csv"
    assert "n=8" in failed[0].detail
    assert "4" in failed[0].detail and "5" in failed[0].detail


def test_check_names_are_wired():
    # every registered check is callable under its registry name
    for name, fn in PAPER_TABLE_CHECKS.items():
        assert callable(fn), name
    for name, fn in THEOREM_CHECKS.items():
        assert callable(fn), name
    assert len(THEOREM_CHECKS) >= 20


def test_theorem_subset_smoke():
    results = run_suite("theorems", names={"curl-row-recurrence", "survivor-band-equality"})
    assert {r.name for r in results} == {"curl-row-recurrence", "survivor-band-equality"}
    assert all(r.status == "pass" for r in results)
