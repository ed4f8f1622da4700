import io
import sys

import pytest

from curlnum.cli import main


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    old = sys.stdout, sys.stderr
    sys.stdout, sys.stderr = out, err
    try:
        code = main(list(argv))
    finally:
        sys.stdout, sys.stderr = old
    return code, out.getvalue(), err.getvalue()


def test_curl_example():
    code, out, _ = run_cli("curl", "--seq", "0,1,2,2,1,2,2,1,2,2")
    assert code == 0
    assert out == "k=3 pi=3\n"


def test_curl_binary_string_form():
    code, out, _ = run_cli("curl", "--seq", "2323")
    assert code == 0
    assert out == "k=2 pi=2\n"


def test_omega_example():
    code, out, _ = run_cli("omega", "--n", "4", "--mode", "exhaustive")
    assert code == 0
    assert out == "omega=4 best=2323\n"


def test_omega_pruned_marks_conjectural():
    code, out, _ = run_cli("omega", "--n", "6", "--mode", "pruned")
    assert code == 0
    assert out.startswith("omega=8 best=")
    assert "conjectural" in out


def test_extend():
    code, out, _ = run_cli("extend", "--seq", "2323")
    assert code == 0
    assert out == "tau=4 extension=23232223\n"


def test_gijswijt_formats():
    code, out, _ = run_cli("gijswijt", "--n", "9")
    assert (code, out) == (0, "1,1,2,1,1,2,2,2,3\n")
    code, out, _ = run_cli("gijswijt", "--n", "3", "--format", "csv")
    assert out == "index,value\n1,1\n2,1\n3,2\n"
    code, out, _ = run_cli("gijswijt", "--n", "3", "--format", "bfile")
    assert out == "1 1\n2 1\n3 2\n"


def test_jumps():
    code, out, _ = run_cli("jumps", "--n", "11")
    assert (code, out) == (0, "jumps=1,2,4,6,8,9,10,11\n")


def test_tables_plain_and_csv():
    code, out, _ = run_cli("tables", "--n", "4", "--table", "c")
    assert code == 0
    assert out.splitlines()[-1] == "c 4: 6 6 2 2"
    code, out, _ = run_cli("tables", "--n", "3", "--table", "c", "--format", "csv")
    assert out.startswith("table,n,k,value\n")
    assert "c,3,1,4" in out


def test_tables_bfile_needs_column():
    code, _, err = run_cli("tables", "--n", "6", "--table", "c", "--format", "bfile")
    assert code == 2
    assert "usage error" in err


def test_cn1_row():
    code, out, _ = run_cli("cn1", "--n", "6")
    rows = out.splitlines()
    assert rows[0].split() == ["1", "2", "1.0"]
    assert rows[5].startswith("6 20 ")


def test_verify_subset_exit_codes(tmp_path):
    code, out, _ = run_cli("verify", "--suite", "theorems")
    assert code == 0
    assert "passed=" in out


def test_usage_errors():
    code, _, err = run_cli("omega")
    assert code == 2
    code, _, err = run_cli("curl", "--seq", "2,,3")
    assert code == 2
    assert "usage error" in err


def test_domain_error_exit_one():
    code, _, err = run_cli("omega", "--n", "30")
    assert code == 1
    assert "CapExceeded" in err


def test_cache_identical_across_threads(tmp_path):
    cdir = str(tmp_path / "cache")
    code, cold, _ = run_cli("omega", "--n", "9", "--cache-dir", cdir, "--threads", "2")
    assert code == 0
    code, warm, _ = run_cli("omega", "--n", "9", "--cache-dir", cdir, "--threads", "1")
    assert warm == cold
    code, fresh, _ = run_cli("omega", "--n", "9")
    assert fresh == cold


def test_tails_single_bin():
    code, out, _ = run_cli("tails", "--n", "6", "--i", "8")
    assert (code, out) == (0, "8 1\n")
    code, out, _ = run_cli("tails", "--n", "6", "--i", "5")
    assert (code, out) == (0, "5 0\n")


def test_rotten_and_essential():
    code, out, _ = run_cli("rotten", "--n", "8")
    assert (code, out) == (0, "rotten=4 doubly=0\n")
    code, out, _ = run_cli("essential", "--n", "8")
    assert (code, out) == (0, "essential=10\n")
