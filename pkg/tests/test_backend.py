import json
import os
import subprocess
import sys

from curlnum import backend
from curlnum.counts import brute_tables
from curlnum.omega import omega_search

PROBE = r"""
import json, sys
from curlnum import backend
from curlnum.counts import brute_tables
from curlnum.omega import omega_search
tab = brute_tables(10)
rep = omega_search(10, mode="pruned")
json.dump({
    "backend": backend.backend_name(),
    "c10": tab.row("c", 10),
    "p10": tab.row("p", 10),
    "pprime10": tab.row("pprime", 10),
    "omega": rep.omega,
    "best": list(rep.best),
}, sys.stdout)
"""


def run_with_backend(name):
    env = dict(os.environ, CURLNUM_BACKEND=name)
    proc = subprocess.run([sys.executable, "-c", PROBE], env=env,
                          capture_output=True, text=True, check=True)
    return json.loads(proc.stdout)


def test_numpy_fallback_matches_numba():
    a = run_with_backend("numba")
    b = run_with_backend("numpy")
    assert a["backend"] == "numba"
    assert b["backend"] == "numpy"
    for key in ("c10", "p10", "pprime10", "omega", "best"):
        assert a[key] == b[key], key


def test_bad_backend_name_rejected():
    env = dict(os.environ, CURLNUM_BACKEND="cuda")
    proc = subprocess.run([sys.executable, "-c", "import curlnum"], env=env,
                          capture_output=True, text=True)
    assert proc.returncode != 0
    assert "CURLNUM_BACKEND" in proc.stderr


def test_default_backend_resolves():
    assert backend.backend_name() in ("numba", "numpy")
    tab = brute_tables(8)
    assert sum(tab.row("c", 8)) == 256
