"""Time the numba kernels against the pure-numpy fallback.

The backend is frozen when curlnum first imports, so each measurement runs
in a child process with CURLNUM_BACKEND set.  Numba timings exclude the
first call (JIT compile) by warming each workload once.

Usage: python benchmarks/bench_backends.py [--repeat N]
"""

import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, sys, time
from curlnum import backend

def timed(fn, repeat):
    fn()  # warm-up: numba compiles here, numpy just runs once more
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best

def bench(repeat):
    import random
    from curlnum.table import SuffixCNTable
    from curlnum.counts import brute_tables
    from curlnum.fastcn import fast_tail_length
    from curlnum.omega import omega_search

    out = {"backend": backend.backend_name()}

    t = timed(lambda: SuffixCNTable.build(16), repeat)
    out["table_build_w16"] = t

    t = timed(lambda: brute_tables(18), repeat)
    out["brute_tables_n18"] = t

    t = timed(lambda: omega_search(16, mode="pruned"), repeat)
    out["pruned_search_n16"] = t

    rng = random.Random(5)
    starts = [tuple(rng.choice((2, 3)) for _ in range(40)) for _ in range(2000)]
    t = timed(lambda: [fast_tail_length(s) for s in starts], repeat)
    out["tails_2000x40"] = t

    json.dump(out, sys.stdout)

bench(int(sys.argv[1]))
"""


def run_backend(name: str, repeat: int) -> dict:
    env = dict(os.environ, CURLNUM_BACKEND=name)
    proc = subprocess.run(
        [sys.executable, "-c", WORKER, str(repeat)],
        env=env, capture_output=True, text=True, check=True,
    )
    return json.loads(proc.stdout)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3,
                    help="timed repetitions per workload (best is kept)")
    args = ap.parse_args()

    results = {}
    for name in ("numba", "numpy"):
        try:
            results[name] = run_backend(name, args.repeat)
        except subprocess.CalledProcessError as exc:
            print("backend %s failed:\n%s" % (name, exc.stderr), file=sys.stderr)
            return 1

    keys = [k for k in results["numba"] if k != "backend"]
    print("%-22s %12s %12s %8s" % ("workload", "numba (s)", "numpy (s)", "ratio"))
    for k in keys:
        a, b = results["numba"][k], results["numpy"][k]
        print("%-22s %12.4f %12.4f %7.1fx" % (k, a, b, b / a if a else float("inf")))
    return 0


if __name__ == "__main__":
    sys.exit(main())
