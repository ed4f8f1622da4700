"""Command-line front end.

Every subcommand renders its full output to a string first (so results can be
cached and replayed byte-for-byte), then writes it in one go.  Exit codes:
0 success, 1 domain error (typed message on stderr), 2 usage error.
"""

import argparse

import sys
from typing import Optional, Sequence, Tuple

from . import core
from .abe import ABEStore, c1_recursive
from .cache import Cache
from .counts import brute_tables, d_value
from .errors import CurlError
from .fastcn import fast_curling_number
from .formats import make_bfile, parse_seq, render_bfile, render_csv, seq_to_text
from .omega import jump_points, omega_search
from .tails import (
    essential_first_scan,
    prefix_increase_scan,
    rotten_scan,
    tail_row,
    theta_stats,
)
from .verify import run_suite

CACHEABLE = {"omega", "jumps", "tables", "cn1", "tails", "rotten", "essential", "theta"}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("plain", "csv", "bfile"), default="plain")
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--step-limit", type=int, default=None)
    common.add_argument("--cache-dir", default=None)
    common.add_argument("--cap", "--caps", dest="cap", type=int, default=None,
                        help="override the subcommand's size cap")

    p = argparse.ArgumentParser(
        prog="curlnum",
        description="Curling numbers: tails, record searches, and count tables.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("curl", parents=[common], help="curling number of a sequence")
    c.add_argument("--seq", required=True)

    c = sub.add_parser("extend", parents=[common],
                       help="append curling numbers until a 1 appears")
    c.add_argument("--seq", required=True)

    c = sub.add_parser("gijswijt", parents=[common],
                       help="prefix of the self-generating sequence started at 1")
    c.add_argument("--n", type=int, required=True)

    c = sub.add_parser("omega", parents=[common],
                       help="longest tail over all length-n binary starts")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--mode", choices=("exhaustive", "pruned"), default="exhaustive")
    c.add_argument("--block-bits", type=int, default=8)

    c = sub.add_parser("jumps", parents=[common],
                       help="lengths where the longest tail strictly grows")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--mode", choices=("exhaustive", "pruned"), default="exhaustive")

    c = sub.add_parser("tables", parents=[common],
                       help="curl count tables by brute enumeration")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--table", choices=("c", "p", "q", "pprime", "d"))
    c.add_argument("--k", type=int)

    c = sub.add_parser("cn1", parents=[common],
                       help="count of repeat-free starts, by length")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--e-cap", type=int, default=None,
                   help="brute-force ceiling for the deepest memo recursion")

    c = sub.add_parser("tails", parents=[common],
                       help="tail length distribution at one length")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--i", type=int, default=None,
                   help="print only the count of starts with this tail length")

    c = sub.add_parser("rotten", parents=[common],
                       help="starts whose tail shrinks under some one-symbol prefix")
    c.add_argument("--n", type=int, required=True)

    c = sub.add_parser("essential", parents=[common],
                       help="starts whose only curl witness reaches position 0")
    c.add_argument("--n", type=int, required=True)

    c = sub.add_parser("theta", parents=[common],
                       help="curl value shares and the two-state chain estimate")
    c.add_argument("--n", type=int, required=True)

    c = sub.add_parser("verify", parents=[common], help="golden-table and invariant suites")
    c.add_argument("--suite", choices=("paper-tables", "theorems", "all"),
                   default="paper-tables")
    c.add_argument("--fixtures-dir", default=None)
    return p


def _unsupported(command: str, fmt: str) -> str:
    raise ValueError("format %r is not defined for %r" % (fmt, command))


def _render_curl(args) -> str:
    s = parse_seq(args.seq)
    r = (fast_curling_number(s) if set(s) <= {2, 3} else core.curling_number(s))
    if args.format == "plain":
        return "k=%d pi=%d\n" % (r.k, r.pi)
    if args.format == "csv":
        return render_csv(("k", "pi"), [(r.k, r.pi)])
    return _unsupported("curl", args.format)


def _render_extend(args) -> str:
    s = parse_seq(args.seq)
    res = core.extend_to_tail(s, step_limit=args.step_limit or core.DEFAULT_STEP_LIMIT)
    ext = seq_to_text(res.extension)
    if args.format == "plain":
        return "tau=%d extension=%s\n" % (res.tau, ext)
    if args.format == "csv":
        return render_csv(("tau", "extension"), [(res.tau, ext)])
    return _unsupported("extend", args.format)


def _render_gijswijt(args) -> str:
    terms = core.gijswijt_prefix(args.n)
    if args.format == "plain":
        return ",".join(str(v) for v in terms) + "\n"
    if args.format == "csv":
        return render_csv(("index", "value"), list(enumerate(terms, start=1)))
    return render_bfile(make_bfile(1, terms))


def _render_omega(args) -> str:
    kwargs = dict(mode=args.mode, threads=args.threads, block_bits=args.block_bits)
    if args.cap is not None:
        kwargs["cap"] = args.cap
    if args.step_limit is not None:
        kwargs["step_limit"] = args.step_limit
    rep = omega_search(args.n, **kwargs)
    best = seq_to_text(rep.best)
    if args.format == "plain":
        line = "omega=%d best=%s" % (rep.omega, best)
        if rep.conjectural:
            line += " mode=%s conjectural" % rep.mode
        return line + "\n"
    if args.format == "csv":
        return render_csv(("n", "omega", "best", "achievers", "mode", "conjectural"),
                          [(rep.n, rep.omega, best, rep.achiever_count, rep.mode,
                            int(rep.conjectural))])
    return _unsupported("omega", args.format)


def _render_jumps(args) -> str:
    kwargs = dict(mode=args.mode, threads=args.threads)
    if args.cap is not None:
        kwargs["cap"] = args.cap
    points = jump_points(args.n, **kwargs)
    if args.format == "plain":
        return "jumps=%s\n" % ",".join(str(n) for n in points)
    rows = []
    for n in points:
        rep = omega_search(n, **kwargs)
        rows.append((n, rep.omega, seq_to_text(rep.best)))
    if args.format == "csv":
        return render_csv(("n", "omega", "best"), rows)
    return _unsupported("jumps", args.format)


def _render_tables(args) -> str:
    kwargs = dict(threads=args.threads)
    if args.cap is not None:
        kwargs["cap"] = args.cap
    tables = brute_tables(args.n, **kwargs)
    names = (args.table,) if args.table else ("c", "p", "q", "pprime")

    def cell(name: str, n: int, k: int) -> int:
        if name == "d":
            return d_value(n, k, method="pq", tables=tables)
        return tables.get(name, n, k)

    if args.format == "bfile":
        if not args.table or args.k is None:
            raise ValueError("tables --format bfile needs --table and --k")
        lo = max(args.k, 2) if args.table == "d" else args.k
        vals = [cell(args.table, n, args.k) for n in range(lo, args.n + 1)]
        return render_bfile(make_bfile(lo, vals))
    rows = []
    for name in names:
        for n in range(2 if name == "d" else 1, args.n + 1):
            for k in range(1, n + 1):
                if args.k is not None and k != args.k:
                    continue
                rows.append((name, n, k, cell(name, n, k)))
    if args.format == "csv":
        return render_csv(("table", "n", "k", "value"), rows)
    lines = []
    for name in names:
        for n in range(2 if name == "d" else 1, args.n + 1):
            vals = [str(v) for t, m, k, v in rows if t == name and m == n]
            lines.append("%s %d: %s" % (name, n, " ".join(vals)))
    return "".join(line + "\n" for line in lines)


def _render_cn1(args) -> str:
    store = ABEStore(args.e_cap) if args.e_cap else ABEStore()
    res = c1_recursive(args.n, store)
    rows = [(n, res.counts[n - 1], repr(float(res.ratios[n - 1])))
            for n in range(1, args.n + 1)]
    if args.format == "plain":
        return "".join("%d %d %s\n" % row for row in rows)
    if args.format == "csv":
        return render_csv(("n", "value", "ratio"), rows)
    return render_bfile(make_bfile(1, res.counts))


def _render_tails(args) -> str:
    kwargs = dict(threads=args.threads)
    if args.cap is not None:
        kwargs["cap"] = args.cap
    row = tail_row(args.n, **kwargs)
    items = sorted(row.counts.items())
    if args.i is not None:
        items = [(args.i, row.counts.get(args.i, 0))]
    if args.format == "plain":
        body = "".join("%d %d\n" % item for item in items)
        if args.i is not None:
            return body
        return body + "mean=%.6f\n" % float(row.mean)
    if args.format == "csv":
        return render_csv(("i", "count"), items)
    return render_bfile(make_bfile(items[0][0], [c for _, c in items]))


def _render_rotten(args) -> str:
    kwargs = dict(threads=args.threads)
    if args.cap is not None:
        kwargs["cap"] = args.cap
    rep = rotten_scan(args.n, **kwargs)
    if args.format == "plain":
        return "rotten=%d doubly=%d\n" % (rep.rotten_count, rep.doubly_rotten_count)
    if args.format == "csv":
        return render_csv(("n", "rotten", "doubly"),
                          [(args.n, rep.rotten_count, rep.doubly_rotten_count)])
    return _unsupported("rotten", args.format)


def _render_essential(args) -> str:
    kwargs = dict(threads=args.threads)
    if args.cap is not None:
        kwargs["cap"] = args.cap
    count = essential_first_scan(args.n, **kwargs)
    if args.format == "plain":
        return "essential=%d\n" % count
    if args.format == "csv":
        return render_csv(("n", "count"), [(args.n, count)])
    return _unsupported("essential", args.format)


def _render_theta(args) -> str:
    kwargs = dict(threads=args.threads)
    if args.cap is not None:
        kwargs["cap"] = args.cap
    tables = brute_tables(args.n, **kwargs)
    rep = theta_stats(args.n, tables)
    t = {k: float(rep.theta.get(k, 0)) for k in (1, 2, 3)}
    stay = t[2] + t[3]
    if args.format == "plain":
        return ("theta1=%.6f theta2=%.6f theta3=%.6f stay=%.6f estimate=%.6f\n"
                % (t[1], t[2], t[3], stay, rep.markov_estimate))
    if args.format == "csv":
        return render_csv(("n", "theta1", "theta2", "theta3", "stay", "estimate"),
                          [(args.n, "%.10f" % t[1], "%.10f" % t[2], "%.10f" % t[3],
                            "%.10f" % stay, "%.10f" % rep.markov_estimate)])
    return _unsupported("theta", args.format)


def _run_verify(args) -> int:
    results = run_suite(args.suite, fixtures_dir=args.fixtures_dir,
                        threads=args.threads, cap=args.cap)
    if args.format == "csv":
        sys.stdout.write(render_csv(("status", "check", "detail"),
                                    [(r.status, r.name, r.detail) for r in results]))
    else:
        for r in results:
            sys.stdout.write("%-4s %-34s %s\n" % (r.status.upper(), r.name, r.detail))
        tally = {"pass": 0, "fail": 0, "skip": 0}
        for r in results:
            tally[r.status] += 1
        sys.stdout.write("passed=%d failed=%d skipped=%d\n"
                         % (tally["pass"], tally["fail"], tally["skip"]))
    return 0 if all(r.status != "fail" for r in results) else 1


_RENDERERS = {
    "curl": _render_curl,
    "extend": _render_extend,
    "gijswijt": _render_gijswijt,
    "omega": _render_omega,
    "jumps": _render_jumps,
    "tables": _render_tables,
    "cn1": _render_cn1,
    "tails": _render_tails,
    "rotten": _render_rotten,
    "essential": _render_essential,
    "theta": _render_theta,
}


def _cache_params(args) -> Tuple[str, ...]:
    skip = {"command", "threads", "cache_dir"}
    return tuple("%s=%s" % (key, val) for key, val in sorted(vars(args).items())
                 if key not in skip)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "verify":
            return _run_verify(args)
        render = _RENDERERS[args.command]
        if args.cache_dir and args.command in CACHEABLE:
            cache = Cache(args.cache_dir)
            params = _cache_params(args)
            payload = cache.fetch(args.command, params)
            if payload is None:
                payload = render(args)
                cache.store(args.command, params, payload)
        else:
            payload = render(args)
        sys.stdout.write(payload)
        return 0
    except ValueError as exc:
        print("usage error: %s" % exc, file=sys.stderr)
        return 2
    except CurlError as exc:
        print("error: %s: %s" % (type(exc).__name__, exc), file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
