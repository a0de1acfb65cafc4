"""Command-line interface.

Subcommands: chi, table, reduce, core, sample, verify, stats.  Exit codes:
0 on success (and zero violations), 1 when a verifier finds violations,
2 on usage errors.  Output is byte-identical for identical arguments and
independent of the worker count.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import mpmath

from . import characters, divisibility, stats
from .abacus import is_tcore, tcore
from .divisibility import CombineConfig
from .errors import FormatError, RangeError, SizeCapError, UnreachableError
from .partitions import format_partition, parse_partition, sample_uniform


def _default_threads() -> int:
    return max(1, os.cpu_count() or 1)


def _dump_json(obj, out) -> None:
    out.write(json.dumps(obj, separators=(",", ":")))
    out.write("\n")


def _report_out(report, fmt: str, out) -> int:
    d = report.as_dict()
    if fmt == "csv":
        out.write("lemma,checked,skipped,violated\n")
        out.write(f"{d['lemma']},{d['checked']},{d['skipped']},{d['violated']}\n")
    elif fmt == "text":
        out.write(
            f"{d['lemma']}: checked={d['checked']} skipped={d['skipped']} "
            f"violated={d['violated']}\n"
        )
        if d["witness"]:
            out.write(f"witness: {json.dumps(d['witness'], separators=(',', ':'))}\n")
    else:
        _dump_json(d, out)
    return 0 if d["violated"] == 0 else 1


def _add_partition_arg(parser, flag: str, dest: str, required: bool = True):
    parser.add_argument(
        flag, dest=dest, required=required, help="partition, e.g. [6,5,3,1,1,1]"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="charcore",
        description="Exact symmetric-group character values and divisibility checks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_chi = sub.add_parser("chi", help="one character value")
    _add_partition_arg(p_chi, "--lambda", "lam")
    _add_partition_arg(p_chi, "--mu", "mu")

    p_table = sub.add_parser("table", help="full character table")
    p_table.add_argument("n", type=int)
    p_table.add_argument("--format", choices=("csv", "json", "text"), default="csv")
    p_table.add_argument("--out", default=None)
    p_table.add_argument("--threads", type=int, default=None)

    p_reduce = sub.add_parser("reduce", help="combine equal parts to the fixpoint")
    _add_partition_arg(p_reduce, "--mu", "mu")
    p_reduce.add_argument("--p", type=int, required=True)
    p_reduce.add_argument("--r", type=int, required=True)

    p_core = sub.add_parser("core", help="t-core of a partition")
    _add_partition_arg(p_core, "--lambda", "lam")
    p_core.add_argument("--t", type=int, required=True)
    p_core.add_argument("--format", choices=("json", "text"), default="text")

    p_sample = sub.add_parser("sample", help="uniform random partitions")
    p_sample.add_argument("--n", type=int, required=True)
    p_sample.add_argument("--seed", type=int, required=True)
    p_sample.add_argument("--count", type=int, default=1)

    p_verify = sub.add_parser("verify", help="exhaustive lemma checks")
    p_verify.add_argument(
        "lemma",
        choices=(
            "combine",
            "lemma61",
            "lemma62",
            "factorization",
            "prop-pm1",
            "theorem3",
            "lemma81",
        ),
    )
    p_verify.add_argument("--n", type=int, required=True)
    p_verify.add_argument("--p", type=int)
    p_verify.add_argument("--r", type=int)
    p_verify.add_argument("--m", type=int)
    p_verify.add_argument("--hooks", type=int, default=3, help="max removals per row")
    p_verify.add_argument("--format", choices=("csv", "json", "text"), default="json")

    p_stats = sub.add_parser("stats", help="densities, counts, and bounds")
    st = p_stats.add_subparsers(dest="stat", required=True)

    s_density = st.add_parser("density")
    s_density.add_argument("--n", type=int, required=True)
    s_density.add_argument("--mod", type=int, required=True)
    s_density.add_argument("--format", choices=("csv", "json"), default="json")
    s_density.add_argument("--out", default=None)
    s_density.add_argument("--threads", type=int, default=None)

    s_tcores = st.add_parser("tcores")
    s_tcores.add_argument("--n", type=int, required=True)
    s_tcores.add_argument("--t", type=int, required=True)
    s_tcores.add_argument("--format", choices=("csv", "json"), default="json")

    s_prop4 = st.add_parser("prop4")
    s_prop4.add_argument("--n", type=int, required=True)
    s_prop4.add_argument("--p", type=int, required=True)
    s_prop4.add_argument("--r", type=int, required=True)
    s_prop4.add_argument("--samples", type=int, required=True)
    s_prop4.add_argument("--seed", type=int, required=True)

    s_fp = st.add_parser("fp")
    s_fp.add_argument("--p", type=int, required=True)
    s_fp.add_argument("--t", type=float, required=True)
    s_fp.add_argument("--dps", type=int, default=30)

    s_ppower = st.add_parser("ppower")
    s_ppower.add_argument("--p", type=int, required=True)
    s_ppower.add_argument("--k", type=int, required=True)
    s_ppower.add_argument("--r", type=int, default=None)
    s_ppower.add_argument("--s", type=int, default=None)

    s_pdiff = st.add_parser("pdiff")
    s_pdiff.add_argument("--p", type=int, required=True)
    s_pdiff.add_argument("--r", type=int, required=True)
    s_pdiff.add_argument("--s", type=int, required=True)
    s_pdiff.add_argument("--k", type=int, required=True)

    s_delta = st.add_parser("delta")
    s_delta.add_argument("--n", type=int, required=True)
    s_delta.add_argument("--p", type=int, required=True)
    s_delta.add_argument("--r", type=int, required=True)
    s_delta.add_argument("--L", type=float, required=True)
    s_delta.add_argument("--tail", type=float, default=1e-6)

    return parser


def _cmd_chi(args, out) -> int:
    lam = parse_partition(args.lam)
    mu = parse_partition(args.mu)
    out.write(f"{characters.chi(lam, mu)}\n")
    return 0


def _cmd_table(args, out) -> int:
    threads = args.threads if args.threads is not None else _default_threads()
    table = characters.build_table(args.n, threads=threads)
    if args.format == "csv":
        characters.write_table_csv(table, out)
    elif args.format == "json":
        characters.write_table_json(table, out)
        out.write("\n")
    else:
        for lam, row in zip(table.partitions, table.rows):
            out.write(format_partition(lam) + ": " + " ".join(map(str, row)) + "\n")
    return 0


def _cmd_reduce(args, out) -> int:
    cfg = CombineConfig(args.p, args.r)
    mu = parse_partition(args.mu)
    out.write(format_partition(divisibility.reduce_partition(mu, cfg).output) + "\n")
    return 0


def _cmd_core(args, out) -> int:
    lam = parse_partition(args.lam)
    core = tcore(lam, args.t)
    if args.format == "json":
        _dump_json(
            {
                "lambda": format_partition(lam),
                "t": args.t,
                "core": format_partition(core),
                "is_core": is_tcore(lam, args.t),
            },
            out,
        )
    else:
        out.write(format_partition(core) + "\n")
    return 0


def _cmd_sample(args, out) -> int:
    for i in range(args.count):
        out.write(format_partition(sample_uniform(args.n, args.seed + i)) + "\n")
    return 0


def _require(args, *names) -> None:
    for name in names:
        if getattr(args, name, None) is None:
            raise FormatError(f"--{name} is required for this subcommand")


def _cmd_verify(args, out) -> int:
    lemma = args.lemma
    if lemma in ("combine", "lemma62", "prop-pm1", "theorem3", "lemma81"):
        _require(args, "p", "r")
        cfg = CombineConfig(args.p, args.r)
    if lemma == "combine":
        report = divisibility.verify_combine_congruence(args.n, cfg)
    elif lemma == "lemma61":
        _require(args, "m")
        report = divisibility.verify_lemma61(args.n, args.m, args.hooks)
    elif lemma == "lemma62":
        _require(args, "m")
        report = divisibility.verify_lemma62(args.n, args.m, cfg)
    elif lemma == "factorization":
        _require(args, "m")
        report = divisibility.verify_factorization(args.n, args.m, args.hooks)
    elif lemma == "prop-pm1":
        _require(args, "m")
        report = divisibility.verify_prop_pm1_sweep(args.n, args.m, cfg)
    elif lemma == "theorem3":
        report = divisibility.verify_theorem3(args.n, cfg)
    else:
        report = divisibility.verify_lemma81(args.n, cfg)
    return _report_out(report, args.format, out)


def _cmd_stats(args, out) -> int:
    if args.stat == "density":
        threads = args.threads if args.threads is not None else _default_threads()
        rep = stats.density_report(args.n, args.mod, threads=threads)
        d = rep.as_dict()
        if args.format == "csv":
            keys = list(d)
            out.write(",".join(keys) + "\n")
            out.write(",".join(str(d[k]) for k in keys) + "\n")
        else:
            _dump_json(d, out)
        return 0
    if args.stat == "tcores":
        count = stats.count_non_tcores(args.n, args.t)
        d = {
            "n": args.n,
            "t": args.t,
            "non_tcores": count,
            "bound": (args.t + 1) * stats.partition_count(max(args.n - args.t, 0))
            if args.t <= args.n
            else 0,
        }
        if args.format == "csv":
            keys = list(d)
            out.write(",".join(keys) + "\n")
            out.write(",".join(str(d[k]) for k in keys) + "\n")
        else:
            _dump_json(d, out)
        return 0
    if args.stat == "prop4":
        cfg = CombineConfig(args.p, args.r)
        rep = stats.prop4_empirical(args.n, cfg, args.samples, args.seed)
        _dump_json(rep.as_dict(), out)
        return 0
    if args.stat == "fp":
        value = stats.generating_function_fp(args.p, args.t, dps=args.dps)
        _dump_json(
            {
                "p": args.p,
                "t": args.t,
                "dps": args.dps,
                "value": mpmath.nstr(value, args.dps),
            },
            out,
        )
        return 0
    if args.stat == "ppower":
        if args.r is not None or args.s is not None:
            _require(args, "r", "s")
            value = stats.ppower_count_restricted(args.p, args.r, args.s, args.k)
        else:
            value = stats.ppower_count(args.p, args.k)
        _dump_json({"p": args.p, "k": args.k, "count": str(value)}, out)
        return 0
    if args.stat == "pdiff":
        check = stats.ppower_difference_check(args.p, args.r, args.s, args.k)
        _dump_json(check.as_dict(), out)
        return 0 if check.satisfied else 1
    if args.stat == "delta":
        cfg = CombineConfig(args.p, args.r)
        check = stats.lemma91_delta(args.n, cfg, args.L, tail=args.tail)
        _dump_json(check.as_dict(), out)
        return 0
    raise FormatError(f"unknown stats subcommand {args.stat!r}")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = sys.stdout
    close = False
    target = getattr(args, "out", None)
    if target:
        out = open(target, "w")
        close = True
    try:
        if args.command == "chi":
            return _cmd_chi(args, out)
        if args.command == "table":
            return _cmd_table(args, out)
        if args.command == "reduce":
            return _cmd_reduce(args, out)
        if args.command == "core":
            return _cmd_core(args, out)
        if args.command == "sample":
            return _cmd_sample(args, out)
        if args.command == "verify":
            return _cmd_verify(args, out)
        if args.command == "stats":
            return _cmd_stats(args, out)
        parser.error(f"unknown command {args.command!r}")
        return 2
    except (
        FormatError,
        SizeCapError,
        UnreachableError,
        RangeError,
        ValueError,
    ) as exc:
        print(f"charcore: error: {exc}", file=sys.stderr)
        return 2
    finally:
        if close:
            out.close()


if __name__ == "__main__":
    raise SystemExit(main())
