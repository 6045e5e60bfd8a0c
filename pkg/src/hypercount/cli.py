"""Command line entry point.  JSON on stdout (CSV for ``asymptotics``).

Exit status: 0 on success, 1 when a verification report has failures, 2 on
usage errors, invalid input or an exceeded oracle budget.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import characters
from .census import KINDS, CountQuery, census, count_constellations, count_hypermaps, default_threads
from .characters import chi, frobenius_count
from .littlewood import verify_littlewood
from .oracle import DEFAULT_BUDGET, BudgetExceeded, brute
from .partitions import m_split, parse_partition, sign_theta
from .relation import asymptotic_table, c_coeff, compositions, d_coeff, e_coeff, verify_relation


class UsageError(Exception):
    pass


def _exact(obj):
    if isinstance(obj, Fraction):
        return str(obj) if obj.denominator != 1 else obj.numerator
    if isinstance(obj, dict):
        return {k: _exact(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_exact(v) for v in obj]
    return obj


def render(obj) -> str:
    return json.dumps(_exact(obj)) + "\n"


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(t) for t in text.split(",")]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def _partition(text: str):
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


# -- subcommands ---------------------------------------------------------------

def cmd_chi(args):
    return render({"value": chi(args.lam, args.mu)}), 0


def cmd_frobenius(args):
    count = frobenius_count(args.alpha, args.beta)
    return render({"alpha": list(args.alpha), "betas": [list(b) for b in args.beta], "count": count}), 0


def cmd_split(args):
    split = m_split(args.theta, args.m)
    out = {
        "theta": list(args.theta),
        "m": args.m,
        "splittable": split is not None,
        "components": None if split is None else [list(c) for c in split],
        "sign": None if split is None else sign_theta(args.theta, args.m),
    }
    return render(out), 0


def cmd_coeffs(args):
    m = args.m
    rows = []
    for ks in compositions(args.order, m - 1):
        rows.append({
            "ks": list(ks),
            "e": [e_coeff(m, j, ks) for j in range(1, m + 1)],
            "d": d_coeff(m, ks),
            "c": c_coeff(m, ks),
        })
    return render(rows), 0


def _degrees(args):
    return None if args.degrees is None else frozenset(args.degrees)


def cmd_count(args):
    q = CountQuery(args.m, args.n, args.genus, _degrees(args), tuple(args.marks or ()))
    if args.kind == "constellation":
        if len(q.marks) > args.m - 1:
            raise UsageError(f"at most m-1 = {args.m - 1} marks")
        value = count_constellations(q, args.threads)
    else:
        if any(q.marks):
            raise UsageError("hypermap counts take no marks")
        value = count_hypermaps(q, args.threads)
    return render({"query": q.to_json(args.kind), "count": value}), 0


def cmd_census(args):
    return render(census(args.kind, args.m, args.n, args.threads).to_json()), 0


def cmd_oracle(args):
    return render(brute(args.kind, args.n, args.m, args.threads, args.budget).to_json()), 0


def cmd_verify_littlewood(args):
    report = verify_littlewood(args.max_size, args.m, args.threads).to_json()
    return render(report), 1 if report["failures"] else 0


def cmd_verify_relation(args):
    report = verify_relation(args.n_max, args.m, args.g_max, _degrees(args), args.threads).to_json()
    return render(report), 1 if report["failures"] else 0


def cmd_asymptotics(args):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "numerator", "denominator"])
    for n, r in asymptotic_table(args.m, args.g, _degrees(args), args.n, args.threads):
        w.writerow([n, r.numerator, r.denominator])
    return buf.getvalue(), 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hypercount", description=__doc__.splitlines()[0])
    parser.add_argument("--threads", type=int, default=None, help="worker threads (default: CPU count)")
    parser.add_argument("--output", default=None, help="write to FILE instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chi", help="irreducible character value")
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)
    p.add_argument("--mu", type=_partition, required=True)
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("frobenius", help="factorizations of a fixed permutation")
    p.add_argument("--alpha", type=_partition, required=True)
    p.add_argument("--beta", type=_partition, action="append", default=[])
    p.set_defaults(func=cmd_frobenius)

    p = sub.add_parser("split", help="m-split and sign of a partition")
    p.add_argument("--theta", type=_partition, required=True)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("coeffs", help="e, d, c coefficients of a given order")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--order", type=int, required=True)
    p.set_defaults(func=cmd_coeffs)

    for name, func, helptext in (
        ("count", cmd_count, "count rooted maps"),
        ("census", cmd_census, "character-based census"),
        ("oracle", cmd_oracle, "brute-force census"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--kind", choices=KINDS, required=True)
        p.add_argument("--m", type=int, required=True)
        p.add_argument("--n", type=int, required=True)
        if name == "count":
            p.add_argument("--genus", type=int, required=True)
            p.add_argument("--degrees", type=_int_list, default=None)
            p.add_argument("--marks", type=_int_list, default=None)
        if name == "oracle":
            p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
        p.set_defaults(func=func)

    verify = sub.add_parser("verify", help="run an identity check")
    vsub = verify.add_subparsers(dest="check", required=True)
    p = vsub.add_parser("littlewood")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--max-size", type=int, required=True)
    p.set_defaults(func=cmd_verify_littlewood)
    p = vsub.add_parser("relation")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--g-max", type=int, required=True)
    p.add_argument("--degrees", type=_int_list, default=None)
    p.set_defaults(func=cmd_verify_relation)

    p = sub.add_parser("asymptotics", help="exact ratios H / (m^{2g} C) as CSV")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--n", type=_int_list, required=True)
    p.add_argument("--degrees", type=_int_list, default=None)
    p.set_defaults(func=cmd_asymptotics)
    return parser


def run(argv: Sequence[str] | None = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.threads is not None and args.threads < 1:
        print("hypercount: --threads must be >= 1", file=sys.stderr)
        return 2
    args.threads = args.threads or default_threads()

    path = characters.cache_path()
    if path is not None:
        characters.TABLE.load(path)
    try:
        text, code = args.func(args)
    except (UsageError, ValueError, BudgetExceeded) as exc:
        print(f"hypercount: {exc}", file=sys.stderr)
        return 2
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        characters.TABLE.dump(path)

    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return code


def main() -> None:
    sys.exit(run())
