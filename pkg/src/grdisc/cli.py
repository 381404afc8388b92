"""Command-line interface.

Exit codes: 0 success / within bound, 1 bound violation, 2 usage or parse
error, 3 resource limit.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from . import constructions
from .discrepancy import Context, certify, evaluate_ordering
from .errors import GrdiscError, InfeasibleParameters, ParseError, ResourceLimit
from .formats import decimal, parse_ordering, read_instance, result_record, format_instance
from .greedy import GreedyVariant, order
from .oracle import ENUM_CAP, exact_grdisc_dp, exact_grdisc_enum
from .sweep import run_sweep, sweep_csv

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


def _write(text: str, path) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _text_summary(record: dict) -> str:
    lines = [
        f"n={record['n']} k={record['k']} m={record['m']} p={record['p']} ({record['p_decimal']})",
        f"variant: {record['variant']}",
        "ordering: " + " ".join(map(str, record["ordering"])),
        "i e_i N_i value",
    ]
    lines += [f"{r['i']} {r['e_i']} {r['N_i']} {r['value']}" for r in record["rows"]]
    lines.append(f"maxAbsScaled={record['maxAbsScaled']} ({record['maxAbs']})")
    lines.append(f"boundScaled={record['boundScaled']} ({record['bound']})")
    lines.append(f"withinBound={str(record['withinBound']).lower()}")
    return "\n".join(lines) + "\n"


def _violation_witness(record: dict) -> None:
    witness = {k: record[k] for k in ("n", "k", "m", "ordering", "maxAbsScaled", "boundScaled", "firstViolationIndex")}
    print("BOUND VIOLATION " + json.dumps(witness), file=sys.stderr)


def cmd_order(args) -> int:
    H = read_instance(args.input)
    variant = GreedyVariant.parse(args.variant)
    start = time.perf_counter()
    result = order(H, variant)
    elapsed = time.perf_counter() - start
    record = result_record(H, result.profile, variant, timing=elapsed)
    if args.format == "json":
        text = json.dumps(record, indent=2) + "\n"
    else:
        text = _text_summary(record)
    _write(text, args.out)
    if not record["withinBound"]:
        _violation_witness(record)
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_exact(args) -> int:
    H = read_instance(args.input)
    value, witness = exact_grdisc_dp(H)
    den = Context.of(H).denominator
    frac = Fraction(value, den) if den else Fraction(0)
    print(f"grdiscScaled={value}")
    print(f"denominator={den}")
    print(f"grdisc={frac.numerator}/{frac.denominator} ({decimal(value, den)})")
    print("witness: " + " ".join(map(str, witness)))
    if args.enum_check:
        if H.n > ENUM_CAP:
            print(f"enum-check skipped: n={H.n} exceeds {ENUM_CAP}")
        else:
            brute = exact_grdisc_enum(H)
            verdict = "agree" if brute == value else "DISAGREE"
            print(f"enum-check: {verdict} (enumeration={brute})")
            if brute != value:
                return EXIT_VIOLATION
    return EXIT_OK


def cmd_construct(args) -> int:
    if args.family == "extremal-graph":
        H, report = constructions.extremal_graph(args.n, Fraction(args.p), args.mode)
        report = report.as_dict()
    elif args.family == "extremal-hypergraph":
        H, report = constructions.extremal_hypergraph(
            args.n, args.k, Fraction(args.p), Fraction(args.cap_multiplier)
        )
        report = report.as_dict()
    else:
        if args.m is None:
            raise ParseError("--family random needs --m")
        H = constructions.random_uniform(args.n, args.k, args.m, args.seed)
        report = {"n": H.n, "k": H.k, "m": H.m, **H.metadata}
    _write(format_instance(H), args.out)
    report_text = json.dumps(report, indent=2) + "\n"
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(report_text)
    else:
        sys.stderr.write(report_text)
    return EXIT_OK


def _int_list(text: str) -> list:
    return [int(x) for x in text.split(",") if x.strip()]


def _str_list(text: str) -> list:
    return [x.strip() for x in text.split(",") if x.strip()]


def cmd_sweep(args) -> int:
    ns, ps, variants = _int_list(args.n), _str_list(args.p), _str_list(args.variants)
    if not ns or not ps or not variants or args.seeds < 1:
        raise ParseError("sweep grids must be non-empty")
    for q in ps:
        Fraction(q)  # validate early
    rows = run_sweep(args.k, ns, ps, args.seeds, variants, workers=args.workers)
    _write(sweep_csv(rows), args.out)
    if any(row.within_bound is False for row in rows):
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_verify(args) -> int:
    H = read_instance(args.input)
    with open(args.ordering) as fh:
        ordering = parse_ordering(fh.read())
    profile = evaluate_ordering(H, ordering)
    cert = certify(profile)
    print(f"maxAbsScaled={cert.max_abs_scaled}")
    print(f"boundScaled={cert.bound_scaled}")
    print(f"withinBound={str(cert.within_bound).lower()}")
    if not cert.within_bound:
        print(f"firstViolationIndex={cert.first_violation_index}")
        return EXIT_VIOLATION
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="grdisc", description="Graded discrepancy orderings.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("order", help="greedy ordering of an instance file")
    p.add_argument("--input", required=True)
    p.add_argument("--variant", choices=["proof", "exact"], default="proof")
    p.add_argument("--out")
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("exact", help="exact graded discrepancy by subset DP")
    p.add_argument("--input", required=True)
    p.add_argument("--enum-check", action="store_true")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("construct", help="build an instance file")
    p.add_argument("--family", choices=["extremal-graph", "extremal-hypergraph", "random"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--p", default="1/4")
    p.add_argument("--m", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mode", choices=["strict", "rounded"], default="strict")
    p.add_argument("--cap-multiplier", default="2")
    p.add_argument("--out")
    p.add_argument("--report", help="sidecar JSON for the construction report (default: stderr)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("sweep", help="CSV sweep over random instances")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--n", required=True, help="comma-separated vertex counts")
    p.add_argument("--p", required=True, help="comma-separated target densities")
    p.add_argument("--seeds", type=int, default=1)
    p.add_argument("--variants", default="proof,exact")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="recompute the profile of a given ordering")
    p.add_argument("--input", required=True)
    p.add_argument("--ordering", required=True)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (GrdiscError, ValueError, OSError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
