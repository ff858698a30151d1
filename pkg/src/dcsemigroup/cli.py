"""Command-line front end.

Exit codes: 0 when everything passes, 1 when a verification check fails,
2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Sequence

from . import lattice
from .errors import SemigroupError
from .families import (
    THM12_CASES,
    CaseId,
    FamilyCase,
    odd_gap_formula,
    odd_generators,
    family_semigroup,
    verify_case,
)
from .semigroup import NumericalSemigroup, from_generators

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise UsageError(f"ParseError: expected comma-separated integers, got {text!r}") from None


def invariants(H: NumericalSemigroup) -> dict[str, Any]:
    return {
        "generators": list(H.generators),
        "conductor": H.conductor,
        "frobenius": H.frobenius,
        "genus": H.genus,
        "multiplicity": H.multiplicity,
        "min_odd_element": H.min_odd_element,
        "gaps": list(H.gaps),
        "odd_gaps": list(H.odd_gaps),
        "even_gaps": list(H.even_gaps),
    }


def _fmt(value: Any) -> str:
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, (list, tuple)):
        return " ".join(map(str, value))
    return str(value)


def _text_block(fields: dict[str, Any]) -> str:
    width = max(map(len, fields))
    lines = []
    for key, value in fields.items():
        if isinstance(value, (list, tuple)):
            value = ",".join(map(str, value)) or "(none)"
        lines.append(f"{key:<{width}}  {_fmt(value)}")
    return "\n".join(lines) + "\n"


def _csv_rows(header: list[str], rows: list[list[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_fmt(v) for v in row])
    return buf.getvalue()


def _flat_csv(fields: dict[str, Any]) -> str:
    return _csv_rows(["field", "value"], [[k, v] for k, v in fields.items()])


def cmd_show(args: argparse.Namespace) -> tuple[str, int]:
    H = from_generators(_int_list(args.gens))
    fields = invariants(H)
    if args.format == "json":
        return json.dumps(fields, indent=2) + "\n", EXIT_OK
    if args.format == "csv":
        return _flat_csv(fields), EXIT_OK
    return _text_block(fields), EXIT_OK


def _parse_case(name: str) -> CaseId:
    try:
        return CaseId(name)
    except ValueError:
        choices = ", ".join(c.value for c in CaseId)
        raise UsageError(f"InvalidCase: {name!r} (choose from {choices})") from None


def cmd_family(args: argparse.Namespace) -> tuple[str, int]:
    case = FamilyCase(_parse_case(args.case), args.d)
    H = family_semigroup(case)
    report = verify_case(case)
    doc: dict[str, Any] = {"case": case.case_id.value, "d": case.d}
    doc.update(invariants(H))
    if case.is_cover:
        doc["odd_generators"] = odd_generators(case)
    if case.case_id in THM12_CASES:
        doc["formula_odd_gaps"] = list(odd_gap_formula(case.case_id, case.d))
    doc["checks"] = [c.to_dict() for c in report.checks]
    status = EXIT_OK if report.passed else EXIT_FAIL

    if args.format == "json":
        return json.dumps(doc, indent=2) + "\n", status
    if args.format == "csv":
        flat = {k: v for k, v in doc.items() if k not in ("checks", "odd_generators")}
        return _flat_csv(flat), status

    out = [f"{case}\n"]
    out.append(_text_block({k: v for k, v in doc.items()
                            if k not in ("case", "d", "checks", "odd_generators", "formula_odd_gaps")}))
    if "formula_odd_gaps" in doc:
        formula, computed = doc["formula_odd_gaps"], doc["odd_gaps"]
        out.append("\nodd gaps   formula  computed\n")
        for n in sorted(set(formula) | set(computed)):
            out.append(f"{'':10} {_mark(n, formula):>7}  {_mark(n, computed):>8}\n")
    out.append("\n")
    for c in report.checks:
        out.append(f"[{'PASS' if c.passed else 'FAIL'}] {c.name}\n")
    return "".join(out), status


def _mark(n: int, values: list[int]) -> str:
    return str(n) if n in values else "-"


def _verify_one(key: tuple[str, int]) -> dict[str, Any]:
    return verify_case(FamilyCase(key[0], key[1])).to_dict()


def cmd_verify(args: argparse.Namespace) -> tuple[str, int]:
    if args.d_min < lattice.MIN_DEGREE:
        raise UsageError(f"DegreeTooSmall: --d-min must be >= {lattice.MIN_DEGREE}")
    if args.d_min > args.d_max:
        raise UsageError("InvalidRange: --d-min exceeds --d-max")
    cases = list(CaseId) if args.case == "all" else [_parse_case(args.case)]
    keys = [(c.value, d) for c in cases for d in range(args.d_min, args.d_max + 1)]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_verify_one, keys))
    else:
        reports = [_verify_one(k) for k in keys]
    ok = all(r["pass"] for r in reports)
    status = EXIT_OK if ok else EXIT_FAIL

    if args.format == "json":
        doc = {
            "d_min": args.d_min,
            "d_max": args.d_max,
            "cases": sorted({r["case"] for r in reports}, key=[c.value for c in CaseId].index),
            "pass": ok,
            "reports": reports,
        }
        return json.dumps(doc, indent=2) + "\n", status
    if args.format == "csv":
        rows = [[r["case"], r["d"], c["name"], c["expected"], c["actual"], c["pass"]]
                for r in reports for c in r["checks"]]
        return _csv_rows(["case", "d", "check", "expected", "actual", "pass"], rows), status

    out = []
    for r in reports:
        failed = [c["name"] for c in r["checks"] if not c["pass"]]
        line = f"{'PASS' if r['pass'] else 'FAIL'}  {r['case']:<9} d={r['d']:<3} {len(r['checks'])} checks"
        if failed:
            line += "  failed: " + ", ".join(failed)
        out.append(line)
    n_fail = sum(not r["pass"] for r in reports)
    out.append(f"{len(reports) - n_fail}/{len(reports)} case reports passed")
    return "\n".join(out) + "\n", status


def cmd_picard(args: argparse.Namespace) -> tuple[str, int]:
    parts = _int_list(args.divisor_class)
    if len(parts) != 2:
        raise UsageError(f"ParseError: --class needs two integers a,b, got {args.divisor_class!r}")
    D = lattice.DivisorClass(*parts)
    K = lattice.canonical_class()
    fields: dict[str, Any] = {
        "class": [D.a, D.b],
        "self_intersection": lattice.intersect(D, D),
        "canonical_pairing": lattice.intersect(D, K),
    }
    try:
        fields["adjunction_genus"] = lattice.adjunction_genus(D)
    except SemigroupError:
        fields["adjunction_genus"] = None
    if args.format == "json":
        return json.dumps(fields, indent=2) + "\n", EXIT_OK
    if args.format == "csv":
        return _flat_csv({k: ("" if v is None else v) for k, v in fields.items()}), EXIT_OK
    fields["class"] = str(D)
    if fields["adjunction_genus"] is None:
        fields["adjunction_genus"] = "n/a"
    return _text_block(fields), EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dcsemigroup",
        description="Numerical semigroups of double-covering type and their verification.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--out", help="write output to this path instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("show", parents=[common], help="invariants of <gens>")
    p.add_argument("--gens", required=True, help="comma-separated positive integers")
    p.set_defaults(func=cmd_show)

    p = sub.add_parser("family", parents=[common], help="one family at one degree")
    p.add_argument("--case", required=True)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("verify", parents=[common], help="sweep the verification harness")
    p.add_argument("--case", default="all")
    p.add_argument("--d-min", type=int, default=4)
    p.add_argument("--d-max", type=int, default=30)
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("picard", parents=[common], help="intersection data of aL+bE")
    p.add_argument("--class", dest="divisor_class", required=True, metavar="A,B")
    p.set_defaults(func=cmd_picard)
    return parser


def _glue_negative_values(argv: list[str]) -> list[str]:
    # "--class -3,1" would otherwise be parsed as an unknown option
    out, i = [], 0
    while i < len(argv):
        if argv[i] in ("--class", "--gens") and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{argv[i]}={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv: Sequence[str] | None = None) -> int:
    argv = _glue_negative_values(list(sys.argv[1:] if argv is None else argv))
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text, status = args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SemigroupError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: ValueError: {exc}", file=sys.stderr)
        return EXIT_USAGE

    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"error: OSError: {exc}", file=sys.stderr)
            return EXIT_USAGE
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
