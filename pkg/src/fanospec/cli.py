"""Command-line front end: single-instance checks, exhaustive scans, series dumps.

Every numeric field in machine output is serialized as a decimal string, so
arbitrary-precision values survive any downstream JSON/CSV consumer.  Scan
output is byte-deterministic: rows are sorted by (dim, r, degrees) and carry
no timing data.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from .conjectures import ConjectureReport, verify_instance
from .gw import mirror_coefficients
from .spectrum import (
    Eigenvalue,
    ExactInteger,
    IntegerModulus,
    Modulus,
    RootScaled,
    lambda_closed_form,
    lambda_via_series,
    lambda_via_sum,
    lambda_via_twopoint,
)
from .variety import CompleteIntersection, InvalidVariety, enumerate_fano_cis, invariants

SCHEMA_VERSION = "qspec-ci/1"

CSV_FIELDS = [
    "dim",
    "degrees",
    "rho",
    "D",
    "F",
    "euler",
    "primitiveDim",
    "lambda",
    "T",
    "spectrum",
    "conjOMultiplicityOne",
    "conjORootsOfUnity",
    "galkinStrict",
    "lambdaConsistent",
    "radiusMultiplicity",
    "galkinLhs",
    "galkinRhs",
    "error",
]

_DECIMAL = {"type": "string", "pattern": "^-?[0-9]+$"}
_EIGENVALUE_SCHEMA = {
    "type": "object",
    "oneOf": [
        {
            "properties": {
                "kind": {"const": "integer"},
                "value": _DECIMAL,
                "multiplicity": _DECIMAL,
            },
            "required": ["kind", "value", "multiplicity"],
            "additionalProperties": False,
        },
        {
            "properties": {
                "kind": {"const": "root"},
                "rootOrder": _DECIMAL,
                "radicand": _DECIMAL,
                "phase": _DECIMAL,
                "multiplicity": _DECIMAL,
            },
            "required": ["kind", "rootOrder", "radicand", "phase", "multiplicity"],
            "additionalProperties": False,
        },
    ],
}
_MODULUS_SCHEMA = {
    "type": "object",
    "oneOf": [
        {
            "properties": {"kind": {"const": "integer"}, "value": _DECIMAL},
            "required": ["kind", "value"],
            "additionalProperties": False,
        },
        {
            "properties": {
                "kind": {"const": "root"},
                "rootOrder": _DECIMAL,
                "radicand": _DECIMAL,
            },
            "required": ["kind", "rootOrder", "radicand"],
            "additionalProperties": False,
        },
    ],
}

REPORT_SCHEMA = {
    "type": "object",
    "properties": {
        "schemaVersion": {"const": SCHEMA_VERSION},
        "dim": _DECIMAL,
        "degrees": {"type": "array", "items": _DECIMAL, "minItems": 1},
        "rho": _DECIMAL,
        "D": _DECIMAL,
        "F": _DECIMAL,
        "euler": _DECIMAL,
        "primitiveDim": _DECIMAL,
        "spectrum": {"type": ["array", "null"], "items": _EIGENVALUE_SCHEMA},
        "lambda": {"oneOf": [_DECIMAL, {"type": "null"}]},
        "T": {"oneOf": [_MODULUS_SCHEMA, {"type": "null"}]},
        "verdicts": {
            "type": "object",
            "properties": {
                "conjOMultiplicityOne": {"type": "boolean"},
                "conjORootsOfUnity": {"type": "boolean"},
                "galkinStrict": {"type": "boolean"},
                "lambdaConsistent": {"type": "boolean"},
            },
            "required": [
                "conjOMultiplicityOne",
                "conjORootsOfUnity",
                "galkinStrict",
                "lambdaConsistent",
            ],
            "additionalProperties": False,
        },
        "witnesses": {
            "type": "object",
            "properties": {
                "radiusMultiplicity": _DECIMAL,
                "maximalEigenvalues": {"type": "array", "items": _EIGENVALUE_SCHEMA},
                "galkinLhs": _DECIMAL,
                "galkinRhs": _DECIMAL,
                "error": {"type": ["string", "null"]},
            },
            "required": [
                "radiusMultiplicity",
                "maximalEigenvalues",
                "galkinLhs",
                "galkinRhs",
                "error",
            ],
            "additionalProperties": False,
        },
        "timingMs": _DECIMAL,
    },
    "required": [
        "schemaVersion",
        "dim",
        "degrees",
        "rho",
        "D",
        "F",
        "euler",
        "primitiveDim",
        "spectrum",
        "lambda",
        "T",
        "verdicts",
        "witnesses",
    ],
    "additionalProperties": False,
}


def _eigenvalue_json(eig: Eigenvalue, mult: int) -> dict:
    if isinstance(eig, ExactInteger):
        return {"kind": "integer", "value": str(eig.value), "multiplicity": str(mult)}
    return {
        "kind": "root",
        "rootOrder": str(eig.root_order),
        "radicand": str(eig.radicand),
        "phase": str(eig.phase),
        "multiplicity": str(mult),
    }


def _modulus_json(m: Modulus) -> dict:
    if isinstance(m, IntegerModulus):
        return {"kind": "integer", "value": str(m.value)}
    return {"kind": "root", "rootOrder": str(m.root_order), "radicand": str(m.radicand)}


def instance_document(report: ConjectureReport, timing_ms: int | None = None) -> dict:
    """One ReportDocument, all numbers as decimal strings."""
    ci = report.instance
    inv = invariants(ci)
    spectrum = report.spectrum
    doc = {
        "schemaVersion": SCHEMA_VERSION,
        "dim": str(ci.dim),
        "degrees": [str(d) for d in ci.degrees],
        "rho": str(inv.rho),
        "D": str(inv.big_d),
        "F": str(inv.big_f),
        "euler": str(inv.euler),
        "primitiveDim": str(inv.primitive_dim),
        "spectrum": None
        if spectrum is None
        else [_eigenvalue_json(e, m) for e, m in spectrum.entries],
        "lambda": None
        if spectrum is None or spectrum.lambda_value is None
        else str(spectrum.lambda_value),
        "T": None if spectrum is None else _modulus_json(spectrum.radius),
        "verdicts": {
            "conjOMultiplicityOne": report.conj_o_multiplicity_one,
            "conjORootsOfUnity": report.conj_o_roots_of_unity,
            "galkinStrict": report.galkin_strict,
            "lambdaConsistent": report.lambda_consistent,
        },
        "witnesses": {
            "radiusMultiplicity": str(report.radius_multiplicity),
            "maximalEigenvalues": [
                _eigenvalue_json(e, m) for e, m in report.maximal_eigenvalues
            ],
            "galkinLhs": str(report.galkin_lhs),
            "galkinRhs": str(report.galkin_rhs),
            "error": report.error,
        },
    }
    if timing_ms is not None:
        doc["timingMs"] = str(timing_ms)
    return doc


def render_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _spectrum_display(doc: dict) -> str:
    if doc["spectrum"] is None:
        return ""
    parts = []
    for entry in doc["spectrum"]:
        if entry["kind"] == "integer":
            label = entry["value"]
        else:
            label = f"{entry['rootOrder']}*{entry['radicand']}^(1/{entry['rootOrder']})"
            if entry["phase"] != "0":
                label += f"*zeta{entry['rootOrder']}^{entry['phase']}"
        parts.append(f"({label})x{entry['multiplicity']}")
    return ";".join(parts)


def _modulus_display(doc: dict) -> str:
    t = doc["T"]
    if t is None:
        return ""
    if t["kind"] == "integer":
        return t["value"]
    return f"{t['rootOrder']}*{t['radicand']}^(1/{t['rootOrder']})"


def _csv_row(doc: dict) -> dict:
    return {
        "dim": doc["dim"],
        "degrees": ";".join(doc["degrees"]),
        "rho": doc["rho"],
        "D": doc["D"],
        "F": doc["F"],
        "euler": doc["euler"],
        "primitiveDim": doc["primitiveDim"],
        "lambda": "" if doc["lambda"] is None else doc["lambda"],
        "T": _modulus_display(doc),
        "spectrum": _spectrum_display(doc),
        "conjOMultiplicityOne": str(doc["verdicts"]["conjOMultiplicityOne"]).lower(),
        "conjORootsOfUnity": str(doc["verdicts"]["conjORootsOfUnity"]).lower(),
        "galkinStrict": str(doc["verdicts"]["galkinStrict"]).lower(),
        "lambdaConsistent": str(doc["verdicts"]["lambdaConsistent"]).lower(),
        "radiusMultiplicity": doc["witnesses"]["radiusMultiplicity"],
        "galkinLhs": doc["witnesses"]["galkinLhs"],
        "galkinRhs": doc["witnesses"]["galkinRhs"],
        "error": doc["witnesses"]["error"] or "",
    }


def render_csv(docs: list[dict]) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    for doc in docs:
        writer.writerow(_csv_row(doc))
    return buffer.getvalue()


def render_text_check(doc: dict) -> str:
    row = _csv_row(doc)
    lines = [f"{field:<22} {row[field]}" for field in CSV_FIELDS]
    if "timingMs" in doc:
        lines.append(f"{'timingMs':<22} {doc['timingMs']}")
    return "\n".join(lines) + "\n"


_TEXT_COLUMNS = [
    "dim",
    "degrees",
    "rho",
    "euler",
    "primitiveDim",
    "lambda",
    "T",
    "conjOMultiplicityOne",
    "conjORootsOfUnity",
    "galkinStrict",
    "lambdaConsistent",
]


def render_text_scan(docs: list[dict], failures: int) -> str:
    rows = [_csv_row(doc) for doc in docs]
    widths = {
        column: max([len(column)] + [len(row[column]) for row in rows])
        for column in _TEXT_COLUMNS
    }
    lines = ["  ".join(column.ljust(widths[column]) for column in _TEXT_COLUMNS)]
    for row in rows:
        lines.append("  ".join(row[column].ljust(widths[column]) for column in _TEXT_COLUMNS))
    lines.append(f"instances={len(docs)} failures={failures}")
    return "\n".join(lines) + "\n"


def _emit(text: str, out_path: str | None) -> int:
    if out_path is None:
        sys.stdout.write(text)
        return 0
    try:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text)
    except OSError as exc:
        print(f"error: cannot write {out_path}: {exc}", file=sys.stderr)
        return 2
    return 0


def _parse_instance(dim: int, degrees: str) -> CompleteIntersection:
    try:
        parsed = tuple(int(part) for part in degrees.split(",") if part.strip() != "")
    except ValueError:
        raise InvalidVariety(f"invalid degrees {degrees!r}: expected comma-separated integers")
    if not parsed:
        raise InvalidVariety("at least one hypersurface degree is required")
    return CompleteIntersection(dim, parsed)


def cmd_check(args: argparse.Namespace) -> int:
    try:
        ci = _parse_instance(args.dim, args.degrees)
    except InvalidVariety as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    started = time.perf_counter()
    report = verify_instance(ci)
    timing_ms = int((time.perf_counter() - started) * 1000)
    doc = instance_document(report, timing_ms=timing_ms)
    if args.format == "json":
        text = render_json(doc)
    elif args.format == "csv":
        text = render_csv([doc])
    else:
        text = render_text_check(doc)
    code = _emit(text, args.out)
    if code:
        return code
    return 0 if report.passed else 1


def _scan_worker(ci: CompleteIntersection) -> dict:
    return instance_document(verify_instance(ci))


def _document_key(doc: dict) -> tuple:
    return (int(doc["dim"]), len(doc["degrees"]), tuple(int(d) for d in doc["degrees"]))


def run_scan(max_dim: int, max_r: int, jobs: int) -> list[dict]:
    """All instance documents for the range, in deterministic order."""
    instances = list(enumerate_fano_cis(max_dim, max_r))
    if jobs > 1 and len(instances) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            docs = list(pool.map(_scan_worker, instances, chunksize=8))
    else:
        docs = [_scan_worker(ci) for ci in instances]
    docs.sort(key=_document_key)
    return docs


def cmd_scan(args: argparse.Namespace) -> int:
    if args.max_dim < 3:
        print(f"error: --max-dim must be at least 3, got {args.max_dim}", file=sys.stderr)
        return 2
    if args.max_r < 1:
        print(f"error: --max-r must be at least 1, got {args.max_r}", file=sys.stderr)
        return 2
    jobs = args.jobs if args.jobs is not None else (os.cpu_count() or 1)
    if jobs < 1:
        print(f"error: --jobs must be at least 1, got {jobs}", file=sys.stderr)
        return 2
    docs = run_scan(args.max_dim, args.max_r, jobs)
    failures = sum(1 for doc in docs if not all(doc["verdicts"].values()))
    if args.format == "json":
        text = render_json(
            {
                "schemaVersion": SCHEMA_VERSION,
                "maxDim": str(args.max_dim),
                "maxR": str(args.max_r),
                "instances": docs,
                "summary": {"instances": str(len(docs)), "failures": str(failures)},
            }
        )
    elif args.format == "csv":
        text = render_csv(docs)
        print(f"instances={len(docs)} failures={failures}", file=sys.stderr)
    else:
        text = render_text_scan(docs, failures)
    code = _emit(text, args.out)
    if code:
        return code
    return 0 if failures == 0 else 1


def cmd_series(args: argparse.Namespace) -> int:
    try:
        ci = _parse_instance(args.dim, args.degrees)
    except InvalidVariety as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    inv = invariants(ci)
    lines = [
        f"instance = {ci}",
        f"rho = {inv.rho}",
        f"D = {inv.big_d}",
        f"F = {inv.big_f}",
    ]
    for p, value in enumerate(inv.chern):
        lines.append(f"c[{p}] = {value}")
    for a, value in enumerate(mirror_coefficients(ci).values):
        lines.append(f"I[{a}] = {value}")
    if ci.dim % 2 == 1 or inv.rho != 1:
        lines.append("case (iii) quantities unavailable (need even dimension and rho = 1)")
        print("\n".join(lines))
        return 1
    n_prime = inv.primitive_dim
    lines.append(f"N' = {n_prime}")
    lines.append(f"bracket product x^N coefficient = {n_prime * lambda_via_series(ci)}")
    lines.append(f"N' * lambda = {n_prime * lambda_via_sum(ci)}")
    lines.append(f"lambda closed form = {lambda_closed_form(ci)}")
    lines.append(f"lambda via sum = {lambda_via_sum(ci)}")
    lines.append(f"lambda via series = {lambda_via_series(ci)}")
    lines.append(f"lambda via two-point = {lambda_via_twopoint(ci)}")
    print("\n".join(lines))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fanospec",
        description="Exact quantum spectra and conjecture verdicts for Fano complete intersections.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="verify one complete intersection")
    check.add_argument("--dim", type=int, required=True, help="complex dimension N (>= 3)")
    check.add_argument("--degrees", required=True, help="comma-separated degrees, e.g. 2,2,3")
    check.add_argument("--format", choices=["json", "csv", "text"], default="text")
    check.add_argument("--out", default=None, help="write the report to this path")
    check.set_defaults(func=cmd_check)

    scan = sub.add_parser("scan", help="verify every instance up to bounds")
    scan.add_argument("--max-dim", type=int, required=True)
    scan.add_argument("--max-r", type=int, required=True)
    scan.add_argument("--format", choices=["json", "csv", "text"], default="text")
    scan.add_argument("--out", default=None, help="write the table to this path")
    scan.add_argument("--jobs", type=int, default=None, help="worker processes (default: cpu count)")
    scan.set_defaults(func=cmd_scan)

    series = sub.add_parser("series", help="dump the exact series diagnostics for one instance")
    series.add_argument("--dim", type=int, required=True)
    series.add_argument("--degrees", required=True)
    series.set_defaults(func=cmd_series)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


def entry() -> None:
    raise SystemExit(main())
