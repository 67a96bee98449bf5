"""Command line: g2twist {invariants,classify,twist,verify,audit-tables,tables,batch}.

Exit codes: 0 success, 1 bad input, 2 classification failure (outside the
tabulated tame cases, or wild without a normal form) or audit violations.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from .invariants import SexticForm, compute_invariants
from .records import CurveRecord, curve_record, parse_rational
from .twist import WildNormalForm
from .valuation import LocalContext

EXIT_OK, EXIT_INPUT, EXIT_CLASSIFY = 0, 1, 2


class InputError(ValueError):
    pass


def _coeffs(text: str) -> SexticForm:
    parts = [x for x in text.replace(";", ",").split(",")]
    if len(parts) != 7:
        raise InputError(f"--coeffs needs seven values a0..a6, got {len(parts)}")
    try:
        return SexticForm(tuple(parse_rational(x) for x in parts))
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad coefficients: {exc}") from exc


def _ctx(p) -> LocalContext:
    try:
        return LocalContext(int(p))
    except (TypeError, ValueError) as exc:
        raise InputError(str(exc)) from exc


def _normal_form(text: str | None, a0: str | None) -> WildNormalForm | None:
    if not text:
        return None
    try:
        cs = tuple(parse_rational(x) for x in text.split(","))
        return WildNormalForm(cs, parse_rational(a0) if a0 else None)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad normal form: {exc}") from exc


def _flag(text: str | None) -> bool | None:
    if text is None:
        return None
    return {"yes": True, "no": False}[text]


def _record_from_args(args, D=None) -> CurveRecord:
    curve = _coeffs(args.coeffs)
    ctx = _ctx(args.prime)
    if D is not None:
        try:
            D = parse_rational(D)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"bad D: {exc}") from exc
        if D == 0:
            raise InputError("D must be nonzero")
    return CurveRecord(args.id, curve, ctx, D, _flag(args.e1_smooth), _normal_form(args.normal_form, args.nf_a0))


def _emit(obj, out) -> None:
    out.write(json.dumps(obj, sort_keys=False) + "\n")


def _exit_for(record: dict) -> int:
    return EXIT_CLASSIFY if record["errors"] else EXIT_OK


def cmd_invariants(args, out) -> int:
    rec = _record_from_args(args)
    try:
        inv = compute_invariants(rec.curve)
    except (ArithmeticError, ValueError) as exc:
        raise InputError(str(exc)) from exc
    vals = {k: (None if v == float("inf") else v) for k, v in
            ((k, rec.ctx.val(x)) for k, x in inv.as_dict().items())}
    _emit({"id": rec.id, "prime": rec.ctx.p, "invariants": {k: str(v) for k, v in inv.as_dict().items()},
           "valuations": vals}, out)
    return EXIT_OK


def cmd_classify(args, out) -> int:
    record = curve_record(_record_from_args(args))
    _emit(record, out)
    return _exit_for(record)


def cmd_twist(args, out) -> int:
    record = curve_record(_record_from_args(args, args.d))
    _emit(record, out)
    return _exit_for(record)


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    try:
        return int(os.environ.get("GENUS2_SEED", "0"))
    except ValueError as exc:
        raise InputError("GENUS2_SEED must be an integer") from exc


def _verify_json(rep) -> dict:
    """A sample report plus both routes in the shared record schema."""
    ctx = LocalContext(rep.p)
    a = curve_record(CurveRecord(f"{rep.index}:X", rep.P, ctx, rep.D))
    b = curve_record(CurveRecord(f"{rep.index}:DP", rep.P.scaled(rep.D), ctx))
    return {**rep.as_dict(), "records": [a, b]}


def cmd_verify(args, out) -> int:
    from .verify import cross_check, sweep

    if args.input:
        records = read_records(args.input)
        bad = 0
        for rec in records:
            if rec.D is None:
                raise InputError(f"{rec.id}: verify needs a D column")
            rep = cross_check(rec.curve, rec.D, rec.ctx)
            bad += rep.status in ("disagree", "route-mismatch") or rep.lemma_ok is False
            rep.index = rec.id
            _emit(_verify_json(rep), out)
        return EXIT_CLASSIFY if bad else EXIT_OK
    primes = tuple(int(p) for p in args.primes.split(","))
    for p in primes:
        _ctx(p)
    try:
        D = args.d if args.d in (None, "p2") else parse_rational(args.d)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad D: {exc}") from exc
    summary = sweep(args.count, _seed(args), primes, D, workers=args.workers)
    if args.jsonl:
        with open(args.jsonl, "w", encoding="utf-8") as fh:
            for rep in summary.reports:
                _emit(_verify_json(rep), fh)
    out.write(summary.table() + "\n")
    ok = summary.counts["disagree"] == 0 and summary.counts["route-mismatch"] == 0 and summary.lemma_failures == 0
    return EXIT_OK if ok else EXIT_CLASSIFY


def cmd_audit(args, out) -> int:
    from .verify import char5_concordance, disjointness_audit, table_involution_audit

    violations, checked = table_involution_audit(with_coverage=True)
    violations += disjointness_audit()
    for v in violations:
        _emit({"table": v.table, "kind": v.kind, "detail": v.detail}, out)
    conc = char5_concordance()
    mismatched = [c for c in conc if c[1] != c[2]]
    out.write(f"checked instances: {dict(sorted(checked.items()))}\n")
    out.write(f"char-5 concordance: {len(conc) - len(mismatched)}/{len(conc)} pairs equal\n")
    out.write(f"violations: {len(violations)}\n")
    return EXIT_OK if not violations and not mismatched else EXIT_CLASSIFY


_TABLE_TITLES = {
    "smooth": "Smooth stable fiber",
    "II": "One node",
    "III": "Two nodes",
    "IV": "Two rational components meeting in three points",
    "V-even": "Two elliptic components, nu(J2) even",
    "V-odd": "Two elliptic components, nu(J2) odd",
    "VI": "One elliptic and one singular rational component",
    "VII": "Two singular rational components",
}


def tables_markdown() -> str:
    """Every encoded row, grouped by table, as a markdown document."""
    from .symbols import FAMILY_OF
    from .tables import CHAR5_COROLLARY, TABLES

    out = ["# Encoded reduction-type tables", "",
           "Generated by `g2twist tables --markdown`. Each row reads",
           "`type of X (predicates) -> type of the twist by D with nu(D) = 1`.", ""]
    for name, rows in TABLES.items():
        out += [f"## {name}: {_TABLE_TITLES[name]}", "", "| n | type X | predicates | type X^chi | ASCII |", "|---|---|---|---|---|"]
        for row in rows:
            preds = row.describe().split(" (", 1)[1].rsplit(") -> ", 1)[0]
            preds = ", ".join(b for b in preds.split(", ") if not b.startswith("n="))
            out.append(f"| {row.n} | `{row.x}` | {preds or '-'} | `{row.xchi}` | `{FAMILY_OF[row.x.layout][0]}` |")
        out.append("")
    out += ["## Wild, characteristic 5", "", "| type X | type X^chi |", "|---|---|"]
    out += [f"| `{x}` | `{y}` |" for x, y in CHAR5_COROLLARY.items()]
    out += ["", "## Wild, characteristic 3", "",
            "`[III_{N}]` and `[III*_{N}]` swap under a twist with nu(D) odd; N is unchanged.", "",
            "## Variables", "",
            "- `d`: degree of the single node (II), or n d_K for the node joining two components.",
            "- `d1`, `d2`: degrees of the two nodes (III), or of the nodes on the singular components (VI, VII).",
            "- `d1 <= d2 <= d3`: the three node degrees (IV); `e1` is the repeated one, `e2` the other.",
            "- `r`: m d_K before reduction mod n, in the nu(J2) odd table.",
            "- reading 0/1: the pair chosen by the smoothness of the component containing infinity.", ""]
    return "\n".join(out)


def cmd_tables(args, out) -> int:
    from .tables import TABLES

    if args.markdown:
        out.write(tables_markdown())
        return EXIT_OK
    for rows in TABLES.values():
        for row in rows:
            out.write(row.describe() + "\n")
    return EXIT_OK


# --- batch input ----------------------------------------------------------------

def _record_from_mapping(row: dict, lineno: int) -> CurveRecord:
    try:
        rid = str(row.get("id") or lineno)
        if "coefficients" in row:
            cs = row["coefficients"]
        else:
            cs = [row[f"a{i}"] for i in range(7)]
        curve = SexticForm(tuple(parse_rational(c) for c in cs))
        ctx = LocalContext(int(row.get("p") or row.get("prime")))
        D = row.get("D")
        D = parse_rational(D) if D not in (None, "") else None
        if D == 0:
            raise ValueError("D must be nonzero")
        nf = row.get("normal_form")
        if isinstance(nf, str) and nf:
            nf = nf.split(",")
        normal_form = WildNormalForm(tuple(parse_rational(c) for c in nf),
                                     parse_rational(row["nf_a0"]) if row.get("nf_a0") else None) if nf else None
        e1 = row.get("e1_smooth")
        e1 = None if e1 in (None, "") else str(e1).lower() in ("1", "true", "yes")
        return CurveRecord(rid, curve, ctx, D, e1, normal_form)
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise InputError(f"record {lineno}: {exc}") from exc


def read_records(path: str) -> list[CurveRecord]:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return parse_records(text, path)


def parse_records(text: str, name: str = "") -> list[CurveRecord]:
    stripped = text.lstrip()
    if name.endswith((".json", ".jsonl")) or stripped.startswith(("[", "{")):
        try:
            if stripped.startswith("["):
                rows = json.loads(stripped)
            else:
                rows = [json.loads(line) for line in stripped.splitlines() if line.strip()]
        except json.JSONDecodeError as exc:
            raise InputError(f"bad JSON input: {exc}") from exc
    else:
        rows = list(csv.DictReader(io.StringIO(text)))
    return [_record_from_mapping(row, i + 1) for i, row in enumerate(rows)]


def run_batch(records: list[CurveRecord], workers: int = 4) -> list[dict]:
    """Records in input order; the pool bounds concurrency."""
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        return list(pool.map(curve_record, records))


def cmd_batch(args, out) -> int:
    records = read_records(args.input)
    results = run_batch(records, args.workers)
    for r in results:
        _emit(r, out)
    return EXIT_CLASSIFY if any(r["errors"] for r in results) else EXIT_OK


# --- argument parsing -----------------------------------------------------------

def _curve_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--prime", "-p", required=True, help="odd residue characteristic")
    p.add_argument("--coeffs", "-c", required=True, help="a0,...,a6 of a0 x^6 + ... + a6; fractions as num/den")
    p.add_argument("--id", default="curve")
    p.add_argument("--e1-smooth", choices=("yes", "no"),
                   help="whether the component containing the image of infinity is smooth")
    p.add_argument("--normal-form", help="wild normal form: c1..c6 at p=3, b0..b6 at p=5")
    p.add_argument("--nf-a0", help="leading factor a0 of the p=3 normal form")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="g2twist", description="Reduction types of quadratic twists of genus-2 curves.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="Igusa(-Clebsch) invariants and their valuations")
    _curve_args(p)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("classify", help="stable shape, degrees, ramification data and type of X")
    _curve_args(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("twist", help="type of X and of its quadratic twist by D")
    _curve_args(p)
    p.add_argument("--d", "-D", required=True, help="twist parameter D")
    p.set_defaults(func=cmd_twist)

    p = sub.add_parser("verify", help="cross-check the tables against direct classification of D*P")
    p.add_argument("--input", help="CSV/JSON file with a D column; otherwise a seeded random sweep")
    p.add_argument("--count", type=int, default=500)
    p.add_argument("--seed", type=int, help="defaults to $GENUS2_SEED, then 0")
    p.add_argument("--primes", default="7,11,13")
    p.add_argument("--d", help="twist parameter (default p; 'p2' for p^2)")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--jsonl", help="write per-sample reports here")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("audit-tables", help="involution and disjointness audits of the encoded tables")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("tables", help="list every encoded table row")
    p.add_argument("--markdown", action="store_true", help="emit the markdown reference document")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("batch", help="CSV (id,a0..a6,p,D) or JSON in, JSON lines out")
    p.add_argument("input")
    p.add_argument("--workers", type=int, default=4)
    p.set_defaults(func=cmd_batch)
    return parser


def run_cli(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return args.func(args, out)
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
