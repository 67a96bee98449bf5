"""JSON records shared by the command line and the verification harness."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .invariants import SexticForm, compute_invariants
from .ramification import RamData
from .twist import Classification, PipelineError, TwistQuery, WildNormalForm, classify, run_twist
from .valuation import LocalContext

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class CurveRecord:
    id: str
    curve: SexticForm
    ctx: LocalContext
    D: Fraction | None = None
    e1_smooth: bool | None = None
    normal_form: WildNormalForm | None = None


def parse_rational(text) -> Fraction:
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    text = str(text).strip()
    if not text:
        raise ValueError("empty number")
    return Fraction(text)


def _val(v):
    return None if v == math.inf else v


def valuations(curve: SexticForm, ctx: LocalContext) -> dict[str, int | None]:
    inv = compute_invariants(curve)
    return {k: _val(ctx.val(v)) for k, v in inv.as_dict().items()}


def ram_json(ram: RamData | None) -> dict | None:
    if ram is None:
        return None
    out = {"n": ram.n, "r": ram.r, "q": ram.q, "dK": None if ram.dK is None else str(ram.dK), "d": ram.d}
    if ram.omega is not None:
        out["omega"] = ram.omega.value
    if ram.j2_parity is not None:
        out["j2_parity"] = "even" if ram.j2_parity == 0 else "odd"
    return out


def _base(rec: CurveRecord) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "id": rec.id,
        "prime": rec.ctx.p,
        "coefficients": [str(c) for c in rec.curve.coeffs],
        "valuations": None,
        "stable_shape": None,
        "degrees": None,
        "ram": None,
        "type_X": None,
        "twist": None,
        "errors": [],
    }


def _fill(out: dict, c: Classification) -> None:
    out["stable_shape"] = c.shape.value
    out["tame"] = c.tame
    out["degrees"] = list(c.degrees.values) if c.degrees else None
    out["ram"] = ram_json(c.ram)
    if c.candidates:
        out["type_X"] = None
        out["candidates"] = [[x.ascii(), y.ascii()] for x, y in c.candidates]
    else:
        out["type_X"] = c.type_X.ascii() if c.type_X else None
    if c.row is not None:
        out["row"] = c.row.describe()


def curve_record(rec: CurveRecord) -> dict:
    """Everything the pipeline computes for one curve; failures land in ``errors``."""
    out = _base(rec)
    try:
        out["valuations"] = valuations(rec.curve, rec.ctx)
    except (ArithmeticError, ValueError) as exc:
        out["errors"].append(f"[invariants] {exc}")
        return out
    if rec.D is None:
        try:
            _fill(out, classify(rec.curve, rec.ctx, rec.e1_smooth, rec.normal_form))
        except PipelineError as exc:
            out["errors"].append(str(exc))
        return out
    try:
        rep = run_twist(TwistQuery(rec.curve, rec.D, rec.ctx, rec.e1_smooth, rec.normal_form))
    except PipelineError as exc:
        out["errors"].append(str(exc))
        try:
            # keep what the untwisted pipeline can still say
            _fill(out, classify(rec.curve, rec.ctx, rec.e1_smooth, rec.normal_form))
        except PipelineError:
            pass
        return out
    _fill(out, rep.base)
    omega, omega2 = rep.omega_pair
    twist = {
        "D": str(rec.D),
        "parity": rep.parity.kind,
        "type_Xchi": rep.type_Xchi.ascii() if rep.type_Xchi and not rep.candidates else None,
        "stable_shape": rep.shape_twist.value,
        "primed": {
            **(ram_json(rep.ram_twist) or {}),
            "degrees": list(rep.degrees_twist.values) if rep.degrees_twist else None,
        },
        "omega": [None if o is None else o.value for o in (omega, omega2)],
        "notes": list(rep.notes),
    }
    if rep.candidates:
        twist["candidates"] = [[x.ascii(), y.ascii()] for x, y in rep.candidates]
    out["twist"] = twist
    return out
