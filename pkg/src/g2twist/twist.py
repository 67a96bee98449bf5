"""Classification of y^2 = P(x) and of its quadratic twist y^2 = D P(x)."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from numbers import Rational

from .invariants import InvariantSet, SexticForm, compute_invariants
from .ramification import (
    IndeterminateStatus,
    OmegaStatus,
    RamData,
    TwoComponentChar3,
    rational_branch_points,
    ramification_data,
)
from .stable import (
    NonIntegralDegree,
    Shape,
    SingularityDegrees,
    StableFiberType,
    UnclassifiableError,
    classify_stable,
    epsilon,
    is_tame,
    singularity_degrees,
    special_fiber_tests,
)
from .symbols import NonIntegralParameter, ReductionSymbol
from .tables import (
    AmbiguousRow,
    DegreeConstraint,
    NoMatchingRow,
    TableRow,
    candidate_pairs,
    reduction_type_of_twist,
    wild_char3_type,
    wild_char5_type,
)
from .valuation import DegenerateInvariant, ExtValuation, LocalContext, lcd, val


class PipelineError(Exception):
    """A stage of the pipeline failed; ``stage`` names it."""

    def __init__(self, stage: str, message: str):
        super().__init__(f"[{stage}] {message}")
        self.stage = stage
        self.message = message


class NormalFormRequired(PipelineError):
    def __init__(self, p: int):
        need = ("z^2 = a0((u^3+c1u^2+c2u+c3)^2 + c4u^2 + c5u + c6) with nu(c3) in {1,2}" if p == 3
                else "z^2 = b0u^6 + ... + b6 with nu(b0) >= 1, nu(b1) = 0, 1 <= nu(b6) <= 9, nu(b6) != 5")
        super().__init__("tameness", f"wild candidate at p={p}: normal form required: {need}")
        self.p = p
        self.needed = need


class WildRamification(PipelineError):
    pass


# failures that mean "this curve is outside the tabulated cases", not bad input
CLASSIFICATION_ERRORS = (
    UnclassifiableError, IndeterminateStatus, TwoComponentChar3, NoMatchingRow, AmbiguousRow,
    NonIntegralDegree, NonIntegralParameter, DegreeConstraint, DegenerateInvariant,
)


def _stage(name: str, fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except PipelineError:
        raise
    except (ArithmeticError, LookupError, ValueError) as exc:
        raise PipelineError(name, str(exc)) from exc


@dataclass(frozen=True)
class WildNormalForm:
    """Caller-supplied normal form: c1..c6 (with a0) at p = 3, b0..b6 at p = 5."""

    coeffs: tuple[Fraction, ...]
    a0: Fraction | None = None


@dataclass(frozen=True)
class Classification:
    form: SexticForm
    ctx: LocalContext
    invariants: InvariantSet
    stable: StableFiberType
    tame: bool
    ram: RamData | None = None
    degrees: SingularityDegrees | None = None
    row: TableRow | None = None
    type_X: ReductionSymbol | None = None
    type_Xchi: ReductionSymbol | None = None
    # both readings when the row depends on the smoothness of E1
    candidates: tuple[tuple[ReductionSymbol, ReductionSymbol], ...] = ()
    wild_type: ReductionSymbol | None = None

    @property
    def shape(self) -> Shape:
        return self.stable.shape


def classify(P: SexticForm, ctx: LocalContext, e1_smooth: bool | None = None,
             normal_form: WildNormalForm | None = None) -> Classification:
    """Invariants, stable shape, tameness, ramification data, degrees and table row of X."""
    inv = _stage("invariants", compute_invariants, P)
    if inv.J10 == 0:
        raise PipelineError("invariants", "J10 = 0: P is not squarefree")
    st = _stage("stable", classify_stable, inv, ctx)

    ram = None
    ram_error: PipelineError | None = None
    try:
        ram = _stage("ramification", ramification_data, P, st, ctx, inv)
    except PipelineError as exc:
        ram_error = exc

    tame = True
    if ctx.p in (3, 5):
        tests = special_fiber_tests(inv, ctx) if st.shape is Shape.SMOOTH else None
        omega = ram.omega if ram is not None else None
        tame = is_tame(st, tests, omega, ctx, rational_branch_points(P, ctx))
    if ram is not None and ram.n % ctx.p == 0:
        tame = False
    if not tame:
        if normal_form is None:
            if ram is not None and ram.n % ctx.p == 0:
                raise WildRamification("ramification", f"wild ramification detected: p={ctx.p} divides n={ram.n}")
            raise NormalFormRequired(ctx.p)
        wild = _stage("wild", _wild_type, ctx.p, normal_form, None)
        return Classification(P, ctx, inv, st, False, ram=ram, type_X=wild, wild_type=wild)
    if ram_error is not None:
        raise ram_error

    deg = _stage("degrees", singularity_degrees, st, inv, ExtValuation(ram.n), epsilon(ctx), ctx)
    try:
        look = _stage("tables", reduction_type_of_twist, st, ram, deg, e1_smooth)
    except PipelineError as exc:
        if not isinstance(exc.__cause__, AmbiguousRow):
            raise
        pairs = _stage("tables", candidate_pairs, st, ram, deg)
        return Classification(P, ctx, inv, st, True, ram=ram, degrees=deg, candidates=tuple(pairs))
    return Classification(P, ctx, inv, st, True, ram=ram, degrees=deg, row=look.row,
                          type_X=look.type_X, type_Xchi=look.type_Xchi)


def _wild_type(p: int, nf: WildNormalForm, D) -> ReductionSymbol:
    if p == 3:
        if nf.a0 is None:
            raise ValueError("the char-3 normal form needs a0")
        return wild_char3_type(nf.a0, nf.coeffs, D)
    return wild_char5_type(nf.coeffs, twist=D is not None, D=D if D is not None else 5)


@dataclass(frozen=True)
class TwistParity:
    kind: str  # "trivial" or "ramified"
    D: Fraction
    # D = D_normalized * p^(2k)
    normalized: Fraction
    k: int

    @property
    def trivial(self) -> bool:
        return self.kind == "trivial"


def twist_parity(D: Rational | int, ctx: LocalContext) -> TwistParity:
    D = Fraction(D)
    if D == 0:
        raise ValueError("twist parameter D must be nonzero")
    v = val(D, ctx)
    k = v // 2
    norm = D / Fraction(ctx.p) ** (2 * k)
    return TwistParity("trivial" if v % 2 == 0 else "ramified", D, norm, k)


# shifts of the defining rationals under a twist with nu(D) = 1
_SHIFTS = {
    ("smooth", OmegaStatus.NON_RAMIFIED): Fraction(-1, 2),
    ("smooth", OmegaStatus.RAMIFIED_REGULAR): Fraction(1, 2),
    ("irreducible-singular", OmegaStatus.NON_RAMIFIED): Fraction(-1, 2),
    ("irreducible-singular", OmegaStatus.RAMIFIED_REGULAR): Fraction(-1, 2),
    ("irreducible-singular", OmegaStatus.RAMIFIED_SINGULAR): Fraction(-1, 2),
    ("not-irreducible", OmegaStatus.NON_RAMIFIED): Fraction(1, 2),
    ("not-irreducible", OmegaStatus.RAMIFIED_REGULAR): Fraction(3, 2),
    ("not-irreducible", OmegaStatus.RAMIFIED_SINGULAR): Fraction(1, 2),
    ("not-irreducible", OmegaStatus.OMEGA_SINGULAR): Fraction(1, 2),
}


def twist_ram_data(ram: RamData) -> RamData:
    """n', r', q', d' of the twist by D with nu(D) = 1, from the shifted defining rationals."""
    if ram.regime == "not-irreducible" and ram.j2_parity == 1:
        return ram
    shift = _SHIFTS[(ram.regime, ram.omega)]
    if ram.regime == "not-irreducible":
        xr = ram.xr + shift
        n = lcd([ram.dK, xr])
        rk = None if ram.rK is None else ram.rK + shift
        return replace(ram, n=n, r=int(n * xr) % n, d=int(n * ram.dK), xr=xr, rK=rk)
    xq = ram.xq + shift
    if ram.regime == "irreducible-singular" and ram.omega is OmegaStatus.RAMIFIED_REGULAR:
        xr = -2 * xq
    else:
        xr = ram.xr
    n = lcd([xr, xq])
    return replace(ram, n=n, r=int(n * xr) % n, q=int(n * xq) % n, xr=xr, xq=xq)


def twist_stable_shape(shape: StableFiberType) -> StableFiberType:
    """The twist has the same stable shape."""
    return shape


@dataclass(frozen=True)
class TwistQuery:
    curve: SexticForm
    D: Fraction
    ctx: LocalContext
    e1_smooth: bool | None = None
    normal_form: WildNormalForm | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "D", Fraction(self.D))
        if self.D == 0:
            raise ValueError("twist parameter D must be nonzero")


@dataclass(frozen=True)
class TwistReport:
    base: Classification
    parity: TwistParity
    type_X: ReductionSymbol | None
    type_Xchi: ReductionSymbol | None
    shape: Shape
    shape_twist: Shape
    tame: bool
    ram_twist: RamData | None = None
    degrees_twist: SingularityDegrees | None = None
    candidates: tuple[tuple[ReductionSymbol, ReductionSymbol], ...] = ()
    notes: tuple[str, ...] = field(default_factory=tuple)

    @property
    def omega_pair(self) -> tuple[OmegaStatus | None, OmegaStatus | None]:
        o = self.base.ram.omega if self.base.ram else None
        o2 = self.ram_twist.omega if self.ram_twist else o
        return o, o2


def run_twist(query: TwistQuery) -> TwistReport:
    ctx = query.ctx
    parity = _stage("parity", twist_parity, query.D, ctx)
    base = classify(query.curve, ctx, query.e1_smooth, query.normal_form)
    shape = base.shape
    notes: list[str] = []
    if parity.trivial:
        if parity.k:
            notes.append(f"nu(D) even: D differs from {parity.normalized} by a square, twist is unramified")
        swapped = tuple((x, x) for x, _ in base.candidates)
        return TwistReport(base, parity, base.type_X, base.type_X, shape, shape, base.tame,
                           ram_twist=base.ram, degrees_twist=base.degrees, candidates=swapped,
                           notes=tuple(notes))
    if not base.tame:
        xchi = _stage("wild", _wild_type, ctx.p, query.normal_form, parity.normalized)
        return TwistReport(base, parity, base.type_X, xchi, shape, shape, False,
                           ram_twist=None, notes=("wild regime: type read from the normal form",))
    ram2 = _stage("twist", twist_ram_data, base.ram)
    deg2 = _stage("twist", base.degrees.scaled, ram2.n, base.ram.n)
    return TwistReport(base, parity, base.type_X, base.type_Xchi, shape, twist_stable_shape(base.stable).shape,
                       True, ram_twist=ram2, degrees_twist=deg2, candidates=base.candidates,
                       notes=tuple(notes))
