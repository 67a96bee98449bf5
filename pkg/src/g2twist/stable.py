"""Shape of the stable fiber, wild-candidate tests and degrees of singularity."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .invariants import InvariantSet
from .valuation import (
    ExtValuation,
    LocalContext,
    Val,
    in_m,
    in_R,
    is_unit,
    quotient_val,
)


class Shape(str, Enum):
    SMOOTH = "I-Smooth"
    ONE_NODE = "II-IrreducibleOneNode"
    TWO_NODES = "III-IrreducibleTwoNodes"
    C000 = "IV-TwoRationalThreeNodes"
    TWO_SMOOTH = "V-TwoSmoothOneNode"
    ONE_SMOOTH = "VI-OneSmoothOneSingular"
    TWO_SINGULAR = "VII-TwoSingularOneNode"

    @property
    def numeral(self) -> str:
        return self.value.split("-", 1)[0]

    @property
    def regime(self) -> str:
        if self is Shape.SMOOTH:
            return "smooth"
        if self in (Shape.ONE_NODE, Shape.TWO_NODES, Shape.C000):
            return "irreducible-singular"
        return "not-irreducible"

    @classmethod
    def parse(cls, text: str) -> "Shape":
        for s in cls:
            if text in (s.value, s.name, s.numeral):
                return s
        raise ValueError(f"unknown stable shape {text!r}")


class UnclassifiableError(ArithmeticError):
    """No block of the stable-reduction criteria matched."""


class NonIntegralDegree(ArithmeticError):
    pass


def epsilon(ctx: LocalContext) -> int:
    return 3 if ctx.p == 3 else 1


def _i2eps(inv: InvariantSet, eps: int) -> Fraction:
    return inv.I2 if eps == 1 else inv.I6


@dataclass(frozen=True)
class StableFiberType:
    shape: Shape
    # residues in F_p of the j-invariant quantities, None when not integral
    reports: dict[str, int | None] = field(default_factory=dict)
    matched: tuple[Shape, ...] = ()

    @property
    def regime(self) -> str:
        return self.shape.regime


def _blocks(inv: InvariantSet, ctx: LocalContext) -> dict[Shape, bool]:
    q = lambda *f: quotient_val(ctx, *f)  # noqa: E731
    eps = epsilon(ctx)
    i2e = _i2eps(inv, eps)
    J = inv.J

    smooth = all(in_R(q((J(2 * i), 5), (inv.J10, -i))) for i in range(1, 5))
    one_node = (
        all(in_R(q((J(2 * i), 6), (inv.I12, -i))) for i in range(1, 6))
        and in_m(q((inv.J10, 6), (inv.I12, -5)))
    )
    two_nodes = (
        all(in_R(q((J(2 * i), 2), (inv.I4, -i))) for i in range(1, 6))
        and in_m(q((inv.J10, 2), (inv.I4, -5)))
        and in_m(q((inv.I12, 1), (inv.I4, -3)))
        and (is_unit(q((inv.J4, 1), (inv.I4, -1))) or is_unit(q((inv.J6, 2), (inv.I4, -3))))
    )
    c000 = all(in_m(q((J(2 * i), 2), (inv.I4, -i))) for i in range(2, 6))
    split = (
        in_m(q((inv.I4, eps), (i2e, -2)))
        and in_m(q((inv.J10, eps), (i2e, -5)))
        and in_m(q((inv.I12, eps), (i2e, -6)))
    )
    two_smooth = (
        split
        and in_R(q((inv.I4, 3 * eps), (inv.J10, -eps), (i2e, -1)))
        and in_R(q((inv.I12, eps), (inv.J10, -eps), (i2e, -1)))
    )
    one_smooth = (
        split
        and in_R(q((inv.I4, 3), (inv.I12, -1)))
        and in_m(q((inv.J10, eps), (i2e, 1), (inv.I12, -eps)))
    )
    two_singular = (
        split
        and in_m(q((inv.I12, 1), (inv.I4, -3)))
        and in_m(q((inv.J10, eps), (i2e, 1), (inv.I4, -3 * eps)))
    )
    return {
        Shape.SMOOTH: smooth,
        Shape.ONE_NODE: one_node,
        Shape.TWO_NODES: two_nodes,
        Shape.C000: c000,
        Shape.TWO_SMOOTH: two_smooth,
        Shape.ONE_SMOOTH: one_smooth,
        Shape.TWO_SINGULAR: two_singular,
    }


def _residue_reports(shape: Shape, inv: InvariantSet, ctx: LocalContext) -> dict[str, int | None]:
    eps = epsilon(ctx)
    i2e = _i2eps(inv, eps)
    if shape in (Shape.ONE_NODE, Shape.ONE_SMOOTH):
        return {"j": ctx.residue(inv.I4**3 / inv.I12) if inv.I12 else None}
    if shape is Shape.TWO_SMOOTH:
        prod = inv.I4 ** (3 * eps) / (inv.J10**eps * i2e)
        s = inv.I12**eps / (inv.J10**eps * i2e)
        r_sum = ctx.residue(s)
        return {
            "(j1*j2)^eps": ctx.residue(prod),
            "(j1+j2)^eps": None if r_sum is None else (2**6 * 3**3 + r_sum) % ctx.p,
        }
    return {}


def classify_stable(inv: InvariantSet, ctx: LocalContext, debug: bool = False) -> StableFiberType:
    """First matching block, in the order I..VII, of the stable-reduction criteria."""
    if inv.J10 == 0:
        raise ValueError("J10 = 0: the equation does not define a smooth genus-2 curve")
    blocks = _blocks(inv, ctx)
    matched = tuple(s for s, ok in blocks.items() if ok)
    if not matched:
        raise UnclassifiableError("no stable-reduction block matched")
    shape = matched[0]
    return StableFiberType(shape, _residue_reports(shape, inv, ctx), matched if debug else ())


@dataclass(frozen=True)
class SpecialFiberTests:
    gamma_member: bool | None = None
    c0_iso: bool | None = None


def special_fiber_tests(inv: InvariantSet, ctx: LocalContext) -> SpecialFiberTests:
    """Membership in the char-3 family Gamma, or isomorphism with y^2 = x^5 - x in char 5."""
    q = lambda *f: quotient_val(ctx, *f)  # noqa: E731
    if ctx.p == 3:
        if inv.J2 == 0:
            return SpecialFiberTests(gamma_member=False)
        diff = inv.J6 / inv.J2**3 - inv.J10 / inv.J2**5
        member = (
            in_m(q((inv.J4, 1), (inv.J2, -2)))
            and is_unit(q((inv.J10, 1), (inv.J2, -5)))
            and ctx.in_m(diff)
        )
        return SpecialFiberTests(gamma_member=member)
    if ctx.p == 5:
        iso = all(in_m(q((inv.J(2 * i), 5), (inv.J10, -i))) for i in range(1, 5))
        return SpecialFiberTests(c0_iso=iso)
    raise ValueError(f"special fiber tests only apply in characteristic 3 or 5, not {ctx.p}")


def is_tame(
    shape: StableFiberType | Shape,
    tests: SpecialFiberTests | None,
    omega,
    ctx: LocalContext,
    rational_branch_points: int = 0,
) -> bool:
    """Sufficient conditions for L/K to be tamely ramified.

    ``omega`` is the ramification status of the point at infinity;
    ``rational_branch_points`` counts branch points known to be K-rational.
    False means a wild candidate.
    """
    from .ramification import OmegaStatus

    if ctx.p not in (3, 5):
        return True
    if rational_branch_points >= 2:
        return True
    shape = getattr(shape, "shape", shape)
    tests = tests or SpecialFiberTests()
    ramified = omega is not None and omega is not OmegaStatus.NON_RAMIFIED
    if shape is Shape.C000:
        return ctx.p != 3 or ramified
    if shape is not Shape.SMOOTH:
        # Gamma and C0 are smooth curves
        return True
    if ctx.p == 3:
        return ramified or not tests.gamma_member
    return omega is OmegaStatus.NON_RAMIFIED or not tests.c0_iso


@dataclass(frozen=True)
class SingularityDegrees:
    shape: Shape
    # II: (e,); III: (e1, e2); IV: (e1, e2, e3); V: (e,); VI: (e0, e1); VII: (e0, e1, e2)
    values: tuple[int, ...]

    def scaled(self, num: int, den: int) -> "SingularityDegrees":
        out = []
        for v in self.values:
            w = Fraction(v * num, den)
            if w.denominator != 1:
                raise NonIntegralDegree(f"degree {v} does not rescale by {num}/{den}")
            out.append(int(w))
        return SingularityDegrees(self.shape, tuple(out))


def _integral(x, what: str) -> int:
    x = Fraction(x)
    if x.denominator != 1:
        raise NonIntegralDegree(f"{what} = {x} is not an integer")
    return int(x)


def singularity_degrees(
    shape: StableFiberType | Shape,
    inv: InvariantSet,
    ext: ExtValuation,
    eps: int,
    ctx: LocalContext,
) -> SingularityDegrees:
    """Degrees of the nodes of the stable fiber, measured with the valuation of L."""
    shape = getattr(shape, "shape", shape)

    def vL(*f) -> Val:
        v = quotient_val(ctx, *f)
        if v is None or isinstance(v, float):
            raise NonIntegralDegree(f"degree formula has an infinite valuation ({v})")
        return ext(v)

    i2e = _i2eps(inv, eps)
    if shape is Shape.SMOOTH:
        return SingularityDegrees(shape, ())
    if shape is Shape.ONE_NODE:
        vals = (Fraction(vL((inv.J10, 6), (inv.I12, -5)), 6),)
    elif shape is Shape.TWO_NODES:
        total = Fraction(vL((inv.J10, 2), (inv.I4, -5)), 2)
        e1 = min(vL((inv.I12, 1), (inv.I4, -3)), total / 2)
        vals = (e1, total - e1)
    elif shape is Shape.C000:
        l_ = vL((inv.J10, 1), (inv.J2, -5))
        n_ = vL((inv.I12, 1), (inv.J2, -6))
        m_ = vL((inv.J4, 1), (inv.J2, -2))
        e1 = min(Fraction(l_, 3), Fraction(n_, 2), Fraction(m_))
        e2 = min((l_ - e1) / 2, n_ - e1)
        vals = (e1, e2, l_ - e1 - e2)
    elif shape is Shape.TWO_SMOOTH:
        vals = (Fraction(vL((inv.J10, eps), (i2e, -5)), 12 * eps),)
    elif shape is Shape.ONE_SMOOTH:
        vals = (
            Fraction(vL((inv.I12, eps), (i2e, -6)), 12 * eps),
            Fraction(vL((inv.J10, eps), (i2e, 1), (inv.I12, -eps)), eps),
        )
    else:
        e0 = Fraction(vL((inv.I4, eps), (i2e, -2)), 4 * eps)
        s = vL((inv.J10, eps), (i2e, 1), (inv.I4, -3 * eps))
        e1 = min(Fraction(vL((inv.I12, 1), (inv.I4, -3))), Fraction(s, 2 * eps))
        vals = (e0, e1, Fraction(s, eps) - e1)
    out = tuple(_integral(v, f"degree of singularity ({shape.numeral})") for v in vals)
    if any(v < 1 for v in out):
        raise NonIntegralDegree(f"non-positive degree of singularity {out} for {shape.numeral}")
    return SingularityDegrees(shape, out)
