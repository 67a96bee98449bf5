"""Ramification of the point at infinity and the tame-extension data n, r, q, d.

Every datum is ``n * x mod n`` for a "defining rational" x built from valuations
of degree-balanced quotients.  RamData keeps those rationals so that a twist
only has to shift them (see ``twist.twist_ram_data``).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .invariants import InvariantSet, J12Selector, SexticForm, compute_invariants
from .stable import Shape, StableFiberType
from .valuation import LocalContext, finite, in_m, in_R, is_unit, lcd, quotient_val, val


class OmegaStatus(str, Enum):
    NON_RAMIFIED = "NonRamified"
    RAMIFIED_REGULAR = "RamifiedRegularPreimage"
    RAMIFIED_SINGULAR = "RamifiedSingularPreimage"
    OMEGA_SINGULAR = "OmegaSingular"


class IndeterminateStatus(ArithmeticError):
    """No ramification block matched: the model is outside the stated hypotheses."""


class TwoComponentChar3(ArithmeticError):
    pass


@dataclass(frozen=True)
class RamData:
    regime: str
    n: int
    r: int
    q: int | None = None
    dK: Fraction | None = None
    rK: Fraction | None = None
    d: int | None = None
    j2_parity: int | None = None
    omega: OmegaStatus | None = None
    # defining rationals: r = n*xr mod n, q = n*xq mod n
    xr: Fraction | None = None
    xq: Fraction | None = None
    # m*dK when nu(J2) is odd (r before reduction mod n)
    r_full: int | None = None

    def as_dict(self) -> dict:
        out = {"n": self.n, "r": self.r, "q": self.q, "dK": _str(self.dK), "rK": _str(self.rK), "d": self.d}
        if self.j2_parity is not None:
            out["j2_parity"] = "even" if self.j2_parity == 0 else "odd"
        if self.omega is not None:
            out["omega"] = self.omega.value
        return out


def _str(x: Fraction | None) -> str | None:
    return None if x is None else str(x)


def _mod(n: int, x: Fraction) -> int:
    v = n * x
    if v.denominator != 1:
        raise ArithmeticError(f"{n}*{x} is not an integer")
    return int(v) % n


def from_rationals(regime: str, xr: Fraction, xq: Fraction | None = None, **extra) -> RamData:
    """n = lcd of the defining rationals, r and q their scaled residues."""
    vals = [xr] if xq is None else [xr, xq]
    n = lcd(vals)
    q = None if xq is None else _mod(n, xq)
    return RamData(regime=regime, n=n, r=_mod(n, xr), q=q, xr=xr, xq=xq, **extra)


def normalize_model(P: SexticForm, ctx: LocalContext) -> SexticForm:
    """A model with a0 != 0: reverse coefficients, shifting first if P(0) = 0 as well."""
    if P.a0 != 0:
        return P
    if P[6] == 0:
        P = P.shifted(_unit_non_root(P, ctx))
    return P.reversed()


def _unit_non_root(P: SexticForm, ctx: LocalContext) -> int:
    floor = min(val(c, ctx) for c in P.coeffs if c != 0)
    for c in range(1, ctx.p):
        if val(P(c), ctx) == floor:
            return c
    c = 1
    while P(c) == 0:
        c += 1
    return c


def rational_branch_points(P: SexticForm, ctx: LocalContext) -> int:
    """Lower bound on the K-rational roots of P, counting infinity for quintics.

    Simple roots of the reduction lift uniquely by Hensel's lemma.
    """
    floor = min(val(c, ctx) for c in P.coeffs if c != 0)
    bar = [ctx.residue(c / Fraction(ctx.p) ** floor) for c in P.coeffs]
    count = 0
    for x in range(ctx.p):
        f = df = 0
        for i, c in enumerate(bar):
            f = (f * x + c) % ctx.p
            if i < 6:
                df = (df * x + (6 - i) * c) % ctx.p
        if f == 0 and df != 0:
            count += 1
    if P.a0 == 0 or (bar[0] == 0 and bar[1] != 0):
        count += 1
    return count


def omega_status(inv: InvariantSet, P: SexticForm, regime: str, ctx: LocalContext,
                 J12: J12Selector | None = None) -> OmegaStatus:
    """Ramification of the image of infinity in the quotient of the stable fiber."""
    if P.a0 == 0:
        raise ValueError("omega_status needs a0 != 0; call normalize_model first")
    q = lambda *f: quotient_val(ctx, *f)  # noqa: E731
    a0 = P.a0
    if regime == "smooth":
        if inv.A5 != 0 and in_m(q((a0, 20), (inv.J10, 1), (inv.A5, -6))):
            return OmegaStatus.RAMIFIED_REGULAR
        return OmegaStatus.NON_RAMIFIED
    if regime == "irreducible-singular":
        if J12 is None:
            raise ValueError("the irreducible-singular regime needs J12")
        J = J12.value
        blocks = {
            OmegaStatus.NON_RAMIFIED: in_R(q((a0, -6), (inv.B2, 9), (J, -1)))
            and in_R(q((a0, -120), (inv.A5, 36), (J, -5))),
            OmegaStatus.RAMIFIED_REGULAR: in_m(q((a0, 120), (inv.A5, -36), (J, 5)))
            and in_R(q((inv.B2, 60), (inv.A5, -12), (J, -5))),
            OmegaStatus.RAMIFIED_SINGULAR: in_m(q((a0, 6), (inv.B2, -9), (J, 1)))
            and in_m(q((inv.B2, -60), (inv.A5, 12), (J, 5))),
        }
    elif regime == "not-irreducible":
        J2 = inv.J2
        b = q((a0, -2), (inv.B2, 3), (J2, -2))
        a3 = q((a0, -4), (inv.A3, 2), (J2, -1))
        a5 = q((a0, -20), (inv.A5, 6), (J2, -5))
        blocks = {
            OmegaStatus.NON_RAMIFIED: in_R(b) and in_R(a3) and in_R(a5) and (is_unit(a3) or is_unit(a5)),
            OmegaStatus.RAMIFIED_REGULAR: in_m(q((a0, 20), (inv.A5, -6), (J2, 5)))
            and in_R(q((inv.B2, 10), (inv.A5, -2), (J2, -5))),
            OmegaStatus.RAMIFIED_SINGULAR: in_m(q((a0, 2), (inv.B2, -3), (J2, 2)))
            and in_m(q((inv.B2, -10), (inv.A5, 2), (J2, 5))),
            OmegaStatus.OMEGA_SINGULAR: in_R(b) and in_m(a3) and in_m(a5),
        }
    else:
        raise ValueError(f"unknown regime {regime!r}")
    hits = [s for s, ok in blocks.items() if ok]
    if len(hits) != 1:
        raise IndeterminateStatus(f"indeterminate status in the {regime} regime (matched {len(hits)} blocks)")
    return hits[0]


def _v(ctx: LocalContext, what: str, *factors) -> int:
    return finite(quotient_val(ctx, *factors), what)


def ram_data_smooth(inv: InvariantSet, P: SexticForm, omega: OmegaStatus, ctx: LocalContext) -> RamData:
    a0 = P.a0
    if omega is OmegaStatus.NON_RAMIFIED:
        xr = Fraction(_v(ctx, "a0^10/J10", (a0, 10), (inv.J10, -1)), 30)
        xq = Fraction(_v(ctx, "a0^5/J10", (a0, 5), (inv.J10, -1)), 10)
    else:
        xr = Fraction(_v(ctx, "J10/A5^2", (inv.A5, -2), (inv.J10, 1)), 20)
        xq = Fraction(_v(ctx, "J10^5/A5^6", (inv.A5, -6), (inv.J10, 5)), 40)
    return from_rationals("smooth", xr, xq, omega=omega)


def ram_data_irreducible_singular(inv: InvariantSet, J12: J12Selector, P: SexticForm,
                                  omega: OmegaStatus, ctx: LocalContext) -> RamData:
    a0, J = P.a0, J12.value
    if omega is OmegaStatus.NON_RAMIFIED:
        xr = Fraction(_v(ctx, "a0^12/J12", (a0, 12), (J, -1)), 36)
        xq = Fraction(_v(ctx, "a0^6/J12", (a0, 6), (J, -1)), 12)
    elif omega is OmegaStatus.RAMIFIED_REGULAR:
        xq = Fraction(_v(ctx, "A5^36/J12^25", (inv.A5, 36), (J, -25)), 240)
        xr = -2 * xq
    elif omega is OmegaStatus.RAMIFIED_SINGULAR:
        xr = Fraction(_v(ctx, "J12/B2^6", (inv.B2, -6), (J, 1)), 12)
        xq = Fraction(_v(ctx, "J12/B2^9", (inv.B2, -9), (J, 1)), 12)
    else:
        raise ValueError(f"{omega.value} does not occur in the irreducible-singular regime")
    return from_rationals("irreducible-singular", xr, xq, omega=omega)


def d_K(inv: InvariantSet, shape: Shape, ctx: LocalContext) -> Fraction:
    """Degree of the intersection node of the two components, measured over K."""
    if shape is Shape.TWO_SMOOTH:
        return Fraction(_v(ctx, "J10/J2^5", (inv.J10, 1), (inv.J2, -5)), 12)
    if shape is Shape.ONE_SMOOTH:
        return Fraction(_v(ctx, "I12/J2^6", (inv.I12, 1), (inv.J2, -6)), 12)
    if shape is Shape.TWO_SINGULAR:
        return Fraction(_v(ctx, "I4/J2^2", (inv.I4, 1), (inv.J2, -2)), 4)
    raise ValueError(f"d_K is only defined for two-component shapes, not {shape.value}")


def r_K(inv: InvariantSet, P: SexticForm, dk: Fraction, ctx: LocalContext) -> Fraction:
    candidates = [dk / 2]
    for what, factors, den in (
        ("A3^2/A2^3", ((inv.A2, -3), (inv.A3, 2)), 8),
        ("(A2A3-3A5)^2/A2^5", ((inv.A2, -5), (inv.A2 * inv.A3 - 3 * inv.A5, 2)), 12),
    ):
        v = quotient_val(ctx, *factors)
        if v is None:
            raise ValueError(f"r_K: {what} is undefined (A2 = 0)")
        if v != float("inf"):
            candidates.append(Fraction(v, den))
    return Fraction(_v(ctx, "a0", (P.a0, 1)), 2) + min(candidates)


def ram_data_not_irreducible(inv: InvariantSet, P: SexticForm, omega: OmegaStatus | None,
                             shape: StableFiberType | Shape, ctx: LocalContext) -> RamData:
    if ctx.p == 3:
        raise TwoComponentChar3("char-3 two-component regime is outside the tabulated cases")
    shape = getattr(shape, "shape", shape)
    dk = d_K(inv, shape, ctx)
    parity = _v(ctx, "J2", (inv.J2, 1)) % 2
    regime = "not-irreducible"
    if parity == 1:
        m = dk.denominator
        n = 2 * m
        r_full = int(m * dk)
        rk = (dk + _v(ctx, "a0", (P.a0, 1))) / 2
        return RamData(regime=regime, n=n, r=r_full % n, dK=dk, rK=rk, d=int(n * dk),
                       j2_parity=1, omega=omega, xr=Fraction(r_full, n), r_full=r_full)
    rk = None
    if omega is OmegaStatus.NON_RAMIFIED:
        xr = Fraction(_v(ctx, "a0*J2", (P.a0, 1), (inv.J2, 1)), 6)
    elif omega is OmegaStatus.RAMIFIED_REGULAR:
        xr = Fraction(_v(ctx, "A5^2*J2", (inv.A5, 2), (inv.J2, 1)), 8)
    elif omega is OmegaStatus.RAMIFIED_SINGULAR:
        xr = Fraction(_v(ctx, "B2", (inv.B2, 1)), 4)
    elif omega is OmegaStatus.OMEGA_SINGULAR:
        rk = xr = r_K(inv, P, dk, ctx)
    else:
        raise IndeterminateStatus("the even-parity two-component regime needs an omega status")
    n = lcd([dk, xr])
    return RamData(regime=regime, n=n, r=_mod(n, xr), dK=dk, rK=rk, d=int(n * dk),
                   j2_parity=0, omega=omega, xr=xr)


def ramification_data(P: SexticForm, st: StableFiberType, ctx: LocalContext,
                      inv: InvariantSet | None = None) -> RamData:
    """Normalize the model, then dispatch on the regime of the stable shape."""
    from .invariants import select_J12

    Pn = normalize_model(P, ctx)
    inv = compute_invariants(Pn) if inv is None or Pn is not P else inv
    regime = st.shape.regime
    if regime == "smooth":
        return ram_data_smooth(inv, Pn, omega_status(inv, Pn, regime, ctx), ctx)
    if regime == "irreducible-singular":
        J12 = select_J12(inv, st.shape)
        omega = omega_status(inv, Pn, regime, ctx, J12)
        return ram_data_irreducible_singular(inv, J12, Pn, omega, ctx)
    if ctx.p == 3:
        raise TwoComponentChar3("char-3 two-component regime is outside the tabulated cases")
    try:
        omega = omega_status(inv, Pn, regime, ctx)
    except IndeterminateStatus:
        if _v(ctx, "J2", (inv.J2, 1)) % 2 == 0:
            raise
        omega = None
    return ram_data_not_irreducible(inv, Pn, omega, st, ctx)
