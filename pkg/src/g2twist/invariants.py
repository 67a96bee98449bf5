"""Igusa, derived and affine invariants of a binary sextic.

The Igusa invariants J2..J10 follow the usual normalization in terms of the
Igusa-Clebsch invariants (I2, I4, I6, I10 below are those of P itself)::

    J2 = I2/8          J4 = (4 J2^2 - I4)/96     J6 = (8 J2^3 - 160 J2 J4 - I6)/576
    J8 = (J2 J6 - J4^2)/4                        J10 = I10/4096

All of these lie in Z[1/2][a0..a6].  Odd residue characteristics only ever see
the powers of 2 as units, so every valuation test is independent of that choice.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields, replace
from enum import Enum
from fractions import Fraction
from functools import reduce
from numbers import Rational
from typing import Iterable

from . import _clebsch

COEFF_NAMES = ("a0", "a1", "a2", "a3", "a4", "a5", "a6")


@dataclass(frozen=True)
class SexticForm:
    """P(x) = a0 x^6 + a1 x^5 + ... + a6 with exact rational coefficients."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        cs = tuple(Fraction(c) for c in self.coeffs)
        if len(cs) != 7:
            raise ValueError(f"a sextic form needs 7 coefficients, got {len(cs)}")
        if cs[0] == 0 and cs[1] == 0:
            raise ValueError("P must have degree 5 or 6 (a0 and a1 both zero)")
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def of(cls, *coeffs: Rational | int | str) -> "SexticForm":
        return cls(tuple(Fraction(c) for c in coeffs))

    @classmethod
    def from_roots(cls, roots: Iterable[Rational | int], lead: Rational | int = 1) -> "SexticForm":
        c = [Fraction(1)]
        for r in roots:
            r = Fraction(r)
            nxt = c + [Fraction(0)]
            for i, x in enumerate(c):
                nxt[i + 1] -= r * x
            c = nxt
        c = [Fraction(lead) * x for x in c]
        c = [Fraction(0)] * (7 - len(c)) + c
        return cls(tuple(c))

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i]

    @property
    def a0(self) -> Fraction:
        return self.coeffs[0]

    @property
    def degree(self) -> int:
        return 6 if self.coeffs[0] != 0 else 5

    def scaled(self, lam: Rational | int) -> "SexticForm":
        lam = Fraction(lam)
        if lam == 0:
            raise ValueError("cannot scale by zero")
        return SexticForm(tuple(lam * c for c in self.coeffs))

    def reversed(self) -> "SexticForm":
        """Coefficients of x^6 P(1/x)."""
        return SexticForm(self.coeffs[::-1])

    def shifted(self, c: Rational | int) -> "SexticForm":
        """Coefficients of P(x + c)."""
        c = Fraction(c)
        # descending coefficients -> ascending, Taylor shift, back
        asc = list(self.coeffs[::-1])
        n = len(asc)
        for i in range(n):
            for j in range(n - 2, i - 1, -1):
                asc[j] += c * asc[j + 1]
        return SexticForm(tuple(asc[::-1]))

    def __call__(self, x: Rational | int) -> Fraction:
        acc = Fraction(0)
        for c in self.coeffs:
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.coeffs)


# degree of each invariant as a polynomial in a0..a6
DEGREES = {
    "J2": 2, "J4": 4, "J6": 6, "J8": 8, "J10": 10,
    "I2": 2, "I4": 4, "I6": 6, "I8": 8, "I12": 12,
    "A2": 2, "A3": 3, "A4": 4, "A5": 5, "B2": 2,
}


@dataclass(frozen=True)
class InvariantSet:
    J2: Fraction
    J4: Fraction
    J6: Fraction
    J8: Fraction
    J10: Fraction
    I2: Fraction
    I4: Fraction
    I6: Fraction
    I8: Fraction
    I12: Fraction
    A2: Fraction
    A3: Fraction
    A4: Fraction
    A5: Fraction
    B2: Fraction

    def J(self, k: int) -> Fraction:
        """J_k for k in {2, 4, 6, 8, 10}."""
        return getattr(self, f"J{k}")

    def as_dict(self) -> dict[str, Fraction]:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    def scaled(self, lam: Rational | int) -> "InvariantSet":
        lam = Fraction(lam)
        return replace(self, **{k: v * lam ** DEGREES[k] for k, v in self.as_dict().items()})


def _integral_model(P: SexticForm) -> tuple[list[int], int]:
    den = reduce(math.lcm, (c.denominator for c in P.coeffs), 1)
    return [int(c * den) for c in P.coeffs], den


def _eval_terms(terms, a: list[int]) -> int:
    powers = [[1] for _ in a]
    total = 0
    for exps, coeff in terms:
        term = coeff
        for i, e in enumerate(exps):
            if e:
                pw = powers[i]
                while len(pw) <= e:
                    pw.append(pw[-1] * a[i])
                term *= pw[e]
        total += term
    return total


def igusa_clebsch(P: SexticForm) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """(I2, I4, I6, I10) of Igusa-Clebsch; I10 is the discriminant of P."""
    a, den = _integral_model(P)
    out = []
    for terms, deg in ((_clebsch.I2_TERMS, 2), (_clebsch.I4_TERMS, 4),
                       (_clebsch.I6_TERMS, 6), (_clebsch.I10_TERMS, 10)):
        out.append(Fraction(_eval_terms(terms, a), den ** deg))
    return tuple(out)


def compute_invariants(P: SexticForm) -> InvariantSet:
    a0, a1, a2, a3, a4, a5, _ = P.coeffs
    c2, c4, c6, c10 = igusa_clebsch(P)
    J2 = c2 / 8
    J4 = (4 * J2**2 - c4) / 96
    J6 = (8 * J2**3 - 160 * J2 * J4 - c6) / 576
    J8 = (J2 * J6 - J4**2) / 4
    J10 = c10 / 4096
    I4 = J2**2 - 24 * J4
    I12 = (J2**2 * J4**2 - 32 * J4**3 - J2**3 * J6 + 36 * J2 * J4 * J6 - 108 * J6**2) / 4
    return InvariantSet(
        J2=J2, J4=J4, J6=J6, J8=J8, J10=J10,
        I2=J2 / 12, I4=I4, I6=J6, I8=J8, I12=I12,
        A2=-5 * a1**2 + 12 * a0 * a2,
        A3=5 * a1**3 + 9 * a0 * (-2 * a2 * a1 + 3 * a0 * a3),
        A4=-5 * a1**4 + 24 * a0 * (a2 * a1**2 - 3 * a3 * a0 * a1 + 6 * a4 * a0**2),
        A5=a1**5 + 3 * a0 * (-2 * a2 * a1**3 + 9 * a0 * a3 * a1**2
                             - 36 * a0**2 * a4 * a1 + 108 * a0**3 * a5),
        B2=2 * a2**2 - 5 * a1 * a3 + 10 * a0 * a4,
    )


def twist_invariants(inv: InvariantSet, D: Rational | int) -> InvariantSet:
    """Invariants of y^2 = D P(x): every invariant of degree k picks up D^k."""
    D = Fraction(D)
    if D == 0:
        raise ValueError("twist parameter D must be nonzero")
    return inv.scaled(D)


def _det(m: list[list[Fraction]]) -> Fraction:
    m = [row[:] for row in m]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        inv = 1 / m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] * inv
            if f:
                for k in range(c, n):
                    m[r][k] -= f * m[c][k]
    return det


def _resultant(f: list[Fraction], g: list[Fraction]) -> Fraction:
    """Resultant of two binary forms given by descending coefficient lists."""
    df, dg = len(f) - 1, len(g) - 1
    size = df + dg
    rows = []
    for i in range(dg):
        rows.append([Fraction(0)] * i + f + [Fraction(0)] * (size - df - 1 - i))
    for i in range(df):
        rows.append([Fraction(0)] * i + g + [Fraction(0)] * (size - dg - 1 - i))
    return _det(rows)


def discriminant(P: SexticForm) -> Fraction:
    """Discriminant of P as a binary sextic form.

    Computed as Res(dF/dx, dF/dz) / 6^4 for the homogenization F(x, z), which
    agrees with the polynomial discriminant when a0 != 0 and stays correct
    (root at infinity) when a0 = 0.
    """
    a = P.coeffs
    fx = [(6 - i) * a[i] for i in range(6)]
    fz = [i * a[i] for i in range(1, 7)]
    return -_resultant(fx, fz) / 6**4


class J12Source(str, Enum):
    I12 = "I12"
    I4_CUBED = "I4cubed"
    J2_SIXTH = "J2sixth"


@dataclass(frozen=True)
class J12Selector:
    value: Fraction
    source: J12Source


def select_J12(inv: InvariantSet, shape) -> J12Selector:
    """The degree-12 invariant that normalizes an irreducible-quotient singular fiber."""
    from .stable import Shape

    shape = getattr(shape, "shape", shape)
    if shape is Shape.ONE_NODE:
        return J12Selector(inv.I12, J12Source.I12)
    if shape is Shape.TWO_NODES:
        return J12Selector(inv.I4**3, J12Source.I4_CUBED)
    if shape is Shape.C000:
        return J12Selector(inv.J2**6, J12Source.J2_SIXTH)
    raise ValueError(f"J12 is only defined for shapes II, III, IV, not {shape.value}")
