"""Exact rationals with a normalized p-adic valuation.

Every classification condition downstream is a valuation test on a quotient of
invariants ("lies in R", "lies in m", "is a unit").  The base field is modeled
as Q with the p-adic valuation and uniformizer t = p.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from numbers import Rational

INF = math.inf

# A valuation is an int, +inf for 0, or -inf for "1/0" in a formal quotient.
Val = int | float


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _ord(n: int, p: int) -> int:
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


@dataclass(frozen=True)
class LocalContext:
    """Residue characteristic p (odd prime) of the discretely valued base field."""

    p: int

    def __post_init__(self) -> None:
        if not isinstance(self.p, int) or not _is_prime(self.p) or self.p < 3:
            raise ValueError(f"residue characteristic must be an odd prime, got {self.p!r}")

    @property
    def uniformizer(self) -> int:
        return self.p

    def val(self, x: Rational | int) -> Val:
        return val(x, self)

    def in_R(self, x: Rational | int) -> bool:
        return self.val(x) >= 0

    def in_m(self, x: Rational | int) -> bool:
        return self.val(x) > 0

    def is_unit(self, x: Rational | int) -> bool:
        return self.val(x) == 0

    def residue(self, x: Rational | int) -> int | None:
        """Image of x in F_p, or None when x is not integral."""
        x = Fraction(x)
        if self.val(x) < 0:
            return None
        return x.numerator * pow(x.denominator, -1, self.p) % self.p


def val(x: Rational | int, ctx: LocalContext) -> Val:
    """p-adic valuation of an exact rational; val(0) is +inf."""
    x = Fraction(x)
    if x == 0:
        return INF
    return _ord(abs(x.numerator), ctx.p) - _ord(x.denominator, ctx.p)


def quotient_val(ctx: LocalContext, *factors: tuple[Rational | int, int]) -> Val | None:
    """Valuation of prod(x**e) without forming the product.

    Returns None when the quotient is undefined: a zero factor carries a
    negative exponent (division by zero), which no membership test accepts.
    """
    total: Val = 0
    for x, e in factors:
        if e == 0:
            continue
        v = val(x, ctx)
        if v == INF and e < 0:
            return None
        total += e * v
    return total


def in_R(v: Val | None) -> bool:
    return v is not None and v >= 0


def in_m(v: Val | None) -> bool:
    return v is not None and v > 0


def is_unit(v: Val | None) -> bool:
    return v is not None and v == 0


def finite(v: Val | None, what: str = "valuation") -> int:
    """Return v as an int, raising on zero or undefined quantities."""
    if v is None or isinstance(v, float):
        raise DegenerateInvariant(f"{what} is not finite ({v})")
    return v


class DegenerateInvariant(ArithmeticError):
    """A quantity needed as a finite valuation is zero or undefined."""


def least_denominator(x: Rational | int) -> int:
    return Fraction(x).denominator


def lcd(values) -> int:
    """Smallest positive m with m*v integral for every v."""
    values = list(values)
    if not values:
        raise ValueError("lcd of an empty list")
    dens = []
    for v in values:
        if isinstance(v, float):
            raise DegenerateInvariant(f"lcd of a non-finite value {v}")
        dens.append(Fraction(v).denominator)
    return reduce(math.lcm, dens, 1)


@dataclass(frozen=True)
class ExtValuation:
    """Normalized valuation of a tame extension L/K with ramification index n."""

    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("ramification index must be positive")

    def __call__(self, v: Val) -> Val:
        return self.n * v
