"""Independent reference computations used by the tests.

Nothing here calls into the package: invariants come from root formulas,
j-invariants from cross-ratios, and stable shapes from explicit root clusters.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import prod


def _pair_partitions(s: list[int]):
    if not s:
        yield []
        return
    a = s[0]
    for i in range(1, len(s)):
        rest = s[1:i] + s[i + 1:]
        for p in _pair_partitions(rest):
            yield [(a, s[i])] + p


PAIRINGS = list(_pair_partitions(list(range(6))))
TRIPLE_SPLITS = [
    ((0,) + c, tuple(i for i in range(6) if i not in (0,) + c))
    for c in itertools.combinations(range(1, 6), 2)
]


def clebsch_from_roots(roots, a0=1) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """Igusa-Clebsch I2, I4, I6, I10 of a0 * prod(x - root) via root differences."""
    # integer roots stay integers: exact and much faster than Fraction
    r = [x if isinstance(x, int) else Fraction(x) for x in roots]
    a0 = Fraction(a0)
    sq = {(i, j): (r[i] - r[j]) ** 2 for i in range(6) for j in range(6)}
    d = lambda i, j: sq[i, j]  # noqa: E731

    def tri(A):
        return d(A[0], A[1]) * d(A[1], A[2]) * d(A[2], A[0])

    I2 = a0**2 * sum(prod(d(i, j) for i, j in p) for p in PAIRINGS)
    I4 = a0**4 * sum(tri(A) * tri(B) for A, B in TRIPLE_SPLITS)
    I6 = 0
    for A, B in TRIPLE_SPLITS:
        base = tri(A) * tri(B)
        for perm in itertools.permutations(B):
            I6 += base * prod(d(A[k], perm[k]) for k in range(3))
    I6 *= a0**6
    I10 = a0**10 * prod(d(i, j) for i, j in itertools.combinations(range(6), 2))
    return I2, I4, I6, I10


def igusa_from_roots(roots, a0=1) -> dict[str, Fraction]:
    """J2..J10 in the usual normalization, from the root formulas above."""
    c2, c4, c6, c10 = clebsch_from_roots(roots, a0)
    J2 = c2 / 8
    J4 = (4 * J2**2 - c4) / 96
    J6 = (8 * J2**3 - 160 * J2 * J4 - c6) / 576
    J8 = (J2 * J6 - J4**2) / 4
    return {"J2": J2, "J4": J4, "J6": J6, "J8": J8, "J10": c10 / 4096, "IC4": c4}


def coefficients(roots, a0=1) -> tuple[Fraction, ...]:
    """a0..a6 of a0 * prod(x - root), padded to seven entries."""
    c = [Fraction(1)]
    for root in roots:
        nxt = c + [Fraction(0)]
        for i, x in enumerate(c):
            nxt[i + 1] -= Fraction(root) * x
        c = nxt
    c = [Fraction(a0) * x for x in c]
    return tuple([Fraction(0)] * (7 - len(c)) + c)


def discriminant_from_roots(roots, a0=1) -> Fraction:
    r = [Fraction(x) for x in roots]
    return Fraction(a0) ** 10 * prod((r[i] - r[j]) ** 2 for i, j in itertools.combinations(range(6), 2))


def legendre_j(lam: Fraction) -> Fraction:
    return 256 * (lam**2 - lam + 1) ** 3 / (lam**2 * (lam - 1) ** 2)


def j_of_roots(a, b, c, d=None) -> Fraction:
    """j-invariant of y^2 = (x-a)(x-b)(x-c)(x-d); d = None puts the fourth root at infinity."""
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if d is None:
        lam = (c - a) / (b - a)
    else:
        d = Fraction(d)
        lam = ((c - a) * (d - b)) / ((c - b) * (d - a))
    return legendre_j(lam)


# Cluster pictures at a prime p: roots chosen so that the p-adic distances are
# explicit.  Each builder returns (roots, shape numeral, degrees over K).  A twin
# of depth a contributes a node of thickness 2a; a three-root cluster of
# relative depth k splits the curve into two genus-one parts joined by a node of
# thickness k/2.

def twin_clusters(p: int, depths) -> tuple[list[int], str, list[Fraction]]:
    """One, two or three twins of the given depths around distinct unit centers (p >= 7)."""
    roots: list[int] = []
    centers = [0, 1, 2]
    for c, a in zip(centers, depths):
        roots += [c, c + p**a]
    roots += [3, 4, 5, 6][: 6 - len(roots)]
    shape = {1: "II", 2: "III", 3: "IV"}[len(depths)]
    return roots, shape, sorted(Fraction(2 * a) for a in depths)


def split_clusters(p: int, k: int, inner: tuple[int, ...] = ()) -> tuple[list[int], str, list[Fraction]]:
    """Three roots of depth k, plus a twin inside that cluster (VI) and one outside it (VII)."""
    if not inner:
        return [0, p**k, 2 * p**k, 1, 2, 3], "V", [Fraction(k, 2)]
    if len(inner) == 1:
        (a,) = inner
        return [0, p**k, p ** (k + a), 1, 2, 3], "VI", [Fraction(k, 2), Fraction(2 * a)]
    a, b = inner
    degs = sorted([Fraction(2 * a), Fraction(2 * b)])
    return [0, p**k, p ** (k + a), 1, 1 + p**b, 2], "VII", [Fraction(k, 2)] + degs
