"""Reduction types of X and of its quadratic twist, as declarative row lists.

Each table is keyed by the stable shape (the two-elliptic table is split by the
parity of nu(J2)).  A row matches on n and on residues of d, r, q modulo n; the
symbol columns are templates over the table's degree variables:

    II   d                 III  d1, d2            IV  d1 <= d2 <= d3, e1, e2
    V    d (and r = m*dK when nu(J2) is odd)     VI  d, d1
    VII  d, d1, d2 (e1 = d1, e2 = d2)

The twist column is written in the variables of X, exactly as tabulated.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .ramification import OmegaStatus, RamData
from .stable import Shape, SingularityDegrees
from .symbols import ReductionSymbol, SymbolTemplate

NR = OmegaStatus.NON_RAMIFIED
RR = OmegaStatus.RAMIFIED_REGULAR
RS = OmegaStatus.RAMIFIED_SINGULAR


class NoMatchingRow(LookupError):
    """The inputs fall outside every tabulated tame case."""


class AmbiguousRow(LookupError):
    """A row pair needs the smoothness of the component containing infinity."""

    def __init__(self, msg: str, candidates: tuple["TableRow", ...]):
        super().__init__(msg)
        self.candidates = candidates


class DegreeConstraint(ValueError):
    pass


@dataclass(frozen=True)
class TableRow:
    table: str
    n: int
    x: SymbolTemplate
    xchi: SymbolTemplate
    d: frozenset[int] | None = None
    r: frozenset[int] | None = None
    q: frozenset[int] | None = None
    omega: frozenset[OmegaStatus] | None = None
    parity: int | None = None
    # modulus for the r predicate when it is not n (r mod n/2 for odd nu(J2))
    r_mod: int | None = None
    # variables that must coincide, e.g. ("d1", "d2")
    equal: tuple[str, ...] = ()
    # 0 / 1 selects the first / second reading of the one-elliptic n=2, d odd pair
    remark: int | None = None

    def matches(self, key: "RowKey") -> bool:
        if key.n != self.n:
            return False
        if self.parity is not None and key.parity != self.parity:
            return False
        if self.d is not None and (key.d is None or key.d % self.n not in self.d):
            return False
        if self.r is not None:
            if self.r_mod is not None:
                if key.r_full is None or key.r_full % self.r_mod not in self.r:
                    return False
            elif key.r % self.n not in self.r:
                return False
        if self.q is not None and (key.q is None or key.q % self.n not in self.q):
            return False
        if self.omega is not None and key.omega not in self.omega:
            return False
        return True

    def check_equal(self, env: dict[str, int]) -> None:
        vals = {env.get(v) for v in self.equal}
        if len(vals) > 1:
            raise DegreeConstraint(f"{self.x}: degrees {', '.join(self.equal)} must be equal, got {sorted(vals)}")

    def describe(self) -> str:
        bits = [f"n={self.n}"]
        if self.parity is not None:
            bits.append("nu(J2) " + ("even" if self.parity == 0 else "odd"))
        for name in ("d", "r", "q"):
            res = getattr(self, name)
            if res is not None:
                mod = self.r_mod if name == "r" and self.r_mod else self.n
                bits.append(f"{name}≡{'/'.join(map(str, sorted(res)))} mod {mod}")
        if self.omega is not None:
            bits.append("omega∈{" + ",".join(sorted(o.value for o in self.omega)) + "}")
        if self.remark is not None:
            bits.append(f"reading {self.remark}")
        return f"{self.table}: {self.x} ({', '.join(bits)}) -> {self.xchi}"


@dataclass(frozen=True)
class RowKey:
    n: int
    r: int
    q: int | None = None
    d: int | None = None
    omega: OmegaStatus | None = None
    parity: int | None = None
    r_full: int | None = None


def _t(layout: str, *exprs: str) -> SymbolTemplate:
    return SymbolTemplate.of(layout, *exprs)


def _s(*xs: int) -> frozenset[int]:
    return frozenset(xs)


def _row(table: str, n: int, x: SymbolTemplate, xchi: SymbolTemplate, **kw) -> TableRow:
    for k in ("d", "r", "q"):
        if isinstance(kw.get(k), int):
            kw[k] = _s(kw[k])
        elif isinstance(kw.get(k), tuple):
            kw[k] = _s(*kw[k])
    if "omega" in kw and kw["omega"] is not None:
        kw["omega"] = frozenset(kw["omega"])
    return TableRow(table, n, x, xchi, **kw)


def _smooth() -> list[TableRow]:
    T = "smooth"
    I000, Is000 = _t("[I_{#-#-#}]", "0", "0", "0"), _t("[I*_{#-#-#}]", "0", "0", "0")
    II, III, IV, V, Vs, VI, VII, VIIs = (_t(f"[{x}]") for x in ("II", "III", "IV", "V", "V*", "VI", "VII", "VII*"))
    IX = lambda m: _t("[IX-#]", str(m))  # noqa: E731
    VIII = lambda m: _t("[VIII-#]", str(m))  # noqa: E731
    rows = [
        _row(T, 1, I000, Is000),
        _row(T, 2, Is000, I000, r=0),
        _row(T, 2, II, II, r=1),
        _row(T, 3, III, IV),
        _row(T, 4, VI, VI),
        _row(T, 5, IX(3), VIII(1), r=1),
        _row(T, 5, IX(1), VIII(3), r=2),
        _row(T, 5, IX(4), VIII(2), r=3),
        _row(T, 5, IX(2), VIII(4), r=4),
        _row(T, 6, V, Vs, r=1, q=0),
        _row(T, 6, V, Vs, r=5, q=3),
        _row(T, 6, Vs, V, r=1, q=3),
        _row(T, 6, Vs, V, r=5, q=0),
        _row(T, 6, IV, III, r=(2, 4)),
        _row(T, 8, VIIs, VII, q=(1, 3)),
        _row(T, 8, VII, VIIs, q=(5, 7)),
        _row(T, 10, VIII(1), IX(3), r=2),
        _row(T, 10, VIII(3), IX(1), r=4),
        _row(T, 10, VIII(2), IX(4), r=6),
        _row(T, 10, VIII(4), IX(2), r=8),
    ]
    return rows


def _one_node() -> list[TableRow]:
    T = "II"
    return [
        _row(T, 1, _t("[I_{#-#-#}]", "d", "0", "0"), _t("[I*_{#-#-#}]", "d", "0", "0")),
        _row(T, 2, _t("[I*_{#-#-#}]", "d/2", "0", "0"), _t("[I_{#-#-#}]", "d/2", "0", "0"), r=0),
        _row(T, 2, _t("[II*_{#-#}]", "d/2", "0"), _t("[II_{#-#}]", "d/2", "0"), r=1, q=0),
        _row(T, 2, _t("[II_{#-#}]", "d/2", "0"), _t("[II*_{#-#}]", "d/2", "0"), r=1, q=1),
        _row(T, 3, _t("[IV-II_{#}]", "(d-2)/3"), _t("[II*-II*_{#}]", "(d-2)/3"), r=1),
        _row(T, 3, _t("[IV*-II_{#}]", "(d-1)/3"), _t("[II-II*_{#}]", "(d-1)/3"), r=2),
        _row(T, 4, _t("[III-II_{#}]", "(d-2)/4"), _t("[III*-II*_{#}]", "(d-2)/4"), r=1, q=1),
        _row(T, 4, _t("[III*-II*_{#}]", "(d-2)/4"), _t("[III-II_{#}]", "(d-2)/4"), r=1, q=3),
        _row(T, 4, _t("[III-II*_{#}]", "(d-2)/4"), _t("[III*-II_{#}]", "(d-2)/4"), r=3, q=1),
        _row(T, 4, _t("[III*-II_{#}]", "(d-2)/4"), _t("[III-II*_{#}]", "(d-2)/4"), r=3, q=3),
        _row(T, 6, _t("[II*-II*_{#}]", "(d-4)/6"), _t("[IV-II_{#}]", "(d-4)/6"), r=2),
        _row(T, 6, _t("[II-II*_{#}]", "(d-2)/6"), _t("[IV*-II_{#}]", "(d-2)/6"), r=4),
    ]


def _two_nodes() -> list[TableRow]:
    T = "III"
    reg = (NR, RR)
    return [
        _row(T, 1, _t("[I_{#-#-#}]", "d1", "d2", "0"), _t("[I*_{#-#-#}]", "d1", "d2", "0")),
        _row(T, 2, _t("[I*_{#-#-#}]", "d1/2", "d2/2", "0"), _t("[I_{#-#-#}]", "d1/2", "d2/2", "0"), r=0),
        _row(T, 2, _t("[2I_{#}-#]", "d1", "0"), _t("[2I_{#}-#]", "d1", "0"), r=1, omega=reg, equal=("d1", "d2")),
        _row(T, 2, _t("[II_{#-#}]", "d1/2", "d2/2"), _t("[II_{#-#}]", "d1/2", "d2/2"), r=1, omega=(RS,)),
        _row(T, 4, _t("[III_{#}]", "d1/2"), _t("[III_{#}]", "d1/2"), equal=("d1", "d2")),
    ]


def _c000() -> list[TableRow]:
    T = "IV"
    return [
        _row(T, 1, _t("[I_{#-#-#}]", "d1", "d2", "d3"), _t("[I*_{#-#-#}]", "d1", "d2", "d3")),
        _row(T, 2, _t("[I*_{#-#-#}]", "d1/2", "d2/2", "d3/2"), _t("[I_{#-#-#}]", "d1/2", "d2/2", "d3/2"), r=0),
        _row(T, 2, _t("[II*_{#-#}]", "e1/2", "e2"), _t("[II_{#-#}]", "e1/2", "e2"), r=1, q=0),
        _row(T, 2, _t("[II_{#-#}]", "e1/2", "e2"), _t("[II*_{#-#}]", "e1/2", "e2"), r=1, q=1),
        _row(T, 3, _t("[III_{#}]", "d1"), _t("[III*_{#}]", "d1"), equal=("d1", "d2", "d3")),
        _row(T, 6, _t("[III*_{#}]", "d1/2"), _t("[III_{#}]", "d1/2"), equal=("d1", "d2", "d3")),
    ]


def _two_elliptic_even() -> list[TableRow]:
    T = "V-even"

    def R(n, x, xchi, d, r=None):
        return _row(T, n, _t(x[0], x[1]), _t(xchi[0], xchi[1]), d=d, r=r, parity=0)

    return [
        _row(T, 1, _t("[I0-I0-#]", "d"), _t("[I0*-I0*-#]", "(d-1)"), parity=0),
        R(2, ("[I0*-I0*-#]", "(d-2)/2"), ("[I0-I0-#]", "d/2"), 0),
        R(2, ("[I0-I0*-#]", "(d-1)/2"), ("[I0-I0*-#]", "(d-1)/2"), 1),
        R(3, ("[IV-IV*-#]", "(d-3)/3"), ("[II-II*-#]", "(d-3)/3"), 0),
        R(3, ("[I0-IV-#]", "(d-1)/3"), ("[I0*-II*-#]", "(d-4)/3"), 1, (0, 1)),
        R(3, ("[IV*-IV*-#]", "(d-4)/3"), ("[II-II-#]", "(d-1)/3"), 1, 2),
        R(3, ("[I0-IV*-#]", "(d-2)/3"), ("[I0*-II-#]", "(d-2)/3"), 2, (0, 2)),
        R(3, ("[IV-IV-#]", "(d-2)/3"), ("[II*-II*-#]", "(d-5)/3"), 2, 1),
        R(4, ("[III-III*-#]", "(d-4)/4"), ("[III-III*-#]", "(d-4)/4"), 0),
        R(4, ("[I0-III-#]", "(d-1)/4"), ("[I0*-III*-#]", "(d-5)/4"), 1, (0, 1)),
        R(4, ("[I0*-III*-#]", "(d-5)/4"), ("[I0-III-#]", "(d-1)/4"), 1, (2, 3)),
        R(4, ("[III-III-#]", "(d-2)/4"), ("[III*-III*-#]", "(d-6)/4"), 2, 1),
        R(4, ("[III*-III*-#]", "(d-6)/4"), ("[III-III-#]", "(d-2)/4"), 2, 3),
        R(4, ("[I0-III*-#]", "(d-3)/4"), ("[I0*-III-#]", "(d-3)/4"), 3, (0, 3)),
        R(4, ("[I0*-III-#]", "(d-3)/4"), ("[I0-III*-#]", "(d-3)/4"), 3, (1, 2)),
        R(6, ("[II-II*-#]", "(d-6)/6"), ("[IV-IV*-#]", "(d-6)/6"), 0),
        R(6, ("[I0-II-#]", "(d-1)/6"), ("[I0*-IV*-#]", "(d-7)/6"), 1, (0, 1)),
        R(6, ("[II*-IV-#]", "(d-7)/6"), ("[II*-IV-#]", "(d-7)/6"), 1, (2, 5)),
        R(6, ("[I0*-IV*-#]", "(d-7)/6"), ("[I0-II-#]", "(d-1)/6"), 1, (3, 4)),
        R(6, ("[II-II-#]", "(d-2)/6"), ("[IV*-IV*-#]", "(d-8)/6"), 2, 1),
        R(6, ("[I0*-II*-#]", "(d-8)/6"), ("[I0-IV-#]", "(d-2)/6"), 2, (3, 5)),
        R(6, ("[II-IV-#]", "(d-3)/6"), ("[II*-IV*-#]", "(d-9)/6"), 3, (1, 2)),
        R(6, ("[II*-IV*-#]", "(d-9)/6"), ("[II-IV-#]", "(d-3)/6"), 3, (4, 5)),
        R(6, ("[I0*-II-#]", "(d-4)/6"), ("[I0-IV*-#]", "(d-4)/6"), 4, (1, 3)),
        R(6, ("[II*-II*-#]", "(d-10)/6"), ("[IV-IV-#]", "(d-4)/6"), 4, 5),
        R(6, ("[I0-II*-#]", "(d-5)/6"), ("[I0*-IV-#]", "(d-5)/6"), 5, (0, 5)),
        R(6, ("[II-IV*-#]", "(d-5)/6"), ("[II-IV*-#]", "(d-5)/6"), 5, (1, 4)),
        R(6, ("[I0*-IV-#]", "(d-5)/6"), ("[I0-II*-#]", "(d-5)/6"), 5, (2, 3)),
        R(12, ("[II*-III-#]", "(d-13)/12"), ("[IV-III*-#]", "(d-13)/12"), 1, (3, 10)),
        R(12, ("[IV-III*-#]", "(d-13)/12"), ("[II*-III-#]", "(d-13)/12"), 1, (4, 9)),
        R(12, ("[II-III-#]", "(d-5)/12"), ("[IV*-III*-#]", "(d-17)/12"), 5, (2, 3)),
        R(12, ("[IV*-III*-#]", "(d-17)/12"), ("[II-III-#]", "(d-5)/12"), 5, (8, 9)),
        R(12, ("[IV-III-#]", "(d-7)/12"), ("[II*-III*-#]", "(d-19)/12"), 7, (3, 4)),
        R(12, ("[II*-III*-#]", "(d-19)/12"), ("[IV-III-#]", "(d-7)/12"), 7, (9, 10)),
        R(12, ("[IV*-III-#]", "(d-11)/12"), ("[II-III*-#]", "(d-11)/12"), 11, (3, 8)),
        R(12, ("[II-III*-#]", "(d-11)/12"), ("[IV*-III-#]", "(d-11)/12"), 11, (2, 9)),
    ]


def _two_elliptic_odd() -> list[TableRow]:
    T = "V-odd"

    def R(n, lay, expr, r=None):
        t = _t(lay, expr)
        return _row(T, n, t, t, r=r, r_mod=n // 2 if r is not None else None, parity=1)

    return [
        R(2, "[2I0-#]", "r"),
        R(4, "[2I0*-#]", "(r-1)/2"),
        R(6, "[2IV-#]", "(r-1)/3", 1),
        R(6, "[2IV*-#]", "(r-2)/3", 2),
        R(8, "[2III-#]", "(r-1)/4", 1),
        R(8, "[2III*-#]", "(r-3)/4", 3),
        R(12, "[2II-#]", "(r-1)/6", 1),
        R(12, "[2II*-#]", "(r-5)/6", 5),
    ]


def _one_elliptic() -> list[TableRow]:
    T = "VI"

    def R(n, x, xchi, d=None, r=None, **kw):
        return _row(T, n, _t(*x), _t(*xchi), d=d, r=r, parity=0, **kw)

    return [
        R(1, ("[I_{#}-I0-#]", "d1", "d"), ("[I0*-I*_{#}-#]", "d1", "(d-1)")),
        R(2, ("[I0*-I*_{#}-#]", "d1/2", "(d-2)/2"), ("[I_{#}-I0-#]", "d1/2", "d/2"), 0),
        R(2, ("[I0-I*_{#}-#]", "d1/2", "(d-1)/2"), ("[I_{#}-I0*-#]", "d1/2", "(d-1)/2"), 1, remark=0),
        R(2, ("[I_{#}-I0*-#]", "d1/2", "(d-1)/2"), ("[I0-I*_{#}-#]", "d1/2", "(d-1)/2"), 1, remark=1),
        R(3, ("[IV-I_{#}-#]", "d1/3", "(d-1)/3"), ("[II*-I*_{#}-#]", "d1/3", "(d-4)/3"), 1),
        R(3, ("[IV*-I_{#}-#]", "d1/3", "(d-2)/3"), ("[II-I*_{#}-#]", "d1/3", "(d-2)/3"), 2),
        R(4, ("[III-I_{#}-#]", "d1/4", "(d-1)/4"), ("[III*-I*_{#}-#]", "d1/4", "(d-5)/4"), 1, (0, 1)),
        R(4, ("[III*-I*_{#}-#]", "d1/4", "(d-5)/4"), ("[III-I_{#}-#]", "d1/4", "(d-1)/4"), 1, (2, 3)),
        R(4, ("[III*-I_{#}-#]", "d1/4", "(d-3)/4"), ("[III-I*_{#}-#]", "d1/4", "(d-3)/4"), 3, (0, 3)),
        R(4, ("[III-I*_{#}-#]", "d1/4", "(d-3)/4"), ("[III*-I_{#}-#]", "d1/4", "(d-3)/4"), 3, (1, 2)),
        R(6, ("[II-I_{#}-#]", "d1/6", "(d-1)/6"), ("[IV*-I*_{#}-#]", "d1/6", "(d-7)/6"), 1, (0, 1)),
        R(6, ("[IV*-I*_{#}-#]", "d1/6", "(d-7)/6"), ("[II-I_{#}-#]", "d1/6", "(d-1)/6"), 1, (3, 4)),
        R(6, ("[II*-I*_{#}-#]", "d1/6", "(d-8)/6"), ("[IV-I_{#}-#]", "d1/6", "(d-2)/6"), 2),
        R(6, ("[II-I*_{#}-#]", "d1/6", "(d-4)/6"), ("[IV*-I_{#}-#]", "d1/6", "(d-4)/6"), 4),
        R(6, ("[II*-I_{#}-#]", "d1/6", "(d-5)/6"), ("[IV-I*_{#}-#]", "d1/6", "(d-5)/6"), 5, (0, 5)),
        R(6, ("[IV-I*_{#}-#]", "d1/6", "(d-5)/6"), ("[II*-I_{#}-#]", "d1/6", "(d-5)/6"), 5, (2, 3)),
    ]


def _two_rational() -> list[TableRow]:
    T = "VII"
    return [
        _row(T, 1, _t("[I_{#}-I_{#}-#]", "d1", "d2", "d"), _t("[I*_{#}-I*_{#}-#]", "d1", "d2", "(d-1)"), parity=0),
        _row(T, 2, _t("[I*_{#}-I*_{#}-#]", "d1/2", "d2/2", "(d-2)/2"),
             _t("[I_{#}-I_{#}-#]", "d1/2", "d2/2", "d/2"), d=0, parity=0),
        _row(T, 2, _t("[I_{#}-I*_{#}-#]", "e1/2", "e2/2", "(d-1)/2"),
             _t("[I_{#}-I*_{#}-#]", "e1/2", "e2/2", "(d-1)/2"), d=1, parity=0),
        _row(T, 2, _t("[2I_{#}-#]", "d1", "d/2"), _t("[2I_{#}-#]", "d1", "d/2"), parity=1, equal=("d1", "d2")),
        _row(T, 4, _t("[2I*_{#}-#]", "d1/2", "(d-2)/4"), _t("[2I*_{#}-#]", "d1/2", "(d-2)/4"),
             parity=1, equal=("d1", "d2")),
    ]


TABLES: dict[str, tuple[TableRow, ...]] = {
    "smooth": tuple(_smooth()),
    "II": tuple(_one_node()),
    "III": tuple(_two_nodes()),
    "IV": tuple(_c000()),
    "V-even": tuple(_two_elliptic_even()),
    "V-odd": tuple(_two_elliptic_odd()),
    "VI": tuple(_one_elliptic()),
    "VII": tuple(_two_rational()),
}

_TABLE_OF_SHAPE = {
    Shape.SMOOTH: "smooth", Shape.ONE_NODE: "II", Shape.TWO_NODES: "III", Shape.C000: "IV",
    Shape.ONE_SMOOTH: "VI", Shape.TWO_SINGULAR: "VII",
}


def table_name(shape: Shape, ram: RamData) -> str:
    if shape is Shape.TWO_SMOOTH:
        return "V-odd" if ram.j2_parity == 1 else "V-even"
    return _TABLE_OF_SHAPE[shape]


def row_key(ram: RamData) -> RowKey:
    return RowKey(n=ram.n, r=ram.r, q=ram.q, d=ram.d, omega=ram.omega,
                  parity=ram.j2_parity, r_full=ram.r_full)


def table_env(shape: Shape, ram: RamData, deg: SingularityDegrees) -> dict[str, int]:
    """Variables the templates of the shape's table are written in."""
    v = deg.values
    env: dict[str, int] = {}
    if shape is Shape.ONE_NODE:
        env["d"] = v[0]
    elif shape is Shape.TWO_NODES:
        env["d1"], env["d2"] = v
    elif shape is Shape.C000:
        d1, d2, d3 = sorted(v)
        env.update(d1=d1, d2=d2, d3=d3)
        # e1 the degree shared by the swapped pair, e2 the remaining one
        if d1 == d2:
            env.update(e1=d1, e2=d3)
        elif d2 == d3:
            env.update(e1=d2, e2=d1)
    elif shape in (Shape.TWO_SMOOTH, Shape.ONE_SMOOTH, Shape.TWO_SINGULAR):
        env["d"] = ram.d
        if shape is Shape.TWO_SMOOTH and ram.r_full is not None:
            env["r"] = ram.r_full
        if shape is Shape.ONE_SMOOTH:
            env["d1"] = v[1]
        if shape is Shape.TWO_SINGULAR:
            env.update(d1=v[1], d2=v[2], e1=v[1], e2=v[2])
    return env


def find_rows(table: str, key: RowKey, e1_smooth: bool | None = None) -> list[TableRow]:
    rows = [row for row in TABLES[table] if row.matches(key)]
    if any(row.remark is not None for row in rows) and e1_smooth is not None:
        # first reading when (E1 smooth and r even) or (E1 singular and r odd)
        want = 0 if e1_smooth == (key.r % 2 == 0) else 1
        rows = [row for row in rows if row.remark in (None, want)]
    return rows


def lookup_row(shape: Shape, ram: RamData, e1_smooth: bool | None = None) -> TableRow:
    table = table_name(shape, ram)
    rows = find_rows(table, row_key(ram), e1_smooth)
    if not rows:
        raise NoMatchingRow(f"no matching row in the {table} table for n={ram.n}, r={ram.r}, q={ram.q}, d={ram.d}")
    if len(rows) > 1:
        if all(row.remark is not None for row in rows):
            raise AmbiguousRow("the row depends on whether the component containing infinity is smooth",
                               tuple(rows))
        raise NoMatchingRow(f"{len(rows)} rows of the {table} table match; the encoding is not disjoint")
    return rows[0]


def _render(row: TableRow, env: dict[str, int], column: str) -> ReductionSymbol:
    row.check_equal(env)
    return getattr(row, column).render(env)


def reduction_type_of_X(shape, ram: RamData, deg: SingularityDegrees,
                        e1_smooth: bool | None = None) -> ReductionSymbol:
    shape = getattr(shape, "shape", shape)
    row = lookup_row(shape, ram, e1_smooth)
    return _render(row, table_env(shape, ram, deg), "x")


@dataclass(frozen=True)
class TwistLookup:
    row: TableRow
    type_X: ReductionSymbol
    type_Xchi: ReductionSymbol
    env: dict[str, int]


def reduction_type_of_twist(shape, ram: RamData, deg: SingularityDegrees,
                            e1_smooth: bool | None = None) -> TwistLookup:
    shape = getattr(shape, "shape", shape)
    row = lookup_row(shape, ram, e1_smooth)
    env = table_env(shape, ram, deg)
    return TwistLookup(row, _render(row, env, "x"), _render(row, env, "xchi"), env)


def candidate_pairs(shape, ram: RamData, deg: SingularityDegrees) -> list[tuple[ReductionSymbol, ReductionSymbol]]:
    """(type X, type X^chi) for each reading of the matched rows."""
    shape = getattr(shape, "shape", shape)
    env = table_env(shape, ram, deg)
    rows = find_rows(table_name(shape, ram), row_key(ram))
    if not rows:
        raise NoMatchingRow(f"no matching row for n={ram.n}, r={ram.r}, q={ram.q}, d={ram.d}")
    return [(_render(row, env, "x"), _render(row, env, "xchi")) for row in rows]


# wild cases ---------------------------------------------------------------

def wild_char3_type(a0, cs, D=None) -> ReductionSymbol:
    """Type from the char-3 normal form z^2 = a0((u^3+c1u^2+c2u+c3)^2 + c4u^2 + c5u + c6)."""
    from .valuation import LocalContext, val

    ctx = LocalContext(3)
    cs = [Fraction(c) for c in cs]
    if len(cs) != 6:
        raise ValueError("the char-3 normal form has six coefficients c1..c6")
    v3 = val(cs[2], ctx)
    if v3 not in (1, 2):
        raise ValueError(f"nu(c3) must be 1 or 2, got {v3}")
    terms = [3 * val(cs[i - 1], ctx) - i * v3 for i in (4, 5, 6) if cs[i - 1] != 0]
    if not terms:
        raise ValueError("c4 = c5 = c6 = 0: the form is not squarefree")
    N = min(terms)
    parity = val(Fraction(a0), ctx)
    if D is not None:
        parity += val(Fraction(D), ctx)
    return ReductionSymbol.from_layout("[III_{#}]" if parity % 2 == 0 else "[III*_{#}]", [N])


def _char5_symbol(v6: int) -> ReductionSymbol:
    if not 1 <= v6 <= 9 or v6 == 5:
        raise ValueError(f"nu(b6) must lie in 1..9 and differ from 5, got {v6}")
    if v6 % 2 == 0:
        return ReductionSymbol.from_layout("[IX-#]", [v6 // 2])
    m = (v6 + 1) // 2
    return ReductionSymbol.from_layout("[VIII-#]", [m if m <= 2 else m - 1])


def char5_twisted_form(bs, D) -> list[Fraction]:
    """Normal form of D*P after u -> u/t, z -> z/t^2 and, if needed, the Moebius fix."""
    from .valuation import LocalContext, val

    ctx = LocalContext(5)
    t = Fraction(5)
    D = Fraction(D)
    b = [Fraction(x) for x in bs]
    nb = [D * b[i] * t ** (i - 2) for i in range(7)]
    if val(nb[0], ctx) <= 0 and nb[0] != 0:
        # u -> u/(1 - c u), z -> z/(1 - c u)^3 kills the unit leading term
        c = nb[0] / nb[1]
        nb = _moebius(nb, c)
    if val(nb[6], ctx) > 9:
        # u -> t^2 u, z -> t^5 z
        nb = [nb[i] * t ** (2 * (6 - i)) / t**10 for i in range(7)]
    return nb


def _moebius(b: list[Fraction], c: Fraction) -> list[Fraction]:
    # sum b_i u^(6-i) (1-cu)^i
    out = [Fraction(0)] * 7
    for i, bi in enumerate(b):
        # (1 - c u)^i expanded, contributes to degrees 6-i .. 6
        coeff = Fraction(1)
        for k in range(i + 1):
            deg = 6 - i + k
            out[6 - deg] += bi * coeff
            coeff = coeff * (-c) * (i - k) / (k + 1)
    return out


def wild_char5_type(bs, twist: bool = False, D=5) -> ReductionSymbol:
    """Type from the char-5 normal form z^2 = b0u^6 + ... + b6."""
    from .valuation import LocalContext, val

    ctx = LocalContext(5)
    b = [Fraction(x) for x in bs]
    if len(b) != 7:
        raise ValueError("the char-5 normal form has seven coefficients b0..b6")
    if val(b[0], ctx) < 1 or val(b[1], ctx) != 0:
        raise ValueError("the char-5 normal form needs nu(b0) >= 1 and nu(b1) = 0")
    sym = _char5_symbol(val(b[6], ctx))
    if not twist:
        return sym
    if val(Fraction(D), ctx) % 2 == 0:
        return sym
    if val(Fraction(D), ctx) != 1:
        D = Fraction(D) / Fraction(25) ** ((val(Fraction(D), ctx) - 1) // 2)
    return _char5_symbol(val(char5_twisted_form(b, D)[6], ctx))


CHAR5_COROLLARY: dict[str, str] = {
    "[IX-1]": "[VIII-3]", "[IX-2]": "[VIII-4]", "[IX-3]": "[VIII-1]", "[IX-4]": "[VIII-2]",
    "[VIII-1]": "[IX-3]", "[VIII-2]": "[IX-4]", "[VIII-3]": "[IX-1]", "[VIII-4]": "[IX-2]",
}
