"""Direct-classification oracle for the twist tables, and audits of the table encoding.

Route A reads type(X^chi) off the table row of X.  Route B classifies the
twisted equation y^2 = D P(x) from scratch.  The two must agree.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .invariants import SexticForm, igusa_clebsch
from .ramification import OmegaStatus, RamData, from_rationals
from .stable import Shape
from .symbols import ReductionSymbol
from .tables import (
    CHAR5_COROLLARY,
    TABLES,
    RowKey,
    TableRow,
    find_rows,
    wild_char3_type,
    wild_char5_type,
)
from .twist import Classification, PipelineError, TwistQuery, classify, run_twist, twist_ram_data
from .valuation import LocalContext, lcd


# --- random curves -------------------------------------------------------------

def _unit(rng: random.Random, p: int, bound: int = 30) -> int:
    while True:
        u = rng.randint(-bound, bound)
        if u % p:
            return u


def _factor(rng: random.Random, p: int, k: int) -> list[int]:
    """Descending coefficients of (x - c)^k - p^j u, a cluster of k roots of depth j/k."""
    c = rng.randrange(p) + p ** rng.randint(1, 3) * rng.randint(0, 2) * (rng.random() < 0.3)
    j = rng.choice([0, 1, 1, 2, 3, 4, 5, 7])
    u = _unit(rng, p)
    coeffs = [1]
    for _ in range(k):
        coeffs = [a - c * b for a, b in zip(coeffs + [0], [0] + coeffs)]
    coeffs[-1] -= u * p**j
    return coeffs


def _mul(f: list[int], g: list[int]) -> list[int]:
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] += a * b
    return out


def _partition(rng: random.Random, total: int) -> list[int]:
    parts = []
    while total:
        k = rng.randint(1, total)
        parts.append(k)
        total -= k
    return parts


def random_sextic(rng: random.Random, p: int) -> SexticForm:
    """Integral model, biased towards bad reduction: clustered roots and p-power coefficients."""
    while True:
        if rng.random() < 0.25:
            cs = [_unit(rng, p, 60) * p ** rng.choice([0, 0, 0, 1, 2, 3]) for _ in range(7)]
            if cs[0] == 0 and cs[1] == 0:
                continue
        else:
            degree = 5 if rng.random() < 0.1 else 6
            poly = [_unit(rng, p) * p ** rng.choice([0, 0, 0, 1, 2])]
            for k in _partition(rng, degree):
                poly = _mul(poly, _factor(rng, p, k))
            cs = [0] * (7 - len(poly)) + poly
        try:
            P = SexticForm(tuple(Fraction(c) for c in cs))
        except ValueError:
            continue
        if igusa_clebsch(P)[3] != 0:
            return P


# --- cross check ----------------------------------------------------------------

@dataclass
class VerifyReport:
    P: SexticForm
    D: Fraction
    p: int
    status: str  # agree | disagree | route-mismatch | unclassifiable
    predicted: list[str] = field(default_factory=list)
    direct: list[str] = field(default_factory=list)
    shape: str | None = None
    shape_twist: str | None = None
    lemma_ok: bool | None = None
    lemma_failures: list[str] = field(default_factory=list)
    errors: list[str] = field(default_factory=list)
    trace: dict = field(default_factory=dict)
    index: int | None = None

    @property
    def agree(self) -> bool:
        return self.status == "agree"

    def as_dict(self) -> dict:
        return {
            "index": self.index, "prime": self.p, "coefficients": [str(c) for c in self.P.coeffs],
            "D": str(self.D), "status": self.status, "predicted": self.predicted, "direct": self.direct,
            "stable_shape": self.shape, "stable_shape_twist": self.shape_twist,
            "lemma_ok": self.lemma_ok, "lemma_failures": self.lemma_failures,
            "errors": self.errors, "trace": self.trace,
        }


def _ram_trace(ram: RamData | None) -> dict | None:
    return None if ram is None else ram.as_dict()


def _trace(c: Classification) -> dict:
    vals = {k: c.ctx.val(v) for k, v in c.invariants.as_dict().items()}
    return {
        "valuations": {k: (None if v == float("inf") else v) for k, v in vals.items()},
        "stable_shape": c.shape.value,
        "ram": _ram_trace(c.ram),
        "degrees": list(c.degrees.values) if c.degrees else None,
        "row": c.row.describe() if c.row else None,
    }


def lemma_checks(ram: RamData, ram_twist: RamData, direct: RamData) -> list[str]:
    """Relations between the data of X, the lemma prediction for X^chi and the direct data of X^chi."""
    out = []
    for name in ("n", "r", "q", "d"):
        a, b = getattr(ram_twist, name), getattr(direct, name)
        if a != b:
            out.append(f"{name}' predicted {a}, direct {b}")
    n, n2 = ram.n, ram_twist.n
    if ram.regime == "not-irreducible":
        if ram.j2_parity == 1:
            if (n2, ram_twist.r) != (n, ram.r):
                out.append("odd nu(J2): n', r' must equal n, r")
            return out
        # r'/n' = r/n + 1/2 mod 1
        if (2 * (n * ram_twist.r - n2 * ram.r) - n * n2) % (2 * n * n2):
            out.append("r'/n' != r/n + 1/2 mod 1")
        if n * ram_twist.d != n2 * ram.d:
            out.append("n d' != n' d")
        return out
    regular = ram.omega is OmegaStatus.RAMIFIED_REGULAR
    if ram.regime == "irreducible-singular" and regular:
        if (ram_twist.r + 2 * ram_twist.q) % n2:
            out.append("r' != -2q' mod n'")
    elif (n * ram_twist.r - n2 * ram.r) % (n * n2):
        out.append("r'/n' != r/n mod 1")
    # q'/n' = q/n + 1/2 mod 1
    if (2 * (n * ram_twist.q - n2 * ram.q) - n * n2) % (2 * n * n2):
        out.append("q'/n' != q/n + 1/2 mod 1")
    return out


def _symbols(c: Classification, column: str) -> list[str]:
    if c.candidates:
        idx = 0 if column == "x" else 1
        return sorted({pair[idx].ascii() for pair in c.candidates})
    sym = c.type_X if column == "x" else c.type_Xchi
    return [sym.ascii()] if sym is not None else []


def cross_check(P: SexticForm, D, ctx: LocalContext) -> VerifyReport:
    D = Fraction(D)
    rep = VerifyReport(P, D, ctx.p, "unclassifiable")
    a = b = None
    try:
        a = run_twist(TwistQuery(P, D, ctx))
    except PipelineError as exc:
        rep.errors.append(f"route A {exc}")
    try:
        b = classify(P.scaled(D), ctx)
    except PipelineError as exc:
        rep.errors.append(f"route B {exc}")
    if a is None and b is None:
        return rep
    if a is None or b is None:
        rep.status = "route-mismatch"
        return rep
    rep.shape, rep.shape_twist = a.shape.value, b.shape.value
    rep.trace = {"X": _trace(a.base), "Xchi": _trace(b)}
    if a.ram_twist is not None:
        rep.trace["Xchi_predicted_ram"] = a.ram_twist.as_dict()
    if a.candidates:
        rep.predicted = sorted({x.ascii() for _, x in a.candidates})
    else:
        rep.predicted = [a.type_Xchi.ascii()] if a.type_Xchi else []
    rep.direct = _symbols(b, "x")
    failures = []
    if a.shape is not b.shape:
        failures.append("stable shape not preserved")
    if a.parity.trivial:
        fields = ("n", "r", "q", "d")
        if a.base.ram and [getattr(a.base.ram, k) for k in fields] != [getattr(b.ram, k) for k in fields]:
            failures.append("nu(D) even but ramification data changed")
    elif a.tame and b.tame:
        failures += lemma_checks(a.base.ram, a.ram_twist, b.ram)
        if a.degrees_twist != b.degrees:
            failures.append(f"degrees' predicted {a.degrees_twist.values}, direct {b.degrees.values}")
    rep.lemma_failures = failures
    rep.lemma_ok = not failures
    rep.status = "agree" if rep.predicted == rep.direct and rep.predicted else "disagree"
    return rep


@dataclass
class SweepSummary:
    samples: int
    counts: Counter
    shapes: Counter
    n_values: Counter
    errors: Counter
    lemma_failures: int
    reports: list[VerifyReport]

    @property
    def classified(self) -> int:
        return self.counts["agree"] + self.counts["disagree"]

    @property
    def agreement(self) -> float:
        return self.counts["agree"] / self.classified if self.classified else 0.0

    @property
    def non_smooth_fraction(self) -> float:
        tot = sum(self.shapes.values())
        return 1 - self.shapes[Shape.SMOOTH.value] / tot if tot else 0.0

    def table(self) -> str:
        lines = [
            f"samples            {self.samples}",
            f"both routes tame   {self.classified} ({self.classified / max(self.samples, 1):.1%})",
            f"agreement          {self.counts['agree']}/{self.classified} ({self.agreement:.1%})",
            f"route mismatches   {self.counts['route-mismatch']}",
            f"unclassifiable     {self.counts['unclassifiable']}",
            f"lemma failures     {self.lemma_failures}",
            f"non-smooth shapes  {self.non_smooth_fraction:.1%}",
        ]
        lines += [f"  {k:<28} {v}" for k, v in sorted(self.shapes.items())]
        lines.append("n values           " + ", ".join(f"{k}:{v}" for k, v in sorted(self.n_values.items())))
        lines += [f"  error {k:<40} {v}" for k, v in self.errors.most_common()]
        return "\n".join(lines)


def sweep(count: int, seed: int, primes=(7, 11, 13), D: str | int | None = None,
          workers: int = 1) -> SweepSummary:
    """Seeded random cross-check; D defaults to p (D = "p2" twists by p^2)."""
    rng = random.Random(seed)
    jobs = []
    for i in range(count):
        p = primes[i % len(primes)]
        P = random_sextic(rng, p)
        d = p if D is None else (p * p if D == "p2" else D)
        jobs.append((i, P, d, p))

    def run(job):
        i, P, d, p = job
        rep = cross_check(P, d, LocalContext(p))
        rep.index = i
        return rep

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(run, jobs))
    else:
        reports = [run(j) for j in jobs]
    counts, shapes, ns, errors = Counter(), Counter(), Counter(), Counter()
    lemma_bad = 0
    for rep in reports:
        counts[rep.status] += 1
        if rep.shape:
            shapes[rep.shape] += 1
        if rep.trace.get("X", {}).get("ram"):
            ns[rep.trace["X"]["ram"]["n"]] += 1
        for e in rep.errors:
            errors[e.split("]")[0] + "]"] += 1
        if rep.lemma_ok is False:
            lemma_bad += 1
    return SweepSummary(count, counts, shapes, ns, errors, lemma_bad, reports)


# --- table audits ---------------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    table: str
    kind: str
    detail: str


def _synthetic_inputs(table: str):
    """(RamData, envs) pairs built from defining rationals over a small grid of valuations.

    ``envs`` is a lazy iterable of degree environments.
    """
    NR, RR, RS, OS = (OmegaStatus.NON_RAMIFIED, OmegaStatus.RAMIFIED_REGULAR,
                      OmegaStatus.RAMIFIED_SINGULAR, OmegaStatus.OMEGA_SINGULAR)
    if table == "smooth":
        for a, j in product(range(0, 8), range(0, 80)):
            yield from_rationals("smooth", Fraction(10 * a - j, 30), Fraction(5 * a - j, 10), omega=NR), ({},)
            yield from_rationals("smooth", Fraction(j - 2 * a, 20), Fraction(5 * j - 6 * a, 40), omega=RR), ({},)
        return
    if table in ("II", "III", "IV"):
        rams = []
        for a, j in product(range(0, 6), range(0, 72)):
            rams.append(from_rationals("irreducible-singular", Fraction(12 * a - j, 36), Fraction(6 * a - j, 12), omega=NR))
            xq = Fraction(36 * a - 25 * j, 240)
            rams.append(from_rationals("irreducible-singular", -2 * xq, xq, omega=RR))
            rams.append(from_rationals("irreducible-singular", Fraction(j - 6 * a, 12), Fraction(j - 9 * a, 12), omega=RS))
        # the twisted key depends only on (n, r, q, omega)
        rams = list({(r.n, r.r, r.q, r.omega): r for r in rams}.values())
        for ram in rams:
            if table == "IV" and ram.n == 6 and ram.r % 2:
                # three nodes with n = 6 force r even
                continue
            yield ram, _degree_envs(table, ram.n)
        return
    den = {"V-even": 12, "V-odd": 12, "VI": 12, "VII": 4}[table]
    for k in range(1, 4 * den):
        dK = Fraction(k, den)
        if table == "V-odd" or (table == "VII" and dK.denominator <= 2):
            m = dK.denominator
            n = 2 * m
            r_full = int(m * dK)
            ram = RamData("not-irreducible", n, r_full % n, dK=dK, d=int(n * dK), j2_parity=1,
                          xr=Fraction(r_full, n), r_full=r_full)
            yield ram, _two_component_envs(table, ram)
            if table == "V-odd":
                continue
        if table == "V-odd":
            continue
        for omega, xden in ((NR, 6), (RR, 8), (RS, 4), (OS, 24)):
            for t in range(xden):
                xr = Fraction(t, xden)
                n = lcd([dK, xr])
                ram = RamData("not-irreducible", n, int(n * xr) % n, dK=dK, d=int(n * dK), j2_parity=0,
                              omega=omega, xr=xr, rK=xr if omega is OS else None)
                yield ram, _two_component_envs(table, ram)


def _degree_envs(table: str, n: int):
    top = 2 * n + 4
    if table == "II":
        for d in range(1, top):
            yield {"d": d}
    elif table == "III":
        for d1 in range(1, top):
            for d2 in range(d1, top):
                yield {"d1": d1, "d2": d2}
    else:
        for d1 in range(1, top, max(1, n // 2)):
            for d2 in range(d1, top, max(1, n // 2)):
                for d3 in range(d2, top, max(1, n // 2)):
                    env = {"d1": d1, "d2": d2, "d3": d3}
                    if d1 == d2:
                        env.update(e1=d1, e2=d3)
                    elif d2 == d3:
                        env.update(e1=d2, e2=d1)
                    yield env


def _two_component_envs(table: str, ram: RamData):
    base = {"d": ram.d}
    if ram.r_full is not None:
        base["r"] = ram.r_full
    if table in ("V-even", "V-odd"):
        yield base
    elif table == "VI":
        for d1 in range(1, 2 * ram.n + 2):
            yield {**base, "d1": d1}
    else:
        for d1 in range(1, 2 * ram.n + 2):
            for d2 in range(d1, 2 * ram.n + 2):
                yield {**base, "d1": d1, "d2": d2, "e1": d1, "e2": d2}


def _scaled_env(env: dict[str, int], ram: RamData, ram2: RamData) -> dict[str, int] | None:
    out = {}
    for k, v in env.items():
        if k == "r":
            out[k] = ram2.r_full
            continue
        if k == "d" and ram.regime == "not-irreducible":
            out[k] = ram2.d
            continue
        w = Fraction(v * ram2.n, ram.n)
        if w.denominator != 1:
            return None
        out[k] = int(w)
    return out


def _key(ram: RamData) -> RowKey:
    return RowKey(n=ram.n, r=ram.r, q=ram.q, d=ram.d, omega=ram.omega, parity=ram.j2_parity, r_full=ram.r_full)


def _render(row: TableRow, env: dict[str, int], column: str) -> ReductionSymbol | None:
    try:
        row.check_equal(env)
        return getattr(row, column).render(env)
    except (ArithmeticError, ValueError, KeyError):
        return None


def table_involution_audit(with_coverage: bool = False):
    """Twisting twice returns every row to itself; also checks row disjointness.

    Inputs are generated from defining rationals, pushed through the twist
    lemmas, and the row of the twisted data must carry the original symbol in
    its twist column.  Returns the list of violations (and, on request, the
    number of checked instances per table).
    """
    violations: list[Violation] = []
    checked: Counter = Counter()
    seen_rows: set[TableRow] = set()
    for table in TABLES:
        for ram, envs in _synthetic_inputs(table):
            flags = (True, False) if table == "VI" else (None,)
            matched = [(flag, find_rows(table, _key(ram), flag)) for flag in flags]
            if not any(rows for _, rows in matched):
                continue
            ram2 = twist_ram_data(ram)
            for env, (flag, rows) in product(envs, matched):
                if not rows:
                    continue
                if len(rows) > 1:
                    violations.append(Violation(table, "overlap", f"{[r.describe() for r in rows]}"))
                    continue
                row = rows[0]
                x, xchi = _render(row, env, "x"), _render(row, env, "xchi")
                if x is None:
                    continue  # the degrees do not fit this row's subscripts
                seen_rows.add(row)
                env2 = _scaled_env(env, ram, ram2)
                checked[table] += 1
                ctx = _Context(row, ram, env)
                if xchi is None:
                    violations.append(Violation(table, "twist column not integral", str(ctx)))
                    continue
                if env2 is None:
                    violations.append(Violation(table, "degrees do not rescale", str(ctx)))
                    continue
                rows2 = find_rows(table, _key(ram2), flag)
                if len(rows2) != 1:
                    violations.append(Violation(table, f"{len(rows2)} rows for the twisted data", f"{ctx} -> {ram2.as_dict()}"))
                    continue
                row2 = rows2[0]
                back_x, back_xchi = _render(row2, env2, "x"), _render(row2, env2, "xchi")
                if back_x != xchi or back_xchi != x:
                    violations.append(Violation(
                        table, "not an involution",
                        f"{ctx}: {x} -> {xchi}, twisted row {row2.describe()} gives {back_x} -> {back_xchi}"))
    for table, rows in TABLES.items():
        for row in rows:
            if row not in seen_rows:
                violations.append(Violation(table, "row never reached", row.describe()))
    violations += _wild_audit()
    if with_coverage:
        return violations, checked
    return violations


class _Context:
    """Deferred description of an audit instance, formatted only for violations."""

    def __init__(self, row: TableRow, ram: RamData, env: dict[str, int]):
        self.row, self.ram, self.env = row, ram, env

    def __str__(self) -> str:
        return f"{self.row.describe()} at {self.ram.as_dict()} {self.env}"


def _wild_audit() -> list[Violation]:
    out = []
    # char 3: the twist swaps III_N and III*_N
    for va0, N_c in product(range(2), range(1, 3)):
        cs = [1, 1, 3 ** N_c, 3, 9, 27]
        x = wild_char3_type(3**va0, cs)
        x2 = wild_char3_type(3**va0, cs, D=3)
        x3 = wild_char3_type(3**va0, cs, D=9)
        if x.params != x2.params or x.family == x2.family or x3 != x:
            out.append(Violation("char3", "not an involution", f"{x} -> {x2}"))
    # char 5: the substitution pipeline against the printed table, and involution
    for v6 in (1, 2, 3, 4, 6, 7, 8, 9):
        bs = [5, 1, 0, 0, 0, 0, 5**v6]
        x = wild_char5_type(bs)
        xchi = wild_char5_type(bs, twist=True)
        if CHAR5_COROLLARY[x.pretty()] != xchi.pretty():
            out.append(Violation("char5", "substitution disagrees with the printed table", f"{x} -> {xchi}"))
        if CHAR5_COROLLARY[xchi.pretty()] != x.pretty():
            out.append(Violation("char5", "not an involution", f"{x} -> {xchi}"))
    return out


def disjointness_audit() -> list[Violation]:
    """Exhaustive over residues: no two rows of one table match the same key."""
    out = []
    omegas = [None, *OmegaStatus]
    for table, rows in TABLES.items():
        for n in sorted({row.n for row in rows}):
            for r, q, d, om, par in product(range(n), range(n), range(n), omegas, (0, 1)):
                for r_full in ((None,) if table != "V-odd" else range(n)):
                    key = RowKey(n, r, q, d, om, par, r_full)
                    # the remark pair is split by the E1 flag
                    for flag in ((True, False) if table == "VI" else (None,)):
                        hits = find_rows(table, key, flag)
                        if len(hits) > 1:
                            out.append(Violation(table, "overlap", f"{key}: {[h.describe() for h in hits]}"))
    return out


def char5_concordance() -> list[tuple[str, str, str]]:
    """(X, corollary X^chi, smooth-table X^chi) for the eight VIII/IX symbols."""
    smooth = {row.x.render({}).pretty(): row.xchi.render({}).pretty()
              for row in TABLES["smooth"] if row.n in (5, 10)}
    return [(x, CHAR5_COROLLARY[x], smooth.get(x)) for x in sorted(CHAR5_COROLLARY)]
