"""Acceptance gate: one PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py`` (the lines appear in the terminal
summary) or directly with ``python3 tests/test_acceptance.py``.
"""

import functools
import random
import time
from fractions import Fraction

from g2twist.invariants import SexticForm, compute_invariants, twist_invariants
from g2twist.stable import Shape
from g2twist.tables import CHAR5_COROLLARY, TABLES
from g2twist.verify import char5_concordance, sweep, table_involution_audit

from golden_rows import CHAR5, ROWS
from oracles import igusa_from_roots

RESULTS: list[str] = []
SEED = 20240601


def report(name: str, ok: bool, detail: str, seconds: float, limit: float | None = None) -> None:
    within = limit is None or seconds <= limit
    budget = f" (limit {limit:g} s)" if limit else ""
    line = f"{'PASS' if ok and within else 'FAIL'} {name}: {detail}; {seconds:.2f} s{budget}"
    RESULTS.append(line)
    print(line)
    assert ok, line
    assert within, line


def _golden_key(row):
    preds = {k: tuple(sorted(getattr(row, k))) for k in ("r", "q", "d") if getattr(row, k) is not None}
    if row.omega is not None:
        preds["omega"] = "singular" if len(row.omega) == 1 else "regular"
    if row.remark is not None:
        preds["remark"] = True
    return row.table, row.n, str(row.x), tuple(sorted(preds.items())), str(row.xchi)


def test_1_table_fidelity():
    t = time.perf_counter()
    encoded = {}
    for rows in TABLES.values():
        for row in rows:
            encoded.setdefault(_golden_key(row), []).append(row)
    checks = failures = 0
    for table, n, x, preds, xchi in ROWS:
        key = (table, n, x, tuple(sorted((k, v) for k, v in preds.items() if k != "parity")), xchi)
        hits = encoded.pop(key, [])
        checks += 1
        failures += len(hits) != 1
        if "parity" in preds and hits:
            checks += 1
            failures += hits[0].parity != preds["parity"]
    extra = sum(len(v) for v in encoded.values())
    ok = failures == 0 and extra == 0
    report("table fidelity", ok, f"{len(ROWS)} golden rows, {checks} assertions, {failures} mismatches, "
           f"{extra} unlisted rows", time.perf_counter() - t, 1.0)


def test_2_twist_involution():
    t = time.perf_counter()
    violations, checked = table_involution_audit(with_coverage=True)
    report("twist involution", not violations,
           f"{sum(checked.values())} instances over {len(checked)} tables plus wild swaps, "
           f"{len(violations)} violations", time.perf_counter() - t, 1.0)


def test_3_char5_concordance():
    t = time.perf_counter()
    pairs = char5_concordance()
    equal = sum(cor == smooth == CHAR5[x] for x, cor, smooth in pairs)
    ok = equal == 8 and len(pairs) == 8 and CHAR5_COROLLARY == CHAR5
    report("wild/tame concordance", ok, f"{equal}/8 pairs equal", time.perf_counter() - t, 1.0)


def test_4_invariant_identities():
    t = time.perf_counter()
    rng = random.Random(SEED)
    count = bad = 0
    while count < 1000:
        roots = rng.sample(range(-40, 41), 6)
        a0 = rng.choice([1, -1, 2, 3, -5, Fraction(1, 7)])
        P = SexticForm.from_roots(roots, a0)
        inv = compute_invariants(P)
        ref = igusa_from_roots(roots, a0)
        J2, J4, J6, J8 = ref["J2"], ref["J4"], ref["J6"], ref["J8"]
        lam = Fraction(rng.randint(-9, 9) or 1, rng.randint(1, 5))
        D = Fraction(rng.choice([-1, 1]) * rng.randint(1, 30), rng.randint(1, 4))
        scaled = compute_invariants(P.scaled(lam))
        ok = (
            inv.I4 == J2**2 - 24 * J4 == ref["IC4"] / 4
            and inv.I12 == (J2**2 * J4**2 - 32 * J4**3 - J2**3 * J6 + 36 * J2 * J4 * J6 - 108 * J6**2) / 4
            and inv.I12 == -8 * J4**3 + 9 * J2 * J4 * J6 - 27 * J6**2 - J2**2 * J8
            and all(scaled.J(2 * i) == lam ** (2 * i) * inv.J(2 * i) for i in range(1, 6))
            and all(twist_invariants(inv, D).J(2 * i) == D ** (2 * i) * inv.J(2 * i) for i in range(1, 6))
            and compute_invariants(P.scaled(D)) == twist_invariants(inv, D)
        )
        bad += not ok
        count += 1
    report("invariant identities", bad == 0, f"{count} sextics, {bad} failures", time.perf_counter() - t, 10.0)


@functools.cache
def _sweep():
    t = time.perf_counter()
    s = sweep(600, SEED, primes=(7, 11, 13))
    return s, time.perf_counter() - t


def test_5_oracle_cross_check():
    s, seconds = _sweep()
    ok = (s.classified >= 500 and s.counts["disagree"] == 0 and s.counts["route-mismatch"] == 0
          and s.non_smooth_fraction >= 0.3)
    report("oracle cross-check", ok,
           f"{s.counts['agree']}/{s.classified} agree of {s.samples} samples "
           f"({s.classified / s.samples:.1%} classifiable), {s.counts['route-mismatch']} route mismatches, "
           f"non-smooth {s.non_smooth_fraction:.1%}", seconds, 60.0)


def _frac(a, n):
    return Fraction(a, n) % 1


def _lemma_failures(X: dict, Y: dict, shape: str) -> list[str]:
    n, r, q, d = X["n"], X["r"], X["q"], X["d"]
    n2, r2, q2, d2 = Y["n"], Y["r"], Y["q"], Y["d"]
    half = Fraction(1, 2)
    out = []
    regime = Shape(shape).regime
    if regime == "not-irreducible":
        if X.get("j2_parity") == "odd":
            if (n2, r2, d2) != (n, r, d):
                out.append("odd parity data changed")
        else:
            if _frac(r2, n2) != (_frac(r, n) + half) % 1:
                out.append("r'/n' != r/n + 1/2")
            if n * d2 != n2 * d:
                out.append("n d' != n' d")
        return out
    if regime == "irreducible-singular" and X.get("omega") == "RamifiedRegularPreimage":
        if (r2 + 2 * q2) % n2:
            out.append("r' != -2q'")
    elif n * r2 % (n * n2) != n2 * r % (n * n2):
        out.append("n r' != n' r")
    if _frac(q2, n2) != (_frac(q, n) + half) % 1:
        out.append("q'/n' != q/n - 1/2")
    return out


def test_6_lemma_relations():
    s, _ = _sweep()
    t = time.perf_counter()
    checked = bad = 0
    for rep in s.reports:
        if rep.status not in ("agree", "disagree"):
            continue
        checked += 1
        X, Y = rep.trace["X"]["ram"], rep.trace["Xchi"]["ram"]
        fails = _lemma_failures(X, Y, rep.shape)
        if rep.shape != rep.shape_twist:
            fails.append("stable shape changed")
        bad += bool(fails) or rep.lemma_ok is False
    report("lemma relations", checked >= 500 and bad == 0, f"{checked} classified samples, {bad} failures",
           time.perf_counter() - t)


def _degree_failures(tr: dict) -> list[str]:
    degs, n, v = tr["degrees"], tr["ram"]["n"], tr["valuations"]
    out = []
    if any(not isinstance(e, int) or e < 1 for e in degs):
        out.append(f"non-positive degrees {degs}")
    shape = Shape(tr["stable_shape"])
    if shape is Shape.TWO_NODES and 2 * sum(degs) != n * (2 * v["J10"] - 5 * v["I4"]):
        out.append("e1 + e2 != nu_L(J10^2 I4^-5)/2")
    if shape is Shape.C000 and sum(degs) != n * (v["J10"] - 5 * v["J2"]):
        out.append("e1 + e2 + e3 != nu_L(J10 J2^-5)")
    return out


def test_7_degree_consistency():
    s, _ = _sweep()
    t = time.perf_counter()
    checked = bad = 0
    per_shape = {Shape.TWO_NODES.value: 0, Shape.C000.value: 0}
    for rep in s.reports:
        if rep.status not in ("agree", "disagree"):
            continue
        for tr in (rep.trace["X"], rep.trace["Xchi"]):
            checked += 1
            bad += bool(_degree_failures(tr))
            if tr["stable_shape"] in per_shape:
                per_shape[tr["stable_shape"]] += 1
    counts = ", ".join(f"{k.split('-')[0]}: {v}" for k, v in per_shape.items())
    report("degree consistency", bad == 0, f"{checked} fibers ({counts}), {bad} failures", time.perf_counter() - t)


def test_8_even_valuation_twist():
    t = time.perf_counter()
    s = sweep(100, SEED + 1, D="p2")
    verbatim = sum(rep.status == "agree" and rep.predicted == rep.direct for rep in s.reports)
    ok = s.counts["disagree"] == 0 and s.counts["route-mismatch"] == 0 and verbatim == s.classified
    report("nu(D) even", ok, f"{verbatim}/{s.classified} classified samples keep type(X) verbatim "
           f"({s.samples} drawn)", time.perf_counter() - t)


if __name__ == "__main__":
    import sys

    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
