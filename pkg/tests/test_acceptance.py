"""Acceptance criteria 1-8.

Each test records one PASS/FAIL line; the lines are printed at the end of
the pytest run (see conftest.py) and also when this file is run directly.
"""

import json
from fractions import Fraction

import pytest

from ramify import catalog
from ramify.cdvf import DEFAULT_PRECISION, Precision
from ramify.checks import run_suite, sample_rationals
from ramify.cli import main
from ramify.conductor import artin_via_compositum, case3_closed_forms, depth, faithful_conductor, hyodo_bounds
from ramify.errors import EquivalenceViolation, PrecisionExhausted
from ramify.ramfilt import _fixed_fields, compute_ramification, tower_decomposition, well_ramified_verdict
from ramify.report import build_report, load_extension
from ramify.serial import canonical_json

RESULTS: dict[int, tuple[bool, str]] = {}


def record(n: int, failures: list, summary: str):
    ok = not failures
    RESULTS[n] = (ok, summary if ok else "; ".join(failures))
    assert ok, "\n".join(failures)


def frac(obj):
    return Fraction(obj["num"], obj["den"]) if isinstance(obj, dict) else Fraction(obj)


def report_json(name, precision=DEFAULT_PRECISION):
    return json.loads(canonical_json(build_report(catalog.get(name), precision)))


def classical_phi(R, v):
    # integral of dt / (G_0 : G_t), G_t = {i >= ceil(t) + 1}
    v = Fraction(v)
    if v <= 0:
        return v
    total, k = Fraction(0), 0
    while k < v:
        hi = min(Fraction(k + 1), v)
        total += (hi - k) * Fraction(sum(1 for g in R.elements if R.i[g] >= k + 2), len(R.elements))
        k += 1
    return total


def test_criterion_1_flagship_case_three():
    fails = []
    r = report_json("e4_case3")
    c, d, h, ram = r["conductors"], r["depth"], r["hyodo"], r["ramification"]
    want = {
        "case": (r["extension"]["case"], "III"),
        "ksw": (c["ksw"], 5),
        "sw": (frac(c["sw"]), 6),
        "d_K": (frac(d["d_K"]), Fraction(7, 2)),
        "jumps": (ram["jumps"], [2, 4]),
        "upper_jumps": ([frac(u) for u in ram["upper_jumps"]], [4, 6]),
        "different": (ram["different"], 8),
        "hilbert": (ram["hilbert"]["holds"], True),
        "herbrand": (ram["herbrand"]["holds"], True),
        "tower_H": (ram["tower"]["H"], [0, 2]),
        "tower_labels": (ram["tower"]["labels"], ["I", "II"]),
        "hyodo_lhs": (frac(h["lower"]), Fraction(13, 4)),
        "hyodo_strict": (h["first_equality"], False),
    }
    for key, (got, exp) in want.items():
        if got != exp:
            fails.append(f"{key}: got {got}, expected {exp}")
    # second routes for each number
    if not frac(c["formula_route"]) == frac(c["sfun_route"]) == c["ksw"]:
        fails.append("ksw routes disagree")
    if frac(d["sum_route"]) != frac(d["d_L"]):
        fails.append("d_L routes disagree")
    if ram["hilbert"]["sum_iG"] != ram["different"]:
        fails.append("different vs sum of i_G")
    E = load_extension(catalog.get("e4_case3"), DEFAULT_PRECISION)
    R = compute_ramification(E)
    if [R.sfun(j) for j in R.jumps] != [4, 6]:
        fails.append("upper jumps are not the images of the lower jumps")
    tw = tower_decomposition(E)
    x = E.L.x()
    if not (tw.fixed.beta == -(x * x) or tw.fixed.beta == x * x):
        fails.append("tower field is not generated by x^2")
    cf = case3_closed_forms(2, 2)
    if (cf["ksw"], cf["d"], cf["lhs3"]) != (c["ksw"], frac(d["d_K"]), frac(h["lower"])):
        fails.append(f"closed forms {cf} disagree with the computed report")
    record(1, fails, "E4: ksw 5, sw 6, d_K 7/2, jumps [2,4] -> [4,6], v_L(D) 8, tower (I, II), Hyodo 13/4 < 7/2")


def test_criterion_2_closed_forms():
    fails = []
    for p, e in [(2, 2), (3, 6), (5, 20)]:
        out = case3_closed_forms(p, e)
        P, Ee = Fraction(p), Fraction(e)
        ksw = (2 * P - 1) * Ee / (P - 1) - 1
        j2 = P * Ee / (P - 1) - 1
        # lower depth bound from the jumps, against the closed form
        lhs = (P - 1) * (ksw / P + j2 / P**2)
        if out["lhs3"] != lhs or out["lhs3"] != 2 * Ee - (P**2 - 1) / P**2:
            fails.append(f"(p, e) = ({p}, {e}): lhs3 {out['lhs3']} vs {lhs}")
        if out["d"] != (P - 1) / P * (2 * P * Ee / (P - 1) - 1) or out["ksw"] != ksw:
            fails.append(f"(p, e) = ({p}, {e}): ksw/d mismatch")
        if not out["strict"] or out["lhs3"] == out["d"]:
            fails.append(f"(p, e) = ({p}, {e}): lhs3 equals d")
    record(2, fails, "(2,2), (3,6), (5,20): closed forms exact, lhs3 != d in each")


def test_criterion_3_case_one():
    fails = []
    us = sample_rationals(100, seed=3)
    cases = [(f"AS p={p} n={n}", catalog.artin_schreier_description(p, n), n) for p in (2, 3) for n in (1, 2, 4)]
    cases.append(("E3 cyclotomic", catalog.get("e3_cyclotomic"), 3 - 1))
    for label, doc, want in cases:
        E = load_extension(doc, DEFAULT_PRECISION)
        R = compute_ramification(E)
        rep = faithful_conductor(E)
        if not (rep.ksw == rep.sw == want):
            fails.append(f"{label}: ksw {rep.ksw}, sw {rep.sw}, expected {want}")
        if any(R.i[g] != R.s[g] + 1 for g in R.nontrivial):
            fails.append(f"{label}: i != s + 1")
        if not hyodo_bounds(E).first_equality:
            fails.append(f"{label}: Hyodo first inequality is strict")
        bad = [u for u in us if R.sfun(u) != 1 + classical_phi(R, u - 1)]
        if bad:
            fails.append(f"{label}: s(u) != 1 + phi(u - 1) at {bad[:3]}")
    record(3, fails, "AS p in {2,3}, n in {1,2,4} and the cyclotomic step: ksw = sw, i = s + 1, Hyodo equality, s vs phi")


def test_criterion_4_case_two():
    fails = []
    for name in ("e2_case2_p2", "e2_case2_p3"):
        E = load_extension(catalog.get(name), DEFAULT_PRECISION)
        R = compute_ramification(E)
        rep = faithful_conductor(E)
        dep = depth(E)
        if any(R.i[g] != R.s[g] for g in R.nontrivial):
            fails.append(f"{name}: i != s")
        if not (rep.ksw == rep.sw == R.sfun(R.t)):
            fails.append(f"{name}: ksw {rep.ksw}, sw {rep.sw}, s(t) {R.sfun(R.t)}")
        if R.e * rep.ksw != dep.d_L + R.t:
            fails.append(f"{name}: e ksw {R.e * rep.ksw} != d_L + t {dep.d_L + R.t}")
    record(4, fails, "E2 at p = 2, 3: i = s, ksw = sw = s(t), e ksw = d_L + t")


def test_criterion_5_equivalence():
    fails = []
    for name in catalog.names():
        E = load_extension(catalog.get(name), DEFAULT_PRECISION)
        try:
            for H, ff in _fixed_fields(E).items():
                if ff.T.n > 1:
                    well_ramified_verdict(ff.T)
            rows = run_suite(E, "equivalence") + run_suite(E, "identities")
        except EquivalenceViolation as exc:
            fails.append(f"{name}: {exc}")
            continue
        fails += [f"{name}: {r['check']}" for r in rows if not r["ok"]]
    record(5, fails, "all entries and quotients: Hilbert <=> Herbrand, sum identity, quotient i, transitivity, corollary; no EquivalenceViolation")


def test_criterion_6_base_change():
    fails = []
    E = load_extension(catalog.get("e4_case3"), DEFAULT_PRECISION)
    R = compute_ramification(E)
    info = artin_via_compositum(E)
    for g in R.nontrivial:
        if info["i_LM"][g] != 2 * R.i[g]:
            fails.append(f"i_LM({g}) = {info['i_LM'][g]} != 2 i({g})")
    if not (info["integral"] and info["A_M"] == info["A_from_L"] and info["A_M"].denominator == 1):
        fails.append(f"A(chi|M): {info['A_M']} vs {info['A_from_L']}")
    if info["ksw"] != info["A_M"] - 1:
        fails.append(f"ksw {info['ksw']} != A - 1")
    record(6, fails, f"E4: i_LM = 2 i, A(chi|M) = {info['A_M']} by both routes, ksw = A - 1")


def test_criterion_7_bounds():
    fails = []
    slacks = []
    for name in catalog.names():
        E = load_extension(catalog.get(name), DEFAULT_PRECISION)
        for row in run_suite(E, "conductor_bounds"):
            slacks.append(row["slack"])
            if not row["ok"] or not isinstance(row["slack"], Fraction) or row["slack"] < 0:
                fails.append(f"{name}: {row['check']} slack {row['slack']}")
    record(7, fails, f"upper bounds hold on all {len(catalog.names())} entries, min slack {min(slacks)}")


def _strip(rep):
    rep = json.loads(canonical_json(rep))
    rep.pop("precision")
    return rep


def test_criterion_8_robustness(tmp_path, capsys):
    fails = []
    for name in catalog.names():
        doc = catalog.get(name)
        ref = _strip(build_report(doc, DEFAULT_PRECISION))
        if _strip(build_report(doc, DEFAULT_PRECISION.doubled())) != ref:
            fails.append(f"{name}: doubling precision changed the report")
        for cap in (4, 8, 12, 16):
            try:
                got = _strip(build_report(doc, Precision.scaled(cap)))
            except PrecisionExhausted:
                continue
            if got != ref:
                fails.append(f"{name}: precision {cap} gave a different value")
    src = tmp_path / "e4.json"
    src.write_text(canonical_json(catalog.get("e4_case3")))
    code = main(["report", str(src), "--precision", "8"])
    out = capsys.readouterr().out
    if code != 2 or out:
        fails.append(f"starved E4 run exited {code}")
    record(8, fails, "doubling precision changes nothing; starved runs exit 2 or agree exactly")


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q"]))
