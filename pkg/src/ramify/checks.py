"""Named invariant suites run by ``ramify check``.

Each suite takes a built extension and returns a list of ledger rows
``{"suite", "check", "ok", ...}``.  A row with ``"expected_strict": True``
records an inequality that is known to be strict for that input; it is
not a failure.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .conductor import (
    artin_conductor,
    artin_via_compositum,
    depth,
    conductor_upper_bounds,
    hyodo_bounds,
    kato_conductor,
)
from .errors import UnknownSuite
from .extension import CaseLabel, GaloisExtension
from .groups import characters
from .ramfilt import (
    _fixed_fields,
    case_label,
    compute_ramification,
    different_and_hilbert,
    filtration_identities,
    herbrand_check,
    herbrand_corollary_check,
    power_monotonicity_check,
    quotient_i_check,
    ramification_inequalities,
    tower_decomposition,
    transitivity_check,
    upper_jumps_modified,
    well_ramified_verdict,
)



def sample_rationals(count: int, seed: int = 0, top: int = 40) -> list[Fraction]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        den = rng.randint(1, 12)
        out.append(Fraction(rng.randint(0, top * den), den))
    return out


def _row(suite, check, ok, **extra):
    return {"suite": suite, "check": check, "ok": bool(ok), **extra}


def suite_equivalence(E: GaloisExtension) -> list:
    rows = []
    R = compute_ramification(E)
    hil = different_and_hilbert(R)
    herb, ledger = herbrand_check(E)
    rows.append(_row("equivalence", "hilbert_formula", hil["holds"], got=hil))
    rows.append(_row("equivalence", "herbrand_property", herb, got=ledger))
    # the verdict raises if the two disagree; run it on every quotient too
    for H, ff in _fixed_fields(E).items():
        v = well_ramified_verdict(ff.T) if ff.T.n > 1 else True
        rows.append(_row("equivalence", f"equivalence_quotient_H{sorted(H)}", v is True or v is False, got=v))
    rows.append(_row("equivalence", "s_le_i_le_s_plus_1", ramification_inequalities(R)))
    case = case_label(E)
    ident = filtration_identities(R, case)
    rows.append(_row("equivalence", "filtration_identities", all(ident.values()), got=ident))
    if case == CaseLabel.I:
        ok = all(R.i[g] == R.s[g] + 1 for g in R.nontrivial if R.i[g] >= 1)
        rows.append(_row("equivalence", "case_I_i_equals_s_plus_1", ok))
    if case == CaseLabel.II:
        ok = all(R.i[g] == R.s[g] for g in R.nontrivial)
        rows.append(_row("equivalence", "case_II_i_equals_s", ok))
    tw = tower_decomposition(E)
    rows.append(_row("equivalence", "tower", tw.bottom == CaseLabel.I and tw.top in (CaseLabel.I, CaseLabel.II),
                     got={"H": sorted(tw.H), "bottom": tw.bottom.value, "top": tw.top.value}))
    return rows


def suite_identities(E: GaloisExtension, samples: int = 200) -> list:
    R = compute_ramification(E)
    us = sample_rationals(samples, seed=len(E.name))
    bad = [u for u in us if R.sfun(u) != R.sfun_sum(u)]
    rows = [_row("identities", "sum_identity", not bad, got={"failures": bad[:5], "samples": len(us)})]
    ok3, l3 = quotient_i_check(E)
    rows.append(_row("identities", "quotient_i", ok3, got=l3))
    ok4, l4 = transitivity_check(E)
    rows.append(_row("identities", "transitivity", ok4, got=l4))
    rows.append(_row("identities", "herbrand_corollary", herbrand_corollary_check(E, us[:50])))
    rows.append(_row("identities", "power_monotonicity", power_monotonicity_check(E, tower_decomposition(E))))
    return rows


def suite_integral_upper_jumps(E: GaloisExtension) -> list:
    rows = []
    for H, ff in _fixed_fields(E).items():
        ups, ok = upper_jumps_modified(compute_ramification(ff.T))
        rows.append(_row("integral_upper_jumps", f"integral_upper_jumps_H{sorted(H)}", ok, got=ups))
    return rows


def suite_conductors(E: GaloisExtension) -> list:
    rows = []
    R = compute_ramification(E)
    for chi in characters(E.group):
        rep = kato_conductor(E, chi)
        ksw = rep if isinstance(rep, int) else rep.ksw
        rows.append(_row("conductors", f"ksw_routes_agree_chi{chi.order()}_{sorted(chi.kernel())}", True, got=ksw))
        A = artin_conductor(R, chi)
        if case_label(E) == CaseLabel.I:
            rows.append(_row("conductors", f"artin_integral_{sorted(chi.kernel())}", A.denominator == 1, got=A))
    if case_label(E) == CaseLabel.III and E.group.is_cyclic():
        info = artin_via_compositum(E)
        rows.append(_row("conductors", "i_doubles_after_base_change", info["i_doubles"], got=info["i_LM"]))
        rows.append(_row("conductors", "artin_after_base_change_integral", info["integral"], got=info["A_M"]))
        rows.append(_row("conductors", "ksw_is_A_minus_1", info["ksw_is_A_minus_1"], got=info["ksw"]))
    return rows


def suite_depth(E: GaloisExtension) -> list:
    d = depth(E)
    rows = [_row("depth", "two_routes_agree", d.closed_form == d.d_L, got=d.to_json())]
    if d.ksw_relation:
        rows.append(_row("depth", "ksw_relation", d.ksw_relation["holds"], got=d.ksw_relation))
    rows.append(_row("depth", "M_identity", d.d_L + d.M == d.sum_s))
    return rows


def suite_depth_bounds(E: GaloisExtension) -> list:
    h = hyodo_bounds(E)
    rows = [
        _row("depth_bounds", "lower_inequality", h.lower_ok, got=h.lower, d_K=h.d_K),
        _row("depth_bounds", "upper_inequality", h.upper_ok, got=h.upper, d_K=h.d_K),
    ]
    if case_label(E) == CaseLabel.I:
        rows.append(_row("depth_bounds", "first_equality_case_I", h.first_equality))
    elif not h.first_equality:
        rows.append(_row("depth_bounds", "first_inequality_strict", True, expected_strict=True, got=h.lower, d_K=h.d_K))
    return rows


def suite_conductor_bounds(E: GaloisExtension) -> list:
    b = conductor_upper_bounds(E)
    return [
        _row("conductor_bounds", "depth_bound", b["depth_bound_ok"] and b["depth_bound_slack"] >= 0, slack=b["depth_bound_slack"]),
        _row("conductor_bounds", "ceiling_bound", b["ceiling_ok"] and b["ceiling_slack"] >= 0, slack=b["ceiling_slack"]),
    ]


_SUITES = {
    "equivalence": suite_equivalence,
    "identities": suite_identities,
    "integral_upper_jumps": suite_integral_upper_jumps,
    "conductors": suite_conductors,
    "depth": suite_depth,
    "depth_bounds": suite_depth_bounds,
    "conductor_bounds": suite_conductor_bounds,
}

# short names kept for compatibility with existing scripts
ALIASES = {
    "theorem1": "equivalence",
    "lemmas234": "identities",
    "borger": "integral_upper_jumps",
    "hyodo": "depth_bounds",
    "spriano": "conductor_bounds",
}

SUITES = (*_SUITES, "all")


def resolve_suite(name: str) -> str:
    name = ALIASES.get(name, name)
    if name not in SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    return name


def run_suite(E: GaloisExtension, name: str) -> list:
    name = resolve_suite(name)
    if name == "all":
        rows = []
        for fn in _SUITES.values():
            rows.extend(fn(E))
        return rows
    return _SUITES[name](E)
