"""Full report document for one extension."""

from __future__ import annotations

from . import __version__
from .cdvf import DEFAULT_PRECISION, Precision
from .conductor import (
    artin_via_compositum,
    depth,
    faithful_conductor,
    hyodo_bounds,
    conductor_upper_bounds,
)
from .errors import PrecisionExhausted, RamifyError
from .extension import CaseLabel, GaloisExtension, build_extension
from .ramfilt import (
    case_label,
    compute_ramification,
    different_and_hilbert,
    filtrations,
    herbrand_check,
    tower_decomposition,
    upper_jumps_modified,
)
from .serial import SCHEMA, digest, parse_description


def _label(g: int) -> str:
    return f"sigma{g}"


def build_report(doc: dict, precision: Precision) -> dict:
    return attributing_precision(lambda prec: report_for(load_extension(doc, prec), doc, prec), precision)


def load_extension(doc: dict, precision: Precision) -> GaloisExtension:
    return build_extension(parse_description(doc, precision))


def attributing_precision(run, precision: Precision):
    """Call ``run(precision)``; a failure that goes away at higher precision
    is reported as PrecisionExhausted rather than as bad input.

    Genuine input errors fail at every precision, so they propagate
    unchanged.  Retries stop once the cap reaches the default.
    """
    try:
        return run(precision)
    except PrecisionExhausted:
        raise
    except RamifyError as exc:
        first = exc
    prec = precision
    while prec.cap < max(DEFAULT_PRECISION.cap, 2 * precision.cap):
        prec = Precision.scaled(prec.cap * 2)
        try:
            run(prec)
        except RamifyError:
            continue
        raise PrecisionExhausted(
            f"{type(first).__name__} at precision {precision.cap} ({first}); succeeds at precision {prec.cap}"
        ) from first
    raise first


def report_for(E: GaloisExtension, doc: dict, precision: Precision) -> dict:
    R = compute_ramification(E)
    case = case_label(E)
    filt = filtrations(R)
    hil = different_and_hilbert(R)
    herb_ok, herb_ledger = herbrand_check(E)
    ups, integral_ups = upper_jumps_modified(R)
    tw = tower_decomposition(E)
    ramification = {
        "iG": {_label(g): R.i[g] for g in R.elements},
        "sG": {_label(g): R.s[g] for g in R.elements},
        "lower": filt["lower"],
        "modified": filt["modified_orders"],
        "G_nm": filt["G_nm"],
        "H": filt["H"],
        "sfun": filt["sfun"],
        "jumps": filt["jumps"],
        "upper_jumps": ups,
        "different": hil["different"],
        "hilbert": hil,
        "herbrand": {"holds": herb_ok, "ledger": herb_ledger},
        "tower": {
            "H": sorted(tw.H),
            "T_minpoly_degree": tw.fixed.T.n,
            "T_candidate": tw.fixed.T.meta.get("candidate", "trivial"),
            "labels": [tw.bottom.value, tw.top.value],
        },
    }
    out = {
        "schema": SCHEMA,
        "tool": {"name": "ramify", "version": __version__},
        "input_digest": digest(doc),
        "name": E.name,
        "precision": {"cap": precision.cap, "guard": precision.guard},
        "extension": {
            "degree": E.n,
            "group": E.group_spec,
            "e": E.e,
            "f_sep": E.f_sep,
            "f_ins": E.f_ins,
            "case": case.value,
            "monogenic_certified": E.monogenic,
            "meta": {k: v for k, v in E.meta.items() if isinstance(v, (int, str))},
        },
        "ramification": ramification,
    }
    checks = {
        "hilbert": hil["holds"],
        "herbrand": herb_ok,
        "upper_jumps_integral": integral_ups,
    }
    if E.group.is_cyclic() and E.n > 1:
        cond = faithful_conductor(E)
        dep = depth(E)
        hy = hyodo_bounds(E)
        bounds = conductor_upper_bounds(E)
        out["conductors"] = cond.to_json()
        out["depth"] = dep.to_json()
        out["hyodo"] = hy.to_json()
        out["bounds"] = bounds
        checks.update(
            hyodo_lower=hy.lower_ok,
            hyodo_upper=hy.upper_ok,
            hyodo_first_equality=hy.first_equality,
            depth_bound=bounds["depth_bound_ok"],
            ceiling_bound=bounds["ceiling_ok"],
            ksw_depth_relation=dep.ksw_relation.get("holds", True),
        )
        if case == CaseLabel.III:
            comp = artin_via_compositum(E)
            out["compositum"] = {k: v for k, v in comp.items() if k != "i_LM"} | {
                "i_LM": {_label(g): v for g, v in comp["i_LM"].items()}
            }
            checks.update(i_doubles=comp["i_doubles"], artin_integral=comp["integral"],
                          ksw_is_A_minus_1=comp["ksw_is_A_minus_1"])
    out["checks"] = checks
    return out


def _fmt(v) -> str:
    if isinstance(v, dict):
        if set(v) == {"num", "den"}:
            return str(v["num"]) if v["den"] == 1 else f"{v['num']}/{v['den']}"
        return "{" + ", ".join(f"{k}: {_fmt(x)}" for k, x in v.items()) + "}"
    if isinstance(v, list):
        return "[" + ", ".join(_fmt(x) for x in v) + "]"
    return str(v)


def table_lines(report: dict) -> list[str]:
    """Short human-readable summary of a JSON-encoded report."""
    ext = report["extension"]
    ram = report["ramification"]
    lines = [
        f"name        {report['name']}",
        f"degree      {ext['degree']}  group {ext['group']}",
        f"e f_sep f_ins  {ext['e']} {ext['f_sep']} {ext['f_ins']}",
        f"case        {ext['case']}",
        f"i_G         {_fmt(ram['iG'])}",
        f"s_G         {_fmt(ram['sG'])}",
        f"jumps       {ram['jumps']}",
        f"upper jumps {_fmt(ram['upper_jumps'])}",
        f"v_L(D)      {ram['different']}",
        f"tower       H={ram['tower']['H']} labels={ram['tower']['labels']}",
    ]
    if "conductors" in report:
        c, d = report["conductors"], report["depth"]
        lines += [
            f"sw          {_fmt(c['sw'])}",
            f"ksw         {c['ksw']}",
            f"Artin       {_fmt(c['artin'])}",
            f"d_K         {_fmt(d['d_K'])}",
            f"Hyodo       {_fmt(report['hyodo']['lower'])} <= {_fmt(d['d_K'])} <= {_fmt(report['hyodo']['upper'])}",
        ]
    lines.append("checks      " + ", ".join(f"{k}={v}" for k, v in sorted(report["checks"].items())))
    return lines
