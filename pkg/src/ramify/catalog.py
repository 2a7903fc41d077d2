"""Shipped example extensions, as input documents."""

from __future__ import annotations

from copy import deepcopy

from .errors import UnknownName
from .serial import SCHEMA


def _t(k: int, c=1) -> dict:
    return {"terms": [[k, c]]}


def _laurent(p: int, residue_vars=None) -> dict:
    res = {"kind": "finite", "p": p, "r": 1}
    if residue_vars:
        res = {"kind": "ratfun", "p": p, "r": 1, "vars": list(residue_vars)}
    return {"type": "laurent", "residue": res, "var": "t"}


def _artin_schreier(p: int, n: int) -> dict:
    # x^p - x - t^(-n); the builtin family clears denominators and picks a uniformizer
    return {
        "schema": SCHEMA,
        "name": f"as_p{p}_n{n}",
        "description": f"x^{p} - x = t^-{n} over F_{p}((t))",
        "base": _laurent(p),
        "minpoly": [_t(-n, -1), -1] + [0] * (p - 2) + [1],
        "action": "builtin:artin_schreier",
        "group": f"cyclic:{p}",
    }


_Q2I_T = {"type": "mixed_tseries", "p": 2, "tower": [{"type": "eisenstein", "poly": [2, 2, 1]}], "var": "T"}

# minus (2 + i) with i = 1 + pi, in the basis (1, pi)
_MINUS_2_PLUS_I = [-3, -1]

CATALOG: dict[str, dict] = {
    "e1_artin_schreier": {
        "schema": SCHEMA,
        "name": "e1_artin_schreier",
        "description": "y^3 - t^2 y - t over F_3((t)), y = t x with x^3 - x = t^-2",
        "base": _laurent(3),
        "minpoly": [_t(1, -1), _t(2, -1), 0, 1],
        "action": [[0, 1], [_t(1, 1), 1], [_t(1, 2), 1]],
        "group": "cyclic:3",
    },
    "as_p3_n1": _artin_schreier(3, 1),
    "as_p3_n4": _artin_schreier(3, 4),
    "as_p2_n1": _artin_schreier(2, 1),
    "as_p2_n3": _artin_schreier(2, 3),
    "as_p2_n5": _artin_schreier(2, 5),
    "e2_case2_p2": {
        "schema": SCHEMA,
        "name": "e2_case2_p2",
        "description": "x^2 - x = u t^-2 over F_2(u)((t))",
        "base": _laurent(2, ["u"]),
        "minpoly": [_t(-2, {"num": [0, 1]}), -1, 1],
        "action": "builtin:artin_schreier",
        "group": "cyclic:2",
    },
    "e2_case2_p3": {
        "schema": SCHEMA,
        "name": "e2_case2_p3",
        "description": "y^3 - t^2 y - u over F_3(u)((t)), y = t x with x^3 - x = u t^-3",
        "base": _laurent(3, ["u"]),
        "minpoly": [{"num": [0, -1]}, _t(2, -1), 0, 1],
        "action": [[0, 1], [_t(1, 1), 1], [_t(1, 2), 1]],
        "group": "cyclic:3",
    },
    "e3_cyclotomic": {
        "schema": SCHEMA,
        "name": "e3_cyclotomic",
        "description": "Q_3(zeta_9) over Q_3(zeta_3), zeta_3 = 1 + pi",
        "base": {"type": "padic", "p": 3, "tower": [{"type": "eisenstein", "poly": [3, 3, 1]}]},
        "minpoly": [[-1, -1], 0, 0, 1],
        "action": "builtin:cyclotomic",
        "order": 9,
        "group": "cyclic:3",
    },
    "e4_case3": {
        "schema": SCHEMA,
        "name": "e4_case3",
        "description": "x^4 = (2 + i) T^2 over Q_2(i){{T}}",
        "base": _Q2I_T,
        "minpoly": [_t(2, _MINUS_2_PLUS_I), 0, 0, 0, 1],
        "action": "builtin:kummer",
        "group": "cyclic:4",
    },
    "e4_floor_bottom": {
        "schema": SCHEMA,
        "name": "e4_floor_bottom",
        "description": "y^2 = (2 + i) T^2 over Q_2(i){{T}}: the fixed field of the order-2 subgroup",
        "base": _Q2I_T,
        "minpoly": [_t(2, _MINUS_2_PLUS_I), 0, 1],
        "action": "builtin:kummer",
        "group": "cyclic:2",
    },
    "e4_floor_top": {
        "schema": SCHEMA,
        "name": "e4_floor_top",
        "description": "x^2 = (1 + z) T over Q_2(z){{T}}, (1 + z)^2 = 2 + i",
        "base": {
            "type": "mixed_tseries",
            "p": 2,
            "tower": [{"type": "eisenstein", "poly": [2, -4, 2, 4, 1]}],
            "var": "T",
        },
        "minpoly": [_t(1, [-1, -1]), 0, 1],
        "action": "builtin:kummer",
        "group": "cyclic:2",
    },
}


def names() -> list[str]:
    return list(CATALOG)


def get(name: str) -> dict:
    try:
        return deepcopy(CATALOG[name])
    except KeyError:
        raise UnknownName(f"no catalog entry named {name!r}") from None


def artin_schreier_description(p: int, n: int) -> dict:
    return _artin_schreier(p, n)
