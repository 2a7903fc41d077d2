"""JSON descriptions of fields, elements and extensions, and report encoding.

Input documents carry ``"schema": "ramify/1"``.  Elements are written
sparsely; everything parsed here is exact, and precision is applied by the
field policy when constants are created.
"""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction
from math import inf

from .cdvf import (
    DEFAULT_PRECISION,
    LaurentElement,
    LaurentField,
    MixedElement,
    MixedField,
    PAdicElement,
    PAdicField,
    Precision,
)
from .coeffield import FFElement, FiniteField, Poly, RatFunElement, RationalFunctionField
from .errors import ValidationError

SCHEMA = "ramify/1"


def _need(obj: dict, key: str, where: str):
    if not isinstance(obj, dict) or key not in obj:
        raise ValidationError(f"missing field {key!r}", where)
    return obj[key]


# ---------------------------------------------------------------------------
# residue fields
# ---------------------------------------------------------------------------


def parse_residue_field(desc: dict, where="base.residue"):
    kind = _need(desc, "kind", where)
    p = int(_need(desc, "p", where))
    base = FiniteField(p, int(desc.get("r", 1)), desc.get("modulus"))
    if kind == "finite":
        return base
    if kind == "ratfun":
        return RationalFunctionField.over(base, _need(desc, "vars", where))
    raise ValidationError(f"unknown residue field kind {kind!r}", where)


def dump_residue_field(R) -> dict:
    if isinstance(R, FiniteField):
        out = {"kind": "finite", "p": R.p, "r": R.r}
        if R.r > 1:
            out["modulus"] = list(R.modulus)
        return out
    if isinstance(R, RationalFunctionField):
        base = dump_residue_field(R.constant_field)
        base.update(kind="ratfun", vars=R.variables)
        return base
    raise ValidationError(f"cannot describe residue field {R!r}")


def parse_residue_element(R, obj, where="element"):
    if isinstance(R, FiniteField):
        if isinstance(obj, int):
            return R.from_int(obj)
        if isinstance(obj, list):
            return R.element([int(c) for c in obj])
        raise ValidationError("finite field element must be an int or coefficient list", where)
    if isinstance(R, RationalFunctionField):
        if isinstance(obj, str):
            return R.gen(obj)
        if isinstance(obj, dict) and "num" in obj:
            num = Poly(R.coeff_field, [parse_residue_element(R.coeff_field, c, where) for c in obj["num"]])
            den = Poly(R.coeff_field, [parse_residue_element(R.coeff_field, c, where) for c in obj.get("den", [1])])
            if den.is_zero():
                raise ValidationError("zero denominator", where)
            return R.from_poly(num, den)
        if isinstance(obj, list):
            return R.from_poly(Poly(R.coeff_field, [parse_residue_element(R.coeff_field, c, where) for c in obj]))
        return R.coerce(parse_residue_element(R.coeff_field, obj, where))
    raise ValidationError(f"unsupported residue field {R!r}", where)


def dump_residue_element(x):
    if isinstance(x, FFElement):
        cs = [int(c) for c in x.coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        return cs[0] if len(cs) == 1 else cs
    if isinstance(x, RatFunElement):
        out = {"num": [dump_residue_element(c) for c in x.num.coeffs]}
        if x.den.degree > 0:
            out["den"] = [dump_residue_element(c) for c in x.den.coeffs]
        return out
    if hasattr(x, "value"):
        return int(x.value)
    raise ValidationError(f"cannot encode residue element {x!r}")


# ---------------------------------------------------------------------------
# local fields
# ---------------------------------------------------------------------------


def _tower(desc, where):
    unram, eis = None, None
    for step in desc.get("tower", []):
        kind = _need(step, "type", where)
        poly = [int(c) for c in _need(step, "poly", where)]
        if kind == "unramified" and unram is None and eis is None:
            unram = poly
        elif kind == "eisenstein" and eis is None:
            eis = poly
        else:
            raise ValidationError("tower supports one unramified step followed by one Eisenstein step", where)
    return unram, eis


def parse_field(desc: dict, precision: Precision = DEFAULT_PRECISION, where="base"):
    kind = _need(desc, "type", where)
    if kind == "laurent":
        R = parse_residue_field(_need(desc, "residue", where), where + ".residue")
        return LaurentField(R, desc.get("var", "t"), precision)
    if kind in ("padic", "mixed_tseries"):
        unram, eis = _tower(desc, where)
        C = PAdicField(int(_need(desc, "p", where)), unram, eis, precision)
        if kind == "padic":
            return C
        return MixedField(C, desc.get("var", "T"), precision)
    raise ValidationError(f"unknown field type {kind!r}", where)


def _dump_tower(C: PAdicField):
    out = []
    if C.r > 1:
        out.append({"type": "unramified", "poly": list(C.unramified)})
    if C.e > 1:
        out.append({"type": "eisenstein", "poly": list(C.eisenstein)})
    return out


def dump_field(K) -> dict:
    if isinstance(K, LaurentField):
        return {"type": "laurent", "residue": dump_residue_field(K.residue_field), "var": K.var}
    if isinstance(K, PAdicField):
        return {"type": "padic", "p": K.p, "tower": _dump_tower(K)}
    if isinstance(K, MixedField):
        return {"type": "mixed_tseries", "p": K.p, "tower": _dump_tower(K.coeff), "var": K.var}
    raise ValidationError(f"cannot describe field {K!r}")


def _rational(obj, where):
    if isinstance(obj, bool):
        raise ValidationError("boolean is not a number", where)
    if isinstance(obj, int):
        return Fraction(obj)
    if isinstance(obj, dict) and "num" in obj:
        den = int(obj.get("den", 1))
        if den == 0:
            raise ValidationError("zero denominator", where)
        return Fraction(int(obj["num"]), den)
    if isinstance(obj, str):
        try:
            return Fraction(obj)
        except ValueError:
            pass
    raise ValidationError(f"not a rational number: {obj!r}", where)


def parse_element(K, obj, where="element"):
    """Elements: ints; for p-adic fields a coordinate list; otherwise {"terms": [[k, c], ...]}."""
    if isinstance(K, PAdicField):
        if isinstance(obj, list):
            return K.element([_rational(c, where) for c in obj])
        return K.from_rational(_rational(obj, where))
    if isinstance(obj, dict) and "terms" in obj:
        terms = {}
        for pair in obj["terms"]:
            if not (isinstance(pair, list) and len(pair) == 2):
                raise ValidationError("terms must be [exponent, coefficient] pairs", where)
            k, c = int(pair[0]), pair[1]
            if isinstance(K, LaurentField):
                c = parse_residue_element(K.residue_field, c, where)
                terms[k] = terms[k] + c if k in terms else c
            else:
                c = parse_element(K.coeff, c, where)
                terms[k] = list(c.coords)
        return K.element(terms)
    if isinstance(obj, (int, dict, str)):
        if isinstance(K, LaurentField):
            return K.lift(parse_residue_element(K.residue_field, obj, where))
        return K.constant(parse_element(K.coeff, obj, where))
    raise ValidationError(f"cannot parse element {obj!r}", where)


def _dump_rational(c: Fraction):
    c = Fraction(c)
    return int(c) if c.denominator == 1 else {"num": c.numerator, "den": c.denominator}


def dump_element(x):
    if isinstance(x, PAdicElement):
        cs = [_dump_rational(c) for c in x.coords]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        return cs[0] if len(cs) == 1 else cs
    if isinstance(x, LaurentElement):
        return {"terms": [[k, dump_residue_element(c)] for k, c in sorted(x.terms.items())]}
    if isinstance(x, MixedElement):
        C = x.field.coeff
        return {"terms": [[k, dump_element(PAdicElement(C, cs, x.prec))] for k, cs in sorted(x.terms.items())]}
    raise ValidationError(f"cannot encode element {x!r}")


def parse_poly(K, obj, where="poly"):
    if isinstance(obj, dict):
        deg = max(int(k) for k in obj)
        out = [K.zero()] * (deg + 1)
        for k, c in obj.items():
            out[int(k)] = parse_element(K, c, f"{where}[{k}]")
        return out
    if isinstance(obj, list):
        return [parse_element(K, c, f"{where}[{i}]") for i, c in enumerate(obj)]
    raise ValidationError("polynomial must be a coefficient list or a degree map", where)


def dump_poly(cs) -> list:
    return [dump_element(c) for c in cs]


# ---------------------------------------------------------------------------
# extension descriptions
# ---------------------------------------------------------------------------


def parse_description(doc: dict, precision: Precision = DEFAULT_PRECISION):
    from .extension import ExtensionSpec

    if not isinstance(doc, dict):
        raise ValidationError("description must be a JSON object")
    schema = doc.get("schema", SCHEMA)
    if schema != SCHEMA:
        raise ValidationError(f"unsupported schema {schema!r}", "schema")
    K = parse_field(_need(doc, "base", "base"), precision)
    minpoly = parse_poly(K, doc["minpoly"], "minpoly") if "minpoly" in doc else None
    action = _need(doc, "action", "action")
    if isinstance(action, list):
        action = [parse_poly(K, a, f"action[{i}]") for i, a in enumerate(action)]
    elif not isinstance(action, str):
        raise ValidationError("action must be a builtin tag or a list of polynomials", "action")
    generator = parse_poly(K, doc["generator"], "generator") if "generator" in doc else None
    rhs = parse_element(K, doc["rhs"], "rhs") if "rhs" in doc else None
    return ExtensionSpec(
        base=K,
        minpoly=minpoly,
        action=action,
        group=doc.get("group"),
        generator=generator,
        rhs=rhs,
        order=doc.get("order"),
        name=doc.get("name", ""),
    )


def load_description(path: str) -> dict:
    with open(path) as fh:
        text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"malformed JSON: {exc.msg}", f"line {exc.lineno}, column {exc.colno}") from None


def canonical_json(obj) -> str:
    return json.dumps(to_jsonable(obj), sort_keys=True, indent=2) + "\n"


def digest(doc: dict) -> str:
    return hashlib.sha256(json.dumps(doc, sort_keys=True, separators=(",", ":")).encode()).hexdigest()


# ---------------------------------------------------------------------------
# report values
# ---------------------------------------------------------------------------


def to_jsonable(obj):
    """Exact values to JSON: rationals as {num, den}, infinity as "inf"."""
    from enum import Enum

    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, int):
        return obj
    if isinstance(obj, float):
        if obj == inf:
            return "inf"
        raise ValidationError("floating point value in a report")
    if isinstance(obj, Fraction):
        return {"num": obj.numerator, "den": obj.denominator}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, (set, frozenset)):
        return sorted(to_jsonable(v) for v in obj)
    if hasattr(obj, "to_json"):
        return to_jsonable(obj.to_json())
    raise ValidationError(f"cannot serialise {type(obj).__name__}")
