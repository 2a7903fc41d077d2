"""Truncated exact arithmetic in complete discrete valuation fields.

Three families of field K are modelled:

``LaurentField``
    Equal characteristic k((t)) over a residue field from ``coeffield``.
    Elements are finite Laurent expansions known modulo t**prec.

``PAdicField``
    Q_p extended by at most one unramified step (degree r) and at most one
    Eisenstein step (degree e) whose polynomial has integer coefficients.
    Elements are rational coordinates in the basis u**i * pi**j; the
    coordinates are reduced modulo the absolute precision prec.

``MixedField``
    C{{T}} for a ``PAdicField`` C, with the Gauss valuation: finite Laurent
    polynomials in T with C-coefficients, known modulo the ideal of elements
    of valuation >= prec.  The residue field F_q((T)) is represented by the
    rational function field F_q(T), which contains every residue that a finite
    Laurent polynomial can produce.

Every element carries an absolute precision ``prec`` (in units of v_K).
Precision is capped at the field's policy when constants are created and then
propagated by the usual rules.  ``valuation()`` either returns a certified
integer or raises ``PrecisionExhausted``; it never guesses.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil

from .coeffield import FiniteField, Poly, RationalFunctionField
from .errors import (
    DivisionByZero,
    HenselHypothesisFailed,
    NegativeValuation,
    PrecisionExhausted,
    Unsupported,
    ValidationError,
    ZeroElement,
)


@dataclass(frozen=True)
class Precision:
    """Working precision policy: absolute precision cap and guard slack."""

    cap: int = 64
    guard: int = 8

    @classmethod
    def scaled(cls, cap: int) -> "Precision":
        return cls(cap=cap, guard=min(8, max(1, cap // 8)))

    def doubled(self) -> "Precision":
        return Precision(self.cap * 2, self.guard)


DEFAULT_PRECISION = Precision()


def vp(x: Fraction | int, p: int) -> int:
    """p-adic valuation of a nonzero rational."""
    x = Fraction(x)
    if x == 0:
        raise ZeroElement("v_p(0)")
    n, d, v = x.numerator, x.denominator, 0
    while n % p == 0:
        n //= p
        v += 1
    while d % p == 0:
        d //= p
        v -= 1
    return v


def reduce_rational(c: Fraction, p: int, k: int) -> Fraction:
    """Canonical representative of c modulo p**k (c may have negative valuation)."""
    if c == 0:
        return Fraction(0)
    v = vp(c, p)
    if v >= k:
        return Fraction(0)
    w = c / Fraction(p) ** v
    mod = p ** (k - v)
    digits = (w.numerator * pow(w.denominator, -1, mod)) % mod
    return Fraction(digits) * Fraction(p) ** v


class LocalElement:
    """Shared operator plumbing for truncated elements."""

    field: "LocalField"
    prec: int

    def __radd__(self, other):
        return self + other

    def __rsub__(self, other):
        return -(self - other)

    def __rmul__(self, other):
        return self * other

    def __sub__(self, other):
        return self + (-self.field.coerce(other))

    def __truediv__(self, other):
        return self * self.field.coerce(other).inverse()

    def __rtruediv__(self, other):
        return self.field.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result, base = self.field.one(), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        try:
            other = self.field.coerce(other)
        except (TypeError, ValidationError):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def vlow(self) -> int:
        """Certified valuation, or the precision when the element is zero at precision."""
        v = self._raw_valuation()
        return self.prec if v is None else v

    def valuation(self) -> int:
        v = self._raw_valuation()
        if v is None:
            raise PrecisionExhausted(f"element is zero modulo precision {self.prec}")
        if v > self.prec - self.field.precision.guard:
            raise PrecisionExhausted(
                f"valuation {v} lies within the guard band of precision {self.prec}"
            )
        return v

    def val_or_bound(self) -> tuple[int, bool]:
        v = self._raw_valuation()
        if v is None:
            return self.prec, False
        return v, True

    def is_zero(self) -> bool:
        return self._raw_valuation() is None

    def _mul_prec(self, other) -> int:
        return min(self.prec + other.vlow(), other.prec + self.vlow())


class LocalField:
    precision: Precision
    p: int

    def coerce(self, x):
        if isinstance(x, LocalElement):
            if x.field != self:
                raise ValidationError(f"element of {x.field} used in {self}")
            return x
        if isinstance(x, int):
            return self.from_int(x)
        if isinstance(x, Fraction):
            return self.from_rational(x)
        return self.lift(self.residue_field.coerce(x))

    def zero(self):
        return self.from_int(0)

    def one(self):
        return self.from_int(1)

    def from_rational(self, x: Fraction):
        return self.from_int(x.numerator) / self.from_int(x.denominator)

    @property
    def cap(self) -> int:
        return self.precision.cap


# ---------------------------------------------------------------------------
# equal characteristic: k((t))
# ---------------------------------------------------------------------------


class LaurentField(LocalField):
    kind = "laurent"

    def __init__(self, residue, var: str = "t", precision: Precision = DEFAULT_PRECISION):
        self.residue_field = residue
        self.var = var
        self.p = residue.p
        self.precision = precision

    @property
    def e_abs(self):
        return None

    def with_precision(self, precision: Precision) -> "LaurentField":
        return LaurentField(self.residue_field, self.var, precision)

    def element(self, terms: dict, prec: int | None = None) -> "LaurentElement":
        prec = self.cap if prec is None else prec
        R = self.residue_field
        clean = {}
        for k, c in terms.items():
            c = R.coerce(c)
            if k < prec and not c.is_zero():
                clean[int(k)] = c
        return LaurentElement(self, clean, prec)

    def from_int(self, n: int):
        return self.element({0: self.residue_field.from_int(n)})

    def uniformizer(self):
        return self.element({1: self.residue_field.one()})

    def lift(self, r):
        return self.element({0: self.residue_field.coerce(r)})

    def __eq__(self, other):
        return (
            isinstance(other, LaurentField)
            and self.residue_field == other.residue_field
            and self.var == other.var
            and self.precision == other.precision
        )

    def __hash__(self):
        return hash(("laurent", self.residue_field, self.var))

    def __repr__(self):
        return f"{self.residue_field!r}(({self.var}))"


class LaurentElement(LocalElement):
    __slots__ = ("field", "terms", "prec")

    def __init__(self, field, terms, prec):
        self.field, self.terms, self.prec = field, terms, prec

    def _raw_valuation(self):
        return min(self.terms) if self.terms else None

    def __add__(self, other):
        other = self.field.coerce(other)
        prec = min(self.prec, other.prec)
        out = {k: c for k, c in self.terms.items() if k < prec}
        for k, c in other.terms.items():
            if k >= prec:
                continue
            s = out[k] + c if k in out else c
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return LaurentElement(self.field, out, prec)

    def __neg__(self):
        return LaurentElement(self.field, {k: -c for k, c in self.terms.items()}, self.prec)

    def __mul__(self, other):
        other = self.field.coerce(other)
        prec = self._mul_prec(other)
        out = {}
        for i, a in self.terms.items():
            for j, b in other.terms.items():
                k = i + j
                if k >= prec:
                    continue
                s = out[k] + a * b if k in out else a * b
                out[k] = s
        return LaurentElement(self.field, {k: c for k, c in out.items() if not c.is_zero()}, prec)

    def inverse(self):
        if not self.terms:
            raise PrecisionExhausted("cannot invert an element that is zero at precision")
        v = min(self.terms)
        rel = self.prec - v
        a = [self.terms.get(v + k, self.field.residue_field.zero()) for k in range(rel)]
        b0 = a[0].inverse()
        b = [b0]
        for k in range(1, rel):
            s = self.field.residue_field.zero()
            for j in range(1, k + 1):
                if not a[j].is_zero():
                    s = s + a[j] * b[k - j]
            b.append(-b0 * s)
        terms = {k - v: c for k, c in enumerate(b) if not c.is_zero()}
        return LaurentElement(self.field, terms, self.prec - 2 * v)

    def residue(self):
        v = self._raw_valuation()
        if v is not None and v < 0:
            raise NegativeValuation("residue of an element of negative valuation")
        if self.prec <= 0:
            raise PrecisionExhausted("residue not determined at this precision")
        return self.terms.get(0, self.field.residue_field.zero())

    def truncate(self, prec: int):
        prec = min(prec, self.prec)
        return LaurentElement(self.field, {k: c for k, c in self.terms.items() if k < prec}, prec)

    def __repr__(self):
        body = " + ".join(f"({c!r})*{self.field.var}^{k}" for k, c in sorted(self.terms.items())) or "0"
        return f"{body} + O({self.field.var}^{self.prec})"


# ---------------------------------------------------------------------------
# p-adic fields
# ---------------------------------------------------------------------------


def _poly_mod(cs: list, mod: tuple) -> list:
    """Reduce a coefficient list modulo a monic integer polynomial."""
    d = len(mod) - 1
    cs = list(cs)
    for k in range(len(cs) - 1, d - 1, -1):
        c = cs[k]
        if c:
            for j in range(d):
                cs[k - d + j] -= c * mod[j]
        cs[k] = 0
    return cs[:d] + [Fraction(0)] * (d - len(cs[:d]))


class PAdicField(LocalField):
    """Q_p(u, pi) with u unramified of degree r and pi Eisenstein of degree e."""

    kind = "padic"

    def __init__(self, p: int, unramified=None, eisenstein=None, precision: Precision = DEFAULT_PRECISION):
        from .coeffield import is_prime

        if not is_prime(p):
            raise ValidationError(f"{p} is not prime", "p")
        self.p = p
        self.unramified = tuple(int(c) for c in unramified) if unramified else (0, 1)
        self.eisenstein = tuple(int(c) for c in eisenstein) if eisenstein else (0, 1)
        self.precision = precision
        self.r = len(self.unramified) - 1
        self.e = len(self.eisenstein) - 1
        if self.unramified[-1] != 1 or self.eisenstein[-1] != 1:
            raise ValidationError("tower polynomials must be monic", "tower")
        if self.e > 1:
            E = self.eisenstein
            if not (vp(E[0], p) == 1 if E[0] else False) or any(c % p for c in E[1:-1]):
                raise ValidationError("polynomial is not Eisenstein", "tower")
        self.residue_field = FiniteField(p, self.r, self.unramified if self.r > 1 else None)
        self._dim = self.r * self.e

    @property
    def e_abs(self) -> int:
        return self.e

    def with_precision(self, precision):
        return PAdicField(self.p, self.unramified, self.eisenstein, precision)

    # raw coordinate arithmetic; coordinates are lists indexed j*r + i

    def _raw_mul(self, a, b):
        r, e = self.r, self.e
        # product as polynomial in pi with u-polynomial coefficients
        prod = [[Fraction(0)] * (2 * r - 1) for _ in range(2 * e - 1)]
        for j1 in range(e):
            for i1 in range(r):
                x = a[j1 * r + i1]
                if not x:
                    continue
                for j2 in range(e):
                    row = prod[j1 + j2]
                    for i2 in range(r):
                        y = b[j2 * r + i2]
                        if y:
                            row[i1 + i2] += x * y
        rows = [_poly_mod(row, self.unramified) if r > 1 else row[:1] for row in prod]
        E = self.eisenstein
        for k in range(2 * e - 2, e - 1, -1):
            c = rows[k]
            if any(c):
                for j in range(e):
                    if E[j]:
                        rows[k - e + j] = [s - E[j] * t for s, t in zip(rows[k - e + j], c)]
        out = []
        for j in range(e):
            out.extend(rows[j])
        return out

    def _raw_val(self, a):
        best = None
        for idx, c in enumerate(a):
            if c:
                j = idx // self.r
                v = self.e * vp(c, self.p) + j
                if best is None or v < best:
                    best = v
        return best

    def _raw_trunc(self, a, prec):
        r, e, p = self.r, self.e, self.p
        out = []
        for idx, c in enumerate(a):
            j = idx // r
            k = ceil(Fraction(prec - j, e))
            out.append(reduce_rational(c, p, k) if c else Fraction(0))
        return out

    def _raw_inv(self, a):
        """Exact inverse in the number field Q(u, pi), by Gauss-Jordan over Q."""
        n = self._dim
        cols = []
        for k in range(n):
            basis = [Fraction(0)] * n
            basis[k] = Fraction(1)
            cols.append(self._raw_mul(a, basis))
        M = [[cols[c][r_] for c in range(n)] + [Fraction(1 if r_ == 0 else 0)] for r_ in range(n)]
        for col in range(n):
            piv = next((r_ for r_ in range(col, n) if M[r_][col]), None)
            if piv is None:
                raise DivisionByZero("singular multiplication matrix")
            M[col], M[piv] = M[piv], M[col]
            inv = 1 / M[col][col]
            M[col] = [x * inv for x in M[col]]
            for r_ in range(n):
                if r_ != col and M[r_][col]:
                    f = M[r_][col]
                    M[r_] = [x - f * y for x, y in zip(M[r_], M[col])]
        return [M[r_][n] for r_ in range(n)]

    def _raw_residue(self, a):
        return self.residue_field.element([int(reduce_rational(a[i], self.p, 1)) for i in range(self.r)])

    def element(self, coords, prec: int | None = None) -> "PAdicElement":
        prec = self.cap if prec is None else prec
        cs = [Fraction(c) for c in coords] + [Fraction(0)] * (self._dim - len(coords))
        if len(cs) > self._dim:
            raise ValidationError("too many coordinates for this p-adic field")
        return PAdicElement(self, tuple(self._raw_trunc(cs, prec)), prec)

    def from_int(self, n: int):
        return self.element([n])

    def from_rational(self, x: Fraction):
        return self.element([x])

    def uniformizer(self):
        if self.e > 1:
            cs = [0] * self._dim
            cs[self.r] = 1
            return self.element(cs)
        return self.from_int(self.p)

    def lift(self, r):
        r = self.residue_field.coerce(r)
        return self.element(list(r.coeffs))

    def __eq__(self, other):
        return (
            isinstance(other, PAdicField)
            and (self.p, self.unramified, self.eisenstein) == (other.p, other.unramified, other.eisenstein)
            and self.precision == other.precision
        )

    def __hash__(self):
        return hash(("padic", self.p, self.unramified, self.eisenstein))

    def __repr__(self):
        parts = [f"Q_{self.p}"]
        if self.r > 1:
            parts.append(f"u:{list(self.unramified)}")
        if self.e > 1:
            parts.append(f"pi:{list(self.eisenstein)}")
        return "(" + ", ".join(parts) + ")"


class PAdicElement(LocalElement):
    __slots__ = ("field", "coords", "prec")

    def __init__(self, field, coords, prec):
        self.field, self.coords, self.prec = field, coords, prec

    def _raw_valuation(self):
        return self.field._raw_val(self.coords)

    def __add__(self, other):
        other = self.field.coerce(other)
        prec = min(self.prec, other.prec)
        cs = [a + b for a, b in zip(self.coords, other.coords)]
        return PAdicElement(self.field, tuple(self.field._raw_trunc(cs, prec)), prec)

    def __neg__(self):
        F = self.field
        return PAdicElement(F, tuple(F._raw_trunc([-c for c in self.coords], self.prec)), self.prec)

    def __mul__(self, other):
        other = self.field.coerce(other)
        prec = self._mul_prec(other)
        cs = self.field._raw_mul(self.coords, other.coords)
        return PAdicElement(self.field, tuple(self.field._raw_trunc(cs, prec)), prec)

    def inverse(self):
        v = self._raw_valuation()
        if v is None:
            raise PrecisionExhausted("cannot invert an element that is zero at precision")
        prec = self.prec - 2 * v
        cs = self.field._raw_inv(list(self.coords))
        return PAdicElement(self.field, tuple(self.field._raw_trunc(cs, prec)), prec)

    def residue(self):
        v = self._raw_valuation()
        if v is not None and v < 0:
            raise NegativeValuation("residue of an element of negative valuation")
        if self.prec <= 0:
            raise PrecisionExhausted("residue not determined at this precision")
        return self.field._raw_residue(self.coords)

    def truncate(self, prec):
        prec = min(prec, self.prec)
        return PAdicElement(self.field, tuple(self.field._raw_trunc(list(self.coords), prec)), prec)

    def __repr__(self):
        F = self.field
        parts = []
        for idx, c in enumerate(self.coords):
            if c:
                j, i = divmod(idx, F.r)
                mono = "".join(s for s in (f"u^{i}" if i else "", f"pi^{j}" if j else ""))
                parts.append(f"{c}" + (f"*{mono}" if mono else ""))
        return (" + ".join(parts) or "0") + f" + O(pi^{self.prec})"


# ---------------------------------------------------------------------------
# mixed: C{{T}}
# ---------------------------------------------------------------------------


class MixedField(LocalField):
    kind = "mixed_tseries"

    def __init__(self, coeff: PAdicField, var: str = "T", precision: Precision | None = None):
        self.precision = precision or coeff.precision
        self.coeff = coeff.with_precision(self.precision)
        self.var = var
        self.p = coeff.p
        self.residue_field = RationalFunctionField(self.coeff.residue_field, var)

    @property
    def e_abs(self) -> int:
        return self.coeff.e

    def with_precision(self, precision):
        return MixedField(self.coeff, self.var, precision)

    def element(self, terms: dict, prec: int | None = None) -> "MixedElement":
        prec = self.cap if prec is None else prec
        C = self.coeff
        out = {}
        for k, c in terms.items():
            if isinstance(c, PAdicElement):
                coords = list(c.coords)
                prec = min(prec, c.prec)
            elif isinstance(c, (list, tuple)):
                coords = [Fraction(x) for x in c] + [Fraction(0)] * (C._dim - len(c))
            else:
                coords = [Fraction(c)] + [Fraction(0)] * (C._dim - 1)
            out[int(k)] = coords
        return MixedElement.make(self, out, prec)

    def from_int(self, n):
        return self.element({0: n})

    def from_rational(self, x):
        return self.element({0: self.coeff.from_rational(x)})

    def constant(self, c: PAdicElement):
        return self.element({0: c})

    def uniformizer(self):
        return self.constant(self.coeff.uniformizer())

    def series_variable(self):
        return self.element({1: 1})

    def lift(self, r):
        r = self.residue_field.coerce(r)
        den = [k for k, c in enumerate(r.den.coeffs) if not c.is_zero()]
        if len(den) != 1:
            raise Unsupported("lift of a residue whose denominator is not a monomial")
        shift = den[0]
        dinv = r.den.coeffs[shift].inverse()
        terms = {}
        for k, c in enumerate(r.num.coeffs):
            if not c.is_zero():
                terms[k - shift] = list((c * dinv).coeffs)
        return self.element(terms)

    def __eq__(self, other):
        return (
            isinstance(other, MixedField)
            and self.coeff == other.coeff
            and self.var == other.var
        )

    def __hash__(self):
        return hash(("mixed", self.coeff, self.var))

    def __repr__(self):
        return f"{self.coeff!r}{{{{{self.var}}}}}"


class MixedElement(LocalElement):
    __slots__ = ("field", "terms", "prec")

    def __init__(self, field, terms, prec):
        self.field, self.terms, self.prec = field, terms, prec

    @classmethod
    def make(cls, field, terms, prec):
        C = field.coeff
        out = {}
        for k, cs in terms.items():
            t = C._raw_trunc(cs, prec)
            if any(t):
                out[k] = tuple(t)
        return cls(field, out, prec)

    def _raw_valuation(self):
        C = self.field.coeff
        vals = [C._raw_val(cs) for cs in self.terms.values()]
        return min(vals) if vals else None

    def __add__(self, other):
        other = self.field.coerce(other)
        prec = min(self.prec, other.prec)
        out = {k: list(v) for k, v in self.terms.items()}
        for k, cs in other.terms.items():
            if k in out:
                out[k] = [a + b for a, b in zip(out[k], cs)]
            else:
                out[k] = list(cs)
        return MixedElement.make(self.field, out, prec)

    def __neg__(self):
        return MixedElement(self.field, {k: tuple(self.field.coeff._raw_trunc([-c for c in v], self.prec))
                                         for k, v in self.terms.items()}, self.prec)

    def __mul__(self, other):
        other = self.field.coerce(other)
        prec = self._mul_prec(other)
        C = self.field.coeff
        out = {}
        for i, a in self.terms.items():
            for j, b in other.terms.items():
                prod = C._raw_mul(a, b)
                k = i + j
                if k in out:
                    out[k] = [x + y for x, y in zip(out[k], prod)]
                else:
                    out[k] = prod
        return MixedElement.make(self.field, out, prec)

    def inverse(self):
        v = self._raw_valuation()
        if v is None:
            raise PrecisionExhausted("cannot invert an element that is zero at precision")
        C = self.field.coeff
        lead = [k for k, cs in self.terms.items() if C._raw_val(cs) == v]
        if len(lead) != 1:
            raise Unsupported(
                "inversion in C{{T}} needs a monomial residue of the unit part; "
                "T-adic tails are not certifiable"
            )
        k0 = lead[0]
        c_inv = C._raw_inv(list(self.terms[k0]))
        prec = self.prec - 2 * v
        head = MixedElement.make(self.field, {-k0: c_inv}, prec - 0)
        # self = c T^k0 (1 + eps) with v(eps) >= 1
        eps = self * head - self.field.one()
        rel = prec + v  # relative precision needed for the series in eps
        total = self.field.one()
        power = self.field.one()
        for _ in range(max(0, rel)):
            power = -(power * eps)
            if power.is_zero():
                break
            total = total + power
        out = total * head
        return out.truncate(prec)

    def residue(self):
        v = self._raw_valuation()
        if v is not None and v < 0:
            raise NegativeValuation("residue of an element of negative valuation")
        if self.prec <= 0:
            raise PrecisionExhausted("residue not determined at this precision")
        R = self.field.residue_field
        C = self.field.coeff
        if not self.terms:
            return R.zero()
        lo = min(self.terms)
        shift = -lo if lo < 0 else 0
        num = [R.coeff_field.zero()] * (max(self.terms) + shift + 1)
        for k, cs in self.terms.items():
            if C._raw_val(cs) == 0:
                num[k + shift] = C._raw_residue(cs)
        den = Poly.monomial(R.coeff_field, shift)
        return R.from_poly(Poly(R.coeff_field, num), den)

    def truncate(self, prec):
        prec = min(prec, self.prec)
        return MixedElement.make(self.field, {k: list(v) for k, v in self.terms.items()}, prec)

    def coefficient(self, k) -> PAdicElement:
        C = self.field.coeff
        return PAdicElement(C, self.terms.get(k, tuple(Fraction(0) for _ in range(C._dim))), self.prec)

    def __repr__(self):
        C = self.field.coeff
        parts = [f"({PAdicElement(C, cs, self.prec)!r})*{self.field.var}^{k}" for k, cs in sorted(self.terms.items())]
        return " + ".join(parts) or f"O(pi^{self.prec})"


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------


def val(x: LocalElement) -> int:
    return x.valuation()


def residue(x: LocalElement):
    return x.residue()


def lift(field: LocalField, r):
    return field.lift(r)


def invert(x: LocalElement) -> LocalElement:
    return x.inverse()


def poly_eval(coeffs, x):
    """Evaluate sum coeffs[i] * x**i (coefficients low degree first)."""
    acc = x.field.zero()
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def poly_derivative(coeffs):
    return [c * i for i, c in enumerate(coeffs)][1:]


def newton_polygon(coeffs) -> list[tuple[Fraction, int]]:
    """Root valuations with multiplicities, read off the lower convex hull.

    ``coeffs`` are LocalElements, low degree first; the leading one must be
    nonzero.  Returns ``(root_valuation, count)`` pairs sorted by valuation.
    """
    n = len(coeffs) - 1
    pts = []
    zeros = []
    for i, c in enumerate(coeffs):
        v, certain = c.val_or_bound()
        if certain:
            pts.append((i, Fraction(v)))
        else:
            zeros.append((i, v))
    if not pts or pts[-1][0] != n:
        raise PrecisionExhausted("leading coefficient not certified")
    if pts[0][0] != 0:
        raise ValidationError("constant term vanishes; divide out X first")
    hull = []
    for pt in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (y2 - y1) * (pt[0] - x1) >= (pt[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    segments = []
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        slope = (y2 - y1) / (x2 - x1)
        segments.append((-slope, x2 - x1))
        for i, bound in zeros:
            if x1 < i < x2 and bound <= y1 + slope * (i - x1):
                raise PrecisionExhausted("vanishing coefficient not certified above the hull")
    return sorted(segments)


def hensel_root(coeffs, x0: LocalElement, m0: int | None = None, max_steps: int = 64) -> LocalElement:
    """Newton-Hensel lift of an approximate root x0 of sum coeffs[i] X^i."""
    deriv = poly_derivative(coeffs)
    f0 = poly_eval(coeffs, x0)
    d0 = poly_eval(deriv, x0)
    if f0.is_zero():
        return x0
    vf = f0.valuation()
    try:
        vd = d0.valuation()
    except PrecisionExhausted:
        raise HenselHypothesisFailed("derivative vanishes at the starting point") from None
    if not vf > 2 * vd:
        raise HenselHypothesisFailed(f"v(f(x0)) = {vf} is not > 2 v(f'(x0)) = {2 * vd}")
    if m0 is None:
        m0 = vf - vd
    x = x0
    for _ in range(max_steps):
        fx = poly_eval(coeffs, x)
        if fx.is_zero():
            break
        step = fx / poly_eval(deriv, x)
        if step.is_zero():
            break
        x = x - step
    else:
        raise PrecisionExhausted("Hensel iteration did not stabilise")
    diff = x - x0
    if not diff.is_zero() and diff.valuation() < m0:
        raise HenselHypothesisFailed("lifted root left the starting residue class")
    return x
