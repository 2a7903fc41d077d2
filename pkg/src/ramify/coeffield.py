"""Exact arithmetic in residue-level fields of characteristic p.

Three kinds of field are supported:

* ``FiniteField(p, r)``: F_q with q = p**r, elements are polynomials over F_p
  reduced modulo a fixed monic irreducible polynomial.
* ``RationalFunctionField``: F_q(T_1, ..., T_c) for c <= 2.  The two-variable
  field is built recursively as F_q(T_1)(T_2), so that every element is a
  reduced fraction with a monic denominator over a field.  That normal form
  is unique, hence equality is structural.
* ``SimpleExtension``: base[X]/(m) for a monic irreducible m.

Univariate polynomials over any of these fields are provided by ``Poly``.
"""

from __future__ import annotations

import itertools
from .errors import DivisionByZero, FieldMismatch, NotMonic, Unsupported, ValidationError


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        while n % d == 0:
            if d not in out:
                out.append(d)
            n //= d
        d += 1
    if n > 1 and n not in out:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# generic field element protocol
# ---------------------------------------------------------------------------


class FieldElement:
    """Mixin with the operators shared by every residue-level element."""

    field: "Field"

    def __radd__(self, other):
        return self + other

    def __rsub__(self, other):
        return -(self - other)

    def __rmul__(self, other):
        return self * other

    def __truediv__(self, other):
        other = self.field.coerce(other)
        return self * other.inverse()

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

    def __bool__(self):
        return not self.is_zero()

    def _check(self, other):
        other = self.field.coerce(other)
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        return other


class Field:
    p: int

    def coerce(self, x):
        if isinstance(x, FieldElement):
            return x
        if isinstance(x, int):
            return self.from_int(x)
        raise FieldMismatch(f"cannot coerce {x!r} into {self}")

    def zero(self):
        return self.from_int(0)

    def one(self):
        return self.from_int(1)

    @property
    def characteristic(self) -> int:
        return self.p


# ---------------------------------------------------------------------------
# univariate polynomials over a field
# ---------------------------------------------------------------------------


class Poly:
    """Dense univariate polynomial, coefficients low degree first."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs):
        cs = [field.coerce(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @classmethod
    def monomial(cls, field, degree, coeff=1):
        return cls(field, [field.zero()] * degree + [field.coerce(coeff)])

    @classmethod
    def x(cls, field):
        return cls.monomial(field, 1)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero()

    def coeff(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.field.zero()

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.lead() == self.field.one()

    def monic(self) -> "Poly":
        if not self.coeffs:
            return self
        inv = self.lead().inverse()
        return Poly(self.field, [c * inv for c in self.coeffs])

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.field != self.field:
                raise FieldMismatch("polynomials over different fields")
            return other
        return Poly(self.field, [self.field.coerce(other)])

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.field, [self.coeff(i) + other.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.field, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if not self.coeffs or not other.coeffs:
            return Poly(self.field, [])
        out = [self.field.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result, base = Poly(self.field, [self.field.one()]), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        other = self._coerce(other)
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coeffs)
        inv = other.lead().inverse()
        q = [self.field.zero()] * max(0, len(rem) - len(other.coeffs) + 1)
        for k in range(len(rem) - len(other.coeffs), -1, -1):
            c = rem[k + other.degree] * inv
            q[k] = c
            if c.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                rem[k + j] = rem[k + j] - c * b
        return Poly(self.field, q), Poly(self.field, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __eq__(self, other):
        if not isinstance(other, Poly):
            try:
                other = self._coerce(other)
            except FieldMismatch:
                return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def derivative(self) -> "Poly":
        return Poly(self.field, [c * i for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        acc = self.field.zero() if not isinstance(x, Poly) else Poly(self.field, [])
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def gcd(self, other: "Poly") -> "Poly":
        a, b = self, self._coerce(other)
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def powmod(self, n: int, mod: "Poly") -> "Poly":
        result, base = Poly(self.field, [self.field.one()]), self % mod
        while n:
            if n & 1:
                result = (result * base) % mod
            base = (base * base) % mod
            n >>= 1
        return result

    def __repr__(self):
        terms = [f"({c})*X^{i}" for i, c in enumerate(self.coeffs) if not c.is_zero()]
        return " + ".join(terms) or "0"


# ---------------------------------------------------------------------------
# finite fields
# ---------------------------------------------------------------------------


def _fp_polys(p, degree):
    """All monic polynomials of the given degree over F_p, as int tuples."""
    for tail in itertools.product(range(p), repeat=degree):
        yield tuple(tail) + (1,)


def _rabin_irreducible(m: Poly, q: int) -> bool:
    """Rabin's test for a monic polynomial over F_q."""
    d = m.degree
    if d <= 0:
        return False
    if d == 1:
        return True
    x = Poly.x(m.field)
    if x.powmod(q**d, m) != x % m:
        return False
    for ell in prime_factors(d):
        h = x.powmod(q ** (d // ell), m) - x
        if h.gcd(m).degree > 0:
            return False
    return True


class FiniteField(Field):
    """F_q with q = p**r."""

    def __init__(self, p: int, r: int = 1, modulus=None):
        if not is_prime(p):
            raise ValidationError(f"characteristic {p} is not prime", "p")
        if r < 1:
            raise ValidationError("degree r must be >= 1", "r")
        self.p, self.r = p, r
        if r == 1:
            self.modulus = (0, 1)
        elif modulus is not None:
            self.modulus = tuple(int(c) % p for c in modulus)
            if len(self.modulus) != r + 1 or self.modulus[-1] != 1:
                raise ValidationError("modulus must be monic of degree r", "modulus")
            if not _rabin_irreducible(Poly(PrimeField(p), self.modulus), p):
                raise ValidationError("modulus is reducible over F_p", "modulus")
        else:
            prime = PrimeField(p)
            for cand in _fp_polys(p, r):
                if _rabin_irreducible(Poly(prime, cand), p):
                    self.modulus = cand
                    break

    @property
    def q(self) -> int:
        return self.p**self.r

    @property
    def imperfection_degree(self) -> int:
        return 0

    def from_int(self, n: int) -> "FFElement":
        return FFElement(self, (n % self.p,) + (0,) * (self.r - 1))

    def element(self, coeffs) -> "FFElement":
        if isinstance(coeffs, int):
            return self.from_int(coeffs)
        cs = [int(c) % self.p for c in coeffs]
        if len(cs) > self.r:
            poly = Poly(PrimeField(self.p), cs) % Poly(PrimeField(self.p), self.modulus)
            cs = [int(c.value) for c in poly.coeffs]
        return FFElement(self, tuple(cs) + (0,) * (self.r - len(cs)))

    def gen(self) -> "FFElement":
        if self.r == 1:
            # generator of the prime field as an algebra is 1
            return self.one()
        return self.element([0, 1])

    def elements(self):
        for cs in itertools.product(range(self.p), repeat=self.r):
            yield FFElement(self, cs)

    def pth_root(self, x: "FFElement") -> "FFElement":
        # Frobenius is bijective on a finite field: x = y**p with y = x**(q/p)
        return x ** (self.q // self.p)

    def __eq__(self, other):
        return type(other) is type(self) and (self.p, self.r, self.modulus) == (other.p, other.r, other.modulus)

    def __hash__(self):
        return hash(("FF", self.p, self.r, self.modulus))

    def __repr__(self):
        return f"GF({self.p}^{self.r})" if self.r > 1 else f"GF({self.p})"


class PrimeField(FiniteField):
    """F_p with lightweight integer elements; used for modulus construction."""

    def __init__(self, p: int):
        self.p, self.r, self.modulus = p, 1, (0, 1)

    def from_int(self, n):
        return _FpElt(self, n % self.p)

    def coerce(self, x):
        if isinstance(x, _FpElt):
            return x
        if isinstance(x, FFElement) and x.field.r == 1:
            return _FpElt(self, x.coeffs[0])
        return super().coerce(x)


class _FpElt(FieldElement):
    __slots__ = ("field", "value")

    def __init__(self, field, value):
        self.field, self.value = field, value

    def __add__(self, o):
        return _FpElt(self.field, (self.value + self.field.coerce(o).value) % self.field.p)

    def __sub__(self, o):
        return _FpElt(self.field, (self.value - self.field.coerce(o).value) % self.field.p)

    def __mul__(self, o):
        return _FpElt(self.field, (self.value * self.field.coerce(o).value) % self.field.p)

    def __neg__(self):
        return _FpElt(self.field, -self.value % self.field.p)

    def inverse(self):
        if self.value == 0:
            raise DivisionByZero("inverse of 0")
        return _FpElt(self.field, pow(self.value, -1, self.field.p))

    def is_zero(self):
        return self.value == 0

    def __eq__(self, o):
        if isinstance(o, int):
            return self.value == o % self.field.p
        return isinstance(o, _FpElt) and self.value == o.value

    def __hash__(self):
        return hash(self.value)

    def __repr__(self):
        return str(self.value)


class FFElement(FieldElement):
    __slots__ = ("field", "coeffs")

    def __init__(self, field: FiniteField, coeffs: tuple):
        self.field, self.coeffs = field, tuple(coeffs)

    def __add__(self, other):
        other = self._check(other)
        p = self.field.p
        return FFElement(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        other = self._check(other)
        p = self.field.p
        return FFElement(self.field, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        p = self.field.p
        return FFElement(self.field, tuple(-a % p for a in self.coeffs))

    def __mul__(self, other):
        other = self._check(other)
        F = self.field
        p, r = F.p, F.r
        if r == 1:
            return FFElement(F, ((self.coeffs[0] * other.coeffs[0]) % p,))
        prod = [0] * (2 * r - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    prod[i + j] += a * b
        mod = F.modulus
        for k in range(2 * r - 2, r - 1, -1):
            c = prod[k] % p
            if c:
                for j in range(r):
                    prod[k - r + j] -= c * mod[j]
            prod[k] = 0
        return FFElement(F, tuple(c % p for c in prod[:r]))

    def inverse(self):
        if self.is_zero():
            raise DivisionByZero("inverse of zero in a finite field")
        return self ** (self.field.q - 2)

    def is_zero(self):
        return not any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.field.from_int(other)
        return isinstance(other, FFElement) and self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if self.field.r == 1:
            return str(self.coeffs[0])
        terms = [f"{c}*g^{i}" if i else str(c) for i, c in enumerate(self.coeffs) if c]
        return "+".join(terms) or "0"


# ---------------------------------------------------------------------------
# rational function fields
# ---------------------------------------------------------------------------


class RationalFunctionField(Field):
    """coeff_field(var); nest two of these for F_q(T_1, T_2)."""

    def __init__(self, coeff_field: Field, var: str):
        self.coeff_field = coeff_field
        self.var = var
        self.p = coeff_field.p
        if self.imperfection_degree > 2:
            raise Unsupported("imperfection degree above 2 is not supported")

    @classmethod
    def over(cls, base: FiniteField, variables) -> "RationalFunctionField":
        variables = list(variables)
        if not variables:
            raise ValidationError("at least one variable required", "vars")
        if len(variables) > 2:
            raise Unsupported("imperfection degree above 2 is not supported")
        field = base
        for v in variables:
            field = cls(field, v)
        return field

    @property
    def variables(self) -> list[str]:
        inner = self.coeff_field.variables if isinstance(self.coeff_field, RationalFunctionField) else []
        return inner + [self.var]

    @property
    def constant_field(self) -> FiniteField:
        f = self.coeff_field
        while isinstance(f, RationalFunctionField):
            f = f.coeff_field
        return f

    @property
    def imperfection_degree(self) -> int:
        return self.coeff_field.imperfection_degree + 1

    def from_int(self, n):
        return self.from_poly(Poly(self.coeff_field, [self.coeff_field.from_int(n)]))

    def coerce(self, x):
        if isinstance(x, RatFunElement) and x.field == self:
            return x
        if isinstance(x, int):
            return self.from_int(x)
        if isinstance(x, FieldElement) and x.field == self.coeff_field:
            return self.from_poly(Poly(self.coeff_field, [x]))
        if isinstance(x, FieldElement) and isinstance(self.coeff_field, RationalFunctionField):
            return self.coerce(self.coeff_field.coerce(x))
        if isinstance(x, FieldElement) and x.field == self.constant_field:
            return self.coerce(self.coeff_field.coerce(x))
        return super().coerce(x)

    def from_poly(self, num: Poly, den: Poly | None = None) -> "RatFunElement":
        if den is None:
            den = Poly(self.coeff_field, [self.coeff_field.one()])
        return RatFunElement.make(self, num, den)

    def gen(self, name: str | None = None) -> "RatFunElement":
        if name is None or name == self.var:
            return self.from_poly(Poly.x(self.coeff_field))
        if isinstance(self.coeff_field, RationalFunctionField):
            return self.coerce(self.coeff_field.gen(name))
        raise ValidationError(f"unknown variable {name}", "vars")

    def _poly_pth_root(self, poly: Poly):
        F = self.coeff_field
        p = self.p
        cs = poly.coeffs
        out = []
        for i, c in enumerate(cs):
            if i % p:
                if not c.is_zero():
                    return None
                continue
            r = F.pth_root(c)
            if r is None:
                return None
            out.append(r)
        return Poly(F, out)

    def pth_root(self, x: "RatFunElement"):
        num = self._poly_pth_root(x.num)
        den = self._poly_pth_root(x.den)
        if num is None or den is None:
            return None
        return self.from_poly(num, den)

    def __eq__(self, other):
        return (
            isinstance(other, RationalFunctionField)
            and self.var == other.var
            and self.coeff_field == other.coeff_field
        )

    def __hash__(self):
        return hash(("RF", self.var, self.coeff_field))

    def __repr__(self):
        return f"{self.constant_field!r}({','.join(self.variables)})"


class RatFunElement(FieldElement):
    __slots__ = ("field", "num", "den")

    def __init__(self, field, num, den):
        self.field, self.num, self.den = field, num, den

    @classmethod
    def make(cls, field, num: Poly, den: Poly):
        if den.is_zero():
            raise DivisionByZero("zero denominator")
        if num.is_zero():
            return cls(field, num, Poly(field.coeff_field, [field.coeff_field.one()]))
        g = num.gcd(den)
        if g.degree > 0:
            num, den = num // g, den // g
        lead_inv = den.lead().inverse()
        num = Poly(field.coeff_field, [c * lead_inv for c in num.coeffs])
        den = Poly(field.coeff_field, [c * lead_inv for c in den.coeffs])
        return cls(field, num, den)

    def __add__(self, other):
        o = self._check(other)
        if self.den == o.den:
            return RatFunElement.make(self.field, self.num + o.num, self.den)
        return RatFunElement.make(self.field, self.num * o.den + o.num * self.den, self.den * o.den)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __neg__(self):
        return RatFunElement(self.field, -self.num, self.den)

    def __mul__(self, other):
        o = self._check(other)
        return RatFunElement.make(self.field, self.num * o.num, self.den * o.den)

    def inverse(self):
        if self.is_zero():
            raise DivisionByZero("inverse of zero rational function")
        return RatFunElement.make(self.field, self.den, self.num)

    def is_zero(self):
        return self.num.is_zero()

    def is_laurent_monomial(self) -> bool:
        """True when the element is c * T^k for a constant c (single variable fields)."""
        return len([c for c in self.num.coeffs if not c.is_zero()]) == 1 and len(
            [c for c in self.den.coeffs if not c.is_zero()]
        ) == 1

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.field.from_int(other)
        return (
            isinstance(other, RatFunElement)
            and self.field == other.field
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        v = self.field.var

        def show(poly):
            parts = []
            for i, c in enumerate(poly.coeffs):
                if c.is_zero():
                    continue
                parts.append(f"({c!r})" if i == 0 else f"({c!r})*{v}^{i}")
            return " + ".join(parts) or "0"

        if self.den.degree == 0:
            return show(self.num)
        return f"[{show(self.num)}]/[{show(self.den)}]"


# ---------------------------------------------------------------------------
# simple extensions
# ---------------------------------------------------------------------------


def _is_irreducible(m: Poly) -> bool:
    F = m.field
    if m.degree == 1:
        return True
    if isinstance(F, FiniteField):
        return _rabin_irreducible(m, F.q)
    if isinstance(F, SimpleExtension) and F.is_finite:
        return _rabin_irreducible(m, F.size)
    if isinstance(F, RationalFunctionField):
        p = F.p
        nonzero = [(i, c) for i, c in enumerate(m.coeffs) if not c.is_zero()]
        # purely inseparable binomial X^(p^s) - c
        if len(nonzero) == 2 and nonzero[0][0] == 0:
            d = nonzero[1][0]
            s = 0
            while d % p == 0:
                d //= p
                s += 1
            if d == 1 and s >= 1:
                return F.pth_root(-nonzero[0][1]) is None
        # constant coefficients: irreducible over F_q(T) iff over F_q
        const = F.constant_field
        consts = []
        for c in m.coeffs:
            if c.num.degree > 0 or c.den.degree > 0:
                break
            inner = c.num.coeff(0)
            while not isinstance(inner, FFElement):
                if inner.num.degree > 0 or inner.den.degree > 0:
                    break
                inner = inner.num.coeff(0)
            else:
                consts.append(inner)
                continue
            break
        if len(consts) == len(m.coeffs):
            return _rabin_irreducible(Poly(const, consts), const.q)
    raise Unsupported("irreducibility check not available for this polynomial")


class SimpleExtension(Field):
    """base[X]/(m) for a monic irreducible m."""

    def __init__(self, base: Field, minpoly, gen_name: str = "a"):
        m = minpoly if isinstance(minpoly, Poly) else Poly(base, minpoly)
        if not m.is_monic():
            raise NotMonic("minimal polynomial must be monic")
        if m.degree < 1:
            raise ValidationError("minimal polynomial must be nonconstant", "minpoly")
        if not _is_irreducible(m):
            raise ValidationError("minimal polynomial is reducible over its base", "minpoly")
        self.base, self.minpoly, self.gen_name = base, m, gen_name
        self.p = base.p

    @property
    def degree(self) -> int:
        return self.minpoly.degree

    @property
    def is_finite(self) -> bool:
        return isinstance(self.base, FiniteField) or (
            isinstance(self.base, SimpleExtension) and self.base.is_finite
        )

    @property
    def size(self) -> int:
        if not self.is_finite:
            raise Unsupported("infinite field has no size")
        base_size = self.base.q if isinstance(self.base, FiniteField) else self.base.size
        return base_size**self.degree

    @property
    def imperfection_degree(self) -> int:
        # |k : k^p| is unchanged by finite extensions
        return self.base.imperfection_degree

    def from_int(self, n):
        return ExtElement(self, Poly(self.base, [self.base.from_int(n)]))

    def coerce(self, x):
        if isinstance(x, ExtElement) and x.field == self:
            return x
        if isinstance(x, int):
            return self.from_int(x)
        if isinstance(x, FieldElement):
            return ExtElement(self, Poly(self.base, [self.base.coerce(x)]))
        return super().coerce(x)

    def gen(self):
        return ExtElement(self, Poly.x(self.base) % self.minpoly)

    def element(self, coeffs):
        return ExtElement(self, Poly(self.base, coeffs) % self.minpoly)

    def pth_root(self, x):
        if self.is_finite:
            return x ** (self.size // self.p)
        raise Unsupported("p-th roots in extensions of rational function fields")

    def __eq__(self, other):
        return isinstance(other, SimpleExtension) and self.base == other.base and self.minpoly == other.minpoly

    def __hash__(self):
        return hash(("EXT", self.base, self.minpoly))

    def __repr__(self):
        return f"{self.base!r}[{self.gen_name}]/({self.minpoly!r})"


class ExtElement(FieldElement):
    __slots__ = ("field", "poly")

    def __init__(self, field, poly):
        self.field, self.poly = field, poly

    def __add__(self, other):
        o = self._check(other)
        return ExtElement(self.field, self.poly + o.poly)

    def __sub__(self, other):
        o = self._check(other)
        return ExtElement(self.field, self.poly - o.poly)

    def __neg__(self):
        return ExtElement(self.field, -self.poly)

    def __mul__(self, other):
        o = self._check(other)
        return ExtElement(self.field, (self.poly * o.poly) % self.field.minpoly)

    def inverse(self):
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        # extended Euclid: s*poly + t*m = 1
        m = self.field.minpoly
        r0, r1 = m, self.poly
        s0, s1 = Poly(m.field, []), Poly(m.field, [m.field.one()])
        while not r1.is_zero():
            q, r = divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
        inv_lead = r0.lead().inverse()
        return ExtElement(self.field, (s0 * inv_lead) % m)

    def is_zero(self):
        return self.poly.is_zero()

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.field.from_int(other)
        return isinstance(other, ExtElement) and self.field == other.field and self.poly == other.poly

    def __hash__(self):
        return hash(self.poly)

    def __repr__(self):
        return f"<{self.poly!r}>"


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------


def rf_arith(op: str, x, y=None):
    """Dispatch helper: ``op`` in {add, mul, inv, pow}; ``y`` is an int for pow."""
    if op == "add":
        if y.field != x.field:
            raise FieldMismatch("operands live in different fields")
        return x + y
    if op == "mul":
        if y.field != x.field:
            raise FieldMismatch("operands live in different fields")
        return x * y
    if op == "inv":
        return x.inverse()
    if op == "pow":
        return x ** int(y)
    raise ValueError(f"unknown op {op}")


def pth_root_test(x):
    """Return y with y**p == x if it exists in x's field, else None."""
    if x.is_zero():
        return x
    return x.field.pth_root(x)


def separable_split(m: Poly) -> tuple[Poly, int]:
    """Write m(X) = m_sep(X^(p^s)) with s maximal."""
    if not m.is_monic():
        raise NotMonic("separable_split needs a monic polynomial")
    if m.degree < 1:
        raise ValidationError("polynomial must be nonconstant")
    p = m.field.p
    s = 0
    cs = list(m.coeffs)
    while len(cs) > 1 and all(c.is_zero() for i, c in enumerate(cs) if i % p):
        cs = cs[::p]
        s += 1
    return Poly(m.field, cs), s


def imperfection_degree(field: Field) -> int:
    return field.imperfection_degree
