"""Monogenic Galois p-extensions L = K[X]/(f) with an explicit group action.

An extension is stored as the ring K[X]/(f) together with the images
g_sigma(X) of the primitive element under each automorphism.  Nothing about
the action is discovered by root finding: it is supplied (explicitly or by a
closed-form family) and then verified.

Valuations in L come from norms: for z in L, v_L(z) = e * v_K(N(z)) / n,
with N(z) the product of the Galois conjugates of z.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from math import lcm

from .cdvf import LocalElement, LocalField, MixedField, LaurentField, PrecisionExhausted
from .coeffield import Poly, RationalFunctionField, separable_split
from .errors import (
    ActionNotClosed,
    DegreeMismatch,
    GeneratorSearchFailed,
    InvariantsUncertified,
    NotARoot,
    NotCaseIII,
    NotPExtension,
    Unsupported,
    ValidationError,
)
from .groups import Group, parse_group
from dataclasses import dataclass, field


class CaseLabel(str, Enum):
    I = "I"
    II = "II"
    III = "III"
    NOT_WELL_RAMIFIED = "NotWellRamified"
    UNDETERMINED = "Undetermined"


# ---------------------------------------------------------------------------
# arithmetic in K[X]/(f)
# ---------------------------------------------------------------------------


class LRing:
    """K[X]/(f) for a monic f, elements as coordinate tuples in 1, x, ..., x^(n-1)."""

    def __init__(self, K: LocalField, f: list):
        self.K = K
        self.f = [K.coerce(c) for c in f]
        if not self.f[-1] == K.one() or self.f[-1].is_zero():
            raise ValidationError("minimal polynomial must be monic", "minpoly")
        self.n = len(self.f) - 1
        if self.n < 1:
            raise DegreeMismatch("minimal polynomial has degree 0")

    def element(self, coords) -> "LElement":
        K = self.K
        cs = [K.coerce(c) for c in coords]
        if len(cs) > self.n:
            return self.from_poly(cs)
        cs += [K.zero()] * (self.n - len(cs))
        return LElement(self, tuple(cs))

    def from_poly(self, coeffs) -> "LElement":
        """Reduce a K-polynomial (low degree first) modulo f."""
        cs = [self.K.coerce(c) for c in coeffs]
        n = self.n
        for k in range(len(cs) - 1, n - 1, -1):
            c = cs[k]
            if not c.is_zero():
                for j in range(n):
                    if not self.f[j].is_zero():
                        cs[k - n + j] = cs[k - n + j] - c * self.f[j]
        cs = cs[:n] + [self.K.zero()] * max(0, n - len(cs))
        return LElement(self, tuple(cs))

    def zero(self):
        return self.element([])

    def one(self):
        return self.element([1])

    def x(self):
        return self.from_poly([0, 1])

    def const(self, c):
        return self.element([c])

    def eval_poly(self, coeffs, z: "LElement") -> "LElement":
        acc = self.zero()
        for c in reversed(list(coeffs)):
            acc = acc * z + self.const(c)
        return acc


class LElement:
    __slots__ = ("ring", "coords")

    def __init__(self, ring: LRing, coords: tuple):
        self.ring, self.coords = ring, coords

    def _co(self, other) -> "LElement":
        if isinstance(other, LElement):
            return other
        return self.ring.const(other)

    def __add__(self, other):
        other = self._co(other)
        return LElement(self.ring, tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        return LElement(self.ring, tuple(-a for a in self.coords))

    def __sub__(self, other):
        return self + (-self._co(other))

    def __rsub__(self, other):
        return self._co(other) - self

    def __mul__(self, other):
        if not isinstance(other, LElement):
            c = self.ring.K.coerce(other)
            return LElement(self.ring, tuple(a * c for a in self.coords))
        n = self.ring.n
        K = self.ring.K
        prod = [K.zero()] * (2 * n - 1)
        for i, a in enumerate(self.coords):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coords):
                if not b.is_zero():
                    prod[i + j] = prod[i + j] + a * b
        return self.ring.from_poly(prod)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not supported in K[X]/(f)")
        result, base = self.ring.one(), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords)

    def __eq__(self, other):
        return (self - self._co(other)).is_zero()

    __hash__ = None

    def in_base(self) -> LocalElement:
        """The K-element this is, provided the higher coordinates vanish at precision."""
        for c in self.coords[1:]:
            if not c.is_zero():
                raise ValidationError("element does not lie in the base field")
        return self.coords[0]

    def min_prec(self) -> int:
        return min(c.prec for c in self.coords)

    def __repr__(self):
        return "LElement(" + ", ".join(repr(c) for c in self.coords) + ")"


def solve_linear(rows, rhs):
    """Solve the (possibly overdetermined) system rows * y = rhs over K.

    Pivots are chosen by smallest certified valuation.  Returns y; the caller
    verifies the solution.
    """
    m, d = len(rows), len(rows[0])
    A = [list(r) + [b] for r, b in zip(rows, rhs)]
    used = set()
    pivots = []
    for col in range(d):
        best, bv = None, None
        for r in range(m):
            if r in used:
                continue
            v, ok = A[r][col].val_or_bound()
            if ok and (bv is None or v < bv):
                best, bv = r, v
        if best is None:
            raise PrecisionExhausted("linear system is singular at this precision")
        used.add(best)
        pivots.append(best)
        inv = A[best][col].inverse()
        A[best] = [x * inv for x in A[best]]
        for r in range(m):
            if r != best and not A[r][col].is_zero():
                c = A[r][col]
                A[r] = [x - c * y for x, y in zip(A[r], A[best])]
    return [A[pivots[col]][d] for col in range(d)]


# ---------------------------------------------------------------------------
# Galois extensions
# ---------------------------------------------------------------------------


class GaloisExtension:
    """A verified monogenic Galois extension L/K.

    ``actions[i]`` is the image of the primitive element x under sigma_i,
    as an element of K[X]/(f); ``actions[0]`` is x itself.  ``generator`` is
    the declared monogenic generator a of O_L (an element of K[X]/(f));
    ramification data is computed at a.
    """

    def __init__(
        self,
        K: LocalField,
        f: list,
        actions: list,
        group: str | None = None,
        generator=None,
        name: str = "",
        meta: dict | None = None,
    ):
        self.K = K
        self.p = K.p
        self.L = LRing(K, f)
        self.n = self.L.n
        self.name = name
        self.meta = dict(meta or {})
        L = self.L
        acts = [a if isinstance(a, LElement) else L.from_poly(a) for a in actions]
        if len(acts) != self.n:
            raise DegreeMismatch(f"{len(acts)} automorphisms supplied for degree {self.n}")
        x = L.x()
        if not acts[0] == x:
            # put the identity first
            idx = next((i for i, a in enumerate(acts) if a == x), None)
            if idx is None:
                raise ActionNotClosed("identity automorphism missing from the action")
            acts.insert(0, acts.pop(idx))
        self.actions = acts
        self.group_spec = group or f"cyclic:{self.n}"
        self._powers = [self._power_table(g) for g in acts]
        self._verify_roots()
        self.group = Group(self._group_table())
        self._verify_group()
        self.generator = L.x() if generator is None else (
            generator if isinstance(generator, LElement) else L.from_poly(generator)
        )
        self._certify()

    # -- action --------------------------------------------------------------

    def _power_table(self, g):
        pw = [self.L.one()]
        for _ in range(1, self.n):
            pw.append(pw[-1] * g)
        return pw

    def apply(self, i: int, z: LElement) -> LElement:
        """sigma_i(z)."""
        if i == 0:
            return z
        acc = self.L.zero()
        for c, pw in zip(z.coords, self._powers[i]):
            if not c.is_zero():
                acc = acc + pw * c
        return acc

    def _verify_roots(self):
        L = self.L
        for i, g in enumerate(self.actions):
            r = L.eval_poly(L.f, g)
            if not r.is_zero():
                raise NotARoot(f"action polynomial {i} is not a root of the minimal polynomial")
        for i in range(self.n):
            for j in range(i):
                if self.actions[i] == self.actions[j]:
                    raise ActionNotClosed(f"automorphisms {j} and {i} coincide")

    def _group_table(self):
        n = self.n
        table = [[None] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                # sigma_i sigma_j (x) = sigma_i(g_j(x))
                img = self.apply(i, self.actions[j])
                k = next((k for k in range(n) if self.actions[k] == img), None)
                if k is None:
                    raise ActionNotClosed(f"sigma_{i} o sigma_{j} matches no listed automorphism")
                table[i][j] = k
        return table

    def _verify_group(self):
        n = self.n
        q = n
        while q % self.p == 0:
            q //= self.p
        if q != 1:
            raise NotPExtension(f"degree {n} is not a power of p = {self.p}")
        if self.group_spec == "auto":
            if not self.group.is_abelian():
                raise ActionNotClosed("action does not generate an abelian group")
            return
        claimed = parse_group(self.group_spec)
        if sum(claimed.values()) != n:
            raise DegreeMismatch(f"claimed group {self.group_spec} has order {sum(claimed.values())}, degree is {n}")
        if self.group.order_profile() != claimed or not self.group.is_abelian():
            raise ActionNotClosed(f"action does not generate the claimed group {self.group_spec}")

    # -- norms and valuations ------------------------------------------------

    def conjugates(self, z: LElement) -> list[LElement]:
        return [self.apply(i, z) for i in range(self.n)]

    def norm(self, z: LElement) -> LocalElement:
        acc = self.L.one()
        for c in self.conjugates(z):
            acc = acc * c
        return acc.in_base()

    def charpoly(self, z: LElement) -> list:
        """Coefficients (low first) of prod (Y - sigma z), each checked to lie in K."""
        L = self.L
        poly = [L.one()]
        for c in self.conjugates(z):
            nxt = [L.zero()] * (len(poly) + 1)
            for k, a in enumerate(poly):
                nxt[k + 1] = nxt[k + 1] + a
                nxt[k] = nxt[k] - a * c
            poly = nxt
        return [a.in_base() for a in poly]

    def nu(self, z: LElement) -> Fraction:
        """Valuation of z normalised so that v(pi_K) = 1."""
        return Fraction(self.norm(z).valuation(), self.n)

    def v_L(self, z: LElement) -> int:
        w = self.nu(z) * self.e
        if w.denominator != 1:
            raise InvariantsUncertified(f"valuation {w} in L is not an integer")
        return int(w)

    def v_L_bound(self, z: LElement) -> tuple[int, bool]:
        """(v_L(z), True) when certified, else (lower bound, False).

        The bound uses integrality of the primitive element: every coordinate
        c_k of z contributes at least e * vlow(c_k).
        """
        if not z.is_zero():
            try:
                return self.v_L(z), True
            except PrecisionExhausted:
                pass
        return self.e * min(c.vlow() for c in z.coords), False

    # -- invariants ----------------------------------------------------------

    def _certify(self):
        K, L = self.K, self.L
        a = self.generator
        F = self.charpoly(a)
        for c in F:
            if c.vlow() < 0:
                raise ValidationError("declared generator is not integral")
        R = K.residue_field
        Fbar = Poly(R, [c.residue() for c in F])
        g = Fbar
        while True:
            root = _poly_pth_root(g, self.p)
            if root is None:
                break
            g = root
        self.res_minpoly = g
        G = L.eval_poly([K.lift(c) for c in g.coeffs], a)
        nu_G = self.nu(G) if g.degree < self.n else None
        vals = [Fraction(1)] + ([nu_G] if nu_G is not None else [])
        e = lcm(*[v.denominator for v in vals])
        if e * g.degree != self.n:
            raise InvariantsUncertified(
                f"certified e = {e} and residue degree {g.degree} do not multiply to {self.n}"
            )
        self.e = e
        if e == 1:
            self.uniformizer = L.const(K.uniformizer())
            self.monogenic = True
        else:
            self.monogenic = nu_G == Fraction(1, e)
            self.uniformizer = G if self.monogenic else None
        sep, s = separable_split(g)
        self.f_sep = sep.degree
        self.f_ins = self.p**s
        self.f = self.f_sep * self.f_ins

    def invariants(self) -> tuple[int, int, int]:
        return self.e, self.f_sep, self.f_ins

    def different_valuation(self) -> int:
        """v_L(f'(x)) at the primitive element; the different when x generates O_L."""
        L = self.L
        fprime = [c * i for i, c in enumerate(L.f)][1:]
        return self.v_L(L.eval_poly(fprime, L.x()))

    def generator_different(self) -> int:
        """v_L of F'(a) for the characteristic polynomial F of the declared generator."""
        F = self.charpoly(self.generator)
        Fp = [c * i for i, c in enumerate(F)][1:]
        return self.v_L(self.L.eval_poly(Fp, self.generator))

    def __repr__(self):
        return f"GaloisExtension({self.name or '?'}, n={self.n}, e={self.e}, f_sep={self.f_sep}, f_ins={self.f_ins})"


def _poly_pth_root(g: Poly, p: int):
    """h with h**p == g, or None."""
    if g.degree < 1:
        return None
    F = g.field
    out = []
    for k, c in enumerate(g.coeffs):
        if k % p:
            if not c.is_zero():
                return None
            continue
        if c.is_zero():
            out.append(F.zero())
            continue
        try:
            r = F.pth_root(c)
        except Unsupported:
            return None
        if r is None:
            return None
        out.append(r)
    return Poly(F, out)


def ext_invariants(E: GaloisExtension) -> tuple[int, int, int]:
    return E.invariants()


# ---------------------------------------------------------------------------
# closed-form families
# ---------------------------------------------------------------------------


def _small_coordinate_elements(C, bound: int = 2):
    from itertools import product as iproduct

    dim = C._dim
    rng = [0] + [s * k for k in range(1, bound + 1) for s in (1, -1)]
    for cs in iproduct(rng, repeat=dim):
        yield C.element(list(cs))


def root_of_unity(K: LocalField, order: int) -> LocalElement:
    """A primitive root of unity of the given p-power order lying in K.

    Found by a deterministic search over small coordinates in the
    uniformizer basis and verified by exact exponentiation.
    """
    if order == 1:
        return K.one()
    if isinstance(K, LaurentField):
        raise ValidationError(f"no primitive {order}-th root of unity in characteristic {K.p}", "action")
    C = K.coeff if isinstance(K, MixedField) else K
    for z in _small_coordinate_elements(C):
        if z.is_zero():
            continue
        if (z**order - 1).is_zero() and not (z ** (order // K.p) - 1).is_zero():
            return K.constant(z) if isinstance(K, MixedField) else z
    raise ValidationError(f"K contains no primitive {order}-th root of unity", "action")


def kummer_model(K: LocalField, f: list, order: int | None = None):
    """Actions x -> zeta^j x for f = X^n - c."""
    n = len(f) - 1
    if any(not K.coerce(c).is_zero() for c in f[1:-1]):
        raise ValidationError("Kummer family needs a binomial X^n - c", "minpoly")
    zeta = root_of_unity(K, order or n)
    L = LRing(K, f)
    x = L.x()
    acts, z = [], K.one()
    for _ in range(n):
        acts.append(x * z)
        z = z * zeta
    return acts, {"zeta": zeta}


def artin_schreier_model(K: LaurentField, a: LocalElement):
    """Integral model of x^p - x = a with a uniformizing (or residue) generator.

    Returns (f, actions, generator, info).  Leading terms that are p-th powers
    are removed first, so the pole order m of the reduced right-hand side is
    either prime to p or carries a non-p-th-power leading coefficient.
    """
    if not isinstance(K, LaurentField):
        raise Unsupported("Artin-Schreier family is implemented over k((t)) only")
    p = K.p
    t = K.uniformizer()
    R = K.residue_field
    a = K.coerce(a)
    while True:
        m = -a.valuation()
        if m <= 0:
            raise Unsupported("right-hand side without a pole gives an unramified or split extension")
        if m % p:
            break
        root = R.pth_root(a.terms[-m])
        if root is None:
            break
        b = K.lift(root) * t ** (-(m // p))
        a = a - b**p + b
    c = -(-m // p)
    f = [-(t ** (c * p)) * a, -(t ** (c * (p - 1)))] + [K.zero()] * (p - 2) + [K.one()]
    L = LRing(K, f)
    y = L.x()
    acts = [y + t**c * j for j in range(p)]
    if m % p == 0:
        gen = y
    else:
        ap = next(k for k in range(1, p) if (m * k + 1) % p == 0)
        b = (1 + m * ap) // p
        gen = L.from_poly([0] * ap + [t ** (b - c * ap)])
    return f, acts, gen, {"reduced_rhs": a, "pole_order": m, "clearing_exponent": c}


def cyclotomic_model(K: LocalField, f: list, order: int):
    """Actions x -> x^(k) for k in the kernel of (Z/p^k)^* -> (Z/p^(k-1))^*."""
    p = K.p
    L = LRing(K, f)
    x = L.x()
    step = 1 + order // p
    acts = [x ** pow(step, j, order) for j in range(len(f) - 1)]
    return acts, {"order": order}


# ---------------------------------------------------------------------------
# cases
# ---------------------------------------------------------------------------


def classify_case(E: GaloisExtension) -> CaseLabel:
    from .ramfilt import well_ramified_verdict

    return case_from_invariants(E.e, E.f_sep, E.f_ins, lambda: well_ramified_verdict(E))


def case_from_invariants(e: int, f_sep: int, f_ins: int, verdict) -> CaseLabel:
    if f_ins == 1:
        return CaseLabel.I
    if e == 1 and f_sep == 1:
        return CaseLabel.II
    try:
        return CaseLabel.III if verdict() else CaseLabel.NOT_WELL_RAMIFIED
    except PrecisionExhausted:
        return CaseLabel.UNDETERMINED


# ---------------------------------------------------------------------------
# fixed fields
# ---------------------------------------------------------------------------


class FixedField:
    """T = L^H as its own extension of K, with the embedding data back into L."""

    def __init__(self, E, H, T, beta, proj):
        self.E, self.H, self.T, self.beta, self.proj = E, frozenset(H), T, beta, proj

    @property
    def e_top(self) -> int:
        return self.E.e // self.T.e

    @property
    def f_sep_top(self) -> int:
        return self.E.f_sep // self.T.f_sep

    @property
    def f_ins_top(self) -> int:
        return self.E.f_ins // self.T.f_ins


def _trivial_extension(K: LocalField) -> GaloisExtension:
    return GaloisExtension(K, [0, 1], [[0, 1]], "trivial", name="base")


def _group_spec_of(group: Group) -> str:
    if group.n == 1:
        return "trivial"
    if group.is_cyclic():
        return f"cyclic:{group.n}"
    return "auto"


def _h_trace(E, H, z):
    acc = E.L.zero()
    for h in H:
        acc = acc + E.apply(h, z)
    return acc


def _h_norm(E, H, z):
    acc = E.L.one()
    for h in H:
        acc = acc * E.apply(h, z)
    return acc


def _fixed_field_candidates(E, H):
    a = E.generator
    pw = E.L.one()
    for j in range(1, E.n):
        pw = pw * a
        yield f"trace(a^{j})", _h_trace(E, H, pw)
    for label, c in (("0", 0), ("1", 1), ("-1", -1), ("pi", E.K.uniformizer())):
        yield f"norm(a+{label})", _h_norm(E, H, a + E.L.const(c))


def _try_fixed_generator(E, H, beta, reps):
    L = E.L
    for h in H:
        if not E.apply(h, beta) == beta:
            return None
    conj = [E.apply(r, beta) for r in reps]
    for i in range(len(conj)):
        for j in range(i):
            if conj[i] == conj[j]:
                return None
    poly = [L.one()]
    for c in conj:
        nxt = [L.zero()] * (len(poly) + 1)
        for k, a in enumerate(poly):
            nxt[k + 1] = nxt[k + 1] + a
            nxt[k] = nxt[k] - a * c
        poly = nxt
    m = [a.in_base() for a in poly]
    if any(c.vlow() < 0 for c in m):
        return None
    d = len(reps)
    powers = [L.one()]
    for _ in range(1, d):
        powers.append(powers[-1] * beta)
    acts = []
    for c in conj:
        rows = [[pw.coords[r] for pw in powers] for r in range(E.n)]
        coeffs = solve_linear(rows, list(c.coords))
        check = L.zero()
        for ck, pw in zip(coeffs, powers):
            check = check + pw * ck
        if not check == c:
            return None
        acts.append(coeffs)
    return m, acts


def fixed_field(E: GaloisExtension, H) -> FixedField:
    """Monogenic model of L^H / K with its induced action.

    Candidates are H-traces of powers of the generator, then H-norms of small
    translates; each candidate is also reduced (residue subtracted, uniformizer
    powers divided out) until it certifies as a generator of the valuation ring.
    """
    G = E.group
    H = frozenset(H)
    if H not in set(G.subgroups()):
        raise ValidationError("not a subgroup")
    if len(H) == 1:
        return FixedField(E, H, E, E.generator, list(range(E.n)))
    if len(H) == E.n:
        return FixedField(E, H, _trivial_extension(E.K), E.L.zero(), [0] * E.n)
    cosets = G.cosets(H)
    reps = [min(c) for c in cosets]
    K = E.K
    for label, beta in _fixed_field_candidates(E, H):
        for _ in range(4):
            try:
                res = _try_fixed_generator(E, H, beta, reps)
            except (PrecisionExhausted, ValidationError):
                res = None
            if res is None:
                break
            m, acts = res
            try:
                T = GaloisExtension(K, m, acts, "auto", name=f"{E.name}^H", meta={"candidate": label})
            except (InvariantsUncertified, ActionNotClosed, NotARoot):
                break
            if T.monogenic:
                proj = [next(k for k, c in enumerate(cosets) if s in c) for s in range(E.n)]
                return FixedField(E, H, T, beta, proj)
            # reduce the candidate and retry
            g = T.res_minpoly
            if g.degree == 1:
                beta = beta + E.L.const(K.lift(g.coeffs[0]))
            shifted = T.L.x() + T.L.const(K.lift(g.coeffs[0])) if g.degree == 1 else T.L.x()
            try:
                k = int(T.nu(shifted))
            except PrecisionExhausted:
                break
            if k >= 1:
                beta = beta * K.uniformizer() ** (-k)
            elif g.degree != 1:
                break
    raise GeneratorSearchFailed(f"no generator found for the fixed field of {sorted(H)}")


# ---------------------------------------------------------------------------
# adjoining a p-power root of the residue variable
# ---------------------------------------------------------------------------


class Compositum:
    def __init__(self, E, M, LM, alpha_name, f, correspondence):
        self.E, self.M, self.LM = E, M, LM
        self.alpha_name, self.f = alpha_name, f
        self.correspondence = correspondence


def _substitute_power(R2, elt, f):
    F = R2.coeff_field

    def spread(poly):
        cs = [F.zero()] * (f * max(0, poly.degree) + 1)
        for k, c in enumerate(poly.coeffs):
            cs[k * f] = c
        return Poly(F, cs)

    from .coeffield import RatFunElement

    return RatFunElement.make(R2, spread(elt.num), spread(elt.den))


def adjoin_variable_root(K: LocalField, f: int):
    """M = K(beta) with beta^f = (lift of the residue variable); returns (M, embed)."""
    from .cdvf import LaurentElement, MixedElement

    if isinstance(K, MixedField):
        M = MixedField(K.coeff, K.var + "'", K.precision)

        def embed(z):
            return MixedElement(M, {k * f: v for k, v in z.terms.items()}, z.prec)

        return M, embed
    if isinstance(K, LaurentField) and isinstance(K.residue_field, RationalFunctionField):
        R = K.residue_field
        if isinstance(R.coeff_field, RationalFunctionField):
            raise Unsupported("root adjunction is implemented for one residue variable")
        R2 = RationalFunctionField(R.coeff_field, R.var + "'")
        M = LaurentField(R2, K.var, K.precision)

        def embed(z):
            return LaurentElement(M, {k: _substitute_power(R2, c, f) for k, c in z.terms.items()}, z.prec)

        return M, embed
    raise Unsupported(f"cannot adjoin a root of the residue variable over {K!r}")


def kummer_compositum(E: GaloisExtension) -> Compositum:
    """Base change of a case III extension to M = K(alpha^(1/f)), alpha the residue variable.

    The same minimal polynomial and action define LM over M; every sigma of
    L/K restricts from the automorphism of LM/M with the same action
    polynomial, so the correspondence is the identity on indices.
    """
    from .ramfilt import case_label

    label = case_label(E)
    if label != CaseLabel.III:
        raise NotCaseIII(f"extension is in case {label.value}, not III")
    f = E.f_ins
    M, embed = adjoin_variable_root(E.K, f)
    lm_f = [embed(c) for c in E.L.f]
    lm_acts = [[embed(c) for c in g.coords] for g in E.actions]
    lm_gen = [embed(c) for c in E.generator.coords]
    LM = GaloisExtension(M, lm_f, lm_acts, E.group_spec, lm_gen, name=f"{E.name}*M")
    if LM.f_ins != 1:
        from .errors import RamificationAssertion

        raise RamificationAssertion("compositum is not in case I")
    var = E.K.var if isinstance(E.K, MixedField) else E.K.residue_field.var
    return Compositum(E, M, LM, var, f, list(range(E.n)))


# ---------------------------------------------------------------------------
# building from a description
# ---------------------------------------------------------------------------


@dataclass
class ExtensionSpec:
    """Parsed extension description; ``action`` is a builtin tag or explicit polynomials."""

    base: LocalField
    minpoly: list | None
    action: object
    group: str | None = None
    generator: list | None = None
    rhs: object = None
    order: int | None = None
    name: str = ""
    meta: dict = field(default_factory=dict)


def build_extension(spec: ExtensionSpec) -> GaloisExtension:
    K = spec.base
    f, gen = spec.minpoly, spec.generator
    meta = {}
    if spec.action == "builtin:artin_schreier":
        p = K.p
        if spec.rhs is not None:
            rhs = spec.rhs
        else:
            if f is None or len(f) != p + 1:
                raise ValidationError("Artin-Schreier family needs X^p - X - a", "minpoly")
            shape_ok = (K.coerce(f[1]) + 1).is_zero() and all(K.coerce(c).is_zero() for c in f[2:-1])
            if not shape_ok:
                raise ValidationError("Artin-Schreier family needs X^p - X - a", "minpoly")
            rhs = -K.coerce(f[0])
        f, acts, model_gen, meta = artin_schreier_model(K, rhs)
        if gen is None:
            gen = model_gen
        group = spec.group or f"cyclic:{p}"
    elif spec.action == "builtin:kummer":
        if f is None:
            raise ValidationError("Kummer family needs a minimal polynomial", "minpoly")
        acts, meta = kummer_model(K, f, spec.order)
        group = spec.group or f"cyclic:{len(f) - 1}"
    elif spec.action == "builtin:cyclotomic":
        if f is None or spec.order is None:
            raise ValidationError("cyclotomic family needs a minimal polynomial and the order p^k", "order")
        acts, meta = cyclotomic_model(K, f, int(spec.order))
        group = spec.group or f"cyclic:{len(f) - 1}"
    elif isinstance(spec.action, list):
        if f is None:
            raise ValidationError("explicit action needs a minimal polynomial", "minpoly")
        acts = spec.action
        group = spec.group or f"cyclic:{len(f) - 1}"
    else:
        raise ValidationError(f"unknown action {spec.action!r}", "action")
    return GaloisExtension(K, f, acts, group, gen, name=spec.name, meta={**spec.meta, **meta})
