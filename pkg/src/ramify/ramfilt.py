"""Ramification functions i_G, s_G, the filtrations built from them, and the
modified Hasse-Herbrand function.

All quantities are exact: integers (or ``INF`` at the identity) and
``Fraction`` values for the piecewise-linear functions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import ceil, inf

from .errors import (
    EquivalenceViolation,
    NoDecomposition,
    PrecisionExhausted,
    RamificationAssertion,
    Unsupported,
)
from .extension import (
    CaseLabel,
    FixedField,
    GaloisExtension,
    case_from_invariants,
    fixed_field,
)
from .groups import Group

INF = inf


# ---------------------------------------------------------------------------
# piecewise-linear functions on [0, oo)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PiecewiseLinear:
    """Continuous f with f(0) = 0, slope ``slopes[k]`` on [breaks[k-1], breaks[k]].

    ``breaks`` are the interior breakpoints in increasing order; the last
    slope continues to infinity.
    """

    breaks: tuple
    slopes: tuple

    @classmethod
    def canonical(cls, breaks, slopes) -> "PiecewiseLinear":
        bs, ss = [], [Fraction(slopes[0])]
        for b, s in zip(breaks, slopes[1:]):
            s = Fraction(s)
            if s == ss[-1]:
                continue
            bs.append(Fraction(b))
            ss.append(s)
        return cls(tuple(bs), tuple(ss))

    def __call__(self, u) -> Fraction:
        u = Fraction(u)
        if u < 0:
            raise ValueError("defined on [0, oo) only")
        acc, prev = Fraction(0), Fraction(0)
        for b, s in zip(self.breaks, self.slopes):
            if u <= b:
                return acc + s * (u - prev)
            acc += s * (b - prev)
            prev = b
        return acc + self.slopes[-1] * (u - prev)

    def inverse(self, w) -> Fraction:
        w = Fraction(w)
        acc, prev = Fraction(0), Fraction(0)
        for b, s in zip(self.breaks, self.slopes):
            top = acc + s * (b - prev)
            if w <= top:
                return prev + (w - acc) / s
            acc, prev = top, b
        return prev + (w - acc) / self.slopes[-1]

    def compose(self, inner: "PiecewiseLinear") -> "PiecewiseLinear":
        """self o inner."""
        pts = set(inner.breaks) | {inner.inverse(b) for b in self.breaks}
        pts = sorted(p for p in pts if p > 0)
        probes = [Fraction(0)] + pts + [(pts[-1] if pts else Fraction(0)) + 1]
        slopes = []
        for lo, hi in zip(probes, probes[1:]):
            slopes.append((self(inner(hi)) - self(inner(lo))) / (hi - lo))
        return PiecewiseLinear.canonical(pts, slopes)

    def to_json(self):
        return {"breaks": list(self.breaks), "slopes": list(self.slopes)}


# ---------------------------------------------------------------------------
# ramification data
# ---------------------------------------------------------------------------


@dataclass
class RamificationData:
    """i_G and s_G tables of an extension (or of a restriction L/L^H).

    ``D[sigma][m]`` for m in [0, period) is min v_L(sigma b - b) over an
    O_K-basis of M_L^m; beyond that D_{m+period} = D_m + period.
    """

    name: str
    group: Group
    elements: list
    i: dict
    s: dict
    D: dict
    period: int
    e: int
    f_sep: int
    f_ins: int
    p: int
    different: int | None = None
    extension: GaloisExtension | None = field(default=None, repr=False)

    @property
    def identity(self) -> int:
        return self.group.identity

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def nontrivial(self) -> list:
        return [g for g in self.elements if g != self.identity]

    def D_at(self, g, m: int):
        if g == self.identity:
            return INF
        q, r = divmod(m, self.period)
        return self.D[g][r] + q * self.period

    # filtrations

    def G_nm(self, n: int, m: int) -> frozenset:
        return frozenset(g for g in self.elements if self.D_at(g, m) >= n + m)

    def lower(self, k: int) -> frozenset:
        """Classical G_k = G_{k+1,0} = {i_G >= k+1}."""
        return frozenset(g for g in self.elements if self.i[g] >= k + 1)

    def H(self, k: int) -> frozenset:
        return self.G_nm(k, 1)

    def modified(self, t) -> frozenset:
        """G[t] = {i_G >= t}; for real t this is G[ceil(t)]."""
        t = ceil(Fraction(t))
        return frozenset(g for g in self.elements if self.i[g] >= t)

    def S(self, k: int) -> frozenset:
        return frozenset(g for g in self.elements if self.s[g] >= k)

    @cached_property
    def max_i(self) -> int:
        vals = [self.i[g] for g in self.nontrivial]
        return max(vals) if vals else 0

    @cached_property
    def jumps(self) -> list[int]:
        return [m for m in range(0, self.max_i + 1) if self.modified(m) != self.modified(m + 1)]

    @cached_property
    def t(self) -> int:
        """Largest modified jump (0 for the trivial extension)."""
        return self.jumps[-1] if self.jumps else 0

    @cached_property
    def herbrand(self) -> PiecewiseLinear:
        """Modified Hasse-Herbrand function from the closed form in the orders g_m."""
        top = self.max_i + 1
        slopes = [Fraction(len(self.modified(m + 1)), self.e) for m in range(top)]
        return PiecewiseLinear.canonical(list(range(1, top)), slopes)

    def sfun(self, u) -> Fraction:
        return self.herbrand(u)

    def sfun_sum(self, u) -> Fraction:
        """(1/e) sum_sigma min(i_G(sigma), u), computed independently of the closed form."""
        u = Fraction(u)
        return sum((u if g == self.identity else min(Fraction(self.i[g]), u) for g in self.elements),
                   Fraction(0)) / self.e

    def sfun_inverse(self, w) -> Fraction:
        return self.herbrand.inverse(w)

    def upper_jumps(self) -> list[Fraction]:
        return [self.sfun(m) for m in self.jumps]

    def upper_group(self, w) -> frozenset:
        """G(w) = G[sfun^{-1}(w)]."""
        return self.modified(self.sfun_inverse(w))

    def restrict(self, ff: FixedField) -> "RamificationData":
        """The data of L / L^H: same i, s and D on H; invariants divided."""
        H = sorted(ff.H)
        return RamificationData(
            name=f"{self.name}/H{H}",
            group=self.group,
            elements=H,
            i={g: self.i[g] for g in H},
            s={g: self.s[g] for g in H},
            D={g: self.D[g] for g in H if g != self.identity},
            period=self.period,
            e=ff.e_top,
            f_sep=ff.f_sep_top,
            f_ins=ff.f_ins_top,
            p=self.p,
            different=None,
            extension=None,
        )


def _basis_elements(E: GaloisExtension):
    """O_K-basis pieces a^i Pi^j (i < f, j < e) and their pi_K multiples."""
    if E.uniformizer is None:
        raise Unsupported("declared generator is not certified to generate the valuation ring")
    L, a, Pi = E.L, E.generator, E.uniformizer
    piK = L.const(E.K.uniformizer())
    apows = [L.one()]
    for _ in range(1, E.f):
        apows.append(apows[-1] * a)
    Pipows = [L.one()]
    for _ in range(1, E.e):
        Pipows.append(Pipows[-1] * Pi)
    return {(i, j, d): apows[i] * Pipows[j] * (piK if d else L.one())
            for i in range(E.f) for j in range(E.e) for d in (0, 1)}


def compute_ramification(E: GaloisExtension) -> RamificationData:
    """i_G at the declared generator and s_G by minimising over M_L^m bases."""
    cached = getattr(E, "_ramification", None)
    if cached is not None:
        return cached
    G = E.group
    a = E.generator
    idn = G.identity
    i_tab = {idn: INF}
    s_tab = {idn: INF}
    D = {}
    basis = _basis_elements(E) if E.n > 1 else {}
    for g in G.elements:
        if g == idn:
            continue
        i_tab[g] = E.v_L(E.apply(g, a) - a)
        # 1 and pi_K are fixed by every sigma and contribute +oo
        vals = {k: E.v_L_bound(E.apply(g, b) - b) for k, b in basis.items() if k[:2] != (0, 0)}
        Dm = []
        for m in range(E.e):
            sel = [vals[k] for k in vals if (k[2] == 0 and k[1] >= m) or (k[2] == 1 and k[1] < m)]
            best = min(sel)
            if not best[1]:
                raise PrecisionExhausted(f"minimum over the basis of M_L^{m} is not certified")
            Dm.append(best[0])
        D[g] = Dm
        if Dm[0] != i_tab[g]:
            raise RamificationAssertion(f"basis minimum {Dm[0]} differs from i_G = {i_tab[g]}")
        if i_tab[g] >= 1:
            s = min(Dm[m] - m for m in range(E.e))
            if s not in (i_tab[g] - 1, i_tab[g]):
                raise RamificationAssertion(f"s_G = {s} is not i_G or i_G - 1 (i_G = {i_tab[g]})")
        else:
            s = 0
        s_tab[g] = s
    R = RamificationData(
        name=E.name,
        group=G,
        elements=list(G.elements),
        i=i_tab,
        s=s_tab,
        D=D,
        period=E.e,
        e=E.e,
        f_sep=E.f_sep,
        f_ins=E.f_ins,
        p=E.p,
        different=E.generator_different() if E.n > 1 else 0,
        extension=E,
    )
    E._ramification = R
    return R


def compute_iG(E):
    R = compute_ramification(E)
    return dict(R.i)


def compute_sG(E):
    R = compute_ramification(E)
    return dict(R.s)


# ---------------------------------------------------------------------------
# filtration report
# ---------------------------------------------------------------------------


def filtrations(R: RamificationData, grid: tuple[int, int] | None = None) -> dict:
    last = R.t
    n_max, m_max = grid or (last + 2, R.period)
    lower, k = [], 0
    while True:
        Gk = R.lower(k)
        lower.append(sorted(Gk))
        if len(Gk) == 1 or k > last + 1:
            break
        k += 1
    return {
        "lower": lower,
        "G_nm": {f"{n},{m}": sorted(R.G_nm(n, m)) for n in range(n_max + 1) for m in range(m_max + 1)},
        "H": [sorted(R.H(k)) for k in range(last + 2)],
        "modified_orders": [len(R.modified(m)) for m in range(R.max_i + 2)],
        "jumps": list(R.jumps),
        "upper_jumps": R.upper_jumps(),
        "sfun": R.herbrand.to_json(),
    }


def filtration_identities(R: RamificationData, case: CaseLabel) -> dict:
    """Case-dependent identities between G_i and H_i, plus H_i >= G_i >= H_{i+1}."""
    top = R.t + 2
    sandwich = all(R.H(k) >= R.lower(k) >= R.H(k + 1) for k in range(top))
    if case == CaseLabel.I:
        ident = all(R.lower(k) == R.H(k) for k in range(top))
    else:
        ident = all(R.lower(k) == R.H(k + 1) for k in range(top))
    subgroups = set(R.group.subgroups())
    closed = all(R.lower(k) in subgroups and R.H(k) in subgroups for k in range(top))
    return {"sandwich": sandwich, "case_identity": ident, "subgroups": closed}


def ramification_inequalities(R: RamificationData) -> bool:
    for g in R.nontrivial:
        if R.i[g] >= 1 and not (R.s[g] <= R.i[g] <= R.s[g] + 1):
            return False
    return True


# ---------------------------------------------------------------------------
# Hilbert formula, Herbrand property, verdict
# ---------------------------------------------------------------------------


def different_and_hilbert(R: RamificationData) -> dict:
    vd = R.different
    sum_i = sum(R.i[g] for g in R.nontrivial)
    levels, k = 0, 0
    while True:
        Gk = R.lower(k)
        if len(Gk) == 1:
            break
        levels += len(Gk) - 1
        k += 1
    return {
        "different": vd,
        "sum_iG": sum_i,
        "sum_levels": levels,
        "holds": vd == sum_i == levels,
    }


def _fixed_fields(E: GaloisExtension) -> dict:
    cache = getattr(E, "_fixed_fields", None)
    if cache is None:
        cache = {H: fixed_field(E, H) for H in E.group.subgroups()}
        E._fixed_fields = cache
    return cache


def herbrand_check(E: GaloisExtension) -> tuple[bool, list]:
    """i_{G/H}(tau) = (1/e(L|L^H)) sum_{sigma in tau H} i_G(sigma) for all H and tau."""
    R = compute_ramification(E)
    ledger = []
    ok = True
    for H, ff in _fixed_fields(E).items():
        RT = compute_ramification(ff.T)
        for tau in RT.nontrivial:
            lhs = Fraction(RT.i[tau])
            rhs = Fraction(sum(R.i[s] for s in R.elements if ff.proj[s] == tau), ff.e_top)
            ledger.append({"H": sorted(H), "tau": tau, "quotient": lhs, "average": rhs, "ok": lhs == rhs})
            ok &= lhs == rhs
    return ok, ledger


def well_ramified_verdict(E: GaloisExtension) -> bool:
    if not E.monogenic:
        return False
    R = compute_ramification(E)
    hilbert = different_and_hilbert(R)["holds"]
    herbrand, _ = herbrand_check(E)
    if hilbert != herbrand:
        raise EquivalenceViolation(f"Hilbert formula {hilbert} but Herbrand property {herbrand}")
    return hilbert


def case_label(E: GaloisExtension) -> CaseLabel:
    cached = getattr(E, "_case", None)
    if cached is None:
        cached = case_from_invariants(E.e, E.f_sep, E.f_ins, lambda: well_ramified_verdict(E))
        E._case = cached
    return cached


# ---------------------------------------------------------------------------
# tower and transitivity
# ---------------------------------------------------------------------------


@dataclass
class Tower:
    H: frozenset
    fixed: FixedField
    bottom: CaseLabel
    top: CaseLabel


def tower_decomposition(E: GaloisExtension) -> Tower:
    """L^H / K in case I and L / L^H in case II (trivial floors allowed)."""
    found = []
    for H, ff in _fixed_fields(E).items():
        bottom = case_label(ff.T)
        top_ok = ff.e_top == 1 and ff.f_sep_top == 1
        if bottom == CaseLabel.I and top_ok:
            top = CaseLabel.II if ff.f_ins_top > 1 else CaseLabel.I
            found.append(Tower(H, ff, bottom, top))
    if not found:
        raise NoDecomposition(f"no case I / case II tower for {E.name}")
    if E.group.is_cyclic() and len(found) > 1:
        raise NoDecomposition("tower is not unique for a cyclic group")
    return found[0]


def quotient_i_check(E: GaloisExtension) -> tuple[bool, list]:
    """i_{L^H/K}(tau) = s_{L/L^H}(max_{sigma in tau H} i_G(sigma))."""
    R = compute_ramification(E)
    ledger, ok = [], True
    for H, ff in _fixed_fields(E).items():
        if len(H) == 1:
            continue
        RH = R.restrict(ff)
        RT = compute_ramification(ff.T)
        for tau in RT.nontrivial:
            j = max(R.i[s] for s in R.elements if ff.proj[s] == tau)
            lhs, rhs = Fraction(RT.i[tau]), RH.sfun(j)
            ledger.append({"H": sorted(H), "tau": tau, "lhs": lhs, "rhs": rhs})
            ok &= lhs == rhs
    return ok, ledger


def transitivity_check(E: GaloisExtension) -> tuple[bool, list]:
    """s_{L/K} = s_{L^H/K} o s_{L/L^H} as piecewise-linear functions."""
    R = compute_ramification(E)
    ledger, ok = [], True
    for H, ff in _fixed_fields(E).items():
        RH = R.restrict(ff)
        RT = compute_ramification(ff.T)
        comp = RT.herbrand.compose(RH.herbrand)
        same = comp == R.herbrand
        ledger.append({"H": sorted(H), "ok": same})
        ok &= same
    return ok, ledger


def herbrand_corollary_check(E: GaloisExtension, samples) -> bool:
    """(G/H)(u) = G(u)H/H at the sampled upper numbers u."""
    R = compute_ramification(E)
    for H, ff in _fixed_fields(E).items():
        RT = compute_ramification(ff.T)
        for u in samples:
            image = frozenset(ff.proj[s] for s in R.upper_group(u))
            if image != RT.upper_group(u):
                return False
    return True


def power_monotonicity_check(E: GaloisExtension, tower: Tower) -> bool:
    """For cyclic G = <rho>: i(rho^(p^m)) > i(rho^(p^(m-1))) while |T:K| <= p^m <= |L:K|."""
    G = E.group
    if not G.is_cyclic():
        return True
    R = compute_ramification(E)
    rho = G.generator()
    p, n = E.p, E.n
    tdeg = tower.fixed.T.n
    m = 1
    ok = True
    while p**m < n:
        if p**m >= tdeg:
            a, b = G.power(rho, p**m), G.power(rho, p ** (m - 1))
            ok &= R.i[a] > R.i[b]
        m += 1
    return ok


def upper_jumps_modified(R: RamificationData) -> tuple[list[Fraction], bool]:
    ups = R.upper_jumps()
    return ups, all(u.denominator == 1 for u in ups)
