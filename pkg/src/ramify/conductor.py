"""Swan, Artin and Kato conductors of degree-1 characters, Hyodo depth and
the related inequalities.

Conductors are evaluated through subgroup strata: for a subgroup filtration
S_1 >= S_2 >= ..., the character sum (1/|G|) sum_sigma w(sigma) chi(sigma)
with w(sigma) = sum of levels reduces to sum over levels n where chi is
nontrivial on S_n of |S_n|.  Everything stays in exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil

from .errors import (
    ConductorMismatch,
    DepthMismatch,
    NonIntegralInstance,
    NotAbelian,
    NotCaseIII,
    NotDegreeOne,
    NotFaithful,
    NotWellRamified,
    PrecisionExhausted,
    IdentityViolation,
    ValidationError,
)
from .extension import CaseLabel, GaloisExtension, kummer_compositum
from .groups import Character, faithful_character
from .ramfilt import (
    RamificationData,
    _fixed_fields,
    case_label,
    compute_ramification,
)


def _check_character(R: RamificationData, chi: Character):
    if not isinstance(chi, Character):
        raise NotDegreeOne("conductors are implemented for degree-1 characters")
    if set(chi.values) != set(R.elements) and not set(R.elements) <= set(chi.values):
        raise ValidationError("character is defined on a different group")


def swan_conductor(R: RamificationData, chi: Character) -> Fraction:
    """(f/|G|) sum_{n >= 1, chi nontrivial on S_n} |S_n|, S_n = {s_G >= n}."""
    _check_character(R, chi)
    f = R.f_sep * R.f_ins
    top = max([R.s[g] for g in R.nontrivial] or [0])
    total = 0
    for n in range(1, top + 1):
        S = R.S(n)
        if not chi.trivial_on(S):
            total += len(S)
    return Fraction(f * total, R.order)


def artin_conductor(R: RamificationData, chi: Character) -> Fraction:
    """(1/e) sum_{n >= 1, chi nontrivial on G[n]} |G[n]|."""
    _check_character(R, chi)
    total = 0
    for n in range(1, R.max_i + 1):
        Gn = R.modified(n)
        if not chi.trivial_on(Gn):
            total += len(Gn)
    return Fraction(total, R.e)


def induced_character(ff, chi: Character) -> Character:
    """chi viewed on Gal(L^H/K) when chi is trivial on H."""
    vals = {}
    for s, tau in enumerate(ff.proj):
        vals.setdefault(tau, chi(s))
    return Character(ff.T.group, vals)


def is_p_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


@dataclass
class ConductorReport:
    sw: Fraction
    artin: Fraction
    ksw: int
    case: CaseLabel
    t: int
    s_t: Fraction
    formula_route: Fraction
    sfun_route: Fraction
    on_quotient: bool = False

    def to_json(self):
        return {
            "sw": self.sw,
            "artin": self.artin,
            "ksw": self.ksw,
            "case": self.case.value,
            "t": self.t,
            "sfun_t": self.s_t,
            "formula_route": self.formula_route,
            "sfun_route": self.sfun_route,
            "on_quotient": self.on_quotient,
        }


def kato_conductor(E: GaloisExtension, chi: Character) -> ConductorReport | int:
    """ksw(chi), with both the sw-route and the s_{L/K}(t)-route evaluated.

    Non-faithful characters are pushed to the quotient L^{ker chi}/K; the
    trivial and tame characters get 0.
    """
    order = chi.order()
    if order == 1 or not is_p_power(order, E.p):
        return 0
    if not chi.is_faithful():
        ff = _fixed_fields(E)[chi.kernel()]
        rep = kato_conductor(ff.T, induced_character(ff, chi))
        rep.on_quotient = True
        return rep
    case = case_label(E)
    if case == CaseLabel.NOT_WELL_RAMIFIED:
        raise NotWellRamified(f"{E.name} is not well ramified")
    if case == CaseLabel.UNDETERMINED:
        raise PrecisionExhausted("case could not be decided at this precision")
    R = compute_ramification(E)
    sw = swan_conductor(R, chi)
    st = R.sfun(R.t)
    if case == CaseLabel.I:
        formula, via_s = sw, st - 1
    elif case == CaseLabel.II:
        formula, via_s = sw, st
    else:
        formula, via_s = sw - 1, st - 1
    if formula != via_s:
        raise ConductorMismatch(f"sw-route gives {formula}, s-route gives {via_s}")
    if formula.denominator != 1 or formula < 0:
        raise ConductorMismatch(f"Kato conductor {formula} is not a non-negative integer")
    return ConductorReport(sw, artin_conductor(R, chi), int(formula), case, R.t, st, formula, via_s)


def faithful_conductor(E: GaloisExtension) -> ConductorReport:
    if not E.group.is_cyclic():
        raise NotFaithful("group is not cyclic; no faithful degree-1 character")
    return kato_conductor(E, faithful_character(E.group))


# ---------------------------------------------------------------------------
# depth
# ---------------------------------------------------------------------------


@dataclass
class DepthReport:
    d_K: Fraction
    d_L: Fraction
    v_K_different: Fraction
    sum_s: int
    M: Fraction
    closed_form: Fraction
    ksw_relation: dict = field(default_factory=dict)

    def to_json(self):
        return {
            "d_K": self.d_K,
            "d_L": self.d_L,
            "v_K_different": self.v_K_different,
            "sum_sG": self.sum_s,
            "M": self.M,
            "sum_route": self.closed_form,
            "ksw_relation": self.ksw_relation,
        }


def depth(E: GaloisExtension) -> DepthReport:
    """d_K = v_K(D) - 1 + 1/e, cross-checked against the sum of s_G."""
    R = compute_ramification(E)
    case = case_label(E)
    e = R.e
    vKD = Fraction(R.different, e)
    d_K = vKD - 1 + Fraction(1, e)
    d_L = e * d_K
    sum_s = sum(R.s[g] for g in R.nontrivial)
    if case in (CaseLabel.I, CaseLabel.II):
        closed = Fraction(sum_s)
    elif case == CaseLabel.III:
        closed = Fraction(sum_s - e + 1)
    else:
        raise NotWellRamified(f"{E.name} is not well ramified")
    if closed != d_L:
        raise DepthMismatch(f"e d_K = {d_L} but the s_G route gives {closed}")
    rel = {}
    if E.group.is_cyclic() and E.n > 1:
        ksw = faithful_conductor(E).ksw
        # with t the modified jump; in case I the classical jump is t - 1
        shift = 0 if case == CaseLabel.II else -1
        rhs = d_L + R.t + shift
        rel = {"lhs": e * ksw, "rhs": rhs, "holds": e * ksw == rhs}
    return DepthReport(d_K, d_L, vKD, sum_s, sum_s - d_L, closed, rel)


# ---------------------------------------------------------------------------
# Hyodo depth inequalities
# ---------------------------------------------------------------------------


def jumping_numbers(E: GaloisExtension) -> tuple[list[int], str]:
    """j(1), j(2), ... (m = 1 component) and how they were obtained.

    Case I: from the classical upper filtration, G^i = G(i + 1).
    Cases II and III: derived; j(l) is the Kato conductor of the faithful
    character of G / (subgroup of order p^(l-1)).
    """
    if not E.group.is_abelian():
        raise NotAbelian("jumping numbers need an abelian group")
    R = compute_ramification(E)
    case = case_label(E)
    p, n = E.p, E.n
    k = 0
    while p**k < n:
        k += 1
    out = []
    if case == CaseLabel.I:
        for l in range(1, k + 1):
            best = 0
            i = 1
            top = int(R.sfun(R.max_i)) + 2
            while i <= top:
                if len(R.upper_group(i + 1)) >= p**l:
                    best = i
                i += 1
            out.append(best)
        return out, "classical"
    if not E.group.is_cyclic():
        raise NotAbelian("derived jumping numbers are implemented for cyclic groups")
    subs = {len(H): H for H in E.group.subgroups()}
    for l in range(1, k + 1):
        ff = _fixed_fields(E)[subs[p ** (l - 1)]]
        out.append(faithful_conductor(ff.T).ksw if ff.T.n > 1 else 0)
    return out, "derived"


@dataclass
class HyodoReport:
    j: list
    source: str
    lower: Fraction
    upper: Fraction
    d_K: Fraction
    lower_ok: bool
    upper_ok: bool
    first_equality: bool

    def to_json(self):
        return {
            "j": self.j,
            "source": self.source,
            "lower": self.lower,
            "upper": self.upper,
            "d_K": self.d_K,
            "lower_ok": self.lower_ok,
            "upper_ok": self.upper_ok,
            "first_equality": self.first_equality,
        }


def hyodo_bounds(E: GaloisExtension) -> HyodoReport:
    """(p-1) sum j(l)/p^l <= d_K <= (1 - 1/p) sum j(l)."""
    p = E.p
    j, source = jumping_numbers(E)
    d_K = depth(E).d_K
    lower = (p - 1) * sum((Fraction(x, p**l) for l, x in enumerate(j, 1)), Fraction(0))
    upper = (1 - Fraction(1, p)) * sum(j)
    return HyodoReport(j, source, lower, upper, d_K, lower <= d_K, d_K <= upper, lower == d_K)


# ---------------------------------------------------------------------------
# upper bounds for ksw
# ---------------------------------------------------------------------------


def conductor_upper_bounds(E: GaloisExtension) -> dict:
    """Two upper bounds for ksw: d_K + t/e, and the ceiling bound through Sw_G and M."""
    R = compute_ramification(E)
    rep = faithful_conductor(E)
    dep = depth(E)
    thm6 = dep.d_K + Fraction(R.t, R.e)
    pairing = R.order * rep.sw  # sum_sigma Sw_G(sigma) chi(sigma)
    star = ceil((pairing - dep.M) / R.e)
    return {
        "ksw": rep.ksw,
        "depth_bound": thm6,
        "depth_bound_slack": thm6 - rep.ksw,
        "depth_bound_ok": rep.ksw <= thm6,
        "ceiling_bound": Fraction(star),
        "ceiling_slack": Fraction(star - rep.ksw),
        "ceiling_ok": rep.ksw <= star,
        "M": dep.M,
    }


# ---------------------------------------------------------------------------
# closed forms for the case III family
# ---------------------------------------------------------------------------


def case3_closed_forms(p: int, e: int) -> dict:
    """Conductor, second jump, depth and Hyodo left side of the case III family.

    The instance is admissible when p(p-1) divides e, which makes
    pe/(p-1) and (2p-1)e/(p-1) integers divisible as the family requires.
    """
    from .coeffield import is_prime

    if not is_prime(p) or e < 1:
        raise ValidationError("need a prime p and e >= 1")
    if e % (p * (p - 1)):
        raise NonIntegralInstance(f"p(p-1) = {p * (p - 1)} does not divide e = {e}")
    P, Ee = Fraction(p), Fraction(e)
    ksw = (2 * P - 1) * Ee / (P - 1) - 1
    j2 = P * Ee / (P - 1) - 1
    d = (P - 1) / P * (2 * P * Ee / (P - 1) - 1)
    lhs3 = 2 * Ee - (P**2 - 1) / P**2
    return {"ksw": ksw, "j2": j2, "d": d, "lhs3": lhs3, "strict": lhs3 != d}


# ---------------------------------------------------------------------------
# Artin conductor after base change
# ---------------------------------------------------------------------------


def artin_via_compositum(E: GaloisExtension, chi: Character | None = None) -> dict:
    """A(chi|_M) on LM/M from its own i-table and from L/K's, plus ksw = A - 1."""
    if case_label(E) != CaseLabel.III:
        raise NotCaseIII(f"{E.name} is not in case III")
    chi = chi or faithful_character(E.group)
    C = kummer_compositum(E)
    RLM = compute_ramification(C.LM)
    R = compute_ramification(E)
    chi_M = Character(C.LM.group, {C.correspondence[s]: chi(s) for s in R.elements})
    a_lm = artin_conductor(RLM, chi_M)
    a_l = artin_conductor(R, chi)
    if a_lm != a_l:
        raise IdentityViolation(f"A(chi|_M) = {a_lm} on LM/M but {a_l} from L/K")
    e_lm_l = C.LM.e * 1 // E.e  # e(M|K) = 1
    i_doubles = all(RLM.i[C.correspondence[s]] == e_lm_l * R.i[s] for s in R.nontrivial)
    ksw = kato_conductor(E, chi)
    ksw_val = ksw if isinstance(ksw, int) else ksw.ksw
    return {
        "A_M": a_lm,
        "A_from_L": a_l,
        "integral": a_lm.denominator == 1,
        "e_LM_L": e_lm_l,
        "i_doubles": i_doubles,
        "i_LM": {s: RLM.i[C.correspondence[s]] for s in R.nontrivial},
        "ksw": ksw_val,
        "ksw_is_A_minus_1": ksw_val == a_lm - 1 if chi.is_faithful() else None,
    }
