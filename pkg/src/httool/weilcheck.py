"""Verdicts for the five admissibility constraints on candidate transcendental
L-factors, base extension (roots raised to the n-th power), and a desk-scale
exhaustive enumerator.

A candidate is L in 1 + T*Q[T] of even degree 2d together with the prime
power q = p**a.  Writing L = prod (1 - gamma_i T), the constraints are:

  (1) every gamma_i has complex absolute value 1;
  (2) no gamma_i is a root of unity;
  (3) every coefficient denominator is a power of p;
  (4) the Newton polygon at p has vertices (0,0), (h,-a), (2d-h,-a), (2d,0)
      with 1 <= h <= d <= 10;
  (5) L = Q**e with Q irreducible over Q having a unique irreducible factor
      of negative slope over Q_p.

All failures are verdicts carrying machine-checkable witnesses, never
exceptions.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from . import _intfactor
from .exactpoly import (
    DomainError,
    Poly,
    bisect_isolating_interval,
    elementary_from_power_sums,
    factor_with_unit,
    is_cyclotomic,
    isolate_real_roots,
    power_sums_from_elementary,
    rat_to_str,
    squarefree_part,
    sturm_count,
)
from .padicpoly import SlopeOutcome, SlopeVerdict, negative_part_verdict, newton_polygon


@dataclass(frozen=True)
class WeilCandidate:
    L: Poly
    p: int
    a: int

    def __post_init__(self):
        if not _intfactor.is_prime(self.p):
            raise DomainError(f"{self.p} is not prime")
        if self.a < 1:
            raise DomainError("the exponent a must be positive")
        if self.L.constant() != 1:
            raise DomainError("candidates must have constant term 1")
        if self.L.degree() < 2 or self.L.degree() % 2 != 0:
            raise DomainError("candidates must have even degree >= 2")

    @property
    def q(self) -> int:
        return self.p ** self.a

    def to_json(self) -> dict:
        return {"L": self.L.to_strs(), "p": self.p, "a": self.a}

    @staticmethod
    def from_json(obj) -> "WeilCandidate":
        return WeilCandidate(Poly.from_strs(obj["L"]), int(obj["p"]), int(obj["a"]))


class Status(enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class PropertyVerdict:
    status: Status
    witness: dict

    def to_json(self) -> dict:
        return {"status": self.status.value, "witness": self.witness}


_PASS = PropertyVerdict(Status.PASS, {})


def _reciprocal_transform(L: Poly) -> Poly:
    """H with L(T) = T**d * H(T + 1/T) for a palindromic L of degree 2d.

    Uses T**k + T**-k = V_k(T + 1/T) with V_0 = 2, V_1 = x and
    V_{k+1} = x*V_k - V_{k-1}.
    """
    d = L.degree() // 2
    v_prev, v_cur = Poly([2]), Poly([0, 1])
    h = Poly([L.coefficient(d)])
    for k in range(1, d + 1):
        if k == 1:
            vk = v_cur
        else:
            vk = Poly([0, 1]) * v_cur - v_prev
            v_prev, v_cur = v_cur, vk
        h = h + L.coefficient(d + k) * vk
    return h


def check_unit_circle(c: WeilCandidate) -> PropertyVerdict:
    """All complex roots on the unit circle, certified by Sturm counts on the
    transform H with L(T) = T**d * H(T + 1/T) (roots land in [-2, 2])."""
    L = c.L
    two_d = L.degree()
    rev = L.reverse()
    if rev == -L:
        return PropertyVerdict(
            Status.FAIL,
            {"reason": "odd reciprocal symmetry forces L(1) = 0", "root_of_unity": 1},
        )
    if rev != L:
        defect = next(
            i for i in range(two_d + 1) if L.coefficient(i) != L.coefficient(two_d - i)
        )
        return PropertyVerdict(
            Status.FAIL,
            {"reason": "not self-inversive", "coefficient_index": defect},
        )
    h = _reciprocal_transform(L)
    hs = squarefree_part(h)
    deg = hs.degree()
    real_total = sturm_count(hs, None, None)
    in_range = sturm_count(hs, Fraction(-2), Fraction(2)) + (1 if hs(Fraction(-2)) == 0 else 0)
    if real_total == deg == in_range:
        return _PASS
    witness: dict = {
        "reason": "a root lies off the unit circle",
        "transform_degree": deg,
        "real_roots": real_total,
        "real_roots_in_range": in_range,
    }
    for lo, hi in isolate_real_roots(hs):
        # refine until the interval clears the boundary (roots at +-2 are in range)
        for _ in range(64):
            if hi <= -2 or lo >= 2 or (-2 <= lo and hi <= 2):
                break
            lo, hi = bisect_isolating_interval(hs, lo, hi)
        if hi <= -2 or lo >= 2:
            witness["offending_interval"] = [rat_to_str(lo), rat_to_str(hi)]
            break
    return PropertyVerdict(Status.FAIL, witness)


def check_no_root_of_unity(c: WeilCandidate) -> PropertyVerdict:
    """No irreducible factor of L is a cyclotomic polynomial."""
    for factor, _mult in factor_with_unit(c.L)[1]:
        n = is_cyclotomic(factor)
        if n is not None:
            return PropertyVerdict(
                Status.FAIL,
                {"cyclotomic_index": n, "factor": factor.to_strs()},
            )
    return _PASS


def check_l_integrality(c: WeilCandidate) -> PropertyVerdict:
    """Every coefficient denominator is a power of p."""
    for i, coeff in enumerate(c.L.coeffs):
        den = coeff.denominator
        while den % c.p == 0:
            den //= c.p
        if den != 1:
            return PropertyVerdict(
                Status.FAIL,
                {"coefficient_index": i, "coefficient": rat_to_str(coeff)},
            )
    return _PASS


def check_newton_shape(c: WeilCandidate) -> tuple[PropertyVerdict, int | None, int | None]:
    """Polygon vertices exactly (0,0), (h,-a), (2d-h,-a), (2d,0) with
    1 <= h <= d <= 10 (the h = d case collapses the flat middle)."""
    L, p, a = c.L, c.p, c.a
    two_d = L.degree()
    d = two_d // 2
    polygon = newton_polygon(L, p)
    verts = list(polygon.vertices)
    witness = {"vertices": [[i, rat_to_str(v)] for i, v in verts]}
    h = None
    if (
        len(verts) == 3
        and verts[0] == (0, 0)
        and verts[1] == (d, Fraction(-a))
        and verts[2] == (two_d, 0)
    ):
        h = d
    elif (
        len(verts) == 4
        and verts[0] == (0, 0)
        and verts[3] == (two_d, 0)
        and verts[1][1] == Fraction(-a)
        and verts[2][1] == Fraction(-a)
        and verts[1][0] + verts[2][0] == two_d
    ):
        h = verts[1][0]
    if h is None:
        witness["reason"] = "polygon shape mismatch"
        return PropertyVerdict(Status.FAIL, witness), None, d
    if not 1 <= h <= d:
        witness["reason"] = f"height {h} outside [1, {d}]"
        return PropertyVerdict(Status.FAIL, witness), None, d
    if d > 10:
        witness["reason"] = f"half degree {d} exceeds 10"
        return PropertyVerdict(Status.FAIL, witness), h, d
    return _PASS, h, d


def check_power_structure(
    c: WeilCandidate,
) -> tuple[PropertyVerdict, Poly | None, int | None, SlopeVerdict | None]:
    """L = Q**e with Q irreducible over Q, and the negative-slope part of Q
    over Q_p irreducible (three-valued; Unknown propagates)."""
    _unit, factors = factor_with_unit(c.L)
    if len(factors) != 1:
        return (
            PropertyVerdict(
                Status.FAIL,
                {
                    "reason": "multiple distinct irreducible factors",
                    "factors": [[g.to_strs(), m] for g, m in factors],
                },
            ),
            None,
            None,
            None,
        )
    base, e = factors[0]
    q_poly = base * (1 / base.constant())
    if q_poly ** e != c.L:
        raise ArithmeticError("factorization reconstruction failed")
    slope, negative_degree = negative_part_verdict(q_poly, c.p)
    if slope.value is SlopeOutcome.IRREDUCIBLE:
        verdict = _PASS
    elif slope.value is SlopeOutcome.UNKNOWN:
        verdict = PropertyVerdict(Status.UNKNOWN, {"reason": slope.reason})
    else:
        verdict = PropertyVerdict(
            Status.FAIL,
            {"reason": slope.reason, "negative_degree": negative_degree},
        )
    return verdict, q_poly, e, slope


@dataclass(frozen=True)
class WeilReport:
    candidate: WeilCandidate
    unit_circle: PropertyVerdict
    no_root_of_unity: PropertyVerdict
    ell_integrality: PropertyVerdict
    newton_shape: PropertyVerdict
    power_structure: PropertyVerdict
    h: int | None
    d: int | None
    e: int | None
    Q: Poly | None
    slope: SlopeVerdict | None

    @property
    def admissible(self) -> bool:
        return all(
            v.status is Status.PASS
            for v in (
                self.unit_circle,
                self.no_root_of_unity,
                self.ell_integrality,
                self.newton_shape,
                self.power_structure,
            )
        )

    @property
    def failures(self) -> list[str]:
        named = {
            "unit_circle": self.unit_circle,
            "no_root_of_unity": self.no_root_of_unity,
            "ell_integrality": self.ell_integrality,
            "newton_shape": self.newton_shape,
            "power_structure": self.power_structure,
        }
        return [name for name, v in named.items() if v.status is Status.FAIL]

    def to_json(self) -> dict:
        out = {
            "schema_version": 1,
            "candidate": self.candidate.to_json(),
            "properties": {
                "unit_circle": self.unit_circle.to_json(),
                "no_root_of_unity": self.no_root_of_unity.to_json(),
                "ell_integrality": self.ell_integrality.to_json(),
                "newton_shape": self.newton_shape.to_json(),
                "power_structure": self.power_structure.to_json(),
            },
            "admissible": self.admissible,
            "h": self.h,
            "d": self.d,
            "e": self.e,
            "Q": self.Q.to_strs() if self.Q is not None else None,
            "slope_verdict": self.slope.to_json() if self.slope is not None else None,
        }
        return out


def check_all(c: WeilCandidate) -> WeilReport:
    """Aggregate all five property checks into a report with witnesses."""
    unit_circle = check_unit_circle(c)
    no_rou = check_no_root_of_unity(c)
    integrality = check_l_integrality(c)
    shape, h, d = check_newton_shape(c)
    power, q_poly, e, slope = check_power_structure(c)
    return WeilReport(
        candidate=c,
        unit_circle=unit_circle,
        no_root_of_unity=no_rou,
        ell_integrality=integrality,
        newton_shape=shape,
        power_structure=power,
        h=h if shape.status is Status.PASS else None,
        d=d if shape.status is Status.PASS else None,
        e=e,
        Q=q_poly,
        slope=slope,
    )


def _quick_inadmissible(c: WeilCandidate) -> bool:
    """Cheap short-circuit used by the enumerator (order: polygon, circle)."""
    shape, _h, _d = check_newton_shape(c)
    if shape.status is not Status.PASS:
        return True
    if check_unit_circle(c).status is not Status.PASS:
        return True
    return False


# ---------------------------------------------------------------------------
# base extension


def reciprocal_root_power_sums(L: Poly, count: int) -> list[Fraction]:
    """s_k = sum gamma_i**k for k = 1..count, from L = prod (1 - gamma_i T)."""
    elem = [(-1) ** i * c for i, c in enumerate(L.coeffs)][1:]
    return power_sums_from_elementary(elem, count)


def base_extend(c: WeilCandidate, n: int) -> WeilCandidate:
    """The candidate with reciprocal roots gamma_i**n over q**n.

    Computed exactly through power sums (Newton's identities in both
    directions); properties (1), (3), (4) transfer, and (2) cannot break
    because powers of non-roots-of-unity are not roots of unity.
    """
    if n < 1:
        raise DomainError("extension degree must be positive")
    if n == 1:
        return c
    two_d = c.L.degree()
    sums = reciprocal_root_power_sums(c.L, two_d * n)
    new_sums = [sums[k * n - 1] for k in range(1, two_d + 1)]
    elem = elementary_from_power_sums(new_sums, two_d)
    coeffs = [Fraction(1)] + [(-1) ** k * elem[k - 1] for k in range(1, two_d + 1)]
    return WeilCandidate(Poly(coeffs), c.p, c.a * n)


# ---------------------------------------------------------------------------
# the desk-scale enumerator


def split_alg_trc(L: Poly) -> tuple[Poly, Poly]:
    """Split L (constant term 1) into the product of its cyclotomic factors
    and the rest, both normalized to constant term 1."""
    if L.constant() != 1:
        raise DomainError("expected constant term 1")
    alg = Poly([1])
    for factor, mult in factor_with_unit(L)[1]:
        if is_cyclotomic(factor) is not None:
            alg = alg * (factor * (1 / factor.constant())) ** mult
    trc = L // alg
    if alg * trc != L:
        raise ArithmeticError("algebraic/transcendental split failed")
    return alg, trc


def enumerate_candidates(
    p: int,
    a: int,
    two_d: int,
    *,
    desk_bound: int = 8,
    integer_only: bool = False,
    value_at_one: Fraction | None = None,
    value_at_minus_one_not: Fraction | None = None,
) -> list[WeilCandidate]:
    """All admissible candidates of degree two_d for q = p**a.

    Search space: palindromic L with constant term 1 and coefficients
    c_i = m / p**a bounded by |c_i| <= binom(2d, i) (forced by roots on the
    unit circle); subtrees are pruned through the power-sum bound
    |sum gamma**k| <= 2d.  The optional value filters carry no semantics of
    their own.  Output is sorted by coefficient tuple.
    """
    if two_d % 2 != 0 or two_d < 2:
        raise DomainError("degree must be even and >= 2")
    if two_d > desk_bound:
        raise DomainError(f"degree {two_d} exceeds the desk bound {desk_bound}")
    if not _intfactor.is_prime(p) or a < 1:
        raise DomainError("invalid prime power")
    d = two_d // 2
    den = 1 if integer_only else p ** a
    results: list[WeilCandidate] = []

    # The search runs on integers: m_i = c_i * den, and the power-sum prune
    # uses S_k = s_k * den**k (Newton's identities scale cleanly).

    def screened_out(ints: list[int]) -> bool:
        """Necessary condition |s_k| <= 2d for all k; checked for k up to 6d,
        where off-circle roots make the sums grow geometrically."""
        scaled_elem = [(-1) ** i * ints[i] * den ** (i - 1) for i in range(1, two_d + 1)]
        scaled_sums: list[int] = []
        for k in range(1, 6 * d + 1):
            acc = 0
            for j in range(1, min(k - 1, two_d) + 1):
                term = scaled_elem[j - 1] * scaled_sums[k - j - 1]
                acc += term if j % 2 else -term
            if k <= two_d:
                tail = k * scaled_elem[k - 1]
                acc += tail if k % 2 else -tail
            if abs(acc) > two_d * den ** k:
                return True
            scaled_sums.append(acc)
        return False

    def finalize(half_ints: list[int]) -> None:
        ints = [den] + half_ints + list(reversed(half_ints[:-1])) + [den]
        if screened_out(ints):
            return
        L = Poly([Fraction(m, den) for m in ints])
        if value_at_one is not None and L(Fraction(1)) != value_at_one:
            return
        if value_at_minus_one_not is not None and L(Fraction(-1)) == value_at_minus_one_not:
            return
        cand = WeilCandidate(L, p, a)
        if _quick_inadmissible(cand):
            return
        if check_all(cand).admissible:
            results.append(cand)

    def descend(i: int, half_ints: list[int], scaled_elem: list[int], scaled_sums: list[int]) -> None:
        if i > d:
            finalize(half_ints)
            return
        limit = math.comb(two_d, i) * den
        den_pow = den ** (i - 1)
        for m in range(-limit, limit + 1):
            e_scaled = (m if i % 2 == 0 else -m) * den_pow
            acc = 0
            for j in range(1, i):
                term = scaled_elem[j - 1] * scaled_sums[i - j - 1]
                acc += term if j % 2 else -term
            tail = i * e_scaled
            acc += tail if i % 2 else -tail
            if abs(acc) > two_d * den ** i:
                continue
            descend(i + 1, half_ints + [m], scaled_elem + [e_scaled], scaled_sums + [acc])

    descend(1, [], [], [])
    results.sort(key=lambda cand: cand.L.coeffs)
    return results
