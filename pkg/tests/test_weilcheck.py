"""Property checks on candidate L-factors, base extension, enumeration.

The unit-circle checker is cross-validated against a high-precision numeric
root-modulus oracle (mpmath at 60 digits, test-only).
"""

import random
from fractions import Fraction as F

import mpmath
import pytest

from httool.exactpoly import DomainError, Poly
from httool.padicpoly import SlopeOutcome, newton_polygon
from httool.weilcheck import (
    Status,
    WeilCandidate,
    base_extend,
    check_all,
    check_l_integrality,
    check_newton_shape,
    check_no_root_of_unity,
    check_power_structure,
    check_unit_circle,
    enumerate_candidates,
    reciprocal_root_power_sums,
    split_alg_trc,
)

HALF = F(1, 2)
WEIL_QUADRATIC = Poly([1, -HALF, 1])
WEIL_QUARTIC = Poly([1, 0, HALF, 0, 1])


def all_roots_on_unit_circle(L: Poly, digits: int = 60) -> bool:
    from httool.exactpoly import squarefree_part

    reduced = squarefree_part(L)  # multiple roots stall the numeric solver
    mpmath.mp.dps = digits
    coeffs = [
        mpmath.mpf(c.numerator) / mpmath.mpf(c.denominator) for c in reversed(reduced.coeffs)
    ]
    roots = mpmath.polyroots(coeffs, maxsteps=500, extraprec=500)
    tol = mpmath.mpf(10) ** (-digits // 3)
    return all(abs(abs(r) - 1) < tol for r in roots)


# ---------------------------------------------------------------------------
# candidate validation


def test_candidate_validation():
    with pytest.raises(DomainError):
        WeilCandidate(Poly([2, 1, 1]), 2, 1)  # constant term != 1
    with pytest.raises(DomainError):
        WeilCandidate(Poly([1, 1]), 2, 1)  # odd degree
    with pytest.raises(DomainError):
        WeilCandidate(WEIL_QUADRATIC, 4, 1)  # composite p
    with pytest.raises(DomainError):
        WeilCandidate(WEIL_QUADRATIC, 2, 0)


# ---------------------------------------------------------------------------
# single-property checks


def test_unit_circle_examples():
    assert check_unit_circle(WeilCandidate(WEIL_QUADRATIC, 2, 1)).status is Status.PASS
    fail = check_unit_circle(WeilCandidate(Poly([1, 3, 1]), 2, 1))
    assert fail.status is Status.FAIL
    assert fail.witness["real_roots_in_range"] == 0
    assert "offending_interval" in fail.witness
    assert check_unit_circle(WeilCandidate(Poly([1, 1, 1]), 2, 1)).status is Status.PASS


def test_unit_circle_rejects_non_palindromic():
    fail = check_unit_circle(WeilCandidate(Poly([1, 2, 1, 1, 1]), 2, 1))
    assert fail.status is Status.FAIL
    assert fail.witness["reason"] == "not self-inversive"


def test_unit_circle_odd_symmetry_case():
    L = Poly([1, 0, -1])  # (1 - T)(1 + T): reversal negates L
    verdict = check_unit_circle(WeilCandidate(L, 2, 1))
    assert verdict.status is Status.FAIL
    assert verdict.witness["root_of_unity"] == 1


def test_unit_circle_against_numeric_oracle_seeded():
    rng = random.Random(20240601)
    agreements = 0
    for _ in range(1000):
        two_d = rng.choice([2, 4, 6])
        d = two_d // 2
        half = [
            F(rng.randint(-4 * 2, 4 * 2), rng.choice([1, 2, 4]))
            for _ in range(d)
        ]
        if rng.random() < 0.5:
            coeffs = [F(1)] + half + list(reversed(half[:-1])) + [F(1)]
        else:
            coeffs = [F(1)] + half + [F(rng.randint(-3, 3), 2) for _ in range(d - 1)] + [F(1)]
        L = Poly(coeffs)
        if L.degree() != two_d or L.constant() != 1:
            continue
        candidate = WeilCandidate(L, 2, 1)
        expected = all_roots_on_unit_circle(L)
        got = check_unit_circle(candidate).status is Status.PASS
        assert got == expected, L
        agreements += 1
    assert agreements > 900


def test_no_root_of_unity_examples():
    fail = check_no_root_of_unity(WeilCandidate(Poly([1, 1, 1]), 2, 1))
    assert fail.status is Status.FAIL and fail.witness["cyclotomic_index"] == 3
    assert check_no_root_of_unity(WeilCandidate(WEIL_QUADRATIC, 2, 1)).status is Status.PASS
    assert check_no_root_of_unity(WeilCandidate(WEIL_QUARTIC, 2, 1)).status is Status.PASS


def test_integrality_examples():
    assert check_l_integrality(WeilCandidate(WEIL_QUADRATIC, 2, 1)).status is Status.PASS
    fail = check_l_integrality(WeilCandidate(Poly([1, F(-1, 3), 1]), 2, 1))
    assert fail.status is Status.FAIL and fail.witness["coefficient_index"] == 1
    assert check_l_integrality(WeilCandidate(Poly([1, 7, 1]), 2, 1)).status is Status.PASS


def test_newton_shape_examples():
    verdict, h, d = check_newton_shape(WeilCandidate(WEIL_QUADRATIC, 2, 1))
    assert verdict.status is Status.PASS and (h, d) == (1, 1)
    verdict, h, d = check_newton_shape(WeilCandidate(WEIL_QUARTIC, 2, 1))
    assert verdict.status is Status.PASS and (h, d) == (2, 2)
    verdict, h, d = check_newton_shape(WeilCandidate(Poly([1, 1, 1]), 2, 1))
    assert verdict.status is Status.FAIL


def test_newton_shape_four_vertices():
    # h = 1, d = 2 at a = 1: vertices (0,0), (1,-1), (3,-1), (4,0)
    L = Poly([1, HALF, F(1, 2), HALF, 1])
    verdict, h, d = check_newton_shape(WeilCandidate(L, 2, 1))
    assert verdict.status is Status.PASS and (h, d) == (1, 2)


def test_power_structure_examples():
    verdict, q_poly, e, slope = check_power_structure(WeilCandidate(WEIL_QUADRATIC, 2, 1))
    assert verdict.status is Status.PASS and q_poly == WEIL_QUADRATIC and e == 1
    square = WeilCandidate(WEIL_QUADRATIC**2, 2, 1)
    verdict, q_poly, e, slope = check_power_structure(square)
    assert verdict.status is Status.PASS and q_poly == WEIL_QUADRATIC and e == 2
    assert slope.value is SlopeOutcome.IRREDUCIBLE
    verdict, q_poly, e, slope = check_power_structure(WeilCandidate(Poly([1, 0, 1, 0, 1]), 2, 1))
    assert verdict.status is Status.FAIL
    assert "factors" in verdict.witness


def test_power_square_polygon_shape_at_a1_vs_a2():
    # the squared quadratic has polygon (0,0),(2,-2),(4,0); that is the
    # required shape for a = 2, not for a = 1
    square = WEIL_QUADRATIC**2
    verdict_a1, _, _ = check_newton_shape(WeilCandidate(square, 2, 1))
    assert verdict_a1.status is Status.FAIL
    verdict_a2, h, d = check_newton_shape(WeilCandidate(square, 2, 2))
    assert verdict_a2.status is Status.PASS and (h, d) == (2, 2)


def test_check_all_examples():
    report = check_all(WeilCandidate(WEIL_QUARTIC, 2, 1))
    assert report.admissible
    assert (report.h, report.d, report.e) == (2, 2, 1)
    report2 = check_all(WeilCandidate(Poly([1, 1, 1]), 2, 1))
    assert not report2.admissible
    assert {"no_root_of_unity", "newton_shape"} <= set(report2.failures)
    report3 = check_all(WeilCandidate(Poly([1, F(-1, 3), 1]), 2, 1))
    assert not report3.admissible
    assert {"ell_integrality", "newton_shape"} <= set(report3.failures)


def test_every_fail_has_a_witness():
    for L in (Poly([1, 1, 1]), Poly([1, 3, 1]), Poly([1, F(-1, 3), 1]), Poly([1, 0, 1, 0, 1])):
        report = check_all(WeilCandidate(L, 2, 1))
        payload = report.to_json()["properties"]
        for name in report.failures:
            assert payload[name]["witness"], name


# ---------------------------------------------------------------------------
# base extension


def test_base_extend_quadratic():
    c = WeilCandidate(WEIL_QUADRATIC, 2, 1)
    extended = base_extend(c, 2)
    assert extended.L == Poly([1, F(7, 4), 1])
    assert extended.a == 2
    polygon = newton_polygon(extended.L, 2)
    assert polygon.vertices == ((0, 0), (1, -2), (2, 0))


def test_base_extend_identity():
    c = WeilCandidate(WEIL_QUADRATIC, 2, 1)
    assert base_extend(c, 1) == c


def test_base_extend_quartic():
    c = WeilCandidate(WEIL_QUARTIC, 2, 1)
    extended = base_extend(c, 2)
    assert extended.a == 2 and extended.L.degree() == 4
    polygon = newton_polygon(extended.L, 2)
    assert polygon.vertices == ((0, 0), (2, -2), (4, 0))


def test_base_extend_rejects_zero():
    with pytest.raises(DomainError):
        base_extend(WeilCandidate(WEIL_QUADRATIC, 2, 1), 0)


def test_power_sums_match_roots():
    # L = (1 - T/2)(1 - 2T) has reciprocal roots 1/2 and 2
    L = Poly([1, -HALF]) * Poly([1, -2])
    sums = reciprocal_root_power_sums(L, 4)
    assert sums == [F(5, 2), F(17, 4), F(65, 8), F(257, 16)]


# ---------------------------------------------------------------------------
# enumeration


def test_census_q2_degree2():
    found = enumerate_candidates(2, 1, 2)
    assert [c.L.coefficient(1) for c in found] == [F(-3, 2), -HALF, HALF, F(3, 2)]


def test_census_q3_degree2():
    found = enumerate_candidates(3, 1, 2)
    assert [c.L.coefficient(1) for c in found] == [
        F(-5, 3),
        F(-4, 3),
        F(-2, 3),
        F(-1, 3),
        F(1, 3),
        F(2, 3),
        F(4, 3),
        F(5, 3),
    ]


def test_census_integer_only_is_empty():
    assert enumerate_candidates(2, 1, 2, integer_only=True) == []


def test_census_closed_under_sign_involution():
    for found in (enumerate_candidates(2, 1, 2), enumerate_candidates(2, 1, 4)):
        coeff_sets = {c.L.coeffs for c in found}
        for c in found:
            flipped = Poly([(-1) ** i * v for i, v in enumerate(c.L.coeffs)])
            assert flipped.coeffs in coeff_sets


def test_census_members_have_symmetric_slope_multisets():
    # anything passing the unit-circle check is self-inversive, so the slope
    # multiset of its polygon must be closed under negation
    for member in enumerate_candidates(2, 1, 4):
        slopes = newton_polygon(member.L, member.p).slopes_with_multiplicity()
        assert sorted(slopes) == sorted(-s for s in slopes)


def test_census_rejects_bad_degrees():
    with pytest.raises(DomainError):
        enumerate_candidates(2, 1, 3)
    with pytest.raises(DomainError):
        enumerate_candidates(2, 1, 20)


def test_census_value_filters():
    base = enumerate_candidates(2, 1, 2)
    target = base[0].L(F(1))
    filtered = enumerate_candidates(2, 1, 2, value_at_one=target)
    assert all(c.L(F(1)) == target for c in filtered)
    assert any(c.L(F(1)) != target for c in base)
    excluded = enumerate_candidates(2, 1, 2, value_at_minus_one_not=base[0].L(F(-1)))
    assert all(c.L(F(-1)) != base[0].L(F(-1)) for c in excluded)


# ---------------------------------------------------------------------------
# the algebraic/transcendental split helper


def test_split_alg_trc():
    L = Poly([1, 1, 1]) * WEIL_QUADRATIC  # cyclotomic factor times a Weil factor
    alg, trc = split_alg_trc(L)
    assert alg == Poly([1, 1, 1])
    assert trc == WEIL_QUADRATIC
    assert alg * trc == L
    alg2, trc2 = split_alg_trc(WEIL_QUARTIC)
    assert alg2 == Poly([1]) and trc2 == WEIL_QUARTIC
