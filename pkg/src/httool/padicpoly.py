"""p-adic valuations, Newton polygons and slope-based irreducibility verdicts.

Polygon convention, fixed once for the whole package: for f with f(0) != 0 we
take the lower convex hull of the points (i, v_p(c_i)).  Writing
f = f(0) * prod (1 - gamma T), a segment of slope s carries exactly
`length` reciprocal roots gamma with v_p(gamma) = s.  In particular the
reciprocal roots of negative valuation sit on the negative-slope segments.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from . import _gfp, _intfactor
from .exactpoly import DomainError, Poly, rat_to_str


def vp(r: Fraction, p: int) -> int | float:
    """The p-adic valuation of a rational; vp(0) is +infinity."""
    if not _intfactor.is_prime(p):
        raise DomainError(f"{p} is not prime")
    r = Fraction(r)
    if r == 0:
        return math.inf
    v = 0
    num = abs(r.numerator)
    while num % p == 0:
        num //= p
        v += 1
    den = r.denominator
    while den % p == 0:
        den //= p
        v -= 1
    return v


@dataclass(frozen=True)
class Segment:
    slope: Fraction
    length: int  # horizontal lattice length

    def to_json(self) -> dict:
        return {"slope": rat_to_str(self.slope), "length": self.length}


@dataclass(frozen=True)
class NewtonPolygon:
    prime: int
    vertices: tuple[tuple[int, Fraction], ...]
    segments: tuple[Segment, ...]

    def to_json(self) -> dict:
        return {
            "prime": self.prime,
            "vertices": [[i, rat_to_str(v)] for i, v in self.vertices],
            "segments": [s.to_json() for s in self.segments],
        }

    def slopes_with_multiplicity(self) -> list[Fraction]:
        out: list[Fraction] = []
        for seg in self.segments:
            out.extend([seg.slope] * seg.length)
        return out


def newton_polygon(f: Poly, p: int) -> NewtonPolygon:
    """Lower convex hull of {(i, v_p(c_i)) : c_i != 0}."""
    if f.is_zero:
        raise DomainError("the zero polynomial has no Newton polygon")
    if f.constant() == 0:
        raise DomainError("the constant term must be nonzero")
    if not _intfactor.is_prime(p):
        raise DomainError(f"{p} is not prime")
    points = [(i, Fraction(vp(c, p))) for i, c in enumerate(f.coeffs) if c != 0]
    hull: list[tuple[int, Fraction]] = []
    for pt in points:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop the middle point unless it turns strictly upward
            if (y2 - y1) * (pt[0] - x2) >= (pt[1] - y2) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    segments = tuple(
        Segment(Fraction(b[1] - a[1], b[0] - a[0]), b[0] - a[0])
        for a, b in zip(hull, hull[1:])
    )
    return NewtonPolygon(prime=p, vertices=tuple(hull), segments=segments)


def _unit_residue(c: Fraction, p: int) -> int:
    """Reduction mod p of a rational with v_p(c) = 0."""
    num = c.numerator % p
    den = c.denominator % p
    return num * pow(den, -1, p) % p


def residual_polynomial(f: Poly, p: int, segment: Segment) -> list[int]:
    """The residual (associated) polynomial of a polygon segment, over F_p.

    For a segment of slope u/n in lowest terms running from vertex (i0, v0)
    over horizontal length l = k*n, the residual has degree k and encodes the
    first-order splitting of the slope factor over Q_p.
    """
    polygon = newton_polygon(f, p)
    start = None
    x = polygon.vertices[0][0]
    y = polygon.vertices[0][1]
    for seg in polygon.segments:
        if seg == segment:
            start = (x, y)
            break
        x += seg.length
        y += seg.slope * seg.length
    if start is None:
        raise DomainError("segment does not belong to the Newton polygon of f")
    i0, v0 = start
    n = segment.slope.denominator
    u = segment.slope.numerator
    if segment.length % n != 0:
        raise ArithmeticError("segment length incompatible with slope denominator")
    k = segment.length // n
    coeffs = []
    for j in range(k + 1):
        idx = i0 + j * n
        target_val = v0 + j * u
        c = f.coefficient(idx)
        if c != 0 and vp(c, p) == target_val:
            unit = c / Fraction(p) ** int(target_val)
            coeffs.append(_unit_residue(unit, p))
        else:
            coeffs.append(0)
    return _gfp.trim(coeffs)


class SlopeOutcome(enum.Enum):
    IRREDUCIBLE = "irreducible"
    REDUCIBLE = "reducible"
    UNKNOWN = "unknown"
    NO_NEGATIVE_SLOPE = "no_negative_slope"


@dataclass(frozen=True)
class SlopeVerdict:
    value: SlopeOutcome
    reason: str

    def to_json(self) -> dict:
        return {"value": self.value.value, "reason": self.reason}


def negative_part_verdict(f: Poly, p: int) -> tuple[SlopeVerdict, int]:
    """Decide whether the negative-slope part of f over Q_p comes from a
    single irreducible factor.

    The caller guarantees f is irreducible over Q.  The decision is purely
    combinatorial (polygon plus first-order residual polynomials); a residual
    that is a proper power of one irreducible is genuinely undecided at this
    order and yields UNKNOWN rather than a guess.
    """
    polygon = newton_polygon(f, p)
    negative = [seg for seg in polygon.segments if seg.slope < 0]
    negative_degree = sum(seg.length for seg in negative)
    if not negative:
        return (
            SlopeVerdict(SlopeOutcome.NO_NEGATIVE_SLOPE, "the Newton polygon has no negative slope"),
            0,
        )
    if len(negative) >= 2:
        slopes = ", ".join(rat_to_str(s.slope) for s in negative)
        return (
            SlopeVerdict(
                SlopeOutcome.REDUCIBLE,
                f"distinct negative slopes ({slopes}) force coprime factors over Q_p",
            ),
            negative_degree,
        )
    seg = negative[0]
    n = seg.slope.denominator
    if seg.length == n:
        return (
            SlopeVerdict(
                SlopeOutcome.IRREDUCIBLE,
                f"single negative segment of slope {rat_to_str(seg.slope)} with no interior lattice point",
            ),
            negative_degree,
        )
    residual = residual_polynomial(f, p, seg)
    _, factors = _gfp.factor(residual, p)
    distinct = len(factors)
    if distinct >= 2:
        return (
            SlopeVerdict(
                SlopeOutcome.REDUCIBLE,
                f"residual polynomial splits into {distinct} distinct irreducible factors over F_{p}",
            ),
            negative_degree,
        )
    irr, mult = factors[0]
    if mult == 1:
        return (
            SlopeVerdict(
                SlopeOutcome.IRREDUCIBLE,
                f"single negative segment with irreducible residual polynomial over F_{p}",
            ),
            negative_degree,
        )
    return (
        SlopeVerdict(
            SlopeOutcome.UNKNOWN,
            f"residual polynomial is a proper power (multiplicity {mult}) of one irreducible; "
            "first-order slope data cannot decide",
        ),
        negative_degree,
    )
