"""Quadratic spaces over Q: diagonalization, Hilbert symbols, the invariant
quadruple (dim, signature, determinant class, Hasse set), equivalence,
constructive realization of admissible invariants, and the K3 lattice.

The Hasse invariant of a space is stored as the finite set of places where
the symbol sum is nontrivial; the Hilbert product formula makes this set
even, and set symmetric-difference realizes addition in Br(Q)[2].  The
infinite place is represented by math.inf.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from . import _intfactor
from ._linalg import fraction_determinant
from .exactpoly import DomainError, SquareClass, rat_to_str, square_class

INF = math.inf

Place = float  # an int prime, or INF


def _place_sort_key(v):
    return (1, 0) if v == INF else (0, v)


def place_to_json(v) -> str:
    return "inf" if v == INF else str(int(v))


def place_from_json(s) -> Place:
    if s == "inf":
        return INF
    return int(s)


# ---------------------------------------------------------------------------
# Hilbert symbols


def _legendre(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise DomainError("legendre symbol of a multiple of p")
    r = pow(a, (p - 1) // 2, p)
    return -1 if r == p - 1 else 1


def _split_unit(r: Fraction, p: int) -> tuple[int, Fraction]:
    """r = p**v * u with u a p-adic unit."""
    v = 0
    num, den = r.numerator, r.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    sign = 1 if num > 0 else -1
    return v, Fraction(sign * abs(num), den)


def _unit_mod(u: Fraction, m: int) -> int:
    return u.numerator * pow(u.denominator, -1, m) % m


def hilbert_symbol(a: Fraction, b: Fraction, place) -> int:
    """The Hilbert symbol (a, b) at a finite prime or the infinite place."""
    a, b = Fraction(a), Fraction(b)
    if a == 0 or b == 0:
        raise DomainError("Hilbert symbol arguments must be nonzero")
    if place == INF:
        return -1 if (a < 0 and b < 0) else 1
    p = int(place)
    if p != place or not _intfactor.is_prime(p):
        raise DomainError(f"{place} is not a valid place")
    alpha, u = _split_unit(a, p)
    beta, v = _split_unit(b, p)
    if p != 2:
        result = 1
        if alpha % 2 and beta % 2 and p % 4 == 3:
            result = -result
        if beta % 2 and _legendre(_unit_mod(u, p), p) == -1:
            result = -result
        if alpha % 2 and _legendre(_unit_mod(v, p), p) == -1:
            result = -result
        return result
    u8 = _unit_mod(u, 8)
    v8 = _unit_mod(v, 8)
    eps_u = (u8 - 1) // 2 % 2
    eps_v = (v8 - 1) // 2 % 2
    omega_u = (u8 * u8 - 1) // 8 % 2
    omega_v = (v8 * v8 - 1) // 8 % 2
    exponent = (eps_u * eps_v + alpha * omega_v + beta * omega_u) % 2
    return -1 if exponent else 1


def is_square_in_Qp(r: Fraction, place) -> bool:
    r = Fraction(r)
    if r == 0:
        raise DomainError("0 is not in the unit group")
    if place == INF:
        return r > 0
    p = int(place)
    v, u = _split_unit(r, p)
    if v % 2:
        return False
    if p == 2:
        return _unit_mod(u, 8) == 1
    return _legendre(_unit_mod(u, p), p) == 1


# ---------------------------------------------------------------------------
# spaces and invariants


@dataclass(frozen=True)
class GramMatrix:
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        n = len(self.entries)
        for row in self.entries:
            if len(row) != n:
                raise DomainError("Gram matrix must be square")
        for i in range(n):
            for j in range(n):
                if self.entries[i][j] != self.entries[j][i]:
                    raise DomainError("Gram matrix must be symmetric")

    @staticmethod
    def from_rows(rows) -> "GramMatrix":
        return GramMatrix(tuple(tuple(Fraction(x) for x in row) for row in rows))

    def dimension(self) -> int:
        return len(self.entries)

    def determinant(self) -> Fraction:
        return fraction_determinant([list(row) for row in self.entries])

    def to_json(self) -> list[list[str]]:
        return [[rat_to_str(x) for x in row] for row in self.entries]


@dataclass(frozen=True)
class QSpace:
    """A nondegenerate quadratic space over Q via a diagonal representative."""

    diagonal: tuple[Fraction, ...]

    def __post_init__(self):
        if any(d == 0 for d in self.diagonal):
            raise DomainError("diagonal entries must be nonzero")

    @staticmethod
    def of(*entries) -> "QSpace":
        return QSpace(tuple(Fraction(e) for e in entries))

    def dimension(self) -> int:
        return len(self.diagonal)

    def concat(self, other: "QSpace") -> "QSpace":
        return QSpace(self.diagonal + other.diagonal)

    def to_json(self) -> dict:
        return {"diagonal": [rat_to_str(d) for d in self.diagonal]}

    @staticmethod
    def from_json(obj) -> "QSpace":
        from .exactpoly import rat_from_str

        return QSpace(tuple(rat_from_str(s) for s in obj["diagonal"]))


@dataclass(frozen=True)
class QFormInvariants:
    dim: int
    signature: tuple[int, int]
    det: SquareClass
    hasse: frozenset

    def __post_init__(self):
        r, s = self.signature
        if r < 0 or s < 0 or r + s != self.dim:
            raise DomainError("signature incompatible with dimension")

    def sorted_hasse(self) -> list:
        return sorted(self.hasse, key=_place_sort_key)

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "signature": list(self.signature),
            "det": str(self.det),
            "hasse": [place_to_json(v) for v in self.sorted_hasse()],
        }

    @staticmethod
    def from_json(obj) -> "QFormInvariants":
        det = square_class(Fraction(obj["det"]))
        hasse = frozenset(place_from_json(s) for s in obj["hasse"])
        return QFormInvariants(
            dim=int(obj["dim"]),
            signature=(int(obj["signature"][0]), int(obj["signature"][1])),
            det=det,
            hasse=hasse,
        )


NEUTRAL_INVARIANTS = QFormInvariants(0, (0, 0), SquareClass(1, 1), frozenset())


def diagonalize(gram: GramMatrix) -> QSpace:
    """A diagonal form congruent to the Gram matrix (symmetric elimination)."""
    n = gram.dimension()
    m = [list(row) for row in gram.entries]
    diag: list[Fraction] = []
    for k in range(n):
        if m[k][k] == 0:
            swap = next((j for j in range(k + 1, n) if m[j][j] != 0), None)
            if swap is not None:
                m[k], m[swap] = m[swap], m[k]
                for row in m:
                    row[k], row[swap] = row[swap], row[k]
            else:
                other = next((j for j in range(k + 1, n) if m[k][j] != 0), None)
                if other is None:
                    raise DomainError("degenerate Gram matrix")
                for j in range(n):
                    m[k][j] += m[other][j]
                for i in range(n):
                    m[i][k] += m[i][other]
        pivot = m[k][k]
        diag.append(pivot)
        for i in range(k + 1, n):
            factor = m[i][k] / pivot
            if factor == 0:
                continue
            for j in range(n):
                m[i][j] -= factor * m[k][j]
            for j in range(n):
                m[j][i] -= factor * m[j][k]
    return QSpace(tuple(diag))


def _support_places(values) -> list:
    primes: set[int] = {2}
    for v in values:
        f = Fraction(v)
        primes.update(_intfactor.factorize(abs(f.numerator)))
        primes.update(_intfactor.factorize(f.denominator))
    return sorted(primes) + [INF]


def invariants(space: QSpace) -> QFormInvariants:
    diag = space.diagonal
    n = len(diag)
    r = sum(1 for d in diag if d > 0)
    s = n - r
    det = square_class(math.prod(diag, start=Fraction(1))) if n else SquareClass(1, 1)
    hasse = set()
    for place in _support_places(diag):
        total = 1
        for i, j in itertools.combinations(range(n), 2):
            total *= hilbert_symbol(diag[i], diag[j], place)
        if total == -1:
            hasse.add(place)
    return QFormInvariants(n, (r, s), det, frozenset(hasse))


def equivalent(v: QSpace, w: QSpace) -> bool:
    """Isomorphism over Q is detected by the invariant quadruple."""
    return invariants(v) == invariants(w)


def sum_invariants(a: QFormInvariants, b: QFormInvariants) -> QFormInvariants:
    """Invariants of the orthogonal sum, via the additivity law
    w(V + W) = w(V) + w(W) + (det V, det W)."""
    det = a.det.times(b.det)
    hasse = set(a.hasse) ^ set(b.hasse)
    for place in _support_places([a.det.as_fraction(), b.det.as_fraction()]):
        if hilbert_symbol(a.det.as_fraction(), b.det.as_fraction(), place) == -1:
            hasse ^= {place}
    return QFormInvariants(
        a.dim + b.dim,
        (a.signature[0] + b.signature[0], a.signature[1] + b.signature[1]),
        det,
        frozenset(hasse),
    )


def complement_invariants(sub: QFormInvariants, whole: QFormInvariants) -> QFormInvariants:
    """The unique tuple X with sum_invariants(sub, X) = whole.

    No admissibility judgment is made here; callers combine with
    admissible().
    """
    if sub.dim > whole.dim:
        raise DomainError("sub-space dimension exceeds the ambient dimension")
    r = whole.signature[0] - sub.signature[0]
    s = whole.signature[1] - sub.signature[1]
    if r < 0 or s < 0:
        raise DomainError("signatures are incompatible")
    det = whole.det.times(sub.det)  # square classes have order 2
    hasse = set(whole.hasse) ^ set(sub.hasse)
    for place in _support_places([sub.det.as_fraction(), det.as_fraction()]):
        if hilbert_symbol(sub.det.as_fraction(), det.as_fraction(), place) == -1:
            hasse ^= {place}
    return QFormInvariants(whole.dim - sub.dim, (r, s), det, frozenset(hasse))


# ---------------------------------------------------------------------------
# admissibility and construction


def admissible(inv: QFormInvariants) -> bool:
    """Whether a quadratic space over Q with these invariants exists."""
    r, s = inv.signature
    if len(inv.hasse) % 2 != 0:
        return False
    det_sign = 1 if s % 2 == 0 else -1
    if inv.det.sign != det_sign:
        return False
    infinite_expected = (s * (s - 1) // 2) % 2 == 1
    if (INF in inv.hasse) != infinite_expected:
        return False
    if inv.dim == 0:
        return inv.det.is_trivial and not inv.hasse
    if inv.dim == 1:
        return not inv.hasse
    if inv.dim == 2:
        # A binary form of determinant d has Hasse symbol (x, -d); a place
        # where -d is a square cannot be ramified.
        minus_det = -inv.det.as_fraction()
        return all(not is_square_in_Qp(minus_det, v) for v in inv.hasse)
    return True


_POOL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


class ConstructionError(ArithmeticError):
    pass


def _scalar_candidates(pool: list[int], allowed_signs: tuple[int, ...]):
    """Deterministic stream of squarefree scalars built from a prime pool."""
    for size in range(len(pool) + 1):
        for combo in itertools.combinations(pool, size):
            value = math.prod(combo, start=1)
            for sign in allowed_signs:
                yield Fraction(sign * value)


def _binary_pool(inv: QFormInvariants) -> list[int]:
    primes = {2}
    primes.update(_intfactor.factorize(inv.det.squarefree))
    primes.update(int(v) for v in inv.hasse if v != INF)
    primes.update(_POOL_PRIMES[:8])
    return sorted(primes)


def _construct_binary(inv: QFormInvariants) -> list[Fraction]:
    r, s = inv.signature
    delta = inv.det.as_fraction()
    if r == 2:
        sign_choices: tuple[int, ...] = (1,)
    elif r == 0:
        sign_choices = (-1,)
    else:
        sign_choices = (1, -1)
    pool = _binary_pool(inv)
    for x in _scalar_candidates(pool, sign_choices):
        if x == 0:
            continue
        y = delta * x
        if (1 if x > 0 else -1) + (1 if y > 0 else -1) != r - s:
            continue
        candidate = QSpace((x, y))
        if invariants(candidate) == inv:
            return [x, y]
    raise ConstructionError(f"no binary form found for {inv}")


def _construct_diagonal(inv: QFormInvariants) -> list[Fraction]:
    r, s = inv.signature
    if inv.dim == 0:
        return []
    if inv.dim == 1:
        return [inv.det.as_fraction()]
    if inv.dim == 2:
        return _construct_binary(inv)
    if inv.dim == 3:
        sign_choices = []
        if r >= 1:
            sign_choices.append(1)
        if s >= 1:
            sign_choices.append(-1)
        pool = _binary_pool(inv)
        for z in _scalar_candidates(pool, tuple(sign_choices)):
            rest = complement_invariants(invariants(QSpace((z,))), inv)
            if admissible(rest):
                return [z] + _construct_binary(rest)
        raise ConstructionError(f"no ternary split found for {inv}")
    # dim >= 4: peel a unit entry; the complement conditions hold whenever the
    # remaining dimension is >= 3 because the defect arithmetic is additive.
    eps = Fraction(1) if r >= 1 else Fraction(-1)
    rest = complement_invariants(invariants(QSpace((eps,))), inv)
    return [eps] + _construct_diagonal(rest)


def construct_with_invariants(inv: QFormInvariants) -> QSpace:
    """A diagonal space realizing an admissible invariant tuple exactly.

    Deterministic: entries are peeled greedily and the final binary block is
    found by an ordered search over squarefree scalars; the result is
    round-trip verified before it is returned.
    """
    if not admissible(inv):
        raise DomainError(f"inadmissible invariants: {inv}")
    diag = _construct_diagonal(inv)
    space = QSpace(tuple(diag))
    if invariants(space) != inv:
        raise ConstructionError(f"round trip failed for {inv}")
    return space


def is_hyperbolic_at_p(inv: QFormInvariants, p: int) -> bool:
    """Whether the localization at p matches an orthogonal sum of dim/2
    hyperbolic planes (determinant and Hasse compared locally)."""
    if inv.dim % 2 != 0:
        raise DomainError("hyperbolic comparison needs even dimension")
    k = inv.dim // 2
    plane = invariants(QSpace.of(1, -1))
    hk = NEUTRAL_INVARIANTS
    for _ in range(k):
        hk = sum_invariants(hk, plane)
    ratio = inv.det.as_fraction() * hk.det.as_fraction()
    if not is_square_in_Qp(ratio, p):
        return False
    return (p in inv.hasse) == (p in hk.hasse)


# ---------------------------------------------------------------------------
# the K3 lattice

# Gram matrix of the E8 root lattice (Bourbaki node ordering; node 2 is the
# branch node attached to node 4).
_E8_EDGES = ((1, 3), (3, 4), (2, 4), (4, 5), (5, 6), (6, 7), (7, 8))


def _e8_gram() -> list[list[int]]:
    g = [[0] * 8 for _ in range(8)]
    for i in range(8):
        g[i][i] = 2
    for a, b in _E8_EDGES:
        g[a - 1][b - 1] = -1
        g[b - 1][a - 1] = -1
    return g


def k3_lattice() -> GramMatrix:
    """The 22x22 Gram matrix of (-E8) + (-E8) + U + U + U."""
    blocks: list[list[list[int]]] = []
    minus_e8 = [[-x for x in row] for row in _e8_gram()]
    blocks.append(minus_e8)
    blocks.append(minus_e8)
    u = [[0, 1], [1, 0]]
    blocks.extend([u, u, u])
    size = sum(len(b) for b in blocks)
    out = [[Fraction(0)] * size for _ in range(size)]
    offset = 0
    for block in blocks:
        for i, row in enumerate(block):
            for j, val in enumerate(row):
                out[offset + i][offset + j] = Fraction(val)
        offset += len(block)
    return GramMatrix(tuple(tuple(row) for row in out))


def k3_invariants() -> QFormInvariants:
    return invariants(diagonalize(k3_lattice()))
