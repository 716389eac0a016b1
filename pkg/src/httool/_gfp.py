"""Dense univariate polynomial arithmetic over the prime field F_p.

Polynomials are lists of ints reduced into [0, p), ascending degree, with no
trailing zeros (the zero polynomial is the empty list).  The primes in play
are small, so Berlekamp's algorithm with a deterministic splitting loop is
both simple and fast, and avoids randomized Cantor-Zassenhaus.
"""

from __future__ import annotations


def trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def from_coeffs(coeffs, p: int) -> list[int]:
    return trim([int(c) % p for c in coeffs])


def degree(f: list[int]) -> int:
    return len(f) - 1


def is_zero(f: list[int]) -> bool:
    return not f


def add(f: list[int], g: list[int], p: int) -> list[int]:
    n = max(len(f), len(g))
    out = [0] * n
    for i in range(n):
        a = f[i] if i < len(f) else 0
        b = g[i] if i < len(g) else 0
        out[i] = (a + b) % p
    return trim(out)


def sub(f: list[int], g: list[int], p: int) -> list[int]:
    n = max(len(f), len(g))
    out = [0] * n
    for i in range(n):
        a = f[i] if i < len(f) else 0
        b = g[i] if i < len(g) else 0
        out[i] = (a - b) % p
    return trim(out)


def mul(f: list[int], g: list[int], p: int) -> list[int]:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            out[i + j] = (out[i + j] + a * b) % p
    return trim(out)


def scalar_mul(c: int, f: list[int], p: int) -> list[int]:
    c %= p
    return trim([c * a % p for a in f])


def divmod_(f: list[int], g: list[int], p: int) -> tuple[list[int], list[int]]:
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    inv = pow(g[-1], -1, p)
    rem = list(f)
    quo = [0] * max(len(f) - len(g) + 1, 0)
    while len(rem) >= len(g) and rem:
        shift = len(rem) - len(g)
        factor = rem[-1] * inv % p
        quo[shift] = factor
        for i, b in enumerate(g):
            rem[shift + i] = (rem[shift + i] - factor * b) % p
        trim(rem)
    return trim(quo), rem


def rem(f: list[int], g: list[int], p: int) -> list[int]:
    return divmod_(f, g, p)[1]


def monic(f: list[int], p: int) -> list[int]:
    if not f:
        return []
    return scalar_mul(pow(f[-1], -1, p), f, p)


def gcd(f: list[int], g: list[int], p: int) -> list[int]:
    a, b = list(f), list(g)
    while b:
        a, b = b, rem(a, b, p)
    return monic(a, p)


def gcdex(f: list[int], g: list[int], p: int) -> tuple[list[int], list[int], list[int]]:
    """Return (s, t, h) with s*f + t*g = h = monic gcd(f, g)."""
    r0, r1 = list(f), list(g)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = divmod_(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1, p), p)
        t0, t1 = t1, sub(t0, mul(q, t1, p), p)
    if not r0:
        return [], [], []
    inv = pow(r0[-1], -1, p)
    return scalar_mul(inv, s0, p), scalar_mul(inv, t0, p), monic(r0, p)


def pow_mod(f: list[int], e: int, modulus: list[int], p: int) -> list[int]:
    result = [1]
    base = rem(f, modulus, p)
    while e > 0:
        if e & 1:
            result = rem(mul(result, base, p), modulus, p)
        base = rem(mul(base, base, p), modulus, p)
        e >>= 1
    return result


def derivative(f: list[int], p: int) -> list[int]:
    return trim([i * c % p for i, c in enumerate(f)][1:])


def eval_at(f: list[int], x: int, p: int) -> int:
    acc = 0
    for c in reversed(f):
        acc = (acc * x + c) % p
    return acc


def is_squarefree(f: list[int], p: int) -> bool:
    d = derivative(f, p)
    if not d:
        return degree(f) <= 0
    return degree(gcd(f, d, p)) == 0


def _nullspace_mod_p(matrix: list[list[int]], p: int) -> list[list[int]]:
    """Basis of the right nullspace of `matrix` over F_p (row reduction)."""
    rows = [row[:] for row in matrix]
    n = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for col in range(n):
        pivot_row = next((i for i in range(r, len(rows)) if rows[i][col] % p), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = pow(rows[r][col], -1, p)
        rows[r] = [v * inv % p for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] % p:
                factor = rows[i][col]
                rows[i] = [(a - factor * b) % p for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    basis = []
    free_cols = [c for c in range(n) if c not in pivots]
    for free in free_cols:
        vec = [0] * n
        vec[free] = 1
        for row_idx, col in enumerate(pivots):
            vec[col] = (-rows[row_idx][free]) % p
        basis.append(vec)
    return basis


def berlekamp(f: list[int], p: int) -> list[list[int]]:
    """Factor a monic squarefree f over F_p into monic irreducibles, sorted."""
    n = degree(f)
    if n <= 1:
        return [list(f)]
    # Row i of Q holds x**(i*p) mod f; the Berlekamp subalgebra is the left
    # fixed space of Q, i.e. the nullspace of (Q^T - I).
    frob_rows = []
    xp = pow_mod([0, 1], p, f, p)
    current = [1]
    for _ in range(n):
        row = current + [0] * (n - len(current))
        frob_rows.append(row[:n])
        current = rem(mul(current, xp, p), f, p)
    mt = [[(frob_rows[j][i] - (1 if i == j else 0)) % p for j in range(n)] for i in range(n)]
    basis = _nullspace_mod_p(mt, p)
    r = len(basis)
    if r == 1:
        return [list(f)]
    factors = [list(f)]
    for vec in basis:
        v = trim(list(vec))
        if degree(v) < 1:
            continue
        next_factors = []
        for h in factors:
            if degree(h) <= 1:
                next_factors.append(h)
                continue
            pieces = []
            remaining = h
            for s in range(p):
                if degree(remaining) < 1:
                    break
                g = gcd(remaining, sub(v, [s], p), p)
                if 0 < degree(g) <= degree(remaining):
                    pieces.append(g)
                    remaining = divmod_(remaining, g, p)[0]
            if degree(remaining) > 0:
                pieces.append(monic(remaining, p))
            next_factors.extend(pieces if pieces else [h])
        factors = next_factors
        if len(factors) == r:
            break
    return sorted(factors, key=lambda g: (degree(g), g))


def squarefree_decomposition(f: list[int], p: int) -> list[tuple[list[int], int]]:
    """Monic squarefree decomposition over F_p, handling f' = 0 via p-th roots."""
    f = monic(f, p)
    if degree(f) < 1:
        return []
    out: list[tuple[list[int], int]] = []

    def recurse(g: list[int], mult: int) -> None:
        d = derivative(g, p)
        if not d:
            # g = h(x**p) = h(x)**p since the base field is F_p.
            h = trim([g[i] for i in range(0, len(g), p)])
            recurse(h, mult * p)
            return
        w = gcd(g, d, p)
        v = divmod_(g, w, p)[0]
        i = 1
        while degree(v) > 0:
            y = gcd(v, w, p)
            z = divmod_(v, y, p)[0]
            if degree(z) > 0:
                out.append((z, mult * i))
            v = y
            w = divmod_(w, y, p)[0]
            i += 1
        if degree(w) > 0:
            recurse(w, mult)

    recurse(f, 1)
    merged: dict[tuple[int, ...], tuple[list[int], int]] = {}
    for g, m in out:
        key = tuple(g)
        if key in merged:
            merged[key] = (g, merged[key][1] + m)
        else:
            merged[key] = (g, m)
    return sorted(merged.values(), key=lambda gm: (degree(gm[0]), gm[0]))


def factor(f: list[int], p: int) -> tuple[int, list[tuple[list[int], int]]]:
    """Complete factorization over F_p: (lead unit, [(monic irreducible, mult)])."""
    if not f:
        raise ZeroDivisionError("cannot factor the zero polynomial")
    lead = f[-1] % p
    out: list[tuple[list[int], int]] = []
    for g, mult in squarefree_decomposition(f, p):
        for irr in berlekamp(g, p):
            out.append((irr, mult))
    out.sort(key=lambda gm: (degree(gm[0]), gm[0]))
    return lead, out


def is_irreducible(f: list[int], p: int) -> bool:
    if degree(f) < 1:
        return False
    if not is_squarefree(f, p):
        return False
    return len(berlekamp(monic(f, p), p)) == 1
