"""Exact determinants for small dense matrices."""

from __future__ import annotations

import math
from fractions import Fraction


def bareiss_determinant(matrix: list[list[int]]) -> int:
    """Exact integer determinant by fraction-free (Bareiss) elimination."""
    n = len(matrix)
    if n == 0:
        return 1
    m = [row[:] for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if pivot is None:
                return 0
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def fraction_determinant(matrix: list[list[Fraction]]) -> Fraction:
    """Exact determinant of a rational matrix (row-wise denominator clearing)."""
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    int_rows: list[list[int]] = []
    for row in matrix:
        lcm = 1
        for entry in row:
            lcm = lcm * entry.denominator // math.gcd(lcm, entry.denominator)
        scale *= lcm
        int_rows.append([int(entry * lcm) for entry in row])
    return Fraction(bareiss_determinant(int_rows)) / scale
