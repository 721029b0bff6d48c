"""Small exact linear-algebra helpers over the integers and rationals."""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence


def int_determinant(rows: Sequence[Sequence[int]]) -> int:
    """Determinant of an integer matrix by Bareiss elimination (no fractions)."""
    n = len(rows)
    if n == 0:
        return 1
    a = [list(map(int, row)) for row in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
        prev = pivot
    return sign * a[n - 1][n - 1]


def interpolate(points: Sequence[int], values: Sequence[int]) -> list[int]:
    """Coefficients (lowest degree first) of the polynomial through the points.

    Uses Newton divided differences over ``Fraction``; the caller guarantees
    the result has integer coefficients.
    """
    n = len(points)
    coef = [Fraction(v) for v in values]
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (points[i] - points[i - level])
    # expand the Newton form into monomial coefficients
    poly = [Fraction(0)] * n
    for k in range(n - 1, -1, -1):
        # poly = poly * (t - points[k]) + coef[k]
        shifted = [Fraction(0)] + poly[:-1]
        poly = [s - points[k] * p for s, p in zip(shifted, poly)]
        poly[0] += coef[k]
    out = []
    for c in poly:
        if c.denominator != 1:
            raise ArithmeticError("interpolated polynomial is not integral")
        out.append(int(c))
    return out


def content(vector: Sequence[int]) -> int:
    g = 0
    for x in vector:
        g = gcd(g, int(x))
    return g


def is_primitive(vector: Sequence[int]) -> bool:
    return content(vector) == 1
