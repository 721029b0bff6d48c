"""Signature, Alexander polynomial, framings and the signature bound."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DegenerateForm, DimensionMismatch
from .exact import int_determinant, interpolate
from .laurent import LaurentPolynomial
from .seifert import SeifertMatrix


def diagonalize(q: Sequence[Sequence[int]], order: Sequence[int] | None = None):
    """Congruence-diagonalise a symmetric integer matrix over the rationals.

    Returns ``(vector, value)`` pairs: the vectors are mutually orthogonal for
    ``q`` and ``vector^T q vector == value``.  Vectors are in the original
    coordinates.  Pivots are taken in ``order`` (default: index order).
    Zero-diagonal stretches are cleared with a hyperbolic pair ``e_i +- e_j``.
    A zero value signals a degenerate direction.
    """
    n = len(q)
    if order is None:
        order = range(n)
    order = list(order)
    a = {i: {j: Fraction(q[i][j]) for j in range(n)} for i in range(n)}
    basis = {i: [Fraction(int(i == k)) for k in range(n)] for i in range(n)}
    active = list(order)
    out = []

    def combine(u, cu, v, cv):
        return [cu * x + cv * y for x, y in zip(u, v)]

    while active:
        pivot = next((i for i in active if a[i][i] != 0), None)
        if pivot is not None:
            i = pivot
            d = a[i][i]
            active.remove(i)
            out.append((basis[i], d))
            for k in active:
                f = a[i][k] / d
                if f:
                    basis[k] = combine(basis[k], 1, basis[i], -f)
            for k in active:
                for l in active:
                    a[k][l] -= a[k][i] * a[i][l] / d
            continue
        pair = next(((i, j) for i in active for j in active if i != j and a[i][j] != 0), None)
        if pair is None:
            # remaining block is identically zero
            out.extend((basis[i], Fraction(0)) for i in active)
            break
        i, j = pair
        h = a[i][j]
        active.remove(i)
        active.remove(j)
        out.append((combine(basis[i], 1, basis[j], 1), 2 * h))
        out.append((combine(basis[i], 1, basis[j], -1), -2 * h))
        for k in active:
            fi, fj = a[j][k] / h, a[i][k] / h
            basis[k] = combine(combine(basis[k], 1, basis[i], -fi), 1, basis[j], -fj)
        new = {}
        for k in active:
            new[k] = {}
            for l in active:
                new[k][l] = a[k][l] - (a[k][i] * a[j][l] + a[k][j] * a[i][l]) / h
        for k in active:
            for l in active:
                a[k][l] = new[k][l]
    return out


def signature(v: SeifertMatrix, order: Sequence[int] | None = None) -> int:
    """Signature of V + V^T, counted exactly from a congruence diagonalisation."""
    q = v.symmetrized()
    if int_determinant(q) == 0:
        raise DegenerateForm("V + V^T is singular")
    values = [d for _, d in diagonalize(q, order)]
    return sum(1 for d in values if d > 0) - sum(1 for d in values if d < 0)


def alexander_polynomial(v: SeifertMatrix) -> LaurentPolynomial:
    """Normalised det(t V - V^T): symmetric, with value 1 at t = 1.

    The determinant has degree at most 2g, so it is recovered exactly by
    interpolating integer determinants at 2g + 1 points.
    """
    g, n = v.genus, v.size
    if n == 0:
        return LaurentPolynomial.constant(1)
    points = [0]
    k = 1
    while len(points) < n + 1:
        points.extend([k, -k])
        k += 1
    points = points[: n + 1]
    e = v.entries
    values = [
        int_determinant([[t * e[i][j] - e[j][i] for j in range(n)] for i in range(n)])
        for t in points
    ]
    poly = LaurentPolynomial.from_coeffs(-g, interpolate(points, values))
    return -poly if poly(1) < 0 else poly


def _split(v: SeifertMatrix, x: Sequence[int]) -> int:
    n = v.size
    if n == 0 or len(x) % n:
        raise DimensionMismatch(f"vector of length {len(x)} does not fit blocks of size {n}")
    return len(x) // n


def gram(v: SeifertMatrix, x: Sequence[int], y: Sequence[int]) -> int:
    """x^T V^(n) y for the n-fold block sum V^(n), computed blockwise."""
    blocks = _split(v, x)
    if len(y) != len(x):
        raise DimensionMismatch(f"vectors of lengths {len(x)} and {len(y)}")
    n, e = v.size, v.entries
    total = 0
    for b in range(blocks):
        xs, ys = x[b * n:(b + 1) * n], y[b * n:(b + 1) * n]
        if not any(xs) or not any(ys):
            continue
        for i in range(n):
            if xs[i]:
                row = e[i]
                total += xs[i] * sum(row[j] * ys[j] for j in range(n) if ys[j])
    return total


def framing(v: SeifertMatrix, x: Sequence[int]) -> int:
    """Framing V(x, x) of a class in some block-sum power of V."""
    return gram(v, x, x)


@dataclass(frozen=True)
class BoundReport:
    genus: int
    signature: int
    lower_stable: Fraction
    equality: bool

    def to_dict(self) -> dict:
        return {
            "genus": self.genus,
            "signature": self.signature,
            "lower_stable": {"num": self.lower_stable.numerator, "den": self.lower_stable.denominator},
            "equality": self.equality,
        }


def bound_report(v: SeifertMatrix) -> BoundReport:
    """Genus, signature and the lower bound |sigma|/2 for the stable 4-genus."""
    sigma = signature(v) if v.size else 0
    return BoundReport(
        genus=v.genus,
        signature=sigma,
        lower_stable=Fraction(abs(sigma), 2),
        equality=abs(sigma) == 2 * v.genus,
    )
