"""Seifert matrices of positive braid closures and matrix-level surface operations.

The canonical surface of a positive braid closure (Seifert's algorithm on the
braid diagram) is a fibre surface whose first homology has the *brick* basis:
one curve for each pair of consecutive occurrences of the same generator.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .braid import BraidWord, require_knot
from .errors import InvalidPower, InvalidSeifertMatrix, ParseError
from .exact import int_determinant
from .laurent import LaurentPolynomial, laurent_determinant


@dataclass(frozen=True)
class Brick:
    column: int
    start_time: int
    end_time: int


@dataclass(frozen=True)
class SeifertMatrix:
    """Square integer matrix of even size representing a Seifert form.

    Only shape is checked on construction; call :meth:`validate` to check
    that the antisymmetrisation is unimodular.
    """

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.entries)
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise InvalidSeifertMatrix("Seifert matrix must be square")
        if n % 2:
            raise InvalidSeifertMatrix(f"Seifert matrix has odd size {n}")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> SeifertMatrix:
        return cls(tuple(tuple(r) for r in rows))

    @property
    def size(self) -> int:
        return len(self.entries)

    @property
    def genus(self) -> int:
        return self.size // 2

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def rows(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def transpose(self) -> SeifertMatrix:
        return SeifertMatrix(tuple(zip(*self.entries)) if self.size else ())

    def symmetrized(self) -> list[list[int]]:
        """V + V^T."""
        n = self.size
        return [[self.entries[i][j] + self.entries[j][i] for j in range(n)] for i in range(n)]

    def intersection_form(self) -> list[list[int]]:
        """V - V^T."""
        n = self.size
        return [[self.entries[i][j] - self.entries[j][i] for j in range(n)] for i in range(n)]

    def validate(self) -> SeifertMatrix:
        det = int_determinant(self.intersection_form())
        if det != 1:
            raise InvalidSeifertMatrix(f"det(V - V^T) = {det}, expected 1")
        return self

    def to_json(self) -> str:
        return json.dumps({"matrix": self.rows()}, separators=(", ", ": "))

    @classmethod
    def from_json(cls, text: str, validate: bool = True) -> SeifertMatrix:
        try:
            data = json.loads(text)
            rows = data["matrix"]
            if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
                raise TypeError("matrix must be an array of arrays")
            if any(not isinstance(x, int) or isinstance(x, bool) for r in rows for x in r):
                raise TypeError("matrix entries must be integers")
        except (ValueError, KeyError, TypeError) as exc:
            raise ParseError(f"malformed Seifert matrix file: {exc}") from None
        if any(len(r) != len(rows) for r in rows):
            raise ParseError("Seifert matrix must be square")
        matrix = cls.from_rows(rows)
        return matrix.validate() if validate else matrix


def brick_basis(w: BraidWord) -> list[Brick]:
    """Bricks of the fibre surface, column-major then by start time (1-based times)."""
    require_knot(w)
    bricks = []
    for column in range(1, w.strands):
        times = [t for t, x in enumerate(w.letters, start=1) if x == column]
        bricks.extend(Brick(column, a, b) for a, b in zip(times, times[1:]))
    return bricks


def _brick_link(x: Brick, y: Brick) -> int:
    """lk(x, y^+) for two distinct bricks."""
    if x.column == y.column:
        # consecutive bricks in one column share a crossing
        return 1 if x.end_time == y.start_time else 0
    if abs(x.column - y.column) != 1:
        return 0
    # Neighbouring columns meet only when their time intervals interleave
    # (nested intervals give disjoint curves).  The entry sits on the
    # left-column brick: +1 if it starts first, -1 otherwise.  Calibrated
    # against the Burau oracle and torus knot signatures.
    left, right = (x, y) if x.column < y.column else (y, x)
    if left.start_time < right.start_time < left.end_time < right.end_time:
        value = 1
    elif right.start_time < left.start_time < right.end_time < left.end_time:
        value = -1
    else:
        return 0
    return value if x is left else 0


def seifert_matrix_from_positive_braid(w: BraidWord) -> SeifertMatrix:
    bricks = brick_basis(w)
    n = len(bricks)
    rows = [[0] * n for _ in range(n)]
    for i, x in enumerate(bricks):
        for j, y in enumerate(bricks):
            rows[i][j] = -1 if i == j else _brick_link(x, y)
    return SeifertMatrix.from_rows(rows)


def reduced_burau(i: int, strands: int) -> list[list[LaurentPolynomial]]:
    """Reduced Burau matrix of the generator sigma_i, size (strands - 1)."""
    n = strands - 1
    one, zero = LaurentPolynomial.constant(1), LaurentPolynomial()
    t = LaurentPolynomial.monomial(1, 1)
    m = [[one if r == c else zero for c in range(n)] for r in range(n)]
    k = i - 1
    m[k][k] = -t
    if k > 0:
        m[k][k - 1] = t
    if k < n - 1:
        m[k][k + 1] = one
    return m


def _matmul(a, b):
    n, p, q = len(a), len(b), len(b[0])
    out = []
    for r in range(n):
        row = []
        for c in range(q):
            acc = LaurentPolynomial()
            for k in range(p):
                if not a[r][k].is_zero() and not b[k][c].is_zero():
                    acc = acc + a[r][k] * b[k][c]
            row.append(acc)
        out.append(row)
    return out


def normalize_alexander(p: LaurentPolynomial) -> LaurentPolynomial:
    """Multiply by +-t^k so the result is symmetric with value 1 at t = 1."""
    if p.is_zero():
        return p
    mid = p.min_exp + p.max_exp
    if mid % 2 == 0:
        p = p.shift(-mid // 2)
    return -p if p(1) < 0 else p


def burau_alexander_oracle(w: BraidWord) -> LaurentPolynomial:
    """Alexander polynomial of the closure from the reduced Burau representation.

    Uses det(I - B(w)) = Delta(t) * (1 + t + ... + t^(s-1)) up to units.
    """
    require_knot(w)
    s = w.strands
    n = s - 1
    one = LaurentPolynomial.constant(1)
    image = [[one if r == c else LaurentPolynomial() for c in range(n)] for r in range(n)]
    for i in w.letters:
        image = _matmul(image, reduced_burau(i, s))
    diff = [[(one if r == c else LaurentPolynomial()) - image[r][c] for c in range(n)] for r in range(n)]
    det = laurent_determinant(diff)
    cyclotomic = LaurentPolynomial({e: 1 for e in range(s)})
    return normalize_alexander(det.exact_divide(cyclotomic))


def mirror(v: SeifertMatrix) -> SeifertMatrix:
    """Seifert matrix of the mirror surface: -V^T."""
    n = v.size
    return SeifertMatrix.from_rows([[-v.entries[j][i] for j in range(n)] for i in range(n)])


def block_sum(v1: SeifertMatrix, v2: SeifertMatrix) -> SeifertMatrix:
    """Seifert matrix of the boundary connected sum of two surfaces."""
    n1, n2 = v1.size, v2.size
    rows = [list(r) + [0] * n2 for r in v1.entries]
    rows += [[0] * n1 + list(r) for r in v2.entries]
    return SeifertMatrix.from_rows(rows)


def power(v: SeifertMatrix, n: int) -> SeifertMatrix:
    """The n-fold block sum of V with itself."""
    if n < 1:
        raise InvalidPower(f"power must be at least 1, got {n}")
    out = v
    for _ in range(n - 1):
        out = block_sum(out, v)
    return out
