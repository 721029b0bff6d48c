import random

import pytest
import sympy
from hypothesis import settings, strategies as st

from seifertkit.laurent import LaurentPolynomial
from seifertkit.seifert import SeifertMatrix

settings.register_profile("default", deadline=None)
settings.load_profile("default")

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def random_seifert(rng: random.Random, genus: int, spread: int = 2, conjugate: bool = True) -> SeifertMatrix:
    """V = S + H with S symmetric and H the standard hyperbolic part, then P^T V P.

    V - V^T equals the standard symplectic matrix (conjugated), so det = 1.
    """
    n = 2 * genus
    v = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            x = rng.randint(-spread, spread)
            v[i][j] += x
            if i != j:
                v[j][i] += x
    for k in range(genus):
        v[2 * k][2 * k + 1] += 1
    if conjugate and n:
        p = [[int(i == j) for j in range(n)] for i in range(n)]
        for _ in range(n):
            i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
            if i == j:
                continue
            c = rng.choice([-1, 1])
            for r in range(n):
                p[r][j] += c * p[r][i]
        v = [[sum(p[a][i] * v[a][b] * p[b][j] for a in range(n) for b in range(n)) for j in range(n)] for i in range(n)]
    return SeifertMatrix.from_rows(v)


@st.composite
def seifert_matrices(draw, min_genus=0, max_genus=4, spread=2):
    genus = draw(st.integers(min_genus, max_genus))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_seifert(random.Random(seed), genus, spread)


def sympy_signature(rows) -> int:
    """Signature from the characteristic polynomial by Descartes' rule of signs.

    Exact for symmetric matrices, whose characteristic polynomials are real-rooted.
    """
    n = len(rows)
    if n == 0:
        return 0
    x = sympy.Symbol("x")
    coeffs = sympy.Matrix(rows).charpoly(x).all_coeffs()

    def changes(cs):
        cs = [c for c in cs if c != 0]
        return sum(1 for a, b in zip(cs, cs[1:]) if (a > 0) != (b > 0))

    pos = changes(coeffs)
    neg = changes([c * (-1) ** (len(coeffs) - 1 - k) for k, c in enumerate(coeffs)])
    return pos - neg


def sympy_alexander(v: SeifertMatrix) -> LaurentPolynomial:
    """det(t V - V^T) symbolically, shifted by t^-g and sign-fixed by its value at 1."""
    if v.size == 0:
        return LaurentPolynomial.constant(1)
    t = sympy.Symbol("t")
    m = sympy.Matrix(v.rows())
    poly = sympy.Poly((t * m - m.T).det(), t)
    out = LaurentPolynomial({k[0] - v.genus: int(c) for k, c in poly.terms()})
    return -out if out(1) < 0 else out


@pytest.fixture
def trefoil():
    return SeifertMatrix.from_rows([[-1, 1], [0, -1]])
