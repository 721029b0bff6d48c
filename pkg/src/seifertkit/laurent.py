"""Integer Laurent polynomials in one variable ``t``."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping


class LaurentPolynomial:
    """An element of Z[t, t^-1], stored as ``{exponent: coefficient}``.

    Zero coefficients are never stored, so two polynomials are equal exactly
    when their dictionaries are.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        self._c = {int(e): int(c) for e, c in (coeffs or {}).items() if c}

    @classmethod
    def constant(cls, c: int) -> LaurentPolynomial:
        return cls({0: c})

    @classmethod
    def monomial(cls, c: int, e: int) -> LaurentPolynomial:
        return cls({e: c})

    @classmethod
    def from_coeffs(cls, min_exp: int, coeffs: Iterable[int]) -> LaurentPolynomial:
        return cls({min_exp + k: c for k, c in enumerate(coeffs)})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def is_zero(self) -> bool:
        return not self._c

    @property
    def min_exp(self) -> int:
        return min(self._c) if self._c else 0

    @property
    def max_exp(self) -> int:
        return max(self._c) if self._c else 0

    @property
    def span(self) -> int:
        """Difference between the highest and lowest exponents."""
        return self.max_exp - self.min_exp

    def coefficient_list(self) -> list[int]:
        if not self._c:
            return []
        lo = self.min_exp
        return [self._c.get(e, 0) for e in range(lo, self.max_exp + 1)]

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __add__(self, other):
        other = _coerce(other)
        out = dict(self._c)
        for e, c in other._c.items():
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({e: -c for e, c in self._c.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        out: dict[int, int] = {}
        for e1, c1 in self._c.items():
            for e2, c2 in other._c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are only defined for monomials")
        result = LaurentPolynomial.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> LaurentPolynomial:
        """Multiply by t^k."""
        return LaurentPolynomial({e + k: c for e, c in self._c.items()})

    def substitute_inverse(self) -> LaurentPolynomial:
        """The polynomial p(t^-1)."""
        return LaurentPolynomial({-e: c for e, c in self._c.items()})

    def is_symmetric(self) -> bool:
        return self == self.substitute_inverse()

    def __call__(self, t):
        if isinstance(t, int) and self.min_exp < 0:
            value = sum(c * Fraction(t) ** e for e, c in self._c.items())
            return int(value) if value.denominator == 1 else value
        return sum(c * t**e for e, c in self._c.items())

    def exact_divide(self, other: LaurentPolynomial) -> LaurentPolynomial:
        """Quotient ``self / other``; raises ``ArithmeticError`` if inexact."""
        other = _coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPolynomial()
        num = self.coefficient_list()
        den = other.coefficient_list()
        shift = self.min_exp - other.min_exp
        # long division on ordinary polynomials, lowest degree first
        rem = list(num)
        quot = [0] * max(len(num) - len(den) + 1, 0)
        lead = den[-1]
        for k in range(len(quot) - 1, -1, -1):
            top = rem[k + len(den) - 1]
            if top % lead:
                raise ArithmeticError("polynomial division is not exact")
            q = top // lead
            quot[k] = q
            if q:
                for j, d in enumerate(den):
                    rem[k + j] -= q * d
        if any(rem):
            raise ArithmeticError("polynomial division is not exact")
        return LaurentPolynomial.from_coeffs(shift, quot)

    def to_dict(self) -> dict:
        return {"min_exp": self.min_exp, "coeffs": self.coefficient_list()}

    @classmethod
    def from_dict(cls, data: Mapping) -> LaurentPolynomial:
        coeffs = [int(c) for c in data["coeffs"]]
        if coeffs and (coeffs[0] == 0 or coeffs[-1] == 0):
            raise ValueError("leading and trailing zero coefficients are not allowed")
        return cls.from_coeffs(int(data["min_exp"]), coeffs)

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for e in sorted(self._c, reverse=True):
            c = self._c[e]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "t" if e == 1 else f"t^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"LaurentPolynomial({self._c!r})"


def _coerce(x) -> LaurentPolynomial:
    if isinstance(x, LaurentPolynomial):
        return x
    if isinstance(x, int):
        return LaurentPolynomial.constant(x)
    raise TypeError(f"cannot use {type(x).__name__} as a Laurent polynomial")


def laurent_determinant(rows: list[list[LaurentPolynomial]]) -> LaurentPolynomial:
    """Determinant over Z[t, t^-1] by Bareiss fraction-free elimination."""
    n = len(rows)
    if n == 0:
        return LaurentPolynomial.constant(1)
    a = [[_coerce(x) for x in row] for row in rows]
    sign = 1
    prev = LaurentPolynomial.constant(1)
    for k in range(n - 1):
        if a[k][k].is_zero():
            swap = next((r for r in range(k + 1, n) if not a[r][k].is_zero()), None)
            if swap is None:
                return LaurentPolynomial()
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]).exact_divide(prev)
        prev = pivot
    det = a[n - 1][n - 1]
    return -det if sign < 0 else det
