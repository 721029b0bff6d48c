"""Framed classes in connected-sum powers and slice certificates.

All constructions work on the Seifert form of the n-fold boundary connected
sum, whose matrix is the block sum of n copies of V.  Vectors are integer
coordinate lists of length ``size(V) * n``; block k holds the coordinates of
the k-th summand.  Classes in distinct blocks have zero linking, so framings
of disjointly supported sums add.

Geometric realisability of a primitive class by an embedded annulus is not
checked here.  It is carried as an attested flag on the certificate.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from math import gcd, lcm
from typing import Sequence

from .errors import (
    DefiniteForm,
    DimensionMismatch,
    NoAttestation,
    NotPrimitive,
    NotUnitFraming,
    ParseError,
    UnreachableFraming,
)
from .exact import content, is_primitive
from .invariants import BoundReport, alexander_polynomial, bound_report, diagonalize, gram
from .seifert import SeifertMatrix, mirror


@dataclass(frozen=True)
class FramedClass:
    """A primitive class in power(V, power), with its framing cached."""

    power: int
    vector: tuple[int, ...]
    framing: int

    def __post_init__(self):
        object.__setattr__(self, "vector", tuple(int(x) for x in self.vector))
        if not is_primitive(self.vector):
            raise NotPrimitive(f"vector {list(self.vector)} is not primitive")


def framed_class(v: SeifertMatrix, vector: Sequence[int]) -> FramedClass:
    """Wrap ``vector`` as a FramedClass of V, computing its power and framing."""
    if v.size == 0 or len(vector) % v.size:
        raise DimensionMismatch(f"vector of length {len(vector)} does not fit V of size {v.size}")
    return FramedClass(len(vector) // v.size, tuple(vector), gram(v, vector, vector))


def _sign(sign) -> int:
    if sign in ("+", 1, "+1"):
        return 1
    if sign in ("-", -1, "-1"):
        return -1
    raise ValueError(f"sign must be '+' or '-', got {sign!r}")


def find_signed_class(v: SeifertMatrix, sign) -> FramedClass:
    """A primitive class of power 1 whose framing has the requested sign.

    Candidates come from a rational congruence diagonalisation of V + V^T;
    the one with smallest absolute framing wins.
    """
    s = _sign(sign)
    best = None
    for vec, value in diagonalize(v.symmetrized()):
        if value * s <= 0:
            continue
        scale = lcm(*(x.denominator for x in vec))
        ints = [int(x * scale) for x in vec]
        g = content(ints)
        ints = [x // g for x in ints]
        cand = framed_class(v, ints)
        key = (abs(cand.framing), max(abs(x) for x in ints))
        if best is None or key < best[0]:
            best = (key, cand)
    if best is None:
        raise DefiniteForm(f"V + V^T has no {'positive' if s > 0 else 'negative'} directions")
    return best[1]


def _with_copies(vector: Sequence[int], unit: Sequence[int], k: int) -> list[int]:
    return list(vector) + list(unit) * k


def realize_framing(v: SeifertMatrix, base: FramedClass, unit: FramedClass, m: int) -> FramedClass:
    """Add copies of a framing +-1 class in fresh blocks until the framing is ``m``."""
    if abs(unit.framing) != 1:
        raise NotUnitFraming(f"unit class has framing {unit.framing}, expected +-1")
    diff = m - base.framing
    if diff * unit.framing < 0:
        raise UnreachableFraming(
            f"cannot move framing {base.framing} to {m} with a unit of framing {unit.framing}"
        )
    k = abs(diff)
    out = FramedClass(base.power + k * unit.power, _with_copies(base.vector, unit.vector, k), m)
    assert gram(v, out.vector, out.vector) == m
    return out


def _solve_unit_row(row: Sequence[int]) -> list[int]:
    """Integer d with row . d == 1, minimising (max |d_i|, sum |d_i|, lexicographic)."""
    support = [i for i, r in enumerate(row) if r]
    coeffs = [row[i] for i in support]
    if not coeffs or content(coeffs) != 1:
        raise NotPrimitive("row has no integer solution to row . d = 1")
    m = len(coeffs)
    tail_abs = [sum(abs(c) for c in coeffs[k:]) for k in range(m + 1)]
    tail_max = [max((abs(c) for c in coeffs[k:]), default=0) for k in range(m + 1)]
    tail_gcd = [content(coeffs[k:]) for k in range(m + 1)]

    def search(bound, budget):
        chosen = []

        def rec(k, residual, left):
            if k == m:
                return residual == 0 and left == 0
            if left > bound * (m - k):
                return False
            if abs(residual) > min(bound * tail_abs[k], tail_max[k] * left):
                return False
            if residual % tail_gcd[k]:
                return False
            for x in range(-bound, bound + 1):
                if abs(x) > left:
                    continue
                chosen.append(x)
                if rec(k + 1, residual - coeffs[k] * x, left - abs(x)):
                    return True
                chosen.pop()
            return False

        return chosen if rec(0, 1, budget) else None

    bound = 1
    while True:
        for budget in range(bound, m * bound + 1):
            sol = search(bound, budget)
            if sol is not None:
                d = [0] * len(row)
                for i, x in zip(support, sol):
                    d[i] = x
                return d
        bound += 1


def dual_class(v: SeifertMatrix, a: FramedClass) -> list[int]:
    """A class d with a^T (V - V^T) d = 1 in the same power as ``a``."""
    if not is_primitive(a.vector):
        raise NotPrimitive(f"vector {list(a.vector)} is not primitive")
    n = v.size
    if len(a.vector) != n * a.power:
        raise DimensionMismatch("class length does not match its power")
    e = v.entries
    row = []
    for b in range(a.power):
        blk = a.vector[b * n:(b + 1) * n]
        row.extend(sum(blk[i] * (e[i][j] - e[j][i]) for i in range(n)) for j in range(n))
    return _solve_unit_row(row)


@dataclass(frozen=True)
class SliceCertificate:
    N: int
    a_class: tuple[int, ...]
    d_class: tuple[int, ...]
    final_form: tuple[tuple[int, int], tuple[int, int]]
    genus_bound: Fraction
    realizability_attested: bool = True
    transcript: tuple = field(default=(), compare=False)

    def to_dict(self) -> dict:
        return {
            "N": self.N,
            "a": list(self.a_class),
            "d": list(self.d_class),
            "final_form": [list(r) for r in self.final_form],
            "genus_bound": {"num": self.genus_bound.numerator, "den": self.genus_bound.denominator},
            "realizability_attested": self.realizability_attested,
            "transcript": list(self.transcript),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1)

    @classmethod
    def from_dict(cls, data: dict) -> SliceCertificate:
        try:
            form = data["final_form"]
            if len(form) != 2 or any(len(r) != 2 for r in form):
                raise ValueError("final_form must be 2x2")
            bound = data["genus_bound"]
            return cls(
                N=int(data["N"]),
                a_class=tuple(int(x) for x in data["a"]),
                d_class=tuple(int(x) for x in data["d"]),
                final_form=tuple(tuple(int(x) for x in r) for r in form),
                genus_bound=Fraction(int(bound["num"]), int(bound["den"])),
                realizability_attested=bool(data.get("realizability_attested", False)),
                transcript=tuple(data.get("transcript", ())),
            )
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"malformed certificate: {exc}") from None

    @classmethod
    def from_json(cls, text: str) -> SliceCertificate:
        try:
            data = json.loads(text)
        except ValueError as exc:
            raise ParseError(f"certificate is not valid JSON: {exc}") from None
        if not isinstance(data, dict):
            raise ParseError("certificate must be a JSON object")
        return cls.from_dict(data)


def _pad(vector: Sequence[int], length: int) -> list[int]:
    return list(vector) + [0] * (length - len(vector))


def lemma2_torus(
    v: SeifertMatrix,
    a: FramedClass,
    helper_negative: FramedClass,
    realizability_attested: bool = True,
) -> SliceCertificate:
    """Build a genus-one subsurface of some power with Seifert form [[0, 1], [0, 0]].

    ``a`` is a framing +1 class; ``helper_negative`` any class of negative
    framing.  Every framing correction uses previously unused blocks.
    """
    if a.framing != 1:
        raise NotUnitFraming(f"class a has framing {a.framing}, expected +1")
    if helper_negative.framing >= 0:
        raise UnreachableFraming(f"helper class has framing {helper_negative.framing}, expected < 0")
    n = v.size
    transcript = []

    # a framing -1 class: the helper plus copies of a
    neg_unit = realize_framing(v, helper_negative, a, -1)

    d0 = dual_class(v, a)
    b, c = gram(v, a.vector, d0), gram(v, d0, a.vector)
    transcript.append({"step": "picked-dual", "d": d0, "b": b, "c": c})

    blocks = a.power
    A, D = list(a.vector), list(d0)

    def correct(target: str, goal: int):
        nonlocal A, D, blocks
        vec = A if target == "a" else D
        current = gram(v, vec, vec)
        if current == goal:
            return
        if current < goal:
            unit, name = a, "a"
        else:
            unit, name = neg_unit, "negative"
        k = abs(goal - current)
        first = blocks + 1
        blocks += k * unit.power
        vec = _with_copies(vec, unit.vector, k)
        A, D = _pad(A, n * blocks), _pad(D, n * blocks)
        if target == "a":
            A = vec
        else:
            D = vec
        transcript.append(
            {
                "step": "framing-correction",
                "target": target,
                "from": current,
                "to": goal,
                "unit": name,
                "unit_framing": unit.framing,
                "copies": k,
                "blocks": [first, blocks],
            }
        )

    correct("d", -1)
    # conjugating [[1, b], [c, -1]] by [[1, -c], [0, 1]] gives [[1, b - c], [0, -bc - 1]]
    D = [y - c * x for x, y in zip(A, D)]
    transcript.append(
        {
            "step": "base-change",
            "coefficient": -c,
            "before": [[1, b], [c, -1]],
            "after": [[1, b - c], [0, -b * c - 1]],
        }
    )
    correct("a", 0)
    correct("d", 0)

    form = (
        (gram(v, A, A), gram(v, A, D)),
        (gram(v, D, A), gram(v, D, D)),
    )
    return SliceCertificate(
        N=blocks,
        a_class=tuple(A),
        d_class=tuple(D),
        final_form=form,
        genus_bound=Fraction(v.genus) - Fraction(1, blocks),
        realizability_attested=realizability_attested,
        transcript=tuple(transcript),
    )


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[tuple[str, bool, str], ...]

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def failed(self) -> list[str]:
        return [name for name, ok, _ in self.checks if not ok]

    def lines(self) -> list[str]:
        return [f"{'PASS' if ok else 'FAIL'} {name}: {detail}" for name, ok, detail in self.checks]


def verify_certificate(v: SeifertMatrix, cert: SliceCertificate) -> VerificationReport:
    """Recheck a certificate against V from its vectors alone (the transcript is ignored)."""
    checks = []

    def check(name, ok, detail):
        checks.append((name, bool(ok), detail))

    expected = v.size * cert.N
    dims_ok = cert.N >= 1 and v.size > 0 and len(cert.a_class) == expected == len(cert.d_class)
    check("dimensions", dims_ok, f"len(a)={len(cert.a_class)}, len(d)={len(cert.d_class)}, expected {expected}")
    form = cert.final_form
    eps = form[0][1]
    check(
        "unimodular",
        form[0][0] == 0 and form[1][0] == 0 and form[1][1] == 0 and abs(eps) == 1,
        f"final_form={[list(r) for r in form]}",
    )
    delta = alexander_polynomial(SeifertMatrix.from_rows(form))
    check("alexander_trivial", delta == 1, f"Delta(final_form)={delta}")
    target = Fraction(v.genus) - Fraction(1, cert.N) if cert.N >= 1 else None
    check("genus_bound", cert.genus_bound == target, f"genus_bound={cert.genus_bound}, g-1/N={target}")
    check("strict", cert.genus_bound < v.genus, f"{cert.genus_bound} < {v.genus}")

    if not dims_ok:
        for name in ("framing_a", "framing_d", "gram_matches_final_form", "primitive_a", "primitive_d", "bound_chain"):
            check(name, False, "not evaluated: dimension mismatch")
        return VerificationReport(tuple(checks))

    a, d = cert.a_class, cert.d_class
    aa, ad, da, dd = gram(v, a, a), gram(v, a, d), gram(v, d, a), gram(v, d, d)
    check("framing_a", aa == 0, f"a^T V a = {aa}")
    check("framing_d", dd == 0, f"d^T V d = {dd}")
    check(
        "gram_matches_final_form",
        ((aa, ad), (da, dd)) == tuple(tuple(r) for r in form),
        f"gram={[[aa, ad], [da, dd]]}",
    )
    check("primitive_a", is_primitive(a), f"content={content(a)}")
    check("primitive_d", is_primitive(d), f"content={content(d)}")
    report = bound_report(v)
    check(
        "bound_chain",
        report.lower_stable <= cert.genus_bound,
        f"|sigma|/2={report.lower_stable} <= {cert.genus_bound}",
    )
    return VerificationReport(tuple(checks))


@dataclass(frozen=True)
class Equality:
    """|sigma| = 2g, so the stable 4-genus equals the genus."""

    report: BoundReport


@dataclass(frozen=True)
class StrictUpper:
    """|sigma| < 2g, witnessed by a verified certificate for g - 1/N."""

    report: BoundReport
    certificate: SliceCertificate
    verification: VerificationReport


def find_unit_class(v: SeifertMatrix, sign) -> FramedClass:
    """Search small vectors for a primitive class of framing exactly +1 or -1."""
    s = _sign(sign)
    n = v.size
    for support in (1, 2, 3):
        values = (1, -1, 2, -2) if support < 3 else (1, -1)
        for idx in combinations(range(n), support):
            for coeffs in product(values, repeat=support):
                if coeffs[0] < 0:
                    continue
                vec = [0] * n
                for i, x in zip(idx, coeffs):
                    vec[i] = x
                if is_primitive(vec) and gram(v, vec, vec) == s:
                    return framed_class(v, vec)
    raise NoAttestation(f"no class of framing {s:+d} found among small vectors; supply a witness")


def theorem1_decide(
    v: SeifertMatrix,
    annulus_attested: bool,
    annulus_sign="+",
    witness: Sequence[int] | None = None,
) -> Equality | StrictUpper:
    """Decide whether the stable 4-genus equals the genus.

    Requires an attested embedded annulus of framing ``annulus_sign`` (+-1).
    In the strict case the returned certificate is expressed against ``v``.
    """
    if not annulus_attested:
        raise NoAttestation("no framing +-1 annulus attested; no conclusion can be drawn")
    report = bound_report(v)
    if report.equality:
        return Equality(report)
    s = _sign(annulus_sign)
    if witness is None:
        unit = find_unit_class(v, s)
    else:
        unit = framed_class(v, witness)
        if unit.framing != s:
            raise NotUnitFraming(f"witness has framing {unit.framing}, expected {s:+d}")
    work = v if s > 0 else mirror(v)
    a = framed_class(work, unit.vector)
    helper = find_signed_class(work, "-")
    cert = lemma2_torus(work, a, helper)
    if s < 0:
        # in V = -W^T the pair (d, a) has form [[0, -1], [0, 0]]
        cert = SliceCertificate(
            N=cert.N,
            a_class=cert.d_class,
            d_class=cert.a_class,
            final_form=((0, -cert.final_form[0][1]), (0, 0)),
            genus_bound=cert.genus_bound,
            realizability_attested=cert.realizability_attested,
            transcript=cert.transcript + ({"step": "mirror", "swap": "a<->d"},),
        )
    verification = verify_certificate(v, cert)
    if not verification.passed:
        raise AssertionError("constructed certificate failed verification: " + ", ".join(verification.failed()))
    return StrictUpper(report, cert, verification)


def hopf_band_class(v: SeifertMatrix) -> list[int]:
    """The first brick of a positive braid fibre surface: a Hopf band, framing -1 here."""
    vec = [0] * v.size
    vec[0] = 1
    return vec


def decide_positive_braid(w) -> Equality | StrictUpper:
    """theorem1_decide for a positive braid closure, attesting its Hopf band."""
    from .seifert import seifert_matrix_from_positive_braid

    v = seifert_matrix_from_positive_braid(w)
    if v.size == 0:
        return Equality(bound_report(v))
    return theorem1_decide(v, True, "-", witness=hopf_band_class(v))
