"""Enumeration of positive braid knots and the torus-knot equality scan."""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from math import gcd
from pathlib import Path
from typing import Iterator

from .braid import BraidWord, closure_permutation
from .errors import NotCoprime
from .invariants import alexander_polynomial, bound_report
from .laurent import LaurentPolynomial
from .seifert import seifert_matrix_from_positive_braid
from .stable import StrictUpper, decide_positive_braid


def torus_braid(p: int, q: int) -> BraidWord:
    """The positive braid (s_1 ... s_{p-1})^q on p strands, closing to T(p, q)."""
    if p < 2 or q < 2:
        raise ValueError("torus braid needs p, q >= 2")
    if gcd(p, q) != 1:
        raise NotCoprime(f"T({p},{q}) is a link: gcd = {gcd(p, q)}")
    return BraidWord(tuple(range(1, p)) * q, p)


def _moves(word: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    n = len(word)
    yield word[1:] + word[:1]
    for k in range(n - 1):
        a, b = word[k], word[k + 1]
        if abs(a - b) >= 2:
            yield word[:k] + (b, a) + word[k + 2:]


def is_canonical(word: tuple[int, ...]) -> bool:
    """True if ``word`` is lexicographically least among all words reachable by
    cyclic rotation and swaps of adjacent commuting letters."""
    seen = {word}
    frontier = [word]
    while frontier:
        nxt = []
        for w in frontier:
            for u in _moves(w):
                if u < word:
                    return False
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    return True


def enumerate_positive_knot_words(s_max: int, c_max: int) -> Iterator[BraidWord]:
    """Positive braid words with knot closure and full generator support.

    Covers 2 <= s <= s_max and s <= c <= c_max, one representative per class
    under rotation and far commutation, ordered by (s, c, letters).
    """
    for s in range(2, s_max + 1):
        gens = range(1, s)
        for c in range(s, c_max + 1):
            for letters in product(gens, repeat=c):
                if len(set(letters)) != s - 1:
                    continue
                if not is_canonical(letters):
                    continue
                w = BraidWord(letters, s)
                if closure_permutation(w)[1] == 1:
                    yield w


@dataclass(frozen=True)
class CensusRecord:
    word: BraidWord
    genus: int
    signature: int
    alexander: LaurentPolynomial
    equality: bool
    torus_match: str | None = None
    certificate_path: str | None = None


ALLOWED = "T(2,n), T(3,4), T(3,5)"


def _is_allowed_torus(label: str) -> bool:
    p, q = (int(x) for x in label[2:-1].split(","))
    return p == 2 or (p, q) in ((3, 4), (3, 5))


def in_allowed_set(label: str | None) -> bool:
    """True if ``label`` names a single torus knot of the allowed types."""
    return label is not None and "#" not in label and _is_allowed_torus(label)


def sum_of_allowed(label: str | None) -> bool:
    """True if ``label`` is an allowed torus knot or a connected sum of them."""
    return label is not None and all(_is_allowed_torus(part) for part in label.split("#"))


def torus_references(max_genus: int) -> dict[tuple[int, LaurentPolynomial], str]:
    """(genus, Alexander polynomial) of every torus knot T(p,q), p < q, up to max_genus."""
    refs = {}
    p = 2
    while (p - 1) * p // 2 <= max_genus:
        q = p + 1
        while (p - 1) * (q - 1) // 2 <= max_genus:
            if gcd(p, q) == 1:
                v = seifert_matrix_from_positive_braid(torus_braid(p, q))
                refs[(v.genus, alexander_polynomial(v))] = f"T({p},{q})"
            q += 1
        p += 1
    return refs


def identify(genus: int, delta: LaurentPolynomial, refs) -> str | None:
    """Label a knot by (genus, Delta): a torus knot, or a connected sum of torus
    knots whose genera add up and whose Alexander polynomials multiply to Delta."""
    if not refs or genus == 0:
        return None
    if (genus, delta) in refs:
        return refs[(genus, delta)]
    ordered = sorted(refs.items(), key=lambda kv: (kv[0][0], kv[1]))

    def split(g, poly, start):
        if g == 0:
            return [] if poly == 1 else None
        if (g, poly) in refs and ordered.index(((g, poly), refs[(g, poly)])) >= start:
            return [refs[(g, poly)]]
        for k in range(start, len(ordered)):
            (rg, rpoly), label = ordered[k]
            if rg >= g:
                continue
            try:
                rest = poly.exact_divide(rpoly)
            except ArithmeticError:
                continue
            tail = split(g - rg, rest, k)
            if tail is not None:
                return [label] + tail
        return None

    parts = split(genus, delta, 0)
    return "#".join(parts) if parts else None


def make_record(w: BraidWord, refs=None, cert_dir: str | None = None) -> CensusRecord:
    v = seifert_matrix_from_positive_braid(w)
    rep = bound_report(v)
    delta = alexander_polynomial(v)
    label = identify(rep.genus, delta, refs)
    cert_path = None
    if cert_dir is not None and not rep.equality:
        outcome = decide_positive_braid(w)
        if isinstance(outcome, StrictUpper):
            stem = "w_" + "_".join(str(x) for x in w.letters)
            directory = Path(cert_dir)
            directory.mkdir(parents=True, exist_ok=True)
            (directory / f"{stem}.matrix.json").write_text(v.to_json() + "\n")
            cert_file = directory / f"{stem}.cert.json"
            cert_file.write_text(outcome.certificate.to_json() + "\n")
            cert_path = str(cert_file)
    return CensusRecord(w, rep.genus, rep.signature, delta, rep.equality, label, cert_path)


def _record_job(args):
    return make_record(*args)


@dataclass
class ScanReport:
    s_max: int
    c_max: int
    records: list[CensusRecord] = field(default_factory=list)
    violations: list[str] = field(default_factory=list)

    prime_violations: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        """Literal reading: equality only for T(2,n), T(3,4), T(3,5)."""
        return not self.violations

    @property
    def passed_prime(self) -> bool:
        """Reading that also admits connected sums of the allowed torus knots."""
        return not self.prime_violations

    @property
    def equality_records(self) -> list[CensusRecord]:
        return [r for r in self.records if r.equality]

    def equality_types(self) -> list[str]:
        labels = {r.torus_match or "?" for r in self.equality_records}
        return sorted(labels, key=lambda s: (len(s), s))

    def summary(self) -> str:
        return (
            f"words={len(self.records)} equality={len(self.equality_records)} "
            f"types={','.join(self.equality_types()) or '-'} "
            f"verdict={'PASS' if self.passed else 'FAIL'} "
            f"prime_verdict={'PASS' if self.passed_prime else 'FAIL'}"
        )

    def to_csv(self) -> str:
        buf = io.StringIO()
        out = csv.writer(buf, lineterminator="\n")
        out.writerow(
            ["word", "s", "c", "genus", "signature", "alexander", "equality", "torus_match", "certificate_path"]
        )
        for r in self.records:
            out.writerow(
                [
                    str(r.word),
                    r.word.strands,
                    r.word.length,
                    r.genus,
                    r.signature,
                    json.dumps(r.alexander.to_dict(), separators=(",", ":")),
                    "yes" if r.equality else "no",
                    r.torus_match or "",
                    r.certificate_path or "",
                ]
            )
        return buf.getvalue()


def corollary2_scan(s_max: int, c_max: int, jobs: int = 1, cert_dir: str | None = None) -> ScanReport:
    """Check that |sigma| = 2g holds exactly for T(2,n), T(3,4), T(3,5) in range."""
    report = ScanReport(s_max, c_max)
    words = list(enumerate_positive_knot_words(s_max, c_max))
    if not words:
        return report
    refs = torus_references(max((w.length - w.strands + 1) // 2 for w in words))
    tasks = [(w, refs, cert_dir) for w in words]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            report.records = list(pool.map(_record_job, tasks, chunksize=64))
    else:
        report.records = [_record_job(t) for t in tasks]
    for r in report.records:
        allowed = in_allowed_set(r.torus_match)
        if r.equality and not allowed:
            report.violations.append(
                f"{r.word}: |sigma| = 2g but not one of {ALLOWED} ({r.torus_match or 'unidentified'})"
            )
        if allowed and not r.equality:
            report.violations.append(f"{r.word}: {r.torus_match} but |sigma| < 2g")
        summed = sum_of_allowed(r.torus_match)
        if r.equality and not summed:
            report.prime_violations.append(
                f"{r.word}: |sigma| = 2g but not a sum of {ALLOWED} ({r.torus_match or 'unidentified'})"
            )
        if summed and not r.equality:
            report.prime_violations.append(f"{r.word}: {r.torus_match} but |sigma| < 2g")
    return report
