"""Command-line interface.

Exit codes: 0 success, 1 verification or census verdict failure, 2 parse or
usage error, 3 invariant violation, 4 no certificate exists (|sigma| = 2g),
5 no framing +-1 annulus attested.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .braid import BraidWord, parse_braid_word, require_knot
from .census import corollary2_scan, torus_braid
from .errors import (
    InvalidSeifertMatrix,
    KnotError,
    NoAttestation,
    NotAKnot,
    NotCoprime,
    ParseError,
)
from .invariants import alexander_polynomial, bound_report
from .seifert import SeifertMatrix, seifert_matrix_from_positive_braid
from .stable import (
    Equality,
    SliceCertificate,
    decide_positive_braid,
    theorem1_decide,
    verify_certificate,
)

EXIT_FAIL, EXIT_PARSE, EXIT_INVARIANT, EXIT_EQUALITY, EXIT_NO_ATTESTATION = 1, 2, 3, 4, 5


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _fraction(x) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _add_source(p: argparse.ArgumentParser):
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--braid", help="positive braid word, e.g. '1 1 1'")
    group.add_argument("--braid-file", type=Path, help="file holding a positive braid word")
    group.add_argument("--matrix", type=Path, help="Seifert matrix JSON file")
    p.add_argument("--strands", type=int, default=0, help="override the inferred strand count")


def _read(path: Path) -> str:
    try:
        return path.read_text()
    except OSError as exc:
        raise CliError(EXIT_PARSE, f"cannot read {path}: {exc.strerror}") from None


def _load_source(args) -> tuple[SeifertMatrix, BraidWord | None]:
    """Seifert matrix of the input, plus the braid word when one was given."""
    try:
        if args.matrix is not None:
            return SeifertMatrix.from_json(_read(args.matrix)), None
        text = args.braid if args.braid is not None else _read(args.braid_file)
        word = parse_braid_word(text, args.strands)
        require_knot(word)
        return seifert_matrix_from_positive_braid(word), word
    except ParseError as exc:
        raise CliError(EXIT_PARSE, str(exc)) from None
    except (InvalidSeifertMatrix, NotAKnot) as exc:
        raise CliError(EXIT_INVARIANT, str(exc)) from None


def cmd_invariants(args) -> int:
    v, word = _load_source(args)
    try:
        report = bound_report(v)
    except KnotError as exc:
        raise CliError(EXIT_INVARIANT, str(exc)) from None
    delta = alexander_polynomial(v)
    if word is not None:
        print(f"braid: {word} (s={word.strands}, c={word.length})")
    print(f"genus: {report.genus}")
    print(f"signature: {report.signature}")
    print(f"alexander: {delta}")
    print(f"alexander_coeffs: min_exp={delta.min_exp} coeffs={delta.coefficient_list()}")
    print(f"stable_4genus_lower_bound: {_fraction(report.lower_stable)}")
    print(f"equality: {'yes' if report.equality else 'no'}")
    return 0


def cmd_certificate(args) -> int:
    v, word = _load_source(args)
    try:
        if word is not None:
            outcome = decide_positive_braid(word)
        else:
            attested = args.attest_annulus is not None
            witness = [int(x) for x in args.witness.split()] if args.witness else None
            outcome = theorem1_decide(v, attested, args.attest_annulus or "+", witness)
    except NoAttestation as exc:
        raise CliError(EXIT_NO_ATTESTATION, str(exc)) from None
    except ValueError as exc:
        raise CliError(EXIT_PARSE, str(exc)) from None
    if isinstance(outcome, Equality):
        r = outcome.report
        print(f"equality: |sigma| = {abs(r.signature)} = 2g; no certificate exists")
        return EXIT_EQUALITY
    cert = outcome.certificate
    args.out.write_text(cert.to_json() + "\n")
    print(f"N: {cert.N}")
    print(f"final_form: {[list(r) for r in cert.final_form]}")
    print(f"genus_bound: {_fraction(cert.genus_bound)}")
    print(f"signature_lower_bound: {_fraction(outcome.report.lower_stable)}")
    print(f"written: {args.out}")
    return 0


def cmd_verify(args) -> int:
    v, _ = _load_source(args)
    try:
        cert = SliceCertificate.from_json(_read(args.certificate))
    except ParseError as exc:
        raise CliError(EXIT_PARSE, str(exc)) from None
    expected = v.size * cert.N
    if cert.N < 1 or len(cert.a_class) != expected or len(cert.d_class) != expected:
        raise CliError(
            EXIT_PARSE,
            f"certificate vectors of length {len(cert.a_class)}/{len(cert.d_class)} "
            f"do not match N={cert.N} copies of a {v.size}x{v.size} matrix",
        )
    report = verify_certificate(v, cert)
    for line in report.lines():
        print(line)
    print("verdict: " + ("PASS" if report.passed else "FAIL"))
    return 0 if report.passed else EXIT_FAIL


def cmd_census(args) -> int:
    if args.strands < 2 or args.crossings < 1:
        raise CliError(EXIT_PARSE, "need --strands >= 2 and --crossings >= 1")
    report = corollary2_scan(args.strands, args.crossings, jobs=args.jobs, cert_dir=args.cert_dir)
    if args.out is not None:
        args.out.write_text(report.to_csv())
    print(report.summary())
    violations = report.violations if args.scope == "literal" else report.prime_violations
    for line in violations:
        print(f"violation: {line}")
    ok = report.passed if args.scope == "literal" else report.passed_prime
    return 0 if ok else EXIT_FAIL


def cmd_torus(args) -> int:
    try:
        word = torus_braid(args.p, args.q)
    except NotCoprime as exc:
        raise CliError(EXIT_PARSE, str(exc)) from None
    except ValueError as exc:
        raise CliError(EXIT_PARSE, str(exc)) from None
    print(word)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="seifertkit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="genus, signature, Alexander polynomial")
    _add_source(p)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("certificate", help="write a slice certificate for g - 1/N")
    _add_source(p)
    p.add_argument("--out", type=Path, required=True)
    p.add_argument("--attest-annulus", choices=["+1", "-1"], help="framing of an attested annulus (matrix input)")
    p.add_argument("--witness", help="integer vector of the attested annulus class (matrix input)")
    p.set_defaults(func=cmd_certificate)

    p = sub.add_parser("verify", help="check a certificate against a Seifert matrix")
    _add_source(p)
    p.add_argument("--certificate", type=Path, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("census", help="scan positive braid knots for |sigma| = 2g")
    p.add_argument("--strands", type=int, required=True)
    p.add_argument("--crossings", type=int, required=True)
    p.add_argument("--out", type=Path)
    p.add_argument("--cert-dir", help="write certificates for strict records here")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument(
        "--scope",
        choices=["literal", "prime"],
        default="literal",
        help="'prime' also accepts connected sums of the allowed torus knots",
    )
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("torus", help="print the positive braid word of T(p,q)")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.set_defaults(func=cmd_torus)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
