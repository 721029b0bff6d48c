"""Exact Seifert-form invariants and stable 4-genus certificates for knots."""

from .braid import BraidWord, closure_permutation, parse_braid_word, positive_braid_genus
from .census import corollary2_scan, enumerate_positive_knot_words, torus_braid
from .invariants import BoundReport, alexander_polynomial, bound_report, framing, signature
from .laurent import LaurentPolynomial
from .seifert import (
    SeifertMatrix,
    block_sum,
    brick_basis,
    burau_alexander_oracle,
    mirror,
    power,
    seifert_matrix_from_positive_braid,
)
from .stable import (
    Equality,
    FramedClass,
    SliceCertificate,
    StrictUpper,
    dual_class,
    find_signed_class,
    lemma2_torus,
    realize_framing,
    theorem1_decide,
    verify_certificate,
)

__version__ = "0.1.0"
