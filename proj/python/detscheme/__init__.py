"""Dimension of the Hilbert scheme component of determinantal subschemes of P^n.

Closed forms are exact Python ints; ``verify`` samples a random matrix over a
prime field and returns the oracle record as a dict.
"""

import json

from ._detscheme import (
    DegreeData,
    HypothesisError,
    ResamplingExhausted,
    StabilizationError,
    StructuralError,
    binomial_dim,
    cokernel_f,
    corollary_homogeneous,
    derive,
    dim_y,
    h0_F,
    k_terms,
    lambda_c,
    validate_main,
    validate_standard,
)
from ._detscheme import export_ideal as _export_ideal
from ._detscheme import verify_json as _verify_json

__all__ = [
    "DegreeData",
    "HypothesisError",
    "ResamplingExhausted",
    "StabilizationError",
    "StructuralError",
    "binomial_dim",
    "cokernel_f",
    "corollary_homogeneous",
    "derive",
    "dim_y",
    "export_ideal",
    "h0_F",
    "k_terms",
    "lambda_c",
    "validate_main",
    "validate_standard",
    "verify",
]


def _data(d):
    return DegreeData.parse(d) if isinstance(d, str) else d


def verify(d, prime=32003, seed=1, bound=None, window=None):
    """Run every oracle on a random phi; `d` may be a DegreeData or 'n=4 a=1,1,1 b=0,0'."""
    return json.loads(_verify_json(_data(d), prime, seed, bound, window))


def export_ideal(d, prime=32003, seed=1):
    """(plain-text generators, ideal as a dict) for a random phi."""
    text, ideal = _export_ideal(_data(d), prime, seed)
    return text, json.loads(ideal)
