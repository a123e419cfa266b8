"""Exact determinantal ideal computations.

Thin re-export of the compiled module.  All operations speak strings: a ring
is a list of variable names plus a field tag ("q" or "gf:<p>"), polynomials
are text in those variables, and results come back in the same syntax.
"""

from _detideal import (
    ResourceExhausted,
    check_prime_sequence,
    dimension,
    groebner_basis,
    height,
    intersect,
    is_member,
    minors,
    normal_form,
    verify_claims,
)

__all__ = [
    "ResourceExhausted",
    "check_prime_sequence",
    "dimension",
    "groebner_basis",
    "height",
    "intersect",
    "is_member",
    "minors",
    "normal_form",
    "verify_claims",
]
