"""Exact scalars: integer polynomials, cyclotomic fields, certified signs, root isolation."""
from .cyclotomic import (
    CyclotomicElement,
    RotationNumber,
    Sign,
    certified_sign,
    cyclotomic_polynomial,
    totient,
)
from .polynomial import IntegerPolynomial
from .roots import (
    ExactRotation,
    IsolatedInterval,
    RootArc,
    isolate_unit_circle_roots,
    simplest_between,
    trace_polynomial,
)

__all__ = [
    "CyclotomicElement",
    "ExactRotation",
    "IntegerPolynomial",
    "IsolatedInterval",
    "RootArc",
    "RotationNumber",
    "Sign",
    "certified_sign",
    "cyclotomic_polynomial",
    "isolate_unit_circle_roots",
    "simplest_between",
    "totient",
    "trace_polynomial",
]
