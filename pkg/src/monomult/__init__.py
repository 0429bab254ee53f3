"""Exact toolkit for monomial ideals: Newton polyhedra, multiplier ideals,
log canonical thresholds, jumping numbers and integral closures, with a
numerical oracle for the analytic definitions."""

from .core import (
    MonomialIdeal, Polynomial, ideal_contains, ideal_power, ideal_product, minimalize,
    parse_ideal, render_ideal, unit_ideal,
)
from .polyhedron import (
    CLOSURE_CLOSED, MULTIPLIER_INTERIOR, Membership, build, classify, classify_lp, lct, witness,
)
from .multiplier import jumping_numbers, multiplier_ideal, polynomial_in_multiplier
from .closure import integral_closure, is_integrally_closed, power_lemma_check, teissier_witness

__version__ = "0.1.0"

__all__ = [
    "MonomialIdeal", "Polynomial", "ideal_contains", "ideal_power", "ideal_product", "minimalize",
    "parse_ideal", "render_ideal", "unit_ideal",
    "CLOSURE_CLOSED", "MULTIPLIER_INTERIOR", "Membership", "build", "classify", "classify_lp",
    "lct", "witness",
    "jumping_numbers", "multiplier_ideal", "polynomial_in_multiplier",
    "integral_closure", "is_integrally_closed", "power_lemma_check", "teissier_witness",
]
