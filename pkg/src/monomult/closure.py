"""Integral closure of monomial ideals, the power lemma, and Teissier witnesses."""

from dataclasses import dataclass

from .core import ideal_contains, ideal_power, ideal_product, MonomialIdeal, render_ideal
from .errors import NotInClosure
from .multiplier import DEFAULT_BOX_LIMIT, _check_volume, minimal_points
from .polyhedron import build

__all__ = [
    "integral_closure", "is_integrally_closed", "PowerLemmaReport", "power_lemma_check",
    "TeissierWitness", "teissier_witness",
]


def integral_closure(a, limit=None):
    """Monomials z^beta with beta in P(a), as a canonical ideal.

    Minimal generators have beta_j <= M_j (the largest j-th exponent of a),
    so the lattice box prod_j [0, M_j] is searched.
    """
    P = build(a)
    upper = a.max_exponents()
    _check_volume(upper, DEFAULT_BOX_LIMIT if limit is None else limit)
    mask = P.membership_grid(1, upper, shift=0, strict=False)
    return MonomialIdeal(minimal_points(mask), n=a.n)


def is_integrally_closed(a, limit=None):
    return integral_closure(a, limit) == a


@dataclass(frozen=True)
class PowerLemmaReport:
    ideal: MonomialIdeal
    A: int
    lhs: MonomialIdeal      # closure of a^A
    rhs: MonomialIdeal      # a · closure of a^(A-1)
    equal: bool
    minimal_A: int          # None if no A' <= A works

    def to_dict(self):
        return {
            "ideal": self.ideal.to_dict(),
            "A": self.A,
            "lhs": self.lhs.to_dict(),
            "rhs": self.rhs.to_dict(),
            "equal": self.equal,
            "minimal_A": self.minimal_A,
        }


def power_lemma_check(a, A=None, limit=None):
    """Compare closure(a^A) with a·closure(a^(A-1)); A defaults to the generator count."""
    A = a.k if A is None else int(A)
    if A < 1:
        raise ValueError("A must be at least 1")
    closures = [integral_closure(ideal_power(a, j), limit) for j in range(A + 1)]
    sides = [(closures[j], ideal_product(a, closures[j - 1])) for j in range(1, A + 1)]
    minimal_A = next((j for j, (l, r) in enumerate(sides, start=1) if l == r), None)
    lhs, rhs = sides[-1]
    return PowerLemmaReport(a, A, lhs, rhs, lhs == rhs, minimal_A)


@dataclass(frozen=True)
class TeissierWitness:
    beta: tuple
    ideal: MonomialIdeal
    b: MonomialIdeal
    verified: bool

    def to_dict(self):
        return {
            "beta": list(self.beta),
            "ideal": self.ideal.to_dict(),
            "b": self.b.to_dict(),
            "b_text": render_ideal(self.b),
            "verified": self.verified,
        }


def teissier_witness(a, beta, b=None, limit=None):
    """For z^beta in the closure of a, check z^beta·b ⊆ a·b with b = closure(a^(k-1)).

    `b` may be passed in to reuse it across several queries on the same ideal.
    """
    beta = tuple(int(x) for x in beta)
    if not integral_closure(a, limit).contains_monomial(beta):
        raise NotInClosure(f"{beta} is not in the integral closure of {a}")
    if b is None:
        b = integral_closure(ideal_power(a, a.k - 1), limit)
    f = MonomialIdeal([beta], n=a.n)
    verified = ideal_contains(ideal_product(a, b), ideal_product(f, b))
    return TeissierWitness(beta, a, b, verified)
