"""Multiplier ideals J(c·a) of monomial ideals and their jumping numbers.

A monomial z^beta lies in J(c·a) exactly when beta + 1 is an interior point
of the scaled Newton polyhedron P(c·a); membership of a polynomial reduces
to membership of every monomial in its support.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .core import as_rational, format_rational, MonomialIdeal, Polynomial
from .errors import ComputationLimit, ZeroPolynomial
from .polyhedron import build, classify, lct, Membership

__all__ = [
    "DEFAULT_BOX_LIMIT", "JumpingReport", "multiplier_ideal", "jumping_numbers",
    "polynomial_in_multiplier", "minimal_points", "multiplier_box",
]

DEFAULT_BOX_LIMIT = 2_000_000


def minimal_points(mask):
    """Minimal lattice points of an upward-closed boolean box array."""
    minimal = mask.copy()
    for axis in range(mask.ndim):
        below = np.zeros_like(mask)
        src = [slice(None)] * mask.ndim
        dst = [slice(None)] * mask.ndim
        src[axis] = slice(0, -1)
        dst[axis] = slice(1, None)
        below[tuple(dst)] = mask[tuple(src)]
        minimal &= ~below
    return [tuple(int(x) for x in p) for p in np.argwhere(minimal)]


def _check_volume(upper, limit):
    vol = math.prod(u + 1 for u in upper)
    if vol > limit:
        raise ComputationLimit(f"lattice box of {vol} points exceeds the limit of {limit}")


def multiplier_box(a, c, pad=0):
    """Upper corner of the search box: ceil(c·M_j) + pad."""
    c = as_rational(c)
    return tuple(math.ceil(c * m) + pad for m in a.max_exponents())


def multiplier_ideal(a, c, P=None, limit=None, pad=0):
    """J(c·a) as a canonical monomial ideal.

    Minimal generators sit in the box prod_j [0, ceil(c·M_j)]: past that,
    a coordinate can be lowered by one without leaving the interior.  `pad`
    enlarges the box (used to check that claim).
    """
    c = as_rational(c)
    if c <= 0:
        raise ValueError("depth c must be positive")
    P = build(a) if P is None else P
    upper = multiplier_box(a, c, pad)
    _check_volume(upper, DEFAULT_BOX_LIMIT if limit is None else limit)
    mask = P.membership_grid(c, upper, shift=1, strict=True)
    return MonomialIdeal(minimal_points(mask), n=a.n)


@dataclass(frozen=True)
class JumpingReport:
    ideal: MonomialIdeal
    c_max: Fraction
    lct: object
    jumps: tuple        # ((c, J(c·a)), ...) with c increasing

    def to_dict(self):
        lc = self.lct
        return {
            "lct": "inf" if lc == math.inf else format_rational(lc),
            "c_max": format_rational(self.c_max),
            "jumps": [{"c": format_rational(c), "ideal": J.to_dict()} for c, J in self.jumps],
        }


def jumping_numbers(a, c_max, limit=None):
    """Jumping numbers of `a` in (0, c_max] with the ideal at each jump.

    Candidates are the values <v, beta+1> over kappa=1 facets v and lattice
    points of the c_max box; a candidate c is kept when J(c·a) is strictly
    smaller than J at the midpoint between c and the previous candidate.
    """
    c_max = as_rational(c_max)
    if c_max <= 0:
        raise ValueError("c_max must be positive")
    P = build(a)
    upper = multiplier_box(a, c_max)
    _check_volume(upper, DEFAULT_BOX_LIMIT if limit is None else limit)
    W, D = P._scaled
    pts = np.indices(tuple(u + 1 for u in upper), dtype=np.int64).reshape(a.n, -1) + 1
    cands = set()
    for f, row, d in zip(P.facets, W, D):
        if f.offset != 1:
            continue
        vals = np.unique(np.asarray(row, dtype=np.int64) @ pts)
        for v in vals:
            q = Fraction(int(v), d)
            if 0 < q <= c_max:
                cands.add(q)
    jumps = []
    prev = Fraction(0)
    for c in sorted(cands):
        eps = (c - prev) / 2
        here = multiplier_ideal(a, c, P=P, limit=limit)
        before = multiplier_ideal(a, c - eps, P=P, limit=limit)
        if here != before:
            jumps.append((c, here))
        prev = c
    return JumpingReport(a, c_max, lct(a, P), tuple(jumps))


def polynomial_in_multiplier(g, a, c, P=None):
    """Return ``(True, None)`` or ``(False, first failing exponent)``."""
    if not isinstance(g, Polynomial):
        raise TypeError("expected a Polynomial")
    if not g.terms:
        raise ZeroPolynomial("zero polynomial")
    c = as_rational(c)
    P = build(a) if P is None else P
    for gamma in g.support:
        if classify(P, c, tuple(x + 1 for x in gamma)) is not Membership.INTERIOR:
            return False, gamma
    return True, None
