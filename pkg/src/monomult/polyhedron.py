"""Newton polyhedra of monomial ideals in half-space form.

``build`` turns the generators of an ideal into an irredundant list of
inward facets ``<v, x> >= kappa`` with ``kappa`` in {0, 1}.  Facets come from
Fourier-Motzkin elimination of the convex weights; only generators that are
needed to describe the polyhedron take part in the elimination, and the
final list is pruned to genuine facets with exact rank computations.

Everything on the facet path is exact.  ``classify_lp`` decides the same
membership questions by an independent route (rational LP on the convex
combination system) so the two can be cross-checked.
"""

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, reduce

import numpy as np

from .core import as_rational, format_rational, MonomialIdeal, parse_rational
from .errors import ComputationLimit, DimensionMismatch, NotSeparable
from .lp import linprog

__all__ = [
    "Membership", "Facet", "NewtonPolyhedron", "WitnessVector", "ConvexCertificate",
    "MULTIPLIER_INTERIOR", "CLOSURE_CLOSED", "DEFAULT_FM_LIMIT",
    "build", "classify", "classify_lp", "witness", "lct",
]

DEFAULT_FM_LIMIT = 50_000

MULTIPLIER_INTERIOR = "MultiplierInterior"
CLOSURE_CLOSED = "ClosureClosed"


class Membership(str, enum.Enum):
    INTERIOR = "Interior"
    BOUNDARY = "Boundary"
    OUTSIDE = "Outside"

    def __str__(self):
        return self.value


@dataclass(frozen=True, order=True)
class Facet:
    """Half-space ``<normal, x> >= offset`` with a non-negative normal."""

    normal: tuple
    offset: int

    def value(self, pt):
        return sum((v * x for v, x in zip(self.normal, pt)), Fraction(0))

    def to_dict(self):
        return {"v": [format_rational(v) for v in self.normal], "k": self.offset}

    @classmethod
    def from_dict(cls, data):
        return cls(tuple(parse_rational(s) for s in data["v"]), int(data["k"]))


@dataclass(frozen=True)
class NewtonPolyhedron:
    n: int
    generators: tuple
    vertices: tuple
    facets: tuple

    @cached_property
    def _scaled(self):
        # integer form of each facet: W·x >= D*kappa with W = D*normal
        W, D = [], []
        for f in self.facets:
            d = reduce(math.lcm, (v.denominator for v in f.normal), 1)
            W.append([int(v * d) for v in f.normal])
            D.append(d * f.offset)
        return W, D

    def classify(self, c, pt):
        return classify(self, c, pt)

    def membership_grid(self, c, upper, shift=0, strict=True):
        """Boolean array over the lattice box prod_j [0, upper_j].

        Entry ``beta`` is true when ``beta + shift`` lies in the interior
        (``strict``) or in the closed polyhedron P(c·a).
        """
        c = as_rational(c)
        upper = tuple(int(u) for u in upper)
        if len(upper) != self.n:
            raise DimensionMismatch("box has wrong dimension")
        shape = tuple(u + 1 for u in upper)
        W, D = self._scaled
        p, q = c.numerator, c.denominator
        bound = max((max(abs(w) for w in row) for row in W), default=1)
        bound *= (max(upper) + abs(shift) + 1) * self.n * q + p * max(D + [1])
        dtype = np.int64 if bound < 2 ** 62 else object
        grids = np.indices(shape, dtype=np.int64).reshape(self.n, -1)
        if dtype is object:
            grids = grids.astype(object)
        grids = grids + shift
        ok = np.ones(grids.shape[1], dtype=bool)
        for row, d in zip(W, D):
            lhs = q * (np.asarray(row, dtype=dtype) @ grids)
            rhs = p * d
            ok &= (lhs > rhs) if strict else (lhs >= rhs)
        return ok.reshape(shape)

    def to_dict(self):
        return {
            "vertices": [list(v) for v in self.vertices],
            "facets": [f.to_dict() for f in self.facets],
        }


@dataclass(frozen=True)
class WitnessVector:
    """Scaled separating normal.

    ``b`` is written in the permuted coordinates ``permutation`` (so
    ``b[0] == 1``); ``direction`` gives the same vector in the original
    coordinates.  ``margin`` is ``min_i <c·alpha_i, b>``.
    """

    mode: str
    beta: tuple
    c: Fraction
    permutation: tuple
    b: tuple
    margin: Fraction

    @property
    def direction(self):
        out = [Fraction(0)] * len(self.b)
        for pos, coord in enumerate(self.permutation):
            out[coord] = self.b[pos]
        return tuple(out)

    def query_value(self):
        """<beta+1, b> in the multiplier mode, <beta, b> in the closure mode."""
        shift = 1 if self.mode == MULTIPLIER_INTERIOR else 0
        return sum((Fraction(x + shift) * y for x, y in zip(self.beta, self.direction)), Fraction(0))

    def holds(self):
        lhs = self.query_value()
        return lhs <= self.margin if self.mode == MULTIPLIER_INTERIOR else lhs < self.margin

    def to_dict(self):
        return {
            "mode": self.mode,
            "beta": list(self.beta),
            "c": format_rational(self.c),
            "permutation": list(self.permutation),
            "b": [format_rational(v) for v in self.b],
            "direction": [format_rational(v) for v in self.direction],
            "margin": format_rational(self.margin),
            "value": format_rational(self.query_value()),
        }


@dataclass(frozen=True)
class ConvexCertificate:
    coefficients: tuple
    slack: tuple

    def verify(self, gens, c, pt):
        c = as_rational(c)
        if any(t < 0 for t in self.coefficients) or sum(self.coefficients) != 1:
            return False
        combo = [sum((t * c * g[j] for t, g in zip(self.coefficients, gens)), Fraction(0))
                 for j in range(len(pt))]
        return all(pt[j] - combo[j] == s and s >= 0 for j, s in enumerate(self.slack))


# -- exact helpers -----------------------------------------------------------

def _rank(vectors):
    rows = [[Fraction(x) for x in v] for v in vectors]
    if not rows:
        return 0
    rank, ncols = 0, len(rows[0])
    for col in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        p = rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col] / p[col]
                rows[r] = [a - f * b for a, b in zip(rows[r], p)]
        rank += 1
    return rank


def _primitive(vec):
    g = reduce(math.gcd, (abs(v) for v in vec), 0)
    return tuple(v // g for v in vec) if g > 1 else tuple(vec)


def _fourier_motzkin(points, n, limit):
    """Valid inequalities (w, d), meaning <w, x> >= d, describing P(points)."""
    k = len(points)
    if k == 1:
        return [(tuple(int(i == j) for i in range(n)), points[0][j]) for j in range(n)]
    last = points[-1]
    m = k - 1
    # layout: n coefficients on x, m on the weights t_1..t_{k-1}, then the constant
    rows = {}
    for j in range(n):
        coeffs = [0] * (n + m + 1)
        coeffs[j] = 1
        for i in range(m):
            coeffs[n + i] = -(points[i][j] - last[j])
        coeffs[-1] = -last[j]
        rows[_primitive(coeffs)] = frozenset([j])
    for i in range(m):
        coeffs = [0] * (n + m + 1)
        coeffs[n + i] = 1
        rows[tuple(coeffs)] = frozenset([n + i])
    coeffs = [0] * (n + m + 1)
    for i in range(m):
        coeffs[n + i] = -1
    coeffs[-1] = 1
    rows[tuple(coeffs)] = frozenset([n + m])

    produced = len(rows)
    for step, var in enumerate(range(n, n + m), start=1):
        pos = [(r, h) for r, h in rows.items() if r[var] > 0]
        neg = [(r, h) for r, h in rows.items() if r[var] < 0]
        new = {r: h for r, h in rows.items() if r[var] == 0}
        for p, hp in pos:
            for q, hq in neg:
                hist = hp | hq
                # Chernikov: a combination of more than step+1 originals is redundant
                if len(hist) > step + 1:
                    continue
                a, b = -q[var], p[var]
                comb = _primitive(tuple(a * x + b * y for x, y in zip(p, q)))
                if not any(comb[:-1]):
                    continue
                produced += 1
                if produced > limit:
                    raise ComputationLimit(
                        f"Fourier-Motzkin produced more than {limit} inequalities")
                old = new.get(comb)
                if old is None or len(hist) < len(old):
                    new[comb] = hist
        # drop rows whose history strictly contains another row's history
        items = sorted(new.items(), key=lambda kv: len(kv[1]))
        kept = {}
        for r, h in items:
            if not any(h2 < h for h2 in kept.values()):
                kept[r] = h
        rows = kept
    return [(r[:n], -r[-1]) for r in rows]


def _normalize(w, d):
    if any(x < 0 for x in w) or not any(w):
        return None
    if d > 0:
        return Facet(tuple(Fraction(x, d) for x in w), 1)
    if d == 0:
        top = max(w)
        return Facet(tuple(Fraction(x, top) for x in w), 0)
    return None     # implied by the orthant


def _is_facet(f, points, n):
    tight = [p for p in points if f.value(p) == f.offset]
    if not tight:
        return False
    rays = [tuple(int(i == j) for i in range(n)) for j in range(n) if f.normal[j] == 0]
    base = tight[0]
    diffs = [tuple(x - y for x, y in zip(p, base)) for p in tight[1:]]
    return _rank(diffs + rays) == n - 1


def _facets_of(points, n, limit):
    cands = set()
    for w, d in _fourier_motzkin(points, n, limit):
        f = _normalize(w, d)
        if f is not None:
            cands.add(f)
    for j in range(n):
        cands.add(Facet(tuple(Fraction(int(i == j)) for i in range(n)), 0))
    facets = [f for f in cands if _is_facet(f, points, n)]
    return sorted(facets, key=lambda f: (-f.offset, f.normal))


def build(a, limit=None):
    """Half-space description of the Newton polyhedron P(a)."""
    if not isinstance(a, MonomialIdeal):
        raise TypeError("build expects a MonomialIdeal")
    limit = DEFAULT_FM_LIMIT if limit is None else limit
    n, gens = a.n, a.generators
    # seed with lexicographic minima for every rotation of the coordinates;
    # each is the unique minimiser of a strictly positive functional
    active = []
    for j in range(n):
        best = min(gens, key=lambda g: g[j:] + g[:j])
        if best not in active:
            active.append(best)
    while True:
        facets = _facets_of(active, n, limit)
        added = False
        for f in facets:
            vals = [(f.value(g), g) for g in gens]
            low, g = min(vals)
            if low < f.offset and g not in active:
                active.append(g)
                added = True
        if not added:
            break
    vertices = []
    for g in sorted(active):
        normals = [f.normal for f in facets if f.value(g) == f.offset]
        if _rank(normals) == n:
            vertices.append(g)
    return NewtonPolyhedron(n, gens, tuple(vertices), tuple(facets))


def classify(P, c, pt):
    """Locate ``pt`` relative to P(c·a): interior, boundary, or outside."""
    c = as_rational(c)
    if c <= 0:
        raise ValueError("depth c must be positive")
    pt = tuple(as_rational(x) for x in pt)
    if len(pt) != P.n:
        raise DimensionMismatch(f"point {pt} has wrong dimension for n={P.n}")
    strict = True
    for f in P.facets:
        s = f.value(pt) - c * f.offset
        if s < 0:
            return Membership.OUTSIDE
        if s == 0:
            strict = False
    return Membership.INTERIOR if strict else Membership.BOUNDARY


def classify_lp(a, c, pt):
    """Membership by exact LP on the convex-combination system.

    Maximises ``eps`` subject to ``sum_i t_i c alpha_i + eps·1 <= pt``,
    ``sum t = 1``, ``t >= 0``, ``eps <= 1``.  The sign of the optimum decides
    outside / boundary / interior.  Returns ``(Membership, certificate)``,
    the certificate being None for points outside.
    """
    c = as_rational(c)
    if c <= 0:
        raise ValueError("depth c must be positive")
    pt = tuple(as_rational(x) for x in pt)
    if len(pt) != a.n:
        raise DimensionMismatch(f"point {pt} has wrong dimension for n={a.n}")
    gens = a.generators
    k, n = len(gens), a.n
    eps = k
    cost = [0] * k + [-1]
    A_ub = [[c * g[j] for g in gens] + [1] for j in range(n)]
    b_ub = list(pt)
    A_ub.append([0] * k + [1])
    b_ub.append(1)
    res = linprog(cost, A_ub, b_ub, [[1] * k + [0]], [1], free=[eps])
    best = res.x[eps]
    if best < 0:
        return Membership.OUTSIDE, None
    t = res.x[:k]
    slack = tuple(pt[j] - sum((ti * c * g[j] for ti, g in zip(t, gens)), Fraction(0)) for j in range(n))
    cert = ConvexCertificate(tuple(t), slack)
    return (Membership.INTERIOR if best > 0 else Membership.BOUNDARY), cert


def witness(P, c, beta, mode=MULTIPLIER_INTERIOR):
    """Separating normal for a query that is not in the relevant region.

    MultiplierInterior: ``beta + 1`` not in the interior of P(c·a).
    ClosureClosed: ``beta`` not in P(c·a) (use c = 1 for integral closure).
    Among separating facets the lexicographically smallest normal wins.
    """
    c = as_rational(c)
    beta = tuple(int(x) for x in beta)
    if len(beta) != P.n:
        raise DimensionMismatch("query has wrong dimension")
    if mode == MULTIPLIER_INTERIOR:
        pt = tuple(x + 1 for x in beta)
        separating = [f for f in P.facets if f.value(pt) <= c * f.offset]
    elif mode == CLOSURE_CLOSED:
        pt = beta
        separating = [f for f in P.facets if f.value(pt) < c * f.offset]
    else:
        raise ValueError(f"unknown witness mode {mode!r}")
    if not separating:
        raise NotSeparable(f"no facet separates {beta} in mode {mode}")
    v = min(f.normal for f in separating)
    lead = next(j for j, x in enumerate(v) if x != 0)
    perm = (lead,) + tuple(j for j in range(P.n) if j != lead)
    direction = tuple(x / v[lead] for x in v)
    margin = min(sum((c * g[j] * direction[j] for j in range(P.n)), Fraction(0))
                 for g in P.generators)
    w = WitnessVector(mode, beta, c, perm, tuple(direction[j] for j in perm), margin)
    assert w.holds(), "separating facet failed its own inequality"
    return w


def lct(a, P=None):
    """Log canonical threshold: min over kappa=1 facets of <v, 1>; inf for the unit ideal."""
    P = build(a) if P is None else P
    vals = [sum(f.normal) for f in P.facets if f.offset == 1]
    return min(vals) if vals else math.inf
