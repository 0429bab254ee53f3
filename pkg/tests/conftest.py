import random
from fractions import Fraction
from itertools import combinations

import pytest
import sympy
from hypothesis import strategies as st

from monomult.core import MonomialIdeal


def exponent_vectors(n, max_exp=5):
    return st.tuples(*([st.integers(0, max_exp)] * n))


@st.composite
def ideals(draw, max_dim=3, max_gens=4, max_exp=5):
    n = draw(st.integers(1, max_dim))
    gens = draw(st.lists(exponent_vectors(n, max_exp), min_size=1, max_size=max_gens))
    return MonomialIdeal(gens, n=n)


@st.composite
def ideal_pairs(draw, max_dim=3, max_gens=3, max_exp=4):
    n = draw(st.integers(1, max_dim))
    a = draw(st.lists(exponent_vectors(n, max_exp), min_size=1, max_size=max_gens))
    b = draw(st.lists(exponent_vectors(n, max_exp), min_size=1, max_size=max_gens))
    return MonomialIdeal(a, n=n), MonomialIdeal(b, n=n)


@st.composite
def ideal_triples(draw, max_dim=3, max_gens=3, max_exp=3):
    n = draw(st.integers(1, max_dim))
    gens = st.lists(exponent_vectors(n, max_exp), min_size=1, max_size=max_gens)
    return tuple(MonomialIdeal(draw(gens), n=n) for _ in range(3))


def random_ideal(rnd, max_dim=3, max_gens=5, max_exp=6):
    n = rnd.randint(1, max_dim)
    k = rnd.randint(1, max_gens)
    return MonomialIdeal([tuple(rnd.randint(0, max_exp) for _ in range(n)) for _ in range(k)], n=n)


@pytest.fixture
def rnd():
    return random.Random(20261014)


def brute_force_facets(a):
    """Facets of P(a) by enumerating hyperplanes through n of the generators and rays.

    Everything is solved with sympy so this shares no code with the
    Fourier-Motzkin path.  Returns a set of (normal tuple, offset) normalised
    like the library: offset 1, or offset 0 with largest normal entry 1.
    """
    n, gens = a.n, a.generators
    rays = [tuple(int(i == j) for i in range(n)) for j in range(n)]
    found = set()
    objs = [("pt", g) for g in gens] + [("ray", r) for r in rays]
    for sub in combinations(objs, n):
        pts = [o for t, o in sub if t == "pt"]
        dirs = [o for t, o in sub if t == "ray"]
        if not pts:
            continue
        base = pts[0]
        rows = [[Fraction(x - y) for x, y in zip(p, base)] for p in pts[1:]] + \
               [[Fraction(x) for x in d] for d in dirs]
        M = sympy.Matrix(rows) if rows else sympy.zeros(0, n)
        null = M.nullspace() if rows else [sympy.eye(n)[:, j] for j in range(n)]
        if len(null) != 1:
            continue
        v = [sympy.Rational(x) for x in null[0]]
        if all(x <= 0 for x in v):
            v = [-x for x in v]
        if any(x < 0 for x in v):
            continue
        d = sum(x * y for x, y in zip(v, base))
        if any(sum(x * y for x, y in zip(v, g)) < d for g in gens):
            continue
        if d > 0:
            key = (tuple(Fraction(int(x.p), int(x.q)) / Fraction(int(d.p), int(d.q)) for x in v), 1)
        else:
            top = max(v)
            key = (tuple(Fraction(int((x / top).p), int((x / top).q)) for x in v), 0)
        found.add(key)
    return found


def pytest_terminal_summary(terminalreporter):
    import test_acceptance
    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
