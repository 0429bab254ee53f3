import json
import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings

from conftest import ideal_pairs, ideal_triples, ideals
from monomult.core import (
    MonomialIdeal, Polynomial, as_rational, format_rational, ideal_contains, ideal_power,
    ideal_product, minimalize, parse_ideal, parse_rational, render_ideal, unit_ideal,
)
from monomult.errors import DimensionMismatch, EmptySet, ParseError, ZeroIdeal, ZeroPolynomial


def brute_minimal(gens):
    # quadratic all-pairs divisibility filter
    gens = set(gens)
    return {g for g in gens
            if not any(h != g and all(x <= y for x, y in zip(h, g)) for h in gens)}


def brute_contains(a, b):
    # exhaustive: every monomial of b inside a bounding box is a monomial of a
    top = [max(x, y) for x, y in zip(a.max_exponents(), b.max_exponents())]
    for beta in product(*(range(t + 1) for t in top)):
        in_b = any(all(g <= x for g, x in zip(gen, beta)) for gen in b.generators)
        in_a = any(all(g <= x for g, x in zip(gen, beta)) for gen in a.generators)
        if in_b and not in_a:
            return False
    return True


class TestMinimalize:
    def test_examples(self):
        assert set(minimalize({(2, 0), (3, 1), (0, 3)})) == {(2, 0), (0, 3)}
        assert set(minimalize({(1, 1)})) == {(1, 1)}

    def test_random_against_pairwise_filter(self):
        rnd = random.Random(1)
        for _ in range(200):
            gens = [tuple(rnd.randint(0, 6) for _ in range(3)) for _ in range(20)]
            assert set(minimalize(gens)) == brute_minimal(gens)

    def test_errors(self):
        with pytest.raises(EmptySet):
            minimalize([])
        with pytest.raises(DimensionMismatch):
            minimalize([(1, 2), (1,)])

    @given(ideals())
    def test_idempotent(self, a):
        once = minimalize(a.generators)
        assert minimalize(once) == once


class TestRationals:
    def test_parse_and_format(self):
        assert parse_rational("5/6") == Fraction(5, 6)
        assert parse_rational("4/6") == Fraction(2, 3)
        assert parse_rational("-3") == -3
        assert format_rational(Fraction(10, 4)) == "5/2"
        assert format_rational(Fraction(3)) == "3"

    @pytest.mark.parametrize("bad", ["0.5", "1/0", "", "a/b", "1e3"])
    def test_parse_rejects(self, bad):
        with pytest.raises(ValueError):
            parse_rational(bad)

    def test_no_floats(self):
        with pytest.raises(TypeError):
            as_rational(0.5)


class TestProducts:
    def test_examples(self):
        a = MonomialIdeal([(2, 0), (0, 3)])
        assert (a * a).generators == ((0, 6), (2, 3), (4, 0))
        assert ideal_power(a, 2) == a * a
        assert ideal_product(a, unit_ideal(2)) == a
        assert ideal_product(MonomialIdeal([(1, 0)]), MonomialIdeal([(0, 1)])).generators == ((1, 1),)
        assert ideal_power(a, 0) == unit_ideal(2)
        assert ideal_power(a, 1) == a

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            ideal_product(MonomialIdeal([(1, 0)]), MonomialIdeal([(1,)]))
        with pytest.raises(DimensionMismatch):
            ideal_contains(MonomialIdeal([(1, 0)]), MonomialIdeal([(1,)]))

    @given(ideal_pairs())
    def test_commutative(self, ab):
        a, b = ab
        assert a * b == b * a

    @given(ideal_triples())
    def test_associative(self, abc):
        a, b, c = abc
        assert (a * b) * c == a * (b * c)

    @given(ideal_pairs())
    def test_product_pairwise_sums(self, ab):
        a, b = ab
        sums = {tuple(x + y for x, y in zip(p, q)) for p in a.generators for q in b.generators}
        assert set((a * b).generators) == brute_minimal(sums)

    @given(ideal_pairs())
    def test_product_contained(self, ab):
        a, b = ab
        assert ideal_contains(a, a * b)


class TestContains:
    def test_examples(self):
        assert ideal_contains(parse_ideal("x, y"), parse_ideal("x^2, x*y"))
        assert not ideal_contains(parse_ideal("x^2", n=1), parse_ideal("x", n=1))

    @settings(max_examples=200)
    @given(ideal_pairs())
    def test_against_divisibility(self, ab):
        a, b = ab
        assert ideal_contains(a, b) == brute_contains(a, b)

    @given(ideals(), ideals(max_dim=1, max_exp=3))
    def test_upward_closed(self, a, shift):
        s = shift.generators[0][0]
        for g in a.generators:
            for j in range(a.n):
                up = tuple(x + (s if i == j else 0) for i, x in enumerate(g))
                assert a.contains_monomial(up)


class TestParser:
    def test_examples(self):
        a = parse_ideal("x^2, y^3")
        assert a.n == 2 and a.generators == ((0, 3), (2, 0))
        b = parse_ideal("x1^3*x3")
        assert b.n == 3 and b.generators == ((3, 0, 1),)

    def test_juxtaposition_and_hint(self):
        assert parse_ideal("x y^2, z", n=3).generators == ((0, 0, 1), (1, 2, 0))
        assert parse_ideal("x2", n=4).n == 4
        assert parse_ideal("1, x").is_unit

    @pytest.mark.parametrize("text", ["x + y", "x - y", "x^", "x^-1", "q", "x1*y", "x, ,y", "y1"])
    def test_errors(self, text):
        with pytest.raises(ParseError) as info:
            parse_ideal(text)
        assert 0 <= info.value.position <= len(text)

    def test_position_points_at_plus(self):
        with pytest.raises(ParseError) as info:
            parse_ideal("x + y")
        assert info.value.position == 2

    def test_zero(self):
        with pytest.raises(ZeroIdeal):
            parse_ideal("0")
        with pytest.raises(ZeroIdeal):
            parse_ideal("0, 0*x")
        assert parse_ideal("0, x^2").generators == ((2,),)

    def test_dimension_hint_too_small(self):
        with pytest.raises((ParseError, DimensionMismatch)):
            parse_ideal("x1*x3", n=2)

    @settings(max_examples=200)
    @given(ideals(max_dim=6))
    def test_render_round_trip(self, a):
        assert parse_ideal(render_ideal(a), n=a.n) == a

    @given(ideals(max_dim=5))
    def test_json_round_trip(self, a):
        text = a.to_json()
        assert json.loads(text) == {"n": a.n, "generators": [list(g) for g in a.generators]}
        assert MonomialIdeal.from_json(text) == a


class TestIdealType:
    def test_canonical_and_immutable(self):
        a = MonomialIdeal([(3, 1), (2, 0), (0, 3), (2, 0)])
        assert a.generators == ((0, 3), (2, 0))
        with pytest.raises(AttributeError):
            a.n = 5
        assert hash(a) == hash(MonomialIdeal([(0, 3), (2, 0)]))

    def test_rejects(self):
        with pytest.raises(ZeroIdeal):
            MonomialIdeal([])
        with pytest.raises(ValueError):
            MonomialIdeal([(-1, 0)])


class TestPolynomial:
    def test_support(self):
        g = Polynomial({(1, 0): 1, (0, 2): (Fraction(1, 2), 3)})
        assert g.support == ((0, 2), (1, 0))

    def test_zero_terms_dropped_and_zero_rejected(self):
        g = Polynomial({(1, 0): 0, (0, 1): 2})
        assert g.support == ((0, 1),)
        with pytest.raises(ZeroPolynomial):
            Polynomial({(1, 0): 0})
        with pytest.raises(ZeroPolynomial):
            Polynomial({})
