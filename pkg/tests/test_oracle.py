import json
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import ideals
from monomult.core import MonomialIdeal
from monomult.errors import InvalidWitness
from monomult.oracle import (
    BOUNDED, CONVERGENT, DIVERGENT, UNBOUNDED, CorpusSpec, OracleConfig, agreement_harness,
    boundedness, divergence_wedge, integrability, sample_corpus,
)
from monomult.polyhedron import MULTIPLIER_INTERIOR, WitnessVector, build, witness

F = Fraction
A23 = MonomialIdeal([(2, 0), (0, 3)])
Z2 = MonomialIdeal([(2,)])
FAST = OracleConfig(levels=12, nodes=6, samples=256, curves=4)


def shell_integral(e, lo, hi):
    # int_lo^hi r^e dr
    if e == -1:
        return math.log(hi / lo)
    return (hi ** (e + 1) - lo ** (e + 1)) / (e + 1)


def principal_partials(beta, alpha, c, levels):
    """I(2^-m) for a principal ideal: the integrand factors over coordinates."""
    out = []
    for m in range(1, levels + 1):
        val = 1.0
        for b, a in zip(beta, alpha):
            val *= shell_integral(2 * b + 1 - 2 * float(c) * a, 2.0 ** -m, 1.0)
        out.append(val)
    return out


class TestConfig:
    def test_defaults_and_validation(self):
        cfg = OracleConfig()
        assert cfg.levels == 20 and cfg.rho_conv == 0.75 and cfg.rho_div == 1.1
        with pytest.raises(ValueError):
            OracleConfig(levels=3)
        with pytest.raises(ValueError):
            OracleConfig(rho_conv=1.2)
        with pytest.raises(ValueError):
            OracleConfig(rho_div=0.9)
        assert OracleConfig.from_dict({"seed": 7, "unknown": 1}).seed == 7
        assert OracleConfig.from_dict(cfg.to_dict()) == cfg


class TestIntegrability:
    def test_one_dimensional_examples(self):
        v = integrability((2,), Z2, 1)
        assert v.kind == CONVERGENT and v.exact == CONVERGENT and v.agrees
        v = integrability((1,), Z2, 1)
        assert v.kind == DIVERGENT and v.exact == DIVERGENT and v.agrees
        # r^-1: each dyadic shell contributes ln 2
        assert np.allclose(np.diff(v.diagnostics), math.log(2), rtol=1e-9)

    def test_exact_antiderivative(self):
        v = integrability((2,), Z2, 1)
        expected = [(1 - 4.0 ** -m) / 2 for m in range(1, 21)]
        assert np.allclose(v.diagnostics, expected, rtol=1e-9)

    @pytest.mark.parametrize("beta,alpha,c", [
        ((0, 0), (1, 0), F(1, 2)), ((1, 0), (2, 1), F(5, 6)), ((0, 2), (1, 3), 1),
        ((1, 1, 0), (1, 1, 1), F(1, 2)), ((0, 0, 0), (0, 1, 2), F(7, 5)),
    ])
    def test_principal_closed_form(self, beta, alpha, c):
        cfg = OracleConfig(levels=10)
        v = integrability(beta, MonomialIdeal([alpha]), c, cfg)
        assert np.allclose(v.diagnostics, principal_partials(beta, alpha, c, 10), rtol=1e-8)

    def test_lct_bracket(self):
        assert integrability((0, 0), A23, F(4, 5)).kind == CONVERGENT
        assert integrability((0, 0), A23, F(9, 10)).kind == DIVERGENT

    @settings(max_examples=25, deadline=None)
    @given(ideals(max_dim=3, max_gens=3, max_exp=4), st.sampled_from([F(1, 2), 1, F(7, 5)]), st.data())
    def test_partials_monotone(self, a, c, data):
        beta = data.draw(st.tuples(*([st.integers(0, 4)] * a.n)))
        v = integrability(beta, a, c, FAST)
        assert len(v.diagnostics) == FAST.levels
        d = np.asarray(v.diagnostics)
        assert np.all(d[1:] >= d[:-1] * (1 - 1e-9))

    def test_deterministic(self):
        v1 = integrability((1, 0, 2), MonomialIdeal([(2, 1, 0), (0, 3, 1)]), F(5, 6))
        v2 = integrability((1, 0, 2), MonomialIdeal([(2, 1, 0), (0, 3, 1)]), F(5, 6))
        assert json.dumps(v1.to_dict()) == json.dumps(v2.to_dict())


class TestWedge:
    def test_examples(self):
        w = witness(build(A23), 1, (0, 0), MULTIPLIER_INTERIOR)
        v = divergence_wedge((0, 0), A23, 1, w)
        assert v.kind == DIVERGENT and v.agrees and v.details["exponent"] == "-5/3"
        w = witness(build(Z2), 1, (0,), MULTIPLIER_INTERIOR)
        v = divergence_wedge((0,), Z2, 1, w)
        assert v.kind == DIVERGENT and v.agrees and v.details["exponent"] == "-3"

    def test_boundary_is_log_divergent(self):
        # c = lct: exponent is exactly -1, the shells are constant
        w = witness(build(A23), F(5, 6), (0, 0), MULTIPLIER_INTERIOR)
        v = divergence_wedge((0, 0), A23, F(5, 6), w)
        assert v.details["exponent"] == "-1" and v.agrees
        assert np.allclose(np.diff(v.diagnostics), math.log(2), rtol=1e-9)

    def test_invalid_witness(self):
        w = WitnessVector(MULTIPLIER_INTERIOR, (3, 1), F(1), (0, 1), (1, F(2, 3)), F(2))
        with pytest.raises(InvalidWitness):
            divergence_wedge((3, 1), A23, 1, w)
        bad = WitnessVector(MULTIPLIER_INTERIOR, (0, 0), F(1), (0, 1), (2, 1), F(4))
        with pytest.raises(InvalidWitness):
            divergence_wedge((0, 0), A23, 1, bad)


class TestBoundedness:
    def test_examples(self):
        assert boundedness((2, 1), MonomialIdeal([(3, 0), (0, 3)])).kind == BOUNDED
        v = boundedness((1, 1), A23)
        assert v.kind == UNBOUNDED
        wc = v.details["curves"][0]
        assert wc["label"] == "witness" and wc["b"] == ["1", "2/3"] and wc["exponent"] == "-1/3"
        assert wc["agrees"]

    def test_generator_ratio_at_most_one(self):
        a = MonomialIdeal([(1, 3, 0), (2, 0, 2), (0, 1, 4)])
        v = boundedness(a.generators[0], a)
        assert v.kind == BOUNDED
        assert max(v.diagnostics) <= 1.0
        for cv in v.details["curves"]:
            assert max(cv["log_ratio"]) <= 1e-12

    def test_deterministic_and_seeded(self):
        a = MonomialIdeal([(2, 1), (0, 4)])
        d1 = json.dumps(boundedness((1, 1), a, OracleConfig(seed=3)).to_dict())
        d2 = json.dumps(boundedness((1, 1), a, OracleConfig(seed=3)).to_dict())
        d3 = json.dumps(boundedness((1, 1), a, OracleConfig(seed=4)).to_dict())
        assert d1 == d2 and d1 != d3


class TestHarness:
    def test_empty(self):
        rep = agreement_harness(CorpusSpec(cases=0), FAST)
        s = rep.summary()
        assert s["cases"] == 0 and s["integrability_agreement"] == 1.0
        assert s["boundedness_agreement"] == 1.0 and rep.mismatches() == []

    def test_interior_only(self):
        rep = agreement_harness(CorpusSpec(cases=15, only="interior", seed=5))
        assert all(r["oracle"] == CONVERGENT for r in rep.records)
        assert rep.integrability_agreement == 1.0

    def test_small_corpus(self):
        rep = agreement_harness(CorpusSpec(cases=25, seed=11))
        s = rep.summary()
        assert s["integrability_agreement"] == 1.0 and s["shortcut_agreement"] == 1.0
        assert s["boundedness_agreement"] == 1.0 and s["witness_unbounded_rate"] == 1.0
        for r in rep.records:
            assert len(r["levels"]) == 20
        json.dumps(rep.to_dict())

    def test_corpus_deterministic_and_filtered(self):
        spec = CorpusSpec(cases=30, seed=2)
        c1, d1 = sample_corpus(spec)
        c2, d2 = sample_corpus(spec)
        assert d1 == d2 and [(a, b, c) for a, _, b, c in c1] == [(a, b, c) for a, _, b, c in c2]
        for a, P, beta, c in c1:
            pt = tuple(x + 1 for x in beta)
            assert min(abs(f.value(pt) - c * f.offset) for f in P.facets) >= spec.margin

    def test_spec_from_dict(self):
        spec = CorpusSpec.from_dict({"cases": 3, "depths": ["1/2", 1], "margin": "1/10"})
        assert spec.depths == (F(1, 2), F(1)) and spec.margin == F(1, 10)
