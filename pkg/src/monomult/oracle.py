"""Floating-point checks of the analytic definitions.

* ``integrability`` estimates whether
  |z^beta|^2 / sum_i |z^alpha_i|^(2c) is integrable on the unit polydisc.
  After integrating out the angles and substituting r_j = exp(-u_j) the
  partial integrals over [2^-m, 1]^n become integrals of
  exp(-2<beta+1, u>) / sum_i exp(-2c<alpha_i, u>) over [0, m ln 2]^n, which
  are evaluated with composite Gauss-Legendre rules, one dyadic slab at a
  time.
* ``divergence_wedge`` evaluates the one-variable lower bound produced by a
  separating witness vector.
* ``boundedness`` samples |z^beta| / sum_i |z^alpha_i| near the origin, on
  shrinking polydiscs and along monomial curves (w_1 r^b_1, ..., w_n r^b_n).

None of this is certified numerics.  Where the reduced one-variable
exponent is computable exactly, that rational sign is recorded next to the
numerical verdict and the two are required to agree.
"""

import math
import time
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
from numpy.polynomial.legendre import leggauss

from .core import as_rational, format_rational, MonomialIdeal
from .errors import InvalidWitness, NotSeparable
from .polyhedron import build, classify, CLOSURE_CLOSED, Membership, MULTIPLIER_INTERIOR, witness

__all__ = [
    "CONVERGENT", "DIVERGENT", "BOUNDED", "UNBOUNDED", "INCONCLUSIVE",
    "OracleConfig", "OracleVerdict", "integrability", "divergence_wedge", "boundedness",
    "CorpusSpec", "HarnessReport", "agreement_harness", "sample_corpus",
]

CONVERGENT = "ConvergentLikely"
DIVERGENT = "DivergentLikely"
BOUNDED = "Bounded"
UNBOUNDED = "Unbounded"
INCONCLUSIVE = "Inconclusive"

LN2 = math.log(2.0)


@dataclass(frozen=True)
class OracleConfig:
    """Knobs of the numerical oracle.

    levels        number M of dyadic cutoffs 2^-m
    nodes         Gauss-Legendre nodes per axis on each dyadic slab
    samples       random polydisc points per level (boundedness)
    curves        random integer-exponent curves (boundedness)
    seed          PRNG seed
    rho_conv      tail/head ratio below which partial integrals count as convergent
    rho_div       growth factor at or above which a quantity counts as divergent
    plateau_tol   relative slack allowed when testing increments for monotone growth
    """

    levels: int = 20
    nodes: int = 8
    samples: int = 4096
    curves: int = 8
    seed: int = 0
    rho_conv: float = 0.75
    rho_div: float = 1.1
    plateau_tol: float = 1e-2

    def __post_init__(self):
        if self.levels < 4:
            raise ValueError("need at least 4 levels")
        if not 0 < self.rho_conv < 1 < self.rho_div:
            raise ValueError("thresholds must satisfy 0 < rho_conv < 1 < rho_div")
        if self.nodes < 1 or self.samples < 1 or self.curves < 0:
            raise ValueError("nodes and samples must be positive")

    @classmethod
    def from_dict(cls, data):
        known = {f for f in cls.__dataclass_fields__}
        return cls(**{k: v for k, v in data.items() if k in known})

    def to_dict(self):
        return {f: getattr(self, f) for f in self.__dataclass_fields__}


@dataclass
class OracleVerdict:
    kind: str
    diagnostics: list               # one float per evaluated level
    statistic: float = None
    exact: str = None               # verdict from an exact exponent, when available
    agrees: bool = None             # numeric verdict matches the exact one
    witness: object = None
    details: dict = field(default_factory=dict)

    def to_dict(self):
        out = {"kind": self.kind, "exact": self.exact, "agrees": self.agrees,
               "numeric": {"levels": [float(x) for x in self.diagnostics],
                           "statistic": self.statistic, **self.details}}
        if self.witness is not None:
            out["witness"] = self.witness.to_dict()
        return out


def _rng(config, *parts):
    entropy = [int(config.seed)]
    for p in parts:
        entropy.extend(int(x) for x in np.ravel(p))
    return np.random.default_rng(np.random.SeedSequence([abs(x) for x in entropy]))


def _slab_rule(levels, nodes):
    """Composite rule on [0, levels·ln2]: nodes, log-weights, slab index (1-based)."""
    x, w = leggauss(nodes)
    x = (x + 1) * (LN2 / 2)
    w = w * (LN2 / 2)
    u = np.concatenate([s * LN2 + x for s in range(levels)])
    logw = np.tile(np.log(w), levels)
    slab = np.repeat(np.arange(1, levels + 1), nodes)
    return u, logw, slab


def _logsumexp(a, axis=None):
    m = np.max(a, axis=axis, keepdims=True)
    m = np.where(np.isfinite(m), m, 0.0)
    out = np.log(np.sum(np.exp(a - m), axis=axis, keepdims=True)) + m
    return np.squeeze(out, axis=axis) if axis is not None else out.item()


def _level_log_increments(beta, gens, c, config):
    """log of the integral over each dyadic shell, levels 1..M."""
    n = len(beta)
    M = config.levels
    u, logw, slab = _slab_rule(M, config.nodes)
    N = len(u)
    exp_num = 2.0 * (np.asarray(beta, dtype=float) + 1.0)
    alpha = 2.0 * float(c) * np.asarray(gens, dtype=float)        # (k, n)
    out = np.full(M, -np.inf)
    if n == 1:
        logf = -exp_num[0] * u - _logsumexp(-np.outer(alpha[:, 0], u), axis=0)
        vals = logf + logw
        for m in range(1, M + 1):
            out[m - 1] = _logsumexp(vals[slab == m])
        return out
    # grid over coordinates 2..n, grouped by their largest slab index
    sub = np.meshgrid(*([np.arange(N)] * (n - 1)), indexing="ij")
    sub = np.stack([s.ravel() for s in sub])                     # (n-1, N^(n-1))
    sub_level = slab[sub].max(axis=0)
    order = np.argsort(sub_level, kind="stable")
    sub = sub[:, order]
    sub_level = sub_level[order]
    starts = np.searchsorted(sub_level, np.arange(1, M + 1))
    present = np.unique(sub_level)
    sub_u = u[sub]                                                # (n-1, P)
    sub_logw = logw[sub].sum(axis=0)
    sub_num = exp_num[1:] @ sub_u
    sub_alpha = alpha[:, 1:] @ sub_u                              # (k, P)
    for i0 in range(N):
        lin = alpha[:, 0:1] * u[i0] + sub_alpha
        logf = -(exp_num[0] * u[i0] + sub_num) - _logsumexp(-lin, axis=0)
        vals = logf + sub_logw + logw[i0]
        group = np.logaddexp.reduceat(vals, starts[present - 1])
        s0 = slab[i0]
        per_level = np.full(M, -np.inf)
        per_level[present - 1] = group
        head = _logsumexp(per_level[:s0])
        out[s0 - 1] = np.logaddexp(out[s0 - 1], head)
        out[s0:] = np.logaddexp(out[s0:], per_level[s0:])
    return out


def _partial_verdict(log_inc, config):
    """Decide from log increments; returns (kind, statistic, log partials)."""
    M = len(log_inc)
    log_partial = np.logaddexp.accumulate(log_inc)
    half = M // 2
    # tail/head ratio: (I(2^-M) - I(2^-M/2)) / I(2^-M/2)
    W = math.exp(min(log_partial[-1] - log_partial[half - 1], 700.0)) - 1.0
    tail = log_inc[half - 1:]
    steps = np.diff(tail)
    plateau = bool(np.all(steps >= math.log1p(-config.plateau_tol)))
    if W < config.rho_conv:
        kind = CONVERGENT
    elif W >= config.rho_div or plateau:
        kind = DIVERGENT
    else:
        kind = INCONCLUSIVE
    return kind, W, log_partial


def _gens_array(a):
    return [list(g) for g in a.generators]


def integrability(beta, a, c, config=None):
    """Numerical verdict on local integrability of |z^beta|^2 / sum |z^alpha_i|^(2c)."""
    config = config or OracleConfig()
    c = as_rational(c)
    beta = tuple(int(x) for x in beta)
    log_inc = _level_log_increments(beta, _gens_array(a), c, config)
    kind, W, log_partial = _partial_verdict(log_inc, config)
    with np.errstate(over="ignore"):
        partials = np.exp(log_partial)
    verdict = OracleVerdict(kind, list(partials), statistic=W,
                            details={"log_partials": [float(x) for x in log_partial]})
    if a.n == 1:
        # r^(2 beta + 1 - 2 c alpha) on [0, 1]: finite iff the exponent exceeds -1
        e = 2 * beta[0] + 1 - 2 * c * a.generators[0][0]
        verdict.exact = CONVERGENT if e > -1 else DIVERGENT
        verdict.agrees = kind == verdict.exact
        verdict.details["exponent"] = format_rational(e)
    return verdict


def divergence_wedge(beta, a, c, w, config=None):
    """One-variable lower bound along the wedge defined by a witness vector.

    The bound is  int_0^1 r^(2<beta+1,b> - 1 - 2m) dr  with
    m = min_i <c alpha_i, b>; it diverges exactly when the exponent is <= -1.
    """
    config = config or OracleConfig()
    c = as_rational(c)
    beta = tuple(int(x) for x in beta)
    b = w.direction
    if len(b) != a.n or b[w.permutation[0]] != 1 or any(x < 0 for x in b):
        raise InvalidWitness("witness must be non-negative with leading component 1")
    lhs = sum((Fraction(x + 1) * y for x, y in zip(beta, b)), Fraction(0))
    m = min(sum((c * g[j] * b[j] for j in range(a.n)), Fraction(0)) for g in a.generators)
    if lhs > m:
        raise InvalidWitness(f"<beta+1, b> = {lhs} exceeds the margin {m}")
    e = 2 * lhs - 1 - 2 * m
    # with r = exp(-u):  r^e dr = exp(-(e + 1) u) du
    u, logw, slab = _slab_rule(config.levels, config.nodes)
    vals = -(float(e) + 1.0) * u + logw
    log_inc = np.array([_logsumexp(vals[slab == k]) for k in range(1, config.levels + 1)])
    kind, W, log_partial = _partial_verdict(log_inc, config)
    with np.errstate(over="ignore"):
        partials = np.exp(log_partial)
    return OracleVerdict(DIVERGENT, list(partials), statistic=W, exact=DIVERGENT,
                         agrees=kind == DIVERGENT, witness=w,
                         details={"exponent": format_rational(e), "numeric_kind": kind})


def _log_ratio(beta, gens, logz):
    """log(|z^beta| / sum_i |z^alpha_i|) for rows of log|z|."""
    num = logz @ np.asarray(beta, dtype=float)
    den = _logsumexp(logz @ np.asarray(gens, dtype=float).T, axis=1)
    return num - den


def _curve_probe(beta, gens, b, config, rng, label):
    M = config.levels
    b = tuple(Fraction(x) for x in b)
    e = (sum((x * y for x, y in zip(beta, b)), Fraction(0))
         - min(sum((x * y for x, y in zip(g, b)), Fraction(0)) for g in gens))
    # stretch the dyadic steps so that a negative exponent is visible over M/2 levels
    step = 1
    if e < 0:
        need = 2 * math.log2(config.rho_div) / ((M // 2) * float(-e))
        step = max(1, math.ceil(2 * need))
    wt = np.exp(2j * np.pi * rng.random(len(b)))          # generic unit-modulus point
    logr = -LN2 * step * np.arange(1, M + 1)
    logz = np.outer(logr, np.array([float(x) for x in b])) + np.log(np.abs(wt))
    lr = _log_ratio(beta, gens, logz)
    G = math.exp(min(lr[-1] - lr[M // 2 - 1], 700.0))
    numeric_unbounded = G >= config.rho_div
    exact = UNBOUNDED if e < 0 else BOUNDED
    if e < 0:
        agrees = numeric_unbounded
    else:
        agrees = (not numeric_unbounded) and bool(np.all(lr <= 1e-9))
    return {"label": label, "b": [format_rational(x) for x in b], "exponent": format_rational(e),
            "step": step, "growth": G, "exact": exact, "agrees": agrees,
            "log_ratio": [float(x) for x in lr]}


def boundedness(beta, a, config=None):
    """Numerical verdict on |z^beta| <= C sum_i |z^alpha_i| near the origin."""
    config = config or OracleConfig()
    beta = tuple(int(x) for x in beta)
    gens = _gens_array(a)
    n, M = a.n, config.levels
    rng = _rng(config, beta, gens)

    # shrinking polydiscs of radius 2^-m; only the moduli matter
    level_max = np.empty(M)
    for m in range(1, M + 1):
        logz = -m * LN2 + 0.5 * np.log(rng.random((config.samples, n)))
        level_max[m - 1] = _log_ratio(beta, gens, logz).max()
    running = np.maximum.accumulate(level_max)
    disc_growth = math.exp(min(running[-1] - running[M // 2 - 1], 700.0))

    curves = []
    w = None
    try:
        w = witness(build(a), 1, beta, CLOSURE_CLOSED)
    except NotSeparable:
        pass
    if w is not None:
        curves.append(_curve_probe(beta, gens, w.direction, config, rng, "witness"))
    for i in range(config.curves):
        lead = i % n
        b = [int(x) for x in rng.integers(1, 4, size=n)]
        b[lead] = 1
        curves.append(_curve_probe(beta, gens, b, config, rng, f"random{i}"))

    agrees = all(cv["agrees"] for cv in curves)
    if any(cv["exact"] == UNBOUNDED and cv["agrees"] for cv in curves) or disc_growth >= config.rho_div:
        kind = UNBOUNDED
    elif agrees and all(cv["exact"] == BOUNDED for cv in curves):
        kind = BOUNDED
    else:
        kind = INCONCLUSIVE
    exact = UNBOUNDED if any(cv["exact"] == UNBOUNDED for cv in curves) else None
    return OracleVerdict(kind, [float(math.exp(x)) for x in running], statistic=disc_growth,
                         exact=exact, agrees=agrees, witness=w,
                         details={"curves": curves})


# -- agreement harness -------------------------------------------------------

@dataclass(frozen=True)
class CorpusSpec:
    """Random corpus: `cases` accepted queries (a, beta, c) after margin filtering.

    only: None, "interior" or "noninterior" restricts the polyhedral verdict
    on beta + 1 for P(c·a).
    """

    cases: int = 200
    max_dim: int = 3
    max_gens: int = 4
    max_exp: int = 5
    depths: tuple = (Fraction(1, 2), Fraction(5, 6), Fraction(1), Fraction(7, 5))
    seed: int = 0
    margin: Fraction = Fraction(1, 20)
    only: str = None

    @classmethod
    def from_dict(cls, data):
        data = dict(data)
        if "depths" in data:
            data["depths"] = tuple(as_rational(x) for x in data["depths"])
        if "margin" in data:
            data["margin"] = as_rational(data["margin"])
        known = {f for f in cls.__dataclass_fields__}
        return cls(**{k: v for k, v in data.items() if k in known})


def facet_margin(P, c, pt):
    return min(abs(f.value(pt) - c * f.offset) for f in P.facets)


def sample_corpus(spec):
    """Deterministic list of (a, P, beta, c) passing the multiplier margin filter."""
    import random
    rnd = random.Random(spec.seed)
    out = []
    drawn = 0
    while len(out) < spec.cases:
        drawn += 1
        if drawn > 1000 * max(spec.cases, 1):
            raise RuntimeError("corpus filter rejects almost every draw")
        n = rnd.randint(1, spec.max_dim)
        k = rnd.randint(1, spec.max_gens)
        gens = [tuple(rnd.randint(0, spec.max_exp) for _ in range(n)) for _ in range(k)]
        a = MonomialIdeal(gens, n=n)
        beta = tuple(rnd.randint(0, spec.max_exp) for _ in range(n))
        c = rnd.choice(spec.depths)
        P = build(a)
        pt = tuple(x + 1 for x in beta)
        if facet_margin(P, c, pt) < spec.margin:
            continue
        member = classify(P, c, pt) is Membership.INTERIOR
        if spec.only == "interior" and not member:
            continue
        if spec.only == "noninterior" and member:
            continue
        out.append((a, P, beta, c))
    return out, drawn


@dataclass
class HarnessReport:
    records: list
    drawn: int
    runtime: float

    def _rate(self, pairs):
        pairs = list(pairs)
        return 1.0 if not pairs else sum(pairs) / len(pairs)

    @property
    def integrability_agreement(self):
        return self._rate(r["integrability_ok"] for r in self.records)

    @property
    def shortcut_cases(self):
        return [r for r in self.records if r["shortcut"] is not None]

    @property
    def shortcut_agreement(self):
        return self._rate(r["shortcut_ok"] for r in self.shortcut_cases)

    @property
    def closure_cases(self):
        return [r for r in self.records if r["closure_margin_ok"]]

    @property
    def boundedness_agreement(self):
        return self._rate(r["boundedness_ok"] for r in self.closure_cases)

    @property
    def witness_cases(self):
        return [r for r in self.records if r["witness_curve"] is not None]

    @property
    def witness_unbounded_rate(self):
        return self._rate(r["witness_curve"] == UNBOUNDED for r in self.witness_cases)

    def mismatches(self):
        return [r for r in self.records
                if not (r["integrability_ok"] and r["shortcut_ok"] is not False
                        and (r["boundedness_ok"] or not r["closure_margin_ok"]))]

    def summary(self):
        return {
            "cases": len(self.records),
            "drawn": self.drawn,
            "integrability_agreement": self.integrability_agreement,
            "shortcut_cases": len(self.shortcut_cases),
            "shortcut_agreement": self.shortcut_agreement,
            "closure_cases": len(self.closure_cases),
            "boundedness_agreement": self.boundedness_agreement,
            "witness_curves": len(self.witness_cases),
            "witness_unbounded_rate": self.witness_unbounded_rate,
            "mismatches": len(self.mismatches()),
            "runtime_s": self.runtime,
        }

    def to_dict(self):
        return {"summary": self.summary(), "cases": self.records}


def agreement_harness(spec=None, config=None):
    """Compare polyhedral membership with the analytic oracles on a random corpus."""
    spec = spec or CorpusSpec()
    config = config or OracleConfig()
    t0 = time.perf_counter()
    corpus, drawn = sample_corpus(spec)
    records = []
    for a, P, beta, c in corpus:
        pt = tuple(x + 1 for x in beta)
        poly = classify(P, c, pt)
        expected = CONVERGENT if poly is Membership.INTERIOR else DIVERGENT
        iv = integrability(beta, a, c, config)

        # exact one-variable shortcut: n = 1, or a divergence witness exists
        shortcut, shortcut_ok, wedge = None, None, None
        if a.n == 1:
            shortcut = iv.exact
            shortcut_ok = iv.exact == expected and iv.kind == iv.exact
        if poly is not Membership.INTERIOR:
            wv = witness(P, c, beta, MULTIPLIER_INTERIOR)
            wedge = divergence_wedge(beta, a, c, wv, config)
            shortcut = wedge.exact
            ok = wedge.exact == expected and wedge.agrees and iv.kind == wedge.exact
            shortcut_ok = ok if shortcut_ok is None else (shortcut_ok and ok)

        closed = classify(P, 1, beta)
        closed_member = closed is not Membership.OUTSIDE
        bv = boundedness(beta, a, config)
        witness_curve = None
        if not closed_member:
            wc = next(cv for cv in bv.details["curves"] if cv["label"] == "witness")
            witness_curve = UNBOUNDED if (wc["exact"] == UNBOUNDED and wc["agrees"]) else INCONCLUSIVE

        records.append({
            "ideal": a.to_dict(),
            "beta": list(beta),
            "c": format_rational(c),
            "polyhedral": str(poly),
            "oracle": iv.kind,
            "integrability_ok": iv.kind == expected,
            "shortcut": shortcut,
            "shortcut_ok": shortcut_ok,
            "closure_polyhedral": str(closed),
            "boundedness": bv.kind,
            "closure_margin_ok": facet_margin(P, 1, beta) >= spec.margin,
            "boundedness_ok": bv.kind == (BOUNDED if closed_member else UNBOUNDED),
            "witness_curve": witness_curve,
            "levels": iv.diagnostics,
            "numeric": {"integrability_statistic": iv.statistic,
                        "wedge_statistic": wedge.statistic if wedge else None,
                        "disc_growth": bv.statistic},
        })
    return HarnessReport(records, drawn, time.perf_counter() - t0)
