"""Exact data model: rationals, exponent vectors, monomial ideals, polynomials.

Exponent vectors (multi-indices) are plain tuples of non-negative ints.
Every value here is immutable; operations return new objects.
"""

import json
import re
from fractions import Fraction
from itertools import product as _cartesian

from .errors import DimensionMismatch, EmptySet, ParseError, ZeroIdeal, ZeroPolynomial

__all__ = [
    "as_rational", "format_rational", "parse_rational",
    "leq", "minimalize", "MonomialIdeal", "unit_ideal",
    "ideal_product", "ideal_power", "ideal_contains",
    "parse_ideal", "render_ideal", "Polynomial",
]


# -- rationals ---------------------------------------------------------------

def as_rational(value):
    """Coerce ints, Fractions and "p/q" strings to Fraction; floats are refused."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(text):
    """Parse "p/q" or an integer literal. Decimal notation is rejected."""
    m = _RATIONAL_RE.match(text)
    if not m:
        raise ValueError(f"not a rational of the form p/q: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError("zero denominator")
    return Fraction(num, den)


def format_rational(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


# -- multi-indices -----------------------------------------------------------

def leq(a, b):
    """Componentwise a <= b."""
    return all(x <= y for x, y in zip(a, b))


def _check_index(alpha, n=None):
    alpha = tuple(int(x) for x in alpha)
    if not alpha:
        raise DimensionMismatch("multi-index must have length >= 1")
    if any(x < 0 for x in alpha):
        raise ValueError(f"negative exponent in {alpha}")
    if n is not None and len(alpha) != n:
        raise DimensionMismatch(f"expected length {n}, got {alpha}")
    return alpha


def minimalize(gens):
    """Return the componentwise-minimal elements of `gens`, sorted lexicographically."""
    gens = {tuple(g) for g in gens}
    if not gens:
        raise EmptySet("cannot minimalize an empty set")
    dims = {len(g) for g in gens}
    if len(dims) != 1:
        raise DimensionMismatch(f"mixed lengths {sorted(dims)}")
    # anything dividing a candidate has a smaller total degree, so it is seen first
    kept = []
    for g in sorted(gens, key=lambda g: (sum(g), g)):
        if not any(leq(k, g) for k in kept):
            kept.append(g)
    return tuple(sorted(kept))


# -- monomial ideals ---------------------------------------------------------

class MonomialIdeal:
    """Monomial ideal stored by its minimal generators (lexicographically sorted)."""

    __slots__ = ("n", "generators")

    def __init__(self, generators, n=None):
        gens = [tuple(g) for g in generators]
        if not gens:
            raise ZeroIdeal("the zero ideal is not supported")
        if n is None:
            n = len(gens[0])
        gens = [_check_index(g, n) for g in gens]
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "generators", minimalize(gens))

    def __setattr__(self, name, value):
        raise AttributeError("MonomialIdeal is immutable")

    @property
    def k(self):
        return len(self.generators)

    @property
    def is_unit(self):
        return self.generators == ((0,) * self.n,)

    def contains_monomial(self, beta):
        beta = tuple(beta)
        if len(beta) != self.n:
            raise DimensionMismatch(f"exponent {beta} has wrong length for n={self.n}")
        return any(leq(g, beta) for g in self.generators)

    def max_exponents(self):
        """Per-coordinate maximum over the generators."""
        return tuple(max(col) for col in zip(*self.generators))

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.n == other.n and self.generators == other.generators

    def __hash__(self):
        return hash((self.n, self.generators))

    def __mul__(self, other):
        return ideal_product(self, other)

    def __pow__(self, j):
        return ideal_power(self, j)

    def __le__(self, other):
        """Ideal inclusion self ⊆ other."""
        return ideal_contains(other, self)

    def __repr__(self):
        return f"MonomialIdeal({render_ideal(self)!r}, n={self.n})"

    def __str__(self):
        return "(" + render_ideal(self) + ")"

    def to_dict(self):
        return {"n": self.n, "generators": [list(g) for g in self.generators]}

    def to_json(self):
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data):
        return cls([tuple(g) for g in data["generators"]], n=int(data["n"]))

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))


def unit_ideal(n):
    return MonomialIdeal([(0,) * n], n=n)


def _same_dim(a, b):
    if a.n != b.n:
        raise DimensionMismatch(f"ideals live in {a.n} and {b.n} variables")


def ideal_product(a, b):
    _same_dim(a, b)
    sums = (tuple(x + y for x, y in zip(g, h)) for g in a.generators for h in b.generators)
    return MonomialIdeal(sums, n=a.n)


def ideal_power(a, j):
    if j < 0:
        raise ValueError("power must be non-negative")
    result = unit_ideal(a.n)
    for _ in range(j):
        result = ideal_product(result, a)
    return result


def ideal_contains(a, b):
    """True iff b ⊆ a, i.e. every generator of b is divisible by a generator of a."""
    _same_dim(a, b)
    return all(a.contains_monomial(g) for g in b.generators)


# -- parsing and rendering ---------------------------------------------------

_LETTERS = "xyzw"
_TOKEN_RE = re.compile(r"\s*(?:(?P<var>[xyzw])(?P<idx>\d+)?|(?P<num>\d+)|(?P<op>[\^*,])|(?P<bad>\S))")


def _tokenize(text):
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        start = m.end() - len(m.group(0).lstrip())
        kind = "var" if m.group("var") else m.lastgroup
        if m.group("idx") is not None and m.group("var") != "x":
            raise ParseError("indexed variables must be written x1, x2, ...", start, text)
        if kind == "bad":
            ch = m.group("bad")
            if ch in "+-":
                raise ParseError("not a monomial: sums and differences are not allowed", start, text)
            raise ParseError(f"unexpected character {ch!r}", start, text)
        tokens.append((kind, m.group(0).strip(), start, m))
        pos = m.end()
    return tokens


def parse_ideal(text, n=None):
    """Parse a comma-separated list of monomials such as ``"x^2, y^3"`` or ``"x1^3*x3"``.

    Variables are either the letters x, y, z, w (coordinates 1-4) or indexed
    x1, x2, ...; the two styles cannot be mixed. `n` fixes the number of
    variables, otherwise the largest coordinate used decides it.
    """
    tokens = _tokenize(text)
    terms = []      # list of (exponent dict, start position)
    styles = set()
    i = 0
    expect_term = True
    current = None
    nonzero = True
    while i < len(tokens):
        kind, tok, pos, m = tokens[i]
        if kind == "op" and tok == ",":
            if current is None:
                raise ParseError("empty generator", pos, text)
            terms.append((current, nonzero))
            current, nonzero, expect_term = None, True, True
            i += 1
            continue
        if kind == "op" and tok == "*":
            if current is None or expect_term:
                raise ParseError("'*' must follow a factor", pos, text)
            expect_term = True
            i += 1
            continue
        if kind == "op" and tok == "^":
            raise ParseError("'^' must follow a variable", pos, text)
        if current is None:
            current = {}
        if kind == "num":
            if int(tok) == 0:
                nonzero = False
            i += 1
        else:  # variable
            if m.group("idx") is not None:
                styles.add("indexed")
                coord = int(m.group("idx"))
                if coord < 1:
                    raise ParseError("variable indices start at 1", pos, text)
            else:
                styles.add("letter")
                coord = _LETTERS.index(m.group("var")) + 1
            if len(styles) > 1:
                raise ParseError("cannot mix x,y,z,w with indexed variables", pos, text)
            exp = 1
            i += 1
            if i < len(tokens) and tokens[i][0] == "op" and tokens[i][1] == "^":
                if i + 1 >= len(tokens) or tokens[i + 1][0] != "num":
                    where = tokens[i + 1][2] if i + 1 < len(tokens) else len(text)
                    raise ParseError("expected an integer exponent after '^'", where, text)
                exp = int(tokens[i + 1][1])
                i += 2
            current[coord] = current.get(coord, 0) + exp
        expect_term = False
    if current is None:
        raise ParseError("expected a monomial", len(text), text)
    if expect_term:
        raise ParseError("dangling '*'", len(text), text)
    terms.append((current, nonzero))

    used = max((c for t, _ in terms for c in t), default=0)
    if n is None:
        n = max(used, 1)
    elif used > n:
        raise DimensionMismatch(f"variable {used} used but n={n}")
    gens = []
    for exps, nz in terms:
        if nz:
            gens.append(tuple(exps.get(j + 1, 0) for j in range(n)))
    if not gens:
        raise ZeroIdeal("all generators are zero")
    return MonomialIdeal(gens, n=n)


def _render_monomial(g):
    n = len(g)
    if not any(g):
        return "1"
    names = list(_LETTERS[:n]) if n <= 4 else [f"x{j + 1}" for j in range(n)]
    parts = []
    for name, e in zip(names, g):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def render_ideal(a):
    """Canonical text form; parse_ideal(render_ideal(a), n=a.n) == a."""
    return ", ".join(_render_monomial(g) for g in a.generators)


# -- polynomials -------------------------------------------------------------

class Polynomial:
    """Polynomial with Gaussian-rational coefficients, stored as {exponent: (re, im)}."""

    __slots__ = ("n", "terms")

    def __init__(self, terms, n=None):
        clean = {}
        for exp, coeff in dict(terms).items():
            if isinstance(coeff, tuple):
                re_, im_ = coeff
            else:
                re_, im_ = coeff, 0
            re_, im_ = as_rational(re_), as_rational(im_)
            exp = tuple(exp)
            if n is None:
                n = len(exp)
            exp = _check_index(exp, n)
            if re_ or im_:
                clean[exp] = (re_, im_)
        if not clean:
            raise ZeroPolynomial("polynomial has no nonzero terms")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", dict(sorted(clean.items())))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @property
    def support(self):
        return tuple(self.terms)

    def __repr__(self):
        return f"Polynomial({self.terms!r})"


def box_points(upper):
    """All lattice points of prod_j [0, upper_j], lexicographic order."""
    return _cartesian(*(range(u + 1) for u in upper))
