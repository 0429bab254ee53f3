"""
Checking the exact answers against the analytic definitions
===========================================================

The oracle is floating point: it integrates |z^beta|^2 / sum |z^alpha|^(2c)
over shrinking polydiscs and samples |z^beta| / sum |z^alpha| near 0.
"""

from fractions import Fraction

from monomult import build, lct, parse_ideal, witness, MULTIPLIER_INTERIOR
from monomult.oracle import boundedness, divergence_wedge, integrability

a = parse_ideal("x^2, y^3")
print("lct =", lct(a))

# on either side of the threshold the partial integrals behave differently
for c in [Fraction(4, 5), Fraction(9, 10)]:
    v = integrability((0, 0), a, c)
    print(f"c = {c}: {v.kind}  (tail/head ratio {v.statistic:.3g})")

# past the threshold a witness gives an explicit divergent one-variable integral
w = witness(build(a), Fraction(9, 10), (0, 0), MULTIPLIER_INTERIOR)
v = divergence_wedge((0, 0), a, Fraction(9, 10), w)
print("wedge exponent", v.details["exponent"], "->", v.kind)

# x*y is not in the closure: the ratio blows up along (r, r^(2/3))
v = boundedness((1, 1), a)
print("x*y:", v.kind, " witness curve exponent", v.details["curves"][0]["exponent"])
print("x*y^2:", boundedness((1, 2), a).kind)
