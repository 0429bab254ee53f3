"""
Multiplier ideals and jumping numbers
=====================================

"""

from fractions import Fraction

from monomult import jumping_numbers, multiplier_ideal, parse_ideal, Polynomial, polynomial_in_multiplier

a = parse_ideal("x^3, x*y, y^4")

# J(c·a) shrinks as c grows
for c in [Fraction(1, 2), Fraction(3, 4), 1, Fraction(3, 2), 2]:
    print(f"J({c}·a) =", multiplier_ideal(a, c))

# jumping numbers in (0, 2], each with the ideal at the jump
rep = jumping_numbers(a, 2)
print("lct =", rep.lct)
for c, J in rep.jumps:
    print(f"  jump at {c}: {J}")

# a polynomial belongs when every monomial of its support does
g = Polynomial({(1, 0): 1, (0, 2): Fraction(-1, 3)})
print("x - y^2/3 in J(1·a)?", polynomial_in_multiplier(g, a, 1))
