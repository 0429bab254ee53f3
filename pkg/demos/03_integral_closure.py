"""
Integral closure, the power lemma, and the containment f·b in a·b
=================================================================

"""

from monomult import integral_closure, parse_ideal, power_lemma_check, teissier_witness

a = parse_ideal("x^2, y^3")

# the closure adds x*y^2, which lies on the segment joining (2,0) and (0,3)
print("closure:", integral_closure(a))

# closure(a^A) = a · closure(a^(A-1)) already at A = number of generators
rep = power_lemma_check(a)
print(f"A = {rep.A}, equal = {rep.equal}, smallest working A = {rep.minimal_A}")
print("  both sides:", rep.lhs)

# for f = x*y^2 in the closure, b = closure(a^(k-1)) gives f·b inside a·b
w = teissier_witness(a, (1, 2))
print("b =", w.b, " verified:", w.verified)
