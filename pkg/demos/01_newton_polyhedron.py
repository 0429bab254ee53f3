"""
Newton polyhedra and the log canonical threshold
================================================

"""

from monomult import build, classify, classify_lp, lct, parse_ideal, witness, MULTIPLIER_INTERIOR

# the ideal (x^2, y^3); generators are kept minimal and sorted
a = parse_ideal("x^2, y^3")
print("ideal:", a)

# its Newton polyhedron, as inequalities <v, x> >= kappa
P = build(a)
for f in P.facets:
    print("  facet", [str(v) for v in f.normal], ">=", f.offset)

# locating points: the facet test and the LP on convex combinations agree
for pt in [(1, 1), (2, 0), (3, 1), (1, 2)]:
    kind, cert = classify_lp(a, 1, pt)
    print(pt, classify(P, 1, pt), kind, [str(t) for t in cert.coefficients] if cert else "")

# the threshold is the smallest <v, 1> over the non-coordinate facets
print("lct =", lct(a))

# for c >= lct the point (1, 1) is not interior; the witness is a scaled facet normal
w = witness(P, 1, (0, 0), MULTIPLIER_INTERIOR)
print("witness b =", [str(x) for x in w.direction], " <beta+1, b> =", w.query_value(), "<= m =", w.margin)
