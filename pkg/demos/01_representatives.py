"""Explicit matrix representatives for degree-one ideals.

For O = Z[x]/(x^3+4x-1) and the prime (3, x-2) we recover the pair (a, z),
the ideal matrix kappa(a, z) and the near-companion matrix C_f(a, z), then
check that C_f(a, z) is GL_3(Z)-similar to the matrix of the ideal.
"""

from latmac import OrderCtx, parse_ideal
from latmac.linalg import charpoly
from latmac.poly import format_poly
from latmac.lm import ideal_to_matrix, is_similar_via, rehm_form, representative_for_ideal

ctx = OrderCtx("Z", "x^3+4*x-1")
b = parse_ideal(ctx, "3, x-2")
print("HNF of (3, x-2):", [list(r) for r in b.H])

rep = representative_for_ideal(b)
print("(a, z) =", (rep.form.a, rep.form.z))
print("kappa  =", [list(r) for r in rep.kappa_used])
print("C_f    =", [list(r) for r in rep.C])
print("charpoly(C_f) =", format_poly(charpoly(ctx.ring, rep.C), ctx.ring, "x"))

# The stored conjugator P is unimodular and maps H T H^-1 onto C_f.
M = ideal_to_matrix(b)
print("P M P^-1 == C_f:", is_similar_via(ctx.ring, [list(r) for r in rep.conjugator], M, [list(r) for r in rep.C]))

# The transposed (Rehm-type) shape of the same class.
print("transposed form:", rehm_form(rep.form, ctx))

# The same construction over F_2[t].
ctx2 = OrderCtx("GF(2)[t]", "y^3+(t^3+t^2+t)")
for gens in ("t, y", "t+1, y+1", "1"):
    rep2 = representative_for_ideal(parse_ideal(ctx2, gens))
    print(f"C_f for ({gens}):", rep2.to_json()["C"])
