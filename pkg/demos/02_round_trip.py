"""From matrices to ideals and back.

A matrix with characteristic polynomial f has an eigenvector for theta with
entries in A[theta]; those entries generate an ideal.  Going ideal -> matrix
-> ideal lands in the same class, usually on a different ideal.
"""

from latmac import OrderCtx, parse_ideal
from latmac.classgroup import is_equivalent, verify_witness
from latmac.lm import ideal_to_matrix, matrix_to_ideal

ctx = OrderCtx("Z", "x^3+4*x-1")
M = [[0, 1, 0], [-8, -2, -5], [3, 0, 2]]
c = matrix_to_ideal(ctx, M)
print("ideal of M:", [list(r) for r in c.H])

b = parse_ideal(ctx, "3, x-2")
back = matrix_to_ideal(ctx, ideal_to_matrix(b))
gamma = is_equivalent(b, back, 6)
print("b == back:", b == back)
print("gamma with gamma*b = back:", gamma, verify_witness(gamma, b, back))

try:
    matrix_to_ideal(ctx, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])
except ValueError as exc:
    print("identity matrix rejected:", exc)
