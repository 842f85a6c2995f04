"""
Classes of lattice vectors in the Jacobian
==========================================

Jac(M) is Z[w]^n modulo the integer points of the row space and of its
orthogonal complement.  ``jacobian_class`` names the coset of a vector.
"""

from itertools import product

from eisenjac import W, in_lambda, in_lambda_star, jacobian_class, jacobian_of
from eisenjac.constructions import u24

M = u24()
jac = jacobian_of(M)
print("Jac =", jac)

# rows of M are in the row lattice and so represent the zero class
print("row 1 in the row lattice:", in_lambda_star(M, M.row(0))[0])
print("class of row 2:", jacobian_class(M, M.row(1), jac))

# multiples of e1 cycle with period dividing the exponent 6
for k in range(7):
    print(f"  class of {k}*e1:", jacobian_class(M, [k, 0, 0, 0], jac))

# a vector orthogonal to both rows
v = [-1, -1, 1, 0]
print("orthogonal vector", [str(x) for x in v], "in the complement lattice:", in_lambda(M, v))

# count the classes hit by vectors with entries in {0, 1, w}
classes = {jacobian_class(M, list(x), jac) for x in product([0, 1, W], repeat=4)}
print(f"{len(classes)} of {jac.order} classes reached from the box {{0, 1, w}}^4")
