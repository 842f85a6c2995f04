"""
The Jacobian of U(2,4)
======================

Walk through the whole pipeline on the smallest interesting example.
"""

from eisenjac import abelianize, averaging_matrix, enumerate_bases, jacobian_of, projector, validate
from eisenjac.constructions import format_matrix, u24

# a 2 x 4 representation; w is the primitive sixth root of unity exp(i pi / 3)
M = u24()
print(format_matrix(M))

# every subdeterminant must be 0 or a sixth root of unity
print(validate(M, "full").describe())

# the Laplacian M M^H is Hermitian with determinant equal to the number of bases
L = M @ M.H
print("Laplacian rows:", [[str(x) for x in r] for r in L.entries])
bases = enumerate_bases(M)
print("bases:", bases)

# Smith normal form of the Laplacian gives the Jacobian as a Z[w]-module
jac = jacobian_of(M)
print("Jac =", jac)
print("as an abelian group:", abelianize(jac))
print("order", jac.order, "=", len(bases), "squared")

# averaging the standard representatives over all bases recovers kappa * P
N, kappa = averaging_matrix(M, bases)
P = projector(M).P
print(f"sum of N_B over {kappa} bases equals {kappa}*P:", N.to_rational() == P.scale(kappa))
for row in P.entries:
    print("  ", "  ".join(f"{str(x):>12}" for x in row))
