"""
Two representations of one matroid with different Jacobians
============================================================

Gluing the same two pieces along a common element, once as they are and
once after conjugating the second piece, gives representations of the same
matroid.  Their Jacobians disagree.
"""

import time

from eisenjac import compare, enumerate_bases, jacobian_of
from eisenjac.constructions import counterexample, counterexample_parts, format_matrix
from eisenjac.jacobian import abelianize

M1, M8 = counterexample_parts()
print("first piece", M1.shape, "second piece", M8.shape)
print(format_matrix(M1))

t0 = time.perf_counter()
M = counterexample(conjugate_second=False)
Mp = counterexample(conjugate_second=True)
print(f"both 2-sums built and fully validated in {time.perf_counter() - t0:.1f} s")

# same bases: the two matrices represent one matroid
same = {frozenset(b) for b in enumerate_bases(M.matrix)} == {frozenset(b) for b in enumerate_bases(Mp.matrix)}
print("identical basis sets:", same)

jm, jp = jacobian_of(M), jacobian_of(Mp)
print("Laplacian SNF of M :", [str(d) for d in jm.all_divisors])
print("Laplacian SNF of M':", [str(d) for d in jp.all_divisors])
print("abelian groups:", abelianize(jm), "vs", abelianize(jp))

e_iso, z_iso = compare(jm, jp)
print("isomorphic as Z[w]-modules:", e_iso, " as abelian groups:", z_iso)
