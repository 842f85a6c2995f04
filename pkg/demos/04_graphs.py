"""
Graphs: the Eisenstein Jacobian doubles the sandpile group
==========================================================

For a totally unimodular representation the Jacobian over Z[w], seen as an
abelian group, is two copies of the usual graph Jacobian.
"""

from eisenjac import regular_doubling
from eisenjac.constructions import complete_graph, cycle_graph, graphic

examples = {
    "triangle": cycle_graph(3),
    "square": cycle_graph(4),
    "K4": complete_graph(4),
    "K5": complete_graph(5),
    # two vertices joined by three parallel edges
    "theta": graphic(2, [(1, 2), (1, 2), (1, 2)]),
}

for name, M in examples.items():
    rep = regular_doubling(M)
    print(f"{name:>8}: Jac_Z = {rep.jac_z}   Jac over Z[w] = {rep.jac_e}   doubled: {rep.holds}")
