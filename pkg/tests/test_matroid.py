import random
from itertools import combinations

import pytest

from eisenjac.constructions import cycle_graph, direct_sum, u24 as make_u24
from eisenjac.eisenstein import Eisenstein, in_h
from eisenjac.matrix import MatrixE, MatrixQw, identity, inverse, rank
from eisenjac.matroid import (
    BasisCountMismatch,
    count_bases,
    delete,
    enumerate_bases,
    fundamental_cocircuit,
    n_b_matrix,
    rank_table,
    standard_rep,
    verify_three_connected,
)
from eisenjac.jacobian import jacobian_of
import oracles
from conftest import bases_of, family

E = Eisenstein
EXCHANGE_FAMILIES = ["u24", "ag23", "t_r:3"]


def brute_bases(A):
    out = []
    for cs in combinations(range(A.cols), A.rows):
        d = oracles.cofactor_det([[(A.entries[i][j].a, A.entries[i][j].b) for j in cs] for i in range(A.rows)])
        if d != (0, 0):
            out.append(tuple(A.col_labels[j] for j in cs))
    return out


def test_basis_counts():
    assert bases_of("u24") == tuple(combinations(range(1, 5), 2))
    assert len(bases_of("ag23")) == 72
    assert list(bases_of("ag23")) == brute_bases(family("ag23"))
    assert count_bases(family("t_r:3")) == 45


@pytest.mark.slow
def test_counterexample_basis_count():
    A = family("counterexample_m")
    assert len(enumerate_bases(A)) == 3087 == 21 * 147 == 3 * 1029


def test_rank_deficient_rejected():
    with pytest.raises(ValueError):
        enumerate_bases(MatrixE([[1, 1], [1, 1]]))


def test_count_check_rejects_non_unimodular():
    with pytest.raises(BasisCountMismatch):
        enumerate_bases(MatrixE([[1, 0, 1], [0, 1, 2]]))


@pytest.mark.parametrize("spec", ["u24", "ag23", "t_r:3", "whirl:3"])
def test_standard_rep(spec):
    A = family(spec)
    for B in bases_of(spec):
        M_B = standard_rep(A, B)
        assert M_B.select_columns(B) == identity(A.rows)
        assert all(in_h(x) for row in M_B.entries for x in row)
        assert rank(MatrixE(list(A.entries) + list(M_B.entries))) == A.rows


def test_standard_rep_u24_explicit(u24):
    M_B = standard_rep(u24, (3, 4))
    expect = (inverse(u24.select_columns([3, 4])) @ u24).to_eisenstein()
    assert M_B == expect
    with pytest.raises(ValueError):
        standard_rep(u24, (1, 1))


def test_cocircuits_u24(u24):
    for B in bases_of("u24"):
        for i in B:
            f, supp = fundamental_cocircuit(u24, B, i)
            assert f[i] == E(1)
            assert len(supp) == 3
            assert supp == {j for j in u24.col_labels
                            if tuple(sorted(set(B) - {i} | {j})) in bases_of("u24") or j == i}
    with pytest.raises(ValueError):
        fundamental_cocircuit(u24, (1, 2), 3)


def test_cocircuit_triangle():
    C3 = cycle_graph(3)
    bases = enumerate_bases(C3)
    assert len(bases) == 3
    _, supp = fundamental_cocircuit(C3, (1, 2), 1)
    assert supp == {1, 3}


@pytest.mark.parametrize("spec", EXCHANGE_FAMILIES)
def test_exchange_conjugacy_and_bijection(spec):
    A = family(spec)
    bases = {frozenset(b): b for b in bases_of(spec)}
    reps = {k: standard_rep(A, b) for k, b in bases.items()}
    for key, B in bases.items():
        for i in B:
            f, _ = fundamental_cocircuit(A, B, i, reps[key])
            for j in A.col_labels:
                if j in B:
                    continue
                swapped = (key - {i}) | {j}
                if not f[j]:
                    assert swapped not in bases
                    continue
                assert swapped in bases
                B2 = bases[swapped]
                g, _ = fundamental_cocircuit(A, B2, j, reps[swapped])
                assert f[j] == g[i].conj()


def test_unique_vector_from_values_on_a_basis():
    A = family("ag23")
    rng = random.Random(7)
    for _ in range(30):
        z = [E(rng.randint(-3, 3), rng.randint(-3, 3)) for _ in range(A.rows)]
        v = (MatrixE([z], cols=A.rows) @ A).row(0)
        B = rng.choice(bases_of("ag23"))
        vals = [v[A.label_index(b)] for b in B]
        rebuilt = (MatrixE([vals], cols=len(vals)) @ standard_rep(A, B)).row(0)
        assert rebuilt == v


@pytest.mark.parametrize("spec", ["u24", "whirl:3"])
def test_n_b_matrix(spec):
    A = family(spec)
    rng = random.Random(2)
    kernel = _kernel_vector(A)
    for B in bases_of(spec):
        N = n_b_matrix(A, B)
        z = [E(rng.randint(-2, 2), rng.randint(-2, 2)) for _ in range(A.rows)]
        v = MatrixE([z], cols=A.rows) @ A
        assert v @ N == v
        assert not any(x for r in (N @ kernel.H).entries for x in r)


def test_n_b_square_is_identity():
    A = identity(3)
    assert n_b_matrix(A, (1, 2, 3)) == identity(3)


def _kernel_vector(A):
    # a nonzero Eisenstein vector orthogonal to the rows, via the complementary projector
    from eisenjac.projection import complementary_projector
    Q = complementary_projector(A).P
    for r in Q.entries:
        if any(r):
            d = MatrixQw([r], cols=len(r)).denominator()
            return MatrixQw([[x * d for x in r]], cols=len(r)).to_eisenstein()
    raise AssertionError("no kernel")


def test_deletions_of_ag23():
    A = family("ag23")
    jacs = set()
    for e in range(1, 10):
        D = delete(A, e)
        assert len(enumerate_bases(D)) == 48
        assert sum(e in b for b in bases_of("ag23")) == 24
        jacs.add(jacobian_of(D).divisors)
    assert jacs == {(E(2, 2), E(8, 8))}


def test_three_connected():
    assert verify_three_connected(make_u24())
    assert verify_three_connected(family("t_r:3"))
    tri = direct_sum(cycle_graph(3), cycle_graph(3).with_labels(["a", "b", "c"])).matrix
    assert not verify_three_connected(tri)
    # a series pair gives a 2-separation
    assert not verify_three_connected(cycle_graph(4))


def test_rank_table_agrees_with_matrix_rank(u24):
    t = rank_table(u24)
    for mask in range(16):
        cols = [u24.col_labels[k] for k in range(4) if mask >> k & 1]
        assert t[mask] == rank(u24.select_columns(cols))
