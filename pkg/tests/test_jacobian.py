import random
from functools import lru_cache
from itertools import product

import pytest

from eisenjac.constructions import complete_graph, cycle_graph, graphic
from eisenjac.eisenstein import W, Eisenstein
from eisenjac.hmatrix import conjugate_rep
from eisenjac.jacobian import (
    AbelianGroup,
    abelian_group,
    abelianize,
    compare,
    in_lambda,
    in_lambda_star,
    jacobian_class,
    jacobian_of,
    laplacian,
    order_of,
    regular_doubling,
    residue,
    sixth_powers_integral,
    _multiplication_matrix,
)
from eisenjac.matrix import MatrixE, identity
from eisenjac.projection import projector
from eisenjac.snf import INTEGERS, snf
import oracles
from conftest import bases_of, family, jac_of, random_ops

E = Eisenstein
ZERO = E(0)


def test_laplacian(u24):
    L = laplacian(u24)
    assert L == MatrixE([[3, 1 + W.conj()], [1 + W, 3]])
    assert L.is_hermitian()
    assert laplacian(identity(3)) == identity(3)
    with pytest.raises(ValueError):
        laplacian(MatrixE([[1, 1], [1, 1]]))


def test_u24_jacobian():
    j = jac_of("u24")
    assert j.divisors == (E(1, 1), E(2, 2))
    assert str(j) == "E/(1+w) + E/(2+2w)"
    assert j.order == order_of(j) == 36
    assert str(abelianize(j)) == "Z/6 + Z/6"


def test_ag23_jacobian():
    j = jac_of("ag23")
    assert j.order == 72 ** 2
    assert abelianize(j) == AbelianGroup((2, 2, 6, 6, 6, 6))


def test_t4_chain():
    assert jac_of("t_r:4").all_divisors == (E(1), E(2), E(6), E(36))


@pytest.mark.slow
def test_counterexample_jacobians():
    jm, jp = jac_of("counterexample_m"), jac_of("counterexample_mprime")
    assert jm.divisors == (E(21), E(147))
    assert jp.divisors == (E(3), E(1029))
    assert compare(jm, jp) == (False, False)
    assert jm.order == jp.order == 3087 ** 2


def test_identity_jacobian_is_trivial():
    j = jacobian_of(identity(3))
    assert j.divisors == () and j.order == 1 and str(j) == "0"
    assert str(abelianize(j)) == "0"


def test_redundant_rows_are_dropped(u24):
    stacked = MatrixE(list(u24.entries) + [u24.row(0)])
    assert jacobian_of(stacked).divisors == jac_of("u24").divisors


def test_abelianize_one_factor():
    m = _multiplication_matrix(E(1, 1))
    assert m == [[1, -1], [1, 2]]
    assert oracles.int_snf_divisors(m) == [1, 3]
    assert [d for d in snf(m, INTEGERS).divisors if d != 1] == [3]


def test_abelian_group_chain():
    assert abelian_group([6, 4, 1]) == AbelianGroup((2, 12))
    assert str(abelian_group([])) == "0"
    assert abelian_group([2, 3]).invariant_factors == (6,)
    with pytest.raises(ValueError):
        AbelianGroup((4, 6))
    with pytest.raises(ValueError):
        abelian_group([0])


@pytest.mark.parametrize("alpha", [E(1, 1), E(2, 2), E(6), E(7, 7), E(2, 1), E(5, -3), E(147)])
def test_abelianize_order_matches_norm(alpha):
    orders = [d for d in snf(_multiplication_matrix(alpha), INTEGERS).divisors]
    assert orders[0] * orders[1] == alpha.norm()


def test_lambda_star_membership(u24):
    for r in range(2):
        ok, z = in_lambda_star(u24, u24.row(r))
        assert ok and z == tuple(E(int(k == r)) for k in range(2))
    ok, z = in_lambda_star(u24, [E(1, 1) * x for x in u24.row(0)])
    assert ok and z == (E(1, 1), ZERO)
    assert in_lambda_star(u24, [1, 0, 0, 0]) == (False, None)


def test_lambda_membership(u24):
    assert in_lambda(u24, [0, 0, 0, 0])
    assert not in_lambda(u24, u24.row(0))
    # kernel vector of M^H scaled into E
    Q = identity(4).to_rational() - projector(u24).P
    row = Q.row(0)
    from eisenjac.matrix import MatrixQw
    d = MatrixQw([row], cols=4).denominator()
    v = [(x * d).to_eisenstein() for x in row]
    assert any(v) and in_lambda(u24, v)
    assert not in_lambda(u24, [E(1) / E(2)] + [0, 0, 0])


def test_residue_is_a_complete_system():
    for alpha in [E(1, 1), E(2, 2), E(3), E(2, 1)]:
        reps = {residue(E(a, b), alpha) for a in range(-9, 10) for b in range(-9, 10)}
        assert len(reps) == alpha.norm() == len(oracles.residues_mod((alpha.a, alpha.b)))
        for a, b in product(range(-4, 5), repeat=2):
            x = E(a, b)
            r = residue(x, alpha)
            assert alpha.divides(x - E(*r))


def test_class_values(u24):
    j = jac_of("u24")
    zero = ((0, 0), (0, 0))
    assert jacobian_class(u24, [0] * 4, j) == zero
    assert jacobian_class(u24, u24.row(1), j) == zero
    classes = [jacobian_class(u24, [k, 0, 0, 0], j) for k in range(13)]
    assert classes[6] == classes[12] == zero and classes[1] != zero
    assert all(classes[k] == classes[k + 6] for k in range(7))


def _in_lambda_plus_lambda_star(M, d):
    # unique orthogonal split d = x + y with y = P d
    y = projector(M).apply(d)
    if not all(c.is_integral() for c in y):
        return False
    y = [c.to_eisenstein() for c in y]
    x = [a - b for a, b in zip(d, y)]
    return in_lambda_star(M, y)[0] and in_lambda(M, x)


@pytest.mark.slow
def test_class_equality_exhaustive_on_small_box(u24):
    j = jac_of("u24")
    box = [list(v) for v in product([E(0), E(1), W], repeat=4)]
    cls = [jacobian_class(u24, v, j) for v in box]
    member = lru_cache(maxsize=None)(lambda d: _in_lambda_plus_lambda_star(u24, list(d)))
    for u, cu in zip(box, cls):
        for v, cv in zip(box, cls):
            d = tuple(a - b for a, b in zip(u, v))
            assert (cu == cv) == member(d)


def test_regular_doubling_graphs():
    tri = regular_doubling(cycle_graph(3))
    assert tri.jac_z == AbelianGroup((3,)) and tri.holds
    k4 = regular_doubling(complete_graph(4))
    assert k4.jac_z == AbelianGroup((4, 4))
    assert k4.jac_e == k4.doubled == AbelianGroup((4, 4, 4, 4))
    edge = regular_doubling(graphic(2, [(0, 1)]))
    assert edge.jac_z == edge.jac_e == AbelianGroup(())
    with pytest.raises(ValueError):
        regular_doubling(family("u24"))


@pytest.mark.parametrize("spec", ["u24", "ag23", "t_r:3", "t_r:4", "whirl:3", "whirl:4"])
def test_order_is_bases_squared(spec):
    assert jac_of(spec).order == len(bases_of(spec)) ** 2
    assert sixth_powers_integral(jac_of(spec))


@pytest.mark.parametrize("spec", ["u24", "whirl:3"])
def test_invariance_under_ops_and_conjugation(spec):
    A = family(spec)
    ref = jac_of(spec).all_divisors
    rng = random.Random(11)
    for _ in range(20):
        _, B = random_ops(A, rng, 6)
        assert jacobian_of(B).all_divisors == ref
    assert jacobian_of(conjugate_rep(A)).all_divisors == ref
