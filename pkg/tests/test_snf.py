from hypothesis import given, settings
from hypothesis import strategies as st
import pytest

from eisenjac.eisenstein import W, Eisenstein, canonical_associate
from eisenjac.matrix import MatrixE, det, identity
from eisenjac.snf import (
    INTEGERS,
    cokernel_decomposition,
    minor_gcd_divisors,
    snf,
)
import oracles
from conftest import family

E = Eisenstein
elem = st.builds(E, st.integers(-4, 4), st.integers(-4, 4))


def matrices(entry, max_dim=4):
    return st.tuples(st.integers(1, max_dim), st.integers(1, max_dim)).flatmap(
        lambda mn: st.lists(st.lists(entry, min_size=mn[1], max_size=mn[1]),
                            min_size=mn[0], max_size=mn[0]))


def checked(A, ring=None):
    res = snf(A, ring)
    assert res.reconstructs(A)
    assert res.transforms_unimodular()
    return res


def test_u24_laplacian(u24):
    L = u24 @ u24.H
    assert L == MatrixE([[3, 1 + W.conj()], [1 + W, 3]])
    assert checked(L).divisors == (E(1, 1), E(2, 2))
    assert minor_gcd_divisors(L) == (E(1, 1), E(2, 2))


def test_identity_and_zero():
    assert checked(identity(4)).divisors == (E(1),) * 4
    z = checked(MatrixE([[0, 0], [0, 0]]))
    assert z.divisors == (E(0), E(0)) and z.rank == 0
    assert z.S == identity(2).entries and z.T == identity(2).entries


def test_ag23_laplacian():
    A = family("ag23")
    assert checked(A @ A.H).divisors == (E(2, 2), E(2, 2), E(6))


def test_conjugate_one_by_one_differ():
    assert minor_gcd_divisors([[E(2, 1)]]) == (E(2, 1),)
    assert minor_gcd_divisors([[2 + W.conj()]]) == (E(1, 2),)
    assert canonical_associate(2 + W.conj())[0] == E(1, 2) != E(2, 1)


def test_minor_gcd_guard():
    with pytest.raises(ValueError):
        minor_gcd_divisors([[1] * 9] * 9)


def test_cokernel_decomposition():
    [f] = cokernel_decomposition([[2]], INTEGERS)
    assert f.order == 2 and not f.trivial
    [g] = cokernel_decomposition([[E(1, 1)]])
    assert g.order == 3 == len(oracles.residues_mod((1, 1)))
    fs = cokernel_decomposition([[1, 0], [0, 0]], INTEGERS)
    assert [x.free for x in fs] == [False, True]
    with pytest.raises(ValueError):
        cokernel_decomposition([[1, 2]], INTEGERS)


def test_integer_snf_matches_oracle():
    for m in ([[2, 4], [6, 8], [1, 1]], [[3, 1], [1, 3]], [[2, 0, 0], [0, 3, 0], [0, 0, 4]]):
        res = checked(m, INTEGERS)
        assert list(res.divisors) == oracles.int_snf_divisors(m)


@settings(max_examples=80, deadline=None)
@given(matrices(elem))
def test_snf_properties_over_e(rows):
    A = MatrixE(rows)
    res = checked(A)
    nz = res.nonzero
    assert all(nz[i].divides(nz[i + 1]) for i in range(len(nz) - 1))
    assert all(canonical_associate(d)[0] == d for d in nz)
    assert res.divisors == minor_gcd_divisors(A)
    assert checked(A.transpose()).divisors == res.divisors


@settings(max_examples=80, deadline=None)
@given(matrices(st.integers(-6, 6)))
def test_snf_properties_over_z(rows):
    res = checked(rows, INTEGERS)
    assert list(res.divisors) == oracles.int_snf_divisors(rows)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(elem, min_size=n, max_size=n),
                                                    min_size=n, max_size=n)))
def test_product_of_divisors_is_associate_of_det(rows):
    A = MatrixE(rows)
    prod = E(1)
    for d in snf(A).divisors:
        prod = prod * d
    assert canonical_associate(det(A))[0] == canonical_associate(prod)[0] if prod else det(A) == 0
