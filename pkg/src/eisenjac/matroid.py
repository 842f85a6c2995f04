"""Matroid data read off a representation: bases, standard representatives,
signed fundamental cocircuits, N_B matrices, deletion and 3-connectivity.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .eisenstein import Eisenstein, is_unit
from .hmatrix import HRepresentation
from .matrix import MatrixE, det, inverse, minors, rank

__all__ = [
    "BasisCountMismatch",
    "CocircuitVector",
    "as_matrix",
    "enumerate_bases",
    "count_bases",
    "standard_rep",
    "fundamental_cocircuit",
    "n_b_matrix",
    "delete",
    "rank_table",
    "verify_three_connected",
    "THREE_CONNECTED_MAX_SIZE",
]

THREE_CONNECTED_MAX_SIZE = 14


class BasisCountMismatch(AssertionError):
    pass


def as_matrix(M) -> MatrixE:
    return M.matrix if isinstance(M, HRepresentation) else M


def _require_full_row_rank(A: MatrixE):
    if rank(A) != A.rows:
        raise ValueError(
            f"representation has {A.rows} rows but rank {rank(A)}; "
            "apply full_row_rank_restriction first"
        )


def enumerate_bases(M, check_count: bool = True) -> list[tuple]:
    """All bases as tuples of column labels, in lexicographic column order.

    A column set J is a basis when det(M[J]) != 0.  With ``check_count`` the
    number found is compared against det(M M^H), which equals it for any
    H-representation.
    """
    A = as_matrix(M)
    _require_full_row_rank(A)
    r = A.rows
    labels = A.col_labels
    found = []
    for _, block, da, db in minors(A, r, row_sets=[tuple(range(r))]):
        nz = np.flatnonzero((da != 0) | (db != 0))
        found.extend(tuple(labels[j] for j in block[t]) for t in nz)
    if check_count:
        expected = det(A @ A.H)
        if expected != len(found):
            raise BasisCountMismatch(
                f"found {len(found)} bases but det(M M^H) = {expected}; "
                "the matrix is not a unimodular representation"
            )
    return found


def count_bases(M) -> int:
    return len(enumerate_bases(M, check_count=False))


def standard_rep(M, basis: Sequence) -> MatrixE:
    """M_B = (M[B])^-1 M, so that the columns of B form an identity block.

    Row k of the result belongs to the k-th element of ``basis``.
    """
    A = as_matrix(M)
    r = A.rows
    if len(basis) != r:
        raise ValueError(f"a basis has {r} elements, got {len(basis)}")
    pos = [A.label_index(b) for b in basis]
    rows = [list(x) for x in A.entries]
    used = [False] * r
    owner = [None] * r  # owner[k] = row whose pivot is in column pos[k]
    for k, c in enumerate(pos):
        p = next((i for i in range(r) if not used[i] and rows[i][c]), None)
        if p is None:
            raise ValueError(f"{tuple(basis)} is not a basis")
        piv = rows[p][c]
        if not is_unit(piv):
            return _standard_rep_rational(A, basis, pos)
        inv = piv.conj()
        rows[p] = [inv * x for x in rows[p]]
        pr = rows[p]
        for i in range(r):
            if i != p and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], pr)]
        used[p] = True
        owner[k] = p
    return MatrixE([rows[owner[k]] for k in range(r)], A.col_labels, cols=A.cols)


def _standard_rep_rational(A: MatrixE, basis, pos) -> MatrixE:
    sub = A.select_positions(cols=pos)
    if det(sub) == 0:
        raise ValueError(f"{tuple(basis)} is not a basis")
    out = inverse(sub) @ A
    if not out.is_integral():
        raise ValueError("standard representative is not defined over Z[w]")
    return out.to_eisenstein().with_labels(A.col_labels)


@dataclass(frozen=True)
class CocircuitVector:
    """f_B(e): the row of M_B belonging to e, indexed by ground-set labels."""

    basis: tuple
    element: object
    entries: tuple
    labels: tuple

    def __getitem__(self, label) -> Eisenstein:
        return self.entries[self.labels.index(label)]

    @property
    def support(self) -> frozenset:
        return frozenset(lab for lab, x in zip(self.labels, self.entries) if x)


def fundamental_cocircuit(M, basis: Sequence, element, M_B: MatrixE | None = None):
    """Return (f_B(element), support).

    The support is the fundamental cocircuit {j : B - element + j is a basis}.
    """
    basis = tuple(basis)
    if element not in basis:
        raise ValueError(f"{element!r} is not in the basis {basis}")
    if M_B is None:
        M_B = standard_rep(M, basis)
    row = M_B.row(basis.index(element))
    f = CocircuitVector(basis, element, row, M_B.col_labels)
    return f, f.support


def n_b_matrix(M, basis: Sequence, M_B: MatrixE | None = None) -> MatrixE:
    """The n x n matrix with M_B on the rows of B and zeros elsewhere.

    Rows and columns are both indexed by the ground set in column order.
    """
    A = as_matrix(M)
    basis = tuple(basis)
    if M_B is None:
        M_B = standard_rep(A, basis)
    zero = (Eisenstein(0, 0),) * A.cols
    where = {b: k for k, b in enumerate(basis)}
    rows = [M_B.row(where[lab]) if lab in where else zero for lab in A.col_labels]
    return MatrixE._raw(tuple(rows), A.col_labels, A.cols)


def delete(M, element):
    """Delete one column; the caller restores full row rank if it drops."""
    if isinstance(M, HRepresentation):
        return HRepresentation(M.matrix.delete_column(element), M.validated_level)
    return M.delete_column(element)


def rank_table(M, bases: list[tuple] | None = None) -> np.ndarray:
    """rank(X) for every subset X of the ground set, indexed by bitmask.

    Bit k of the mask is the k-th column.  Computed from the bases: the
    independent sets are the subsets of bases, and rank(X) is the size of a
    largest independent subset of X.
    """
    A = as_matrix(M)
    n = A.cols
    if bases is None:
        bases = enumerate_bases(A, check_count=False)
    pos = {lab: k for k, lab in enumerate(A.col_labels)}
    indep = np.zeros(1 << n, dtype=bool)
    for B in bases:
        indep[sum(1 << pos[b] for b in B)] = True
    masks = np.arange(1 << n, dtype=np.int64)
    # close downwards: a subset of an independent set is independent
    for k in range(n):
        bit = 1 << k
        has = (masks & bit) != 0
        indep[masks[has] ^ bit] |= indep[masks[has]]
    popcount = np.bitwise_count(masks.astype(np.uint64)).astype(np.int16)
    rk = np.where(indep, popcount, -1).astype(np.int16)
    # rank(X) = max over e in X of rank(X - e) when X is dependent; masks are
    # processed in increasing popcount order so subsets are final first
    order = np.argsort(popcount, kind="stable")
    for X in order:
        if rk[X] < 0:
            best = 0
            x = int(X)
            while x:
                low = x & -x
                v = rk[int(X) ^ low]
                if v > best:
                    best = v
                x ^= low
            rk[X] = best
    return rk


def verify_three_connected(M, bases: list[tuple] | None = None) -> bool:
    """Brute-force 3-connectivity: no k-separation for k = 1, 2.

    A k-separation is a partition {X, Y} with |X|, |Y| >= k and
    rank(X) + rank(Y) < r + k.
    """
    A = as_matrix(M)
    n = A.cols
    if n > THREE_CONNECTED_MAX_SIZE:
        raise ValueError(
            f"3-connectivity check is brute force; ground set of {n} exceeds "
            f"{THREE_CONNECTED_MAX_SIZE}"
        )
    rk = rank_table(A, bases)
    full = (1 << n) - 1
    r = int(rk[full])
    masks = np.arange(1 << n, dtype=np.int64)
    size = np.bitwise_count(masks.astype(np.uint64)).astype(np.int64)
    lhs = rk[masks].astype(np.int64) + rk[full ^ masks].astype(np.int64)
    for k in (1, 2):
        sel = (size >= k) & (n - size >= k)
        if np.any(lhs[sel] < r + k):
            return False
    return True
