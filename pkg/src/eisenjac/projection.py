"""Orthogonal projection onto the row space, and its basis-averaging formula."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .eisenstein import Eisenstein, EisensteinRational
from .hmatrix import HRepresentation
from .matrix import MatrixE, MatrixQw, identity, inverse, rank
from .matroid import enumerate_bases, n_b_matrix, standard_rep

__all__ = [
    "Projector",
    "projector",
    "complementary_projector",
    "averaging_matrix",
    "dual_membership",
    "AVERAGING_MAX_BASES",
]

AVERAGING_MAX_BASES = 5000


def _matrix(M) -> MatrixE:
    return M.matrix if isinstance(M, HRepresentation) else M


@dataclass(frozen=True)
class Projector:
    """P = M^H (M M^H)^-1 M, acting on row vectors as v -> v P."""

    P: MatrixQw
    source: MatrixE = field(repr=False)

    def apply(self, v: Sequence) -> tuple:
        row = MatrixQw([list(v)], cols=len(v))
        return (row @ self.P).row(0)

    def is_idempotent(self) -> bool:
        return self.P @ self.P == self.P

    def is_hermitian(self) -> bool:
        return self.P.is_hermitian()


def projector(M) -> Projector:
    A = _matrix(M)
    if rank(A) != A.rows:
        raise ValueError("projector needs full row rank; apply full_row_rank_restriction first")
    L = A @ A.H
    P = A.H @ inverse(L) @ A
    return Projector(P.with_labels(A.col_labels), A)


def complementary_projector(M) -> Projector:
    """I - P: the projection onto the orthogonal complement of the row space."""
    p = projector(M)
    n = p.P.rows
    return Projector(identity(n, p.P.col_labels).to_rational() - p.P, p.source)


def averaging_matrix(M, bases: list[tuple] | None = None,
                     max_bases: int = AVERAGING_MAX_BASES) -> tuple[MatrixE, int]:
    """N = sum of N_B over all bases, and the number of bases kappa.

    Asserts N = kappa * P exactly.
    """
    A = _matrix(M)
    if bases is None:
        bases = enumerate_bases(A)
    kappa = len(bases)
    if kappa > max_bases:
        raise ValueError(f"{kappa} bases exceeds the averaging limit of {max_bases}")
    n = A.cols
    acc = [[Eisenstein(0, 0)] * n for _ in range(n)]
    pos = {lab: k for k, lab in enumerate(A.col_labels)}
    for B in bases:
        M_B = standard_rep(A, B)
        for k, b in enumerate(B):
            row = acc[pos[b]]
            for j, x in enumerate(M_B.row(k)):
                if x:
                    row[j] = row[j] + x
    N = MatrixE(acc, A.col_labels, cols=n)
    P = projector(A).P
    if N.to_rational() != P.scale(EisensteinRational(kappa)):
        raise AssertionError("averaging identity N = kappa * P failed")
    return N, kappa


def n_b_sum(M, bases: list[tuple]) -> MatrixE:
    """Sum of N_B built matrix by matrix; slower reference for tests."""
    A = _matrix(M)
    total = None
    for B in bases:
        nb = n_b_matrix(A, B)
        total = nb if total is None else total + nb
    return total


def dual_membership(M, v: Sequence) -> bool:
    """Is v in the dual lattice of Lambda*: in the row space with v M^H integral?"""
    A = _matrix(M)
    vq = [EisensteinRational.coerce(x) for x in v]
    if len(vq) != A.cols:
        raise ValueError(f"vector of length {len(vq)} for {A.cols} columns")
    if tuple(projector(A).apply(vq)) != tuple(vq):
        return False
    pairing = (MatrixQw([vq], cols=len(vq)) @ A.H).row(0)
    return all(x.is_integral() for x in pairing)
