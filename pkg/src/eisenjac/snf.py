"""Smith normal form over the Euclidean domains Z and Z[w]."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from . import eisenstein as eis
from .eisenstein import Eisenstein
from .matrix import MatrixE, batch_det, det

__all__ = [
    "EuclideanRing",
    "INTEGERS",
    "EISENSTEIN",
    "ring_of",
    "SnfResult",
    "snf",
    "minor_gcd_divisors",
    "CyclicFactor",
    "cokernel_decomposition",
    "MINOR_GCD_MAX_DIM",
]

MINOR_GCD_MAX_DIM = 8


class EuclideanRing:
    """The operations SNF needs from a Euclidean domain."""

    name = "?"
    zero = one = None

    def coerce(self, x):
        raise NotImplementedError

    def norm(self, x) -> int:
        raise NotImplementedError

    def divmod(self, x, y):
        raise NotImplementedError

    def canonical(self, x):
        """(c, u): c = u*x is the fixed representative of x's associate class."""
        raise NotImplementedError

    def is_unit(self, x) -> bool:
        return self.norm(x) == 1

    def divides(self, x, y) -> bool:
        if not x:
            return not y
        return not self.divmod(y, x)[1]

    def exact_div(self, x, y):
        q, r = self.divmod(x, y)
        if r:
            raise ValueError(f"{y} does not divide {x}")
        return q

    def gcd(self, x, y):
        while y:
            x, y = y, self.divmod(x, y)[1]
        return self.canonical(x)[0]

    def __repr__(self):
        return f"<ring {self.name}>"


class _Integers(EuclideanRing):
    name = "Z"
    zero, one = 0, 1

    def coerce(self, x):
        if isinstance(x, Eisenstein):
            if x.b:
                raise ValueError(f"{x} is not a rational integer")
            return x.a
        return int(x)

    def norm(self, x):
        return abs(x)

    def divmod(self, x, y):
        return divmod(x, y)

    def canonical(self, x):
        return (x, 1) if x >= 0 else (-x, -1)


class _Eisenstein(EuclideanRing):
    name = "E"
    zero, one = Eisenstein(0, 0), Eisenstein(1, 0)

    def coerce(self, x):
        return Eisenstein.coerce(x)

    def norm(self, x):
        return x.norm()

    def divmod(self, x, y):
        return eis.euclidean_div(x, y)

    def canonical(self, x):
        return eis.canonical_associate(x)

    def divides(self, x, y):
        return x.divides(y)

    def exact_div(self, x, y):
        return x.exact_div(y)


INTEGERS = _Integers()
EISENSTEIN = _Eisenstein()


def ring_of(A) -> EuclideanRing:
    if isinstance(A, MatrixE):
        return EISENSTEIN
    if any(isinstance(x, Eisenstein) for r in A for x in r):
        return EISENSTEIN
    return INTEGERS


def _rows(A, ring):
    if isinstance(A, MatrixE):
        return [list(r) for r in A.entries]
    return [[ring.coerce(x) for x in r] for r in A]


def _eye(n, ring):
    return [[ring.one if i == j else ring.zero for j in range(n)] for i in range(n)]


def _matmul(X, Y, ring):
    cols = list(zip(*Y)) if Y else []
    out = []
    for r in X:
        row = []
        for c in cols:
            s = ring.zero
            for x, y in zip(r, c):
                s = s + x * y
            row.append(s)
        out.append(row)
    return out


@dataclass(frozen=True)
class SnfResult:
    """Smith normal form D = S*A*T.

    ``divisors`` has length min(rows, cols): the r nonzero elementary
    divisors in canonical form, then zeros.
    """

    divisors: tuple
    S: tuple
    T: tuple
    rank: int
    ring: EuclideanRing = field(repr=False)

    @property
    def nonzero(self) -> tuple:
        return self.divisors[: self.rank]

    def diagonal(self) -> list[list]:
        m, n = len(self.S), len(self.T)
        D = [[self.ring.zero] * n for _ in range(m)]
        for i, d in enumerate(self.divisors):
            D[i][i] = d
        return D

    def reconstructs(self, A) -> bool:
        """True iff S*A*T equals the diagonal matrix of divisors exactly."""
        SAT = _matmul(_matmul([list(r) for r in self.S], _rows(A, self.ring), self.ring),
                      [list(r) for r in self.T], self.ring)
        return SAT == self.diagonal()

    def transforms_unimodular(self) -> bool:
        return all(self.ring.is_unit(_det(X, self.ring)) for X in (self.S, self.T))


def _det(X, ring):
    if ring is EISENSTEIN:
        return det([list(r) for r in X])
    return _int_det([list(r) for r in X])


def _int_det(m):
    # Bareiss over Z
    n = len(m)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def snf(A, ring: EuclideanRing | None = None) -> SnfResult:
    """Smith normal form with unimodular transforms S, T such that S*A*T = D.

    Pivots on a smallest-norm nonzero entry (ties: first in row-major
    order), clears its row and column by Euclidean division, and restarts
    whenever the pivot fails to divide the remaining block.  Divisors are
    put in canonical form at the end, the unit corrections going into S.
    """
    ring = ring or ring_of(A)
    M = _rows(A, ring)
    m = len(M)
    n = len(M[0]) if m else 0
    S = _eye(m, ring)
    T = _eye(n, ring)
    norm, zero = ring.norm, ring.zero

    def swap_rows(i, j):
        if i != j:
            M[i], M[j] = M[j], M[i]
            S[i], S[j] = S[j], S[i]

    def swap_cols(i, j):
        if i != j:
            for X in (M, T):
                for r in X:
                    r[i], r[j] = r[j], r[i]

    def add_row(dst, src, q):
        # row dst -= q * row src
        for X in (M, S):
            rs, rd = X[src], X[dst]
            for k, v in enumerate(rs):
                if v:
                    rd[k] = rd[k] - q * v

    def add_col(dst, src, q):
        for X in (M, T):
            for r in X:
                v = r[src]
                if v:
                    r[dst] = r[dst] - q * v

    def min_entry(cells):
        best = None
        for i, j in cells:
            x = M[i][j]
            if x:
                nx = norm(x)
                if best is None or nx < best[0]:
                    best = (nx, i, j)
        return best

    t = 0
    while t < min(m, n):
        best = min_entry((i, j) for i in range(t, m) for j in range(t, n))
        if best is None:
            break
        swap_rows(t, best[1])
        swap_cols(t, best[2])
        while True:
            clean = True
            piv = M[t][t]
            for i in range(t + 1, m):
                if M[i][t]:
                    q, r = ring.divmod(M[i][t], piv)
                    add_row(i, t, q)
                    clean = clean and not r
            for j in range(t + 1, n):
                if M[t][j]:
                    q, r = ring.divmod(M[t][j], piv)
                    add_col(j, t, q)
                    clean = clean and not r
            if not clean:
                cells = [(i, t) for i in range(t, m)] + [(t, j) for j in range(t + 1, n)]
                best = min_entry(cells)
                swap_rows(t, best[1])
                swap_cols(t, best[2])
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n)
                 if M[i][j] and not ring.divides(piv, M[i][j])),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, -ring.one)
        t += 1
    r = t
    for i in range(r):
        c, u = ring.canonical(M[i][i])
        if u != ring.one:
            M[i] = [u * x for x in M[i]]
            S[i] = [u * x for x in S[i]]
    divisors = tuple(M[i][i] for i in range(r)) + (zero,) * (min(m, n) - r)
    return SnfResult(
        divisors=divisors,
        S=tuple(tuple(row) for row in S),
        T=tuple(tuple(row) for row in T),
        rank=r,
        ring=ring,
    )


def _all_minors(rows, k, ring):
    """Every k x k minor of a rectangular matrix."""
    m, n = len(rows), len(rows[0])
    if ring is INTEGERS:
        a = np.array(rows, dtype=object)
        b = np.zeros_like(a)
    else:
        a = np.array([[x.a for x in r] for r in rows], dtype=object)
        b = np.array([[x.b for x in r] for r in rows], dtype=object)
    out = []
    cidx = np.array(list(combinations(range(n), k)), dtype=np.intp)
    for rs in combinations(range(m), k):
        sa = np.transpose(a[list(rs)][:, cidx], (1, 0, 2))
        sb = np.transpose(b[list(rs)][:, cidx], (1, 0, 2))
        da, db = batch_det(sa, sb)
        if ring is INTEGERS:
            out.extend(int(x) for x in da)
        else:
            out.extend(Eisenstein(int(x), int(y)) for x, y in zip(da, db))
    return out


def minor_gcd_divisors(A, ring: EuclideanRing | None = None,
                       max_dim: int = MINOR_GCD_MAX_DIM) -> tuple:
    """Elementary divisors as d_i / d_(i-1), d_i the gcd of all i x i minors.

    Independent of :func:`snf`; enumerates every minor, so it refuses
    matrices with min(rows, cols) > ``max_dim``.
    """
    ring = ring or ring_of(A)
    rows = _rows(A, ring)
    m = len(rows)
    n = len(rows[0]) if m else 0
    if min(m, n) > max_dim:
        raise ValueError(
            f"minor enumeration limited to min(rows, cols) <= {max_dim}, got {min(m, n)}"
        )
    divisors = []
    d_prev = ring.one
    for k in range(1, min(m, n) + 1):
        g = ring.zero
        for x in _all_minors(rows, k, ring):
            if x:
                g = ring.gcd(g, x) if g else ring.canonical(x)[0]
        if not g:
            break
        divisors.append(ring.canonical(ring.exact_div(g, d_prev))[0])
        d_prev = g
    divisors += [ring.zero] * (min(m, n) - len(divisors))
    return tuple(divisors)


@dataclass(frozen=True)
class CyclicFactor:
    """One summand R/(a) of a cokernel; a == 0 means a free summand R."""

    divisor: object
    ring: EuclideanRing = field(repr=False)

    @property
    def trivial(self) -> bool:
        return bool(self.divisor) and self.ring.is_unit(self.divisor)

    @property
    def free(self) -> bool:
        return not self.divisor

    @property
    def order(self) -> int | float:
        """Number of elements, as a set; inf for a free summand."""
        if self.free:
            return float("inf")
        return self.ring.norm(self.divisor)

    def __str__(self):
        if self.free:
            return self.ring.name
        return f"{self.ring.name}/({self.divisor})"


def cokernel_decomposition(A, ring: EuclideanRing | None = None) -> list[CyclicFactor]:
    """R^n / row_R(A) as a list of cyclic factors R/(a_i), unit factors included."""
    ring = ring or ring_of(A)
    rows = _rows(A, ring)
    if any(len(r) != len(rows) for r in rows):
        raise ValueError("cokernel_decomposition expects a square matrix")
    res = snf(rows, ring)
    return [CyclicFactor(d, ring) for d in res.divisors]
