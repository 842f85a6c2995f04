"""Dense exact matrices over Z[w] and Q(w).

Matrices are immutable and carry one label per column (the ground-set
element the column represents).  Row/column indices in this module are
0-based positions; labels are whatever hashable identifiers the caller
chose, defaulting to 1..n.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .eisenstein import Eisenstein, EisensteinRational

__all__ = [
    "MatrixE",
    "MatrixQw",
    "identity",
    "det",
    "rank",
    "inverse",
    "batch_det",
    "minors",
]


class _Dense:
    _scalar = None

    __slots__ = ("rows", "cols", "entries", "col_labels")

    def __init__(self, data: Iterable[Iterable], col_labels: Sequence | None = None, *, cols=None):
        coerce = self._scalar.coerce
        entries = tuple(tuple(coerce(x) for x in row) for row in data)
        rows = len(entries)
        if cols is None:
            cols = len(entries[0]) if rows else (len(col_labels) if col_labels is not None else 0)
        for row in entries:
            if len(row) != cols:
                raise ValueError("ragged matrix rows")
        if col_labels is None:
            col_labels = tuple(range(1, cols + 1))
        col_labels = tuple(col_labels)
        if len(col_labels) != cols:
            raise ValueError(f"expected {cols} column labels, got {len(col_labels)}")
        if len(set(col_labels)) != cols:
            raise ValueError("column labels must be distinct")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "col_labels", col_labels)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    @classmethod
    def _raw(cls, entries, col_labels, cols=None):
        # trusted constructor: entries already a tuple of tuples of scalars
        obj = object.__new__(cls)
        object.__setattr__(obj, "rows", len(entries))
        object.__setattr__(obj, "cols", len(entries[0]) if entries else (cols or 0))
        object.__setattr__(obj, "entries", entries)
        object.__setattr__(obj, "col_labels", tuple(col_labels))
        return obj

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> tuple:
        return self.entries[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.entries)

    def tolist(self) -> list[list]:
        return [list(r) for r in self.entries]

    def __eq__(self, other):
        if not isinstance(other, _Dense):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self.entries)
        return f"{type(self).__name__}([{body}], labels={list(self.col_labels)})"

    def with_labels(self, labels: Sequence):
        return type(self)(self.entries, labels, cols=self.cols)

    def transpose(self):
        t = tuple(zip(*self.entries)) if self.rows else ((),) * 0
        return type(self)._raw(t, range(1, self.rows + 1), cols=self.rows)

    def conj(self):
        return type(self)._raw(
            tuple(tuple(x.conj() for x in r) for r in self.entries), self.col_labels, self.cols
        )

    def conj_transpose(self):
        """The conjugate transpose; its columns are labelled 1..rows."""
        return self.conj().transpose()

    H = property(conj_transpose)

    def __matmul__(self, other):
        if not isinstance(other, _Dense):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cls = MatrixQw if MatrixQw in (type(self), type(other)) else MatrixE
        zero = cls._scalar.coerce(0)
        ocols = tuple(zip(*other.entries))
        out = []
        for r in self.entries:
            row = []
            for c in ocols:
                s = zero
                for x, y in zip(r, c):
                    if x and y:
                        s = s + x * y
                row.append(s)
            out.append(tuple(row))
        return cls._raw(tuple(out), other.col_labels, other.cols)

    def __add__(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        cls = MatrixQw if MatrixQw in (type(self), type(other)) else MatrixE
        return cls(
            [[x + y for x, y in zip(r, s)] for r, s in zip(self.entries, other.entries)],
            self.col_labels,
            cols=self.cols,
        )

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return type(self)._raw(
            tuple(tuple(-x for x in r) for r in self.entries), self.col_labels, self.cols
        )

    def scale(self, c):
        cls = MatrixQw if isinstance(c, EisensteinRational) or type(self) is MatrixQw else MatrixE
        return cls([[c * x for x in r] for r in self.entries], self.col_labels, cols=self.cols)

    def is_hermitian(self) -> bool:
        return self.rows == self.cols and all(
            self.entries[i][j] == self.entries[j][i].conj()
            for i in range(self.rows)
            for j in range(i, self.cols)
        )

    def label_index(self, label) -> int:
        try:
            return self.col_labels.index(label)
        except ValueError:
            raise KeyError(f"unknown column label {label!r}") from None

    def select_columns(self, labels: Sequence):
        """Submatrix on the columns with the given labels, in the given order."""
        idx = [self.label_index(lab) for lab in labels]
        return type(self)._raw(
            tuple(tuple(r[j] for j in idx) for r in self.entries), labels, len(idx)
        )

    def select_positions(self, rows: Sequence[int] | None = None, cols: Sequence[int] | None = None):
        rows = range(self.rows) if rows is None else rows
        cols = range(self.cols) if cols is None else cols
        return type(self)._raw(
            tuple(tuple(self.entries[i][j] for j in cols) for i in rows),
            [self.col_labels[j] for j in cols],
            len(cols),
        )

    def delete_column(self, label):
        keep = [lab for lab in self.col_labels if lab != label]
        if len(keep) == self.cols:
            raise KeyError(f"unknown column label {label!r}")
        return self.select_columns(keep)


class MatrixE(_Dense):
    """Matrix over the Eisenstein integers."""

    _scalar = Eisenstein
    __slots__ = ()

    def to_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """Integer arrays of the 1- and w-coefficients."""
        a = np.array([[x.a for x in r] for r in self.entries], dtype=object).reshape(self.shape)
        b = np.array([[x.b for x in r] for r in self.entries], dtype=object).reshape(self.shape)
        return a, b

    def to_rational(self) -> MatrixQw:
        return MatrixQw(self.entries, self.col_labels, cols=self.cols)

    def to_complex(self) -> np.ndarray:
        return np.array([[complex(x) for x in r] for r in self.entries], dtype=complex).reshape(
            self.shape
        )

    def full_row_rank_restriction(self) -> MatrixE:
        """Rows forming a maximal independent set, chosen greedily in input order."""
        if not any(any(r) for r in self.entries):
            raise ValueError("zero matrix has no full-row-rank restriction")
        keep = _independent_rows(self)
        return self.select_positions(rows=keep)


class MatrixQw(_Dense):
    """Matrix over the fraction field Q(w)."""

    _scalar = EisensteinRational
    __slots__ = ()

    def is_integral(self) -> bool:
        return all(x.is_integral() for r in self.entries for x in r)

    def to_eisenstein(self) -> MatrixE:
        return MatrixE(
            [[x.to_eisenstein() for x in r] for r in self.entries], self.col_labels, cols=self.cols
        )

    def denominator(self) -> int:
        import math

        return math.lcm(1, *(x.denominator() for r in self.entries for x in r))


def identity(n: int, labels: Sequence | None = None) -> MatrixE:
    return MatrixE([[1 if i == j else 0 for j in range(n)] for i in range(n)], labels, cols=n)


def _as_lists(A):
    if isinstance(A, _Dense):
        return [list(r) for r in A.entries]
    return [[Eisenstein.coerce(x) for x in r] for r in A]


def det(A) -> Eisenstein:
    """Determinant by fraction-free (Bareiss) elimination; every division is exact in Z[w]."""
    m = _as_lists(A)
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return Eisenstein(1, 0)
    sign = 1
    prev = Eisenstein(1, 0)
    for k in range(n - 1):
        if not m[k][k]:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return Eisenstein(0, 0)
        pivot = m[k][k]
        rk = m[k]
        for i in range(k + 1, n):
            ri = m[i]
            f = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * pivot - f * rk[j]).exact_div(prev)
        prev = pivot
    d = m[n - 1][n - 1]
    return d if sign == 1 else -d


def _independent_rows(A: _Dense) -> list[int]:
    """Greedy maximal independent row set, via fraction-free echelon reduction."""
    basis: list[tuple[int, list]] = []  # (pivot column, reduced row)
    keep = []
    for i, row in enumerate(A.entries):
        v = [EisensteinRational.coerce(x) for x in row]
        for p, b in basis:
            if v[p]:
                f = v[p]
                v = [x - f * y for x, y in zip(v, b)]
        piv = next((j for j, x in enumerate(v) if x), None)
        if piv is None:
            continue
        inv = v[piv].inverse()
        v = [x * inv for x in v]
        # keep earlier basis rows reduced in the new pivot column
        basis = [(p, [x - b[piv] * y for x, y in zip(b, v)]) if b[piv] else (p, b) for p, b in basis]
        basis.append((piv, v))
        keep.append(i)
    return keep


def rank(A: _Dense) -> int:
    return len(_independent_rows(A)) if A.rows and A.cols else 0


def inverse(A: _Dense) -> MatrixQw:
    """Exact inverse over Q(w) by Gauss-Jordan elimination."""
    n = A.rows
    if A.cols != n:
        raise ValueError("inverse of a non-square matrix")
    one, zero = EisensteinRational(1), EisensteinRational(0)
    aug = [
        [EisensteinRational.coerce(x) for x in r] + [one if i == j else zero for j in range(n)]
        for i, r in enumerate(A.entries)
    ]
    for c in range(n):
        p = next((i for i in range(c, n) if aug[i][c]), None)
        if p is None:
            raise ZeroDivisionError("matrix is singular")
        aug[c], aug[p] = aug[p], aug[c]
        inv = aug[c][c].inverse()
        aug[c] = [x * inv for x in aug[c]]
        rc = aug[c]
        for i in range(n):
            if i != c and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], rc)]
    return MatrixQw._raw(tuple(tuple(r[n:]) for r in aug), range(1, n + 1), n)


# --- batched determinants -------------------------------------------------

_INT64_SAFE = 2**62


def _choose_dtype(max_abs: int, k: int):
    # every Bareiss intermediate is a minor (up to sign); a product of two
    # minors must stay below 2**62 for int64 to be exact
    bound = (2 * max_abs * max(k, 1) ** 0.5 + 1) ** k
    return np.int64 if bound * bound * 4 < _INT64_SAFE else object


def batch_det(a: np.ndarray, b: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Determinants of a stack of k x k matrices over Z[w].

    ``a`` and ``b`` have shape (K, k, k) and hold the 1- and w-coefficients.
    Returns the two coefficient arrays of the K determinants.  Runs Bareiss
    elimination vectorised over the stack; all divisions are exact.
    """
    a = np.array(a, copy=True)
    b = np.array(b, copy=True)
    K, k, _ = a.shape
    if k == 0:
        return np.ones(K, dtype=a.dtype), np.zeros(K, dtype=a.dtype)
    dead = np.zeros(K, dtype=bool)
    sign = np.ones(K, dtype=np.int64)
    prev_a = np.ones(K, dtype=a.dtype)
    prev_b = np.zeros(K, dtype=a.dtype)
    idx = np.arange(K)
    for c in range(k - 1):
        nz = (a[:, c:, c] != 0) | (b[:, c:, c] != 0)
        has = nz.any(axis=1)
        newly_dead = ~has & ~dead
        if newly_dead.any():
            dead |= newly_dead
            a[newly_dead] = np.eye(k, dtype=a.dtype)
            b[newly_dead] = 0
            nz[newly_dead] = False
            nz[newly_dead, 0] = True
            # singular: finish the elimination on an identity with unit pivots
            prev_a[newly_dead] = 1
            prev_b[newly_dead] = 0
        p = c + nz.argmax(axis=1)
        swap = p != c
        if swap.any():
            s = idx[swap]
            ps = p[swap]
            for arr in (a, b):
                tmp = arr[s, c, :].copy()
                arr[s, c, :] = arr[s, ps, :]
                arr[s, ps, :] = tmp
            sign[swap] *= -1
        pa = a[:, c, c][:, None, None]
        pb = b[:, c, c][:, None, None]
        fa = a[:, c + 1 :, c][:, :, None]
        fb = b[:, c + 1 :, c][:, :, None]
        ra = a[:, c, c + 1 :][:, None, :]
        rb = b[:, c, c + 1 :][:, None, :]
        xa = a[:, c + 1 :, c + 1 :]
        xb = b[:, c + 1 :, c + 1 :]
        # x*pivot - f*r  with (p + qw)(s + tw) = (ps - qt) + (pt + qs + qt)w
        na = xa * pa - xb * pb - (fa * ra - fb * rb)
        nb = xa * pb + xb * pa + xb * pb - (fa * rb + fb * ra + fb * rb)
        # exact division by prev: multiply by conj(prev), divide by norm(prev)
        qa = prev_a[:, None, None]
        qb = prev_b[:, None, None]
        ca, cb = qa + qb, -qb
        nrm = qa * qa + qa * qb + qb * qb
        ta = na * ca - nb * cb
        tb = na * cb + nb * ca + nb * cb
        a[:, c + 1 :, c + 1 :] = ta // nrm
        b[:, c + 1 :, c + 1 :] = tb // nrm
        prev_a = a[:, c, c].copy()
        prev_b = b[:, c, c].copy()
    da = a[:, k - 1, k - 1] * sign
    db = b[:, k - 1, k - 1] * sign
    da[dead] = 0
    db[dead] = 0
    return da, db


def minors(
    A: MatrixE,
    k: int,
    row_sets: Iterable[tuple[int, ...]] | None = None,
    chunk: int = 20000,
):
    """Yield (row_set, col_sets, det_a, det_b) blocks for all k x k minors.

    ``col_sets`` is an integer array with one column set per row.

    Row sets and column sets are visited in lexicographic order; each
    yielded block covers one row set and a contiguous run of column sets.
    """
    a_full, b_full = A.to_arrays()
    max_abs = max([abs(int(x)) for x in a_full.flat] + [abs(int(x)) for x in b_full.flat] + [1])
    dtype = _choose_dtype(max_abs, k)
    a_full = a_full.astype(dtype)
    b_full = b_full.astype(dtype)
    if row_sets is None:
        row_sets = combinations(range(A.rows), k)
    chunks: list[np.ndarray] = []
    cols_iter = combinations(range(A.cols), k)
    exhausted = False
    for rs in row_sets:
        ra = a_full[list(rs)]
        rb = b_full[list(rs)]
        t = 0
        while True:
            if t == len(chunks):
                if exhausted:
                    break
                block = list(_take(cols_iter, chunk))
                if not block:
                    exhausted = True
                    break
                chunks.append(np.array(block, dtype=np.intp).reshape(len(block), k))
            cidx = chunks[t]
            t += 1
            sa = np.transpose(ra[:, cidx], (1, 0, 2))
            sb = np.transpose(rb[:, cidx], (1, 0, 2))
            da, db = batch_det(sa, sb)
            yield rs, cidx, da, db


def _take(it, n):
    for _, x in zip(range(n), it):
        yield x
