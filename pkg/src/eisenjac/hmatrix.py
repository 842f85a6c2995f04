"""H-matrix validation and the equivalence operations on representations.

H is {0} together with the six sixth roots of unity.  A matrix is an
H-matrix when every square subdeterminant lies in H.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable

import numpy as np

from .eisenstein import UNITS, Eisenstein, is_unit, parse_eisenstein, unit_power
from .matrix import MatrixE, minors

__all__ = [
    "FULL_MODE_GUARD",
    "ValidationError",
    "MinorGuardExceeded",
    "Violation",
    "ValidationReport",
    "HRepresentation",
    "EquivalenceOp",
    "validate",
    "reduce_for_validation",
    "planned_minors",
    "count_minors",
    "apply_op",
    "apply_ops",
    "conjugate_rep",
    "parse_ops",
    "format_op",
]

FULL_MODE_GUARD = 5_000_000


class ValidationError(ValueError):
    """A matrix failed H-validation; ``report`` carries the offending minor."""

    def __init__(self, report: ValidationReport):
        super().__init__(report.describe())
        self.report = report


class MinorGuardExceeded(ValueError):
    pass


@dataclass(frozen=True)
class Violation:
    rows: tuple[int, ...]
    cols: tuple  # column labels
    value: Eisenstein

    @property
    def size(self) -> int:
        return len(self.rows)


@dataclass(frozen=True)
class ValidationReport:
    mode: str
    ok: bool
    minors_checked: int
    violation: Violation | None = None

    def describe(self) -> str:
        if self.ok:
            return f"H-matrix ({self.mode} validation, {self.minors_checked} minors checked)"
        v = self.violation
        return (
            f"not an H-matrix: {v.size}x{v.size} minor on rows "
            f"{[i + 1 for i in v.rows]} and columns {list(v.cols)} equals {v.value}"
        )

    def __bool__(self):
        return self.ok


def count_minors(rows: int, cols: int, mode: str = "full") -> int:
    if mode == "maximal":
        return comb(cols, rows)
    return sum(comb(rows, k) * comb(cols, k) for k in range(1, min(rows, cols) + 1))


def _redundant(vectors: list[tuple]) -> list[int]:
    """Positions that are zero, a unit times a standard basis vector, or a
    unit times an earlier kept vector."""
    drop, kept = [], {}
    for pos, v in enumerate(vectors):
        nz = [x for x in v if x]
        if not nz or (len(nz) == 1 and is_unit(nz[0])):
            drop.append(pos)
            continue
        # normalise so the first nonzero entry is 1; parallel-by-unit vectors collide
        lead = nz[0]
        key = tuple(x * lead.conj() for x in v) if is_unit(lead) else None
        if key is not None and key in kept:
            drop.append(pos)
        elif key is not None:
            kept[key] = pos
    return drop


def reduce_for_validation(M: MatrixE) -> tuple[list[int], list[int]]:
    """Row and column positions of a submatrix with the same minors up to H.

    A minor that uses a dropped column (or row) is 0 or a unit times a minor
    of the remaining matrix, so M is an H-matrix iff its dropped lines have
    entries in H and the kept submatrix is an H-matrix.
    """
    rows = list(range(M.rows))
    cols = list(range(M.cols))
    while True:
        sub = [[M.entries[i][j] for j in cols] for i in rows]
        dc = set(_redundant([tuple(r[c] for r in sub) for c in range(len(cols))]))
        dr = set(_redundant([tuple(r) for r in sub]))
        if not dc and not dr:
            return rows, cols
        # drop one kind at a time: a line is judged against the current submatrix
        if dc:
            cols = [c for k, c in enumerate(cols) if k not in dc]
        else:
            rows = [r for k, r in enumerate(rows) if k not in dr]


def planned_minors(M: MatrixE, mode: str = "full") -> int:
    """Number of determinants ``validate`` will evaluate when M passes."""
    if mode == "maximal":
        return count_minors(M.rows, M.cols, mode)
    rows, cols = reduce_for_validation(M)
    return count_minors(len(rows), len(cols))


def _scan(M: MatrixE, mode: str, rows: list[int], cols: list[int]):
    sub = M.select_positions(rows, cols)
    sizes = range(1, min(sub.rows, sub.cols) + 1) if mode == "full" else [sub.rows]
    checked = 0
    for k in sizes:
        if k > sub.cols:
            break
        for rs, block, da, db in minors(sub, k):
            nrm = da * da + da * db + db * db
            bad = nrm > 1
            checked += len(block)
            if bad.any():
                t = int(np.argmax(bad))
                v = Violation(
                    rows=tuple(rows[i] for i in rs),
                    cols=tuple(sub.col_labels[j] for j in block[t]),
                    value=Eisenstein(int(da[t]), int(db[t])),
                )
                return checked, v
    return checked, None


def validate(M: MatrixE, mode: str = "full", guard: int = FULL_MODE_GUARD) -> ValidationReport:
    """Check M against the H-matrix conditions.

    ``full`` checks every k x k minor for every k.  ``maximal`` only checks
    that each rows x rows minor is 0 or of norm 1.  The first violation in
    (k, row set, column set) lexicographic order is reported.

    Full mode first drops lines that cannot create new minors (see
    ``reduce_for_validation``) and only rescans the whole matrix to locate
    the first violation when the reduced check fails.
    """
    if mode not in ("full", "maximal"):
        raise ValueError(f"unknown validation mode {mode!r}")
    total = planned_minors(M, mode)
    if total > guard:
        hint = "use maximal mode" if mode == "full" else "raise the guard or skip validation"
        raise MinorGuardExceeded(f"{mode} validation needs {total} minors (guard {guard}); {hint}")
    if mode == "maximal":
        checked, v = _scan(M, mode, list(range(M.rows)), list(range(M.cols)))
        return ValidationReport(mode, v is None, checked, v)
    if any(x.norm() > 1 for r in M.entries for x in r):
        checked, v = 0, True
    else:
        checked, v = _scan(M, mode, *reduce_for_validation(M))
    if v is not None:
        more, v = _scan(M, mode, list(range(M.rows)), list(range(M.cols)))
        checked += more
    return ValidationReport(mode, v is None, checked, v)


@dataclass(frozen=True)
class HRepresentation:
    """A matrix over Z[w] with entries in H, plus how thoroughly it was checked."""

    matrix: MatrixE
    validated_level: str = "none"  # none | maximal | full

    def __post_init__(self):
        if self.validated_level not in ("none", "maximal", "full"):
            raise ValueError(f"bad validated_level {self.validated_level!r}")
        for r in self.matrix.entries:
            for x in r:
                if x.norm() > 1:
                    raise ValueError(f"entry {x} is not in H")

    @classmethod
    def checked(cls, M: MatrixE, mode: str = "full", guard: int = FULL_MODE_GUARD):
        """Validate M and wrap it; raises ValidationError on failure."""
        report = validate(M, mode, guard)
        if not report.ok:
            raise ValidationError(report)
        return cls(M, mode)

    @property
    def shape(self):
        return self.matrix.shape

    @property
    def labels(self):
        return self.matrix.col_labels


_KINDS = ("scale_row", "scale_col", "swap_rows", "swap_cols", "pivot")


@dataclass(frozen=True)
class EquivalenceOp:
    """One elementary equivalence move.

    ``i``/``j`` are 0-based row/column positions: scale_row uses i,
    scale_col uses j, swap_rows swaps rows i and j, swap_cols swaps
    columns i and j, pivot acts on entry (i, j).  ``unit`` is the scale
    factor for the scaling moves.
    """

    kind: str
    i: int = 0
    j: int = 0
    unit: Eisenstein = UNITS[0]

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown operation {self.kind!r}")
        if self.kind.startswith("scale") and not is_unit(self.unit):
            raise ValueError(f"scale factor {self.unit} is not a sixth root of unity")

    def conj(self) -> EquivalenceOp:
        return EquivalenceOp(self.kind, self.i, self.j, self.unit.conj())


def apply_op(M: HRepresentation | MatrixE, op: EquivalenceOp):
    """Apply one equivalence move; returns the same type it was given.

    The pivot on (i, j) scales row i by the inverse of its (i, j) entry and
    then clears column j from every other row.
    """
    rep = M if isinstance(M, HRepresentation) else None
    A = M.matrix if rep else M
    rows = [list(r) for r in A.entries]
    labels = list(A.col_labels)
    m, n = A.shape
    k = op.kind
    if k == "scale_row":
        _check(op.i, m, "row")
        rows[op.i] = [op.unit * x for x in rows[op.i]]
    elif k == "scale_col":
        _check(op.j, n, "column")
        for r in rows:
            r[op.j] = op.unit * r[op.j]
    elif k == "swap_rows":
        _check(op.i, m, "row")
        _check(op.j, m, "row")
        rows[op.i], rows[op.j] = rows[op.j], rows[op.i]
    elif k == "swap_cols":
        _check(op.i, n, "column")
        _check(op.j, n, "column")
        for r in rows + [labels]:
            r[op.i], r[op.j] = r[op.j], r[op.i]
    else:
        _check(op.i, m, "row")
        _check(op.j, n, "column")
        p = rows[op.i][op.j]
        if not p:
            raise ValueError(f"cannot pivot on zero entry ({op.i}, {op.j})")
        if not is_unit(p):
            raise ValueError(f"pivot entry {p} is not a unit")
        inv = p.conj()
        pr = rows[op.i] = [inv * x for x in rows[op.i]]
        for r_i, r in enumerate(rows):
            if r_i != op.i and r[op.j]:
                f = r[op.j]
                rows[r_i] = [x - f * y for x, y in zip(r, pr)]
    out = MatrixE(rows, labels, cols=n)
    return HRepresentation(out, rep.validated_level) if rep else out


def _check(idx, size, what):
    if not 0 <= idx < size:
        raise IndexError(f"{what} index {idx} out of range 0..{size - 1}")


def apply_ops(M, ops: Iterable[EquivalenceOp]):
    for op in ops:
        M = apply_op(M, op)
    return M


def conjugate_rep(M: HRepresentation | MatrixE):
    if isinstance(M, HRepresentation):
        return HRepresentation(M.matrix.conj(), M.validated_level)
    return M.conj()


def parse_ops(text: str) -> list[EquivalenceOp]:
    """Parse an op script: one move per line, 1-based indices.

    Lines look like "scale_row 2 w^3", "scale_col 4 -1", "swap_rows 1 2",
    "swap_cols 1 5" or "pivot 3 7".  Blank lines and '#' comments are ignored.
    """
    ops = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kind = parts[0]
        try:
            if kind in ("scale_row", "scale_col"):
                idx, unit = int(parts[1]) - 1, parse_eisenstein(parts[2])
                if len(parts) != 3:
                    raise ValueError("expected 2 arguments")
                ops.append(
                    EquivalenceOp(kind, i=idx, unit=unit) if kind == "scale_row"
                    else EquivalenceOp(kind, j=idx, unit=unit)
                )
            elif kind in ("swap_rows", "swap_cols", "pivot"):
                if len(parts) != 3:
                    raise ValueError("expected 2 arguments")
                ops.append(EquivalenceOp(kind, i=int(parts[1]) - 1, j=int(parts[2]) - 1))
            else:
                raise ValueError(f"unknown operation {kind!r}")
        except (IndexError, ValueError) as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    return ops


def format_op(op: EquivalenceOp) -> str:
    if op.kind == "scale_row":
        return f"scale_row {op.i + 1} w^{unit_power(op.unit)}"
    if op.kind == "scale_col":
        return f"scale_col {op.j + 1} w^{unit_power(op.unit)}"
    return f"{op.kind} {op.i + 1} {op.j + 1}"
