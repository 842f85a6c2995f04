"""Builders for representations: sums, the named families, graphic
matrices and the ``.hmat`` text format.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import Sequence

from .eisenstein import W, Eisenstein, parse_eisenstein
from .hmatrix import (
    FULL_MODE_GUARD,
    EquivalenceOp,
    HRepresentation,
    apply_op,
    planned_minors,
)
from .matrix import MatrixE, rank

__all__ = [
    "FAMILIES",
    "FamilySpec",
    "parse_family",
    "direct_sum",
    "two_sum",
    "normalize_basepoint",
    "gen_family",
    "u24",
    "ag23",
    "ag23_deletion",
    "t_r",
    "whirl",
    "whirl_alpha",
    "whirl_laplacian_display",
    "counterexample_parts",
    "counterexample",
    "graphic",
    "complete_graph",
    "cycle_graph",
    "read_matrix",
    "write_matrix",
    "parse_matrix",
    "format_matrix",
]

WB = W.conj()  # 1 - w


def _validated(M: MatrixE) -> HRepresentation:
    # the most thorough check the minor guard allows; none past it
    for mode in ("full", "maximal"):
        if planned_minors(M, mode) <= FULL_MODE_GUARD:
            return HRepresentation.checked(M, mode)
    return HRepresentation(M)


def direct_sum(M1, M2) -> HRepresentation:
    """Block-diagonal sum; column labels must be disjoint."""
    A, B = _m(M1), _m(M2)
    if set(A.col_labels) & set(B.col_labels):
        raise ValueError("direct sum needs disjoint column labels")
    z = Eisenstein(0, 0)
    rows = [list(r) + [z] * B.cols for r in A.entries]
    rows += [[z] * A.cols + list(r) for r in B.entries]
    out = MatrixE(rows, A.col_labels + B.col_labels, cols=A.cols + B.cols)
    level = _combined_level(M1, M2)
    return HRepresentation(out, level)


def _combined_level(*reps) -> str:
    levels = [r.validated_level if isinstance(r, HRepresentation) else "none" for r in reps]
    if all(lv == "full" for lv in levels):
        return "full"
    if all(lv in ("full", "maximal") for lv in levels):
        return "maximal"
    return "none"


def _m(M) -> MatrixE:
    return M.matrix if isinstance(M, HRepresentation) else M


def normalize_basepoint(M, p) -> MatrixE:
    """Row-equivalent form of M whose column p is the first unit vector, moved first.

    Redundant rows are dropped first.  Raises if p is a loop or a coloop.
    """
    A = _m(M).full_row_rank_restriction()
    j = A.label_index(p)
    col = A.column(j)
    if not any(col):
        raise ValueError(f"basepoint {p!r} is a loop")
    if rank(A.delete_column(p)) < A.rows:
        raise ValueError(f"basepoint {p!r} is a coloop")
    i = next(k for k, x in enumerate(col) if x)
    A = apply_op(A, EquivalenceOp("pivot", i, j))
    if i:
        A = apply_op(A, EquivalenceOp("swap_rows", 0, i))
    order = [p] + [lab for lab in A.col_labels if lab != p]
    return A.select_columns(order)


def two_sum(M1, p1, M2, p2, *, check: bool = True) -> HRepresentation:
    """2-sum of two representations along basepoints p1 and p2.

    After normalising each basepoint column to e_1, write
    M1 = [e_1 | x over A] and M2 = [e_1 | y over B] (x, y the first rows).
    The result stacks [A | 0], [x | y] and [0 | B] and has rank
    r1 + r2 - 1 on n1 + n2 - 2 elements.
    """
    A1 = normalize_basepoint(M1, p1)
    A2 = normalize_basepoint(M2, p2)
    l1, l2 = A1.col_labels[1:], A2.col_labels[1:]
    if set(l1) & set(l2):
        raise ValueError("2-sum needs disjoint labels outside the basepoints")
    n1, n2 = len(l1), len(l2)
    z = Eisenstein(0, 0)
    x = list(A1.row(0)[1:])
    y = list(A2.row(0)[1:])
    rows = [list(r[1:]) + [z] * n2 for r in A1.entries[1:]]
    rows.append(x + y)
    rows += [[z] * n1 + list(r[1:]) for r in A2.entries[1:]]
    out = MatrixE(rows, l1 + l2, cols=n1 + n2)
    if check:
        return _validated(out)
    return HRepresentation(out)


# --- named families --------------------------------------------------------

FAMILIES = (
    "u24",
    "ag23",
    "ag23_del",
    "t_r",
    "whirl",
    "counterexample_m",
    "counterexample_mprime",
    "graphic_complete",
)


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: tuple = field(default=())

    def __post_init__(self):
        if self.name not in FAMILIES:
            raise ValueError(f"unknown family {self.name!r}; choose from {', '.join(FAMILIES)}")
        need = {"ag23_del": 1, "t_r": 1, "whirl": 1, "graphic_complete": 1}.get(self.name, 0)
        if len(self.params) != need:
            raise ValueError(f"family {self.name} takes {need} parameter(s)")
        if self.name in ("t_r", "whirl", "graphic_complete") and self.params[0] < 2:
            raise ValueError(f"family {self.name} needs a parameter >= 2")
        if self.name == "ag23_del" and not 1 <= self.params[0] <= 9:
            raise ValueError("ag23_del deletes one of the elements 1..9")

    def __str__(self):
        return self.name + "".join(f":{p}" for p in self.params)


def parse_family(text: str) -> FamilySpec:
    """Parse "u24", "t_r:4", "whirl:3", "ag23_del:5", "graphic_complete:4"."""
    name, *rest = text.strip().split(":")
    try:
        params = tuple(int(p) for p in rest)
    except ValueError:
        raise ValueError(f"bad family parameters in {text!r}") from None
    return FamilySpec(name, params)


def u24() -> MatrixE:
    return MatrixE([[1, 0, 1, 1], [0, 1, 1, W]])


def ag23() -> MatrixE:
    return MatrixE(
        [
            [1, 0, 0, 1, 0, 1, 1, 1, 1],
            [0, 1, 0, 1, 1, 0, WB, 1, WB],
            [0, 0, 1, 0, 1, -W, -W, WB, WB],
        ]
    )


def ag23_deletion(e: int) -> MatrixE:
    return ag23().delete_column(e)


def t_r(r: int) -> MatrixE:
    """Rank-r representation of T_r.

    Columns: e_1; then three copies of [0 / I_(r-1)] with first-row entries
    0, 1 and w; then D_(r-1) with a zero first row, whose columns are
    e_i - e_j for i < j in lexicographic order.
    """
    if r < 2:
        raise ValueError("T_r needs r >= 2")
    k = r - 1
    cols = [[1] + [0] * k]
    for top in (0, 1, W):
        for i in range(k):
            cols.append([top] + [1 if t == i else 0 for t in range(k)])
    for i, j in combinations(range(k), 2):
        cols.append([0] + [1 if t == i else (-1 if t == j else 0) for t in range(k)])
    return MatrixE([list(row) for row in zip(*cols)])


def whirl_alpha(r: int) -> Eisenstein:
    return W if r % 2 == 0 else W * W


def whirl(r: int) -> MatrixE:
    """[I_r | A] where A has 1 on the diagonal and subdiagonal and alpha at (1, r)."""
    if r < 2:
        raise ValueError("whirl needs r >= 2")
    alpha = whirl_alpha(r)
    rows = []
    for i in range(r):
        ident = [1 if t == i else 0 for t in range(r)]
        a = [Eisenstein(0)] * r
        a[i] = Eisenstein(1)
        if i > 0:
            a[i - 1] = Eisenstein(1)
        else:
            a[r - 1] = a[r - 1] + alpha
        rows.append(ident + a)
    return MatrixE(rows)


def whirl_laplacian_display(r: int) -> MatrixE:
    """3 on the diagonal, 1 beside it, alpha / conj(alpha) added in the corners."""
    alpha = whirl_alpha(r)
    L = [[Eisenstein(0)] * r for _ in range(r)]
    for i in range(r):
        L[i][i] = Eisenstein(3)
        if i + 1 < r:
            L[i][i + 1] = L[i + 1][i] = Eisenstein(1)
    L[0][r - 1] = L[0][r - 1] + alpha
    L[r - 1][0] = L[r - 1][0] + alpha.conj()
    return MatrixE(L)


def counterexample_parts() -> tuple[MatrixE, MatrixE]:
    """The 4 x 8 and 4 x 15 pieces glued along their first columns."""
    w2 = W * W
    head = [
        [1, 0, 0, 0, -w2, w2],
        [0, 1, 0, 0, w2, -w2],
        [0, 0, 1, 0, 1, -1],
        [0, 0, 0, 1, -w2, W],
    ]
    tail = [1, 0, 1, 0]
    m1 = [h + [t] * 2 for h, t in zip(head, tail)]
    m8 = [h + [t] * 9 for h, t in zip(head, tail)]
    M1 = MatrixE(m1, [f"a{k}" for k in range(1, 9)])
    M8 = MatrixE(m8, [f"b{k}" for k in range(1, 16)])
    return M1, M8


def counterexample(conjugate_second: bool = False, check: bool = True) -> HRepresentation:
    """M1 2-summed with M8 (or its conjugate) along their first columns; 7 x 21."""
    M1, M8 = counterexample_parts()
    if conjugate_second:
        M8 = M8.conj()
    rep = two_sum(M1, "a1", M8, "b1", check=check)
    return HRepresentation(rep.matrix.with_labels(range(1, rep.matrix.cols + 1)),
                           rep.validated_level)


def graphic(num_vertices: int, edges: Sequence[tuple[int, int]]) -> MatrixE:
    """Reduced incidence matrix: column (u, v) is e_u - e_v, last vertex row removed.

    Vertices are 1..num_vertices.
    """
    rows = []
    for vtx in range(1, num_vertices):
        rows.append([1 if u == vtx else (-1 if v == vtx else 0) for u, v in edges])
    return MatrixE(rows, cols=len(edges))


def complete_graph(m: int) -> MatrixE:
    return graphic(m, list(combinations(range(1, m + 1), 2)))


def cycle_graph(m: int) -> MatrixE:
    return graphic(m, [(k, k + 1) for k in range(1, m)] + [(1, m)])


def gen_family(spec: FamilySpec | str, check: bool = True) -> HRepresentation:
    """Build a named family member, H-validated as thoroughly as the minor guard allows."""
    if isinstance(spec, str):
        spec = parse_family(spec)
    name, params = spec.name, spec.params
    if name in ("counterexample_m", "counterexample_mprime"):
        return counterexample(name.endswith("mprime"), check=check)
    builders = {
        "u24": u24,
        "ag23": ag23,
        "ag23_del": ag23_deletion,
        "t_r": t_r,
        "whirl": whirl,
        "graphic_complete": complete_graph,
    }
    M = builders[name](*params)
    return _validated(M) if check else HRepresentation(M)


# --- .hmat text format -----------------------------------------------------


class MatrixFormatError(ValueError):
    def __init__(self, msg: str, line: int, column: int | None = None):
        where = f"line {line}" + (f", column {column}" if column is not None else "")
        super().__init__(f"{where}: {msg}")
        self.line = line
        self.column = column


def _label(tok: str):
    return int(tok) if re.fullmatch(r"-?\d+", tok) else tok


def parse_matrix(text: str) -> MatrixE:
    """Parse the ``.hmat`` format.

    First non-comment line: "rows cols".  Then one line per row of
    whitespace-separated entry tokens.  A "# labels: ..." line gives the
    column labels (default 1..cols); other '#' lines are comments.
    """
    labels = None
    shape = None
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            m = re.match(r"#\s*labels\s*:(.*)$", line)
            if m:
                labels = [_label(t) for t in m.group(1).split()]
                labels_line = lineno
            continue
        toks = line.split()
        if shape is None:
            if len(toks) != 2 or not all(t.isdigit() for t in toks):
                raise MatrixFormatError("expected header 'rows cols'", lineno)
            shape = (int(toks[0]), int(toks[1]))
            continue
        if len(toks) != shape[1]:
            raise MatrixFormatError(f"expected {shape[1]} entries, found {len(toks)}", lineno)
        row = []
        for c, tok in enumerate(toks, 1):
            try:
                row.append(parse_eisenstein(tok))
            except ValueError:
                raise MatrixFormatError(f"bad entry {tok!r}", lineno, c) from None
        rows.append(row)
    if shape is None:
        raise MatrixFormatError("missing header 'rows cols'", 1)
    if len(rows) != shape[0]:
        raise MatrixFormatError(f"expected {shape[0]} rows, found {len(rows)}", lineno)
    if labels is not None and len(labels) != shape[1]:
        raise MatrixFormatError(f"expected {shape[1]} labels, found {len(labels)}", labels_line)
    return MatrixE(rows, labels, cols=shape[1])


def format_matrix(M) -> str:
    A = _m(M)
    lines = [f"{A.rows} {A.cols}"]
    if tuple(A.col_labels) != tuple(range(1, A.cols + 1)):
        lines.append("# labels: " + " ".join(str(lab) for lab in A.col_labels))
    for r in A.entries:
        lines.append(" ".join(str(x) for x in r))
    return "\n".join(lines) + "\n"


def read_matrix(path) -> MatrixE:
    return parse_matrix(Path(path).read_text())


def write_matrix(M, path) -> None:
    Path(path).write_text(format_matrix(M))
