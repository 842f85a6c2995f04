"""The Jacobian of an H-representation M.

Jac(M) is E^n / (Lambda + Lambda*), with Lambda* the Z[w]-points of the row
space of M and Lambda those of its Hermitian orthogonal complement.  It is
computed as the cokernel of the Laplacian M M^H.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .eisenstein import Eisenstein, EisensteinRational, sixth_power_is_integer
from .hmatrix import FULL_MODE_GUARD, HRepresentation, ValidationError, planned_minors, validate
from .matrix import MatrixE, MatrixQw, _independent_rows, inverse, rank
from .snf import EISENSTEIN, INTEGERS, SnfResult, snf

__all__ = [
    "JacobianE",
    "AbelianGroup",
    "DoublingReport",
    "laplacian",
    "jacobian_of",
    "order_of",
    "abelianize",
    "abelian_group",
    "in_lambda_star",
    "in_lambda",
    "residue",
    "jacobian_class",
    "regular_doubling",
    "compare",
    "sixth_powers_integral",
]


def _matrix(M) -> MatrixE:
    return M.matrix if isinstance(M, HRepresentation) else M


def laplacian(M) -> MatrixE:
    """M M^H for a full-row-rank representation."""
    A = _matrix(M)
    if rank(A) != A.rows:
        raise ValueError("laplacian needs full row rank; apply full_row_rank_restriction first")
    return A @ A.H


@dataclass(frozen=True)
class JacobianE:
    """Jac(M) as a Z[w]-module: the direct sum of E/(d) over ``divisors``.

    ``divisors`` lists the non-unit canonical elementary divisors of the
    Laplacian.  ``all_divisors`` keeps the units too, and ``snf`` keeps
    the transforms needed to classify vectors.
    """

    divisors: tuple
    all_divisors: tuple
    rank_checked: int
    order: int
    representation: MatrixE = field(repr=False)
    snf: SnfResult = field(repr=False)

    def __str__(self):
        if not self.divisors:
            return "0"
        return " + ".join(f"E/({d})" for d in self.divisors)

    def same_module(self, other: JacobianE) -> bool:
        return self.divisors == other.divisors


def jacobian_of(M) -> JacobianE:
    """Jacobian from the Smith normal form of M M^H.

    Redundant rows are dropped first; this does not change the Jacobian.
    """
    A = _matrix(M).full_row_rank_restriction()
    L = A @ A.H
    res = snf(L, EISENSTEIN)
    alld = res.nonzero
    if len(alld) != A.rows:
        raise AssertionError("Laplacian of a full-row-rank matrix must be nonsingular")
    order = 1
    for d in alld:
        order *= d.norm()
    return JacobianE(
        divisors=tuple(d for d in alld if d.norm() != 1),
        all_divisors=tuple(alld),
        rank_checked=A.rows,
        order=order,
        representation=A,
        snf=res,
    )


def order_of(j: JacobianE) -> int:
    """Number of elements: the product of the norms of the divisors."""
    n = 1
    for d in j.all_divisors:
        n *= d.norm()
    return n


@dataclass(frozen=True)
class AbelianGroup:
    """A finite abelian group Z/d1 + Z/d2 + ... with d1 | d2 | ..., each d > 1."""

    invariant_factors: tuple

    def __post_init__(self):
        f = self.invariant_factors
        if any(d <= 1 for d in f) or any(f[i + 1] % f[i] for i in range(len(f) - 1)):
            raise ValueError(f"not an invariant-factor chain: {f}")

    @property
    def order(self) -> int:
        n = 1
        for d in self.invariant_factors:
            n *= d
        return n

    @property
    def exponent(self) -> int:
        return self.invariant_factors[-1] if self.invariant_factors else 1

    def __add__(self, other: AbelianGroup) -> AbelianGroup:
        return abelian_group(self.invariant_factors + other.invariant_factors)

    def __str__(self):
        if not self.invariant_factors:
            return "0"
        return " + ".join(f"Z/{d}" for d in self.invariant_factors)


def abelian_group(cyclic_orders: Sequence[int]) -> AbelianGroup:
    """Invariant-factor form of a direct sum of cyclic groups Z/c."""
    cs = [abs(int(c)) for c in cyclic_orders if abs(int(c)) != 1]
    if any(c == 0 for c in cs):
        raise ValueError("free summands are not supported")
    if not cs:
        return AbelianGroup(())
    diag = [[cs[i] if i == j else 0 for j in range(len(cs))] for i in range(len(cs))]
    res = snf(diag, INTEGERS)
    return AbelianGroup(tuple(d for d in res.divisors if d != 1))


def _multiplication_matrix(alpha: Eisenstein) -> list[list[int]]:
    # x -> alpha*x on the Z-basis {1, w}: alpha*1 = a + bw, alpha*w = -b + (a+b)w
    a, b = alpha.a, alpha.b
    return [[a, -b], [b, a + b]]


def abelianize(j: JacobianE) -> AbelianGroup:
    """Jac(M) as an abelian group.

    Each E/(alpha) is the cokernel of multiplication by alpha on Z^2; the
    integer elementary divisors of all summands are merged into one chain.
    """
    orders = []
    for alpha in j.divisors:
        orders.extend(snf(_multiplication_matrix(alpha), INTEGERS).divisors)
    return abelian_group(orders)


def _greedy_basis_positions(A: MatrixE) -> list[int]:
    return _independent_rows(A.transpose())


def in_lambda_star(M, v: Sequence) -> tuple[bool, tuple | None]:
    """Is v in the Z[w]-row space of M?  Returns (answer, witness z with z M = v)."""
    A = _matrix(M).full_row_rank_restriction()
    v = [Eisenstein.coerce(x) for x in v]
    if len(v) != A.cols:
        raise ValueError(f"vector of length {len(v)} for {A.cols} columns")
    pos = _greedy_basis_positions(A)
    sub = A.select_positions(cols=pos)
    vb = MatrixQw([[v[p] for p in pos]], cols=len(pos))
    z = (vb @ inverse(sub)).row(0)
    if not all(x.is_integral() for x in z):
        return False, None
    z = tuple(x.to_eisenstein() for x in z)
    back = (MatrixE([z], cols=len(z)) @ A).row(0)
    if list(back) != v:
        return False, None
    return True, z


def in_lambda(M, v: Sequence) -> bool:
    """Is v an Eisenstein vector orthogonal to the row space (v M^H = 0)?"""
    A = _matrix(M)
    vv = []
    for x in v:
        if isinstance(x, EisensteinRational):
            if not x.is_integral():
                return False
            x = x.to_eisenstein()
        vv.append(Eisenstein.coerce(x))
    if len(vv) != A.cols:
        raise ValueError(f"vector of length {len(vv)} for {A.cols} columns")
    prod = MatrixE([vv], cols=len(vv)) @ A.H
    return not any(prod.row(0))


def residue(x: Eisenstein, alpha: Eisenstein) -> tuple[int, int]:
    """Canonical representative of x modulo alpha, as (1-coeff, w-coeff).

    Uses the Hermite basis {(n, 0), (c, d)} of the Z-lattice alpha*Z[w];
    the representative satisfies 0 <= w-coeff < d and 0 <= 1-coeff < n.
    """
    if not alpha:
        return (x.a, x.b)
    a, b = alpha.a, alpha.b
    # alpha and alpha*w in coordinates
    v1, v2 = (a, b), (-b, a + b)
    d, s, t = _xgcd(v1[1], v2[1])
    c = s * v1[0] + t * v2[0]
    n = alpha.norm() // d
    x1, x2 = x.a, x.b
    k = x2 // d
    x1 -= k * c
    x2 -= k * d
    return (x1 % n, x2)


def _xgcd(p: int, q: int) -> tuple[int, int, int]:
    """(g, s, t) with s*p + t*q = g = gcd(p, q) > 0."""
    old_r, r = p, q
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        quo = old_r // r
        old_r, r = r, old_r - quo * r
        old_s, s = s, old_s - quo * s
        old_t, t = t, old_t - quo * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def jacobian_class(M, v: Sequence, jac: JacobianE | None = None) -> tuple:
    """Coordinates of the class of v in Jac(M) = E^r / row(M M^H).

    v is sent to v M^H, moved into Smith coordinates with T, and its i-th
    coordinate reduced modulo the i-th divisor.  Two vectors get equal
    tuples exactly when they differ by an element of Lambda + Lambda*.
    """
    if jac is None:
        jac = jacobian_of(M)
    A = jac.representation
    v = [Eisenstein.coerce(x) for x in v]
    w = (MatrixE([v], cols=len(v)) @ A.H).row(0)
    T = jac.snf.T
    y = [sum((w[k] * T[k][i] for k in range(len(w))), Eisenstein(0, 0)) for i in range(len(T))]
    return tuple(residue(yi, d) for yi, d in zip(y, jac.all_divisors))


@dataclass(frozen=True)
class DoublingReport:
    jac_z: AbelianGroup
    jac_e: AbelianGroup
    doubled: AbelianGroup

    @property
    def holds(self) -> bool:
        return self.jac_e == self.doubled


def regular_doubling(M) -> DoublingReport:
    """Compare Jac(M) as an abelian group with Jac_Z(M) + Jac_Z(M).

    M must be a {0, 1, -1} matrix of full row rank; it is H-validated
    (fully when the minor count allows), which for an integer matrix is a
    total-unimodularity check.
    """
    A = _matrix(M)
    for r in A.entries:
        for x in r:
            if x.b or abs(x.a) > 1:
                raise ValueError(f"entry {x} is not in {{0, 1, -1}}")
    mode = "full" if planned_minors(A) <= FULL_MODE_GUARD else "maximal"
    report = validate(A, mode)
    if not report.ok:
        raise ValidationError(report)
    A = A.full_row_rank_restriction()
    ints = [[x.a for x in r] for r in A.entries]
    lap = [[sum(p * q for p, q in zip(r, s)) for s in ints] for r in ints]
    jac_z = abelian_group(snf(lap, INTEGERS).divisors)
    jac_e = abelianize(jacobian_of(A))
    return DoublingReport(jac_z, jac_e, jac_z + jac_z)


def compare(j1: JacobianE, j2: JacobianE) -> tuple[bool, bool]:
    """(isomorphic as Z[w]-modules, isomorphic as abelian groups)."""
    return j1.same_module(j2), abelianize(j1) == abelianize(j2)


def sixth_powers_integral(j: JacobianE) -> bool:
    """Every divisor's sixth power is a nonzero rational integer."""
    return all(d and sixth_power_is_integer(d) for d in j.all_divisors)
