"""Exact Jacobians of sixth-root-of-unity matroids.

Arithmetic is over the Eisenstein integers Z[w], w = exp(i*pi/3), with no
floating point anywhere on the computational path.
"""

from .eisenstein import W, UNITS, Eisenstein, EisensteinRational, parse_eisenstein
from .matrix import MatrixE, MatrixQw, det, identity, inverse, rank
from .snf import EISENSTEIN, INTEGERS, SnfResult, cokernel_decomposition, minor_gcd_divisors, snf
from .hmatrix import (
    EquivalenceOp,
    HRepresentation,
    ValidationError,
    apply_op,
    apply_ops,
    parse_ops,
    validate,
)
from .matroid import (
    enumerate_bases,
    fundamental_cocircuit,
    n_b_matrix,
    standard_rep,
    verify_three_connected,
)
from .jacobian import (
    AbelianGroup,
    JacobianE,
    abelianize,
    compare,
    in_lambda,
    in_lambda_star,
    jacobian_class,
    jacobian_of,
    regular_doubling,
)
from .projection import averaging_matrix, projector
from .constructions import (
    counterexample,
    gen_family,
    read_matrix,
    t_r,
    two_sum,
    u24,
    ag23,
    whirl,
    write_matrix,
)

__all__ = [
    "W",
    "UNITS",
    "Eisenstein",
    "EisensteinRational",
    "parse_eisenstein",
    "MatrixE",
    "MatrixQw",
    "det",
    "identity",
    "inverse",
    "rank",
    "EISENSTEIN",
    "INTEGERS",
    "SnfResult",
    "cokernel_decomposition",
    "minor_gcd_divisors",
    "snf",
    "EquivalenceOp",
    "HRepresentation",
    "ValidationError",
    "apply_op",
    "apply_ops",
    "parse_ops",
    "validate",
    "enumerate_bases",
    "fundamental_cocircuit",
    "n_b_matrix",
    "standard_rep",
    "verify_three_connected",
    "AbelianGroup",
    "JacobianE",
    "abelianize",
    "compare",
    "in_lambda",
    "in_lambda_star",
    "jacobian_class",
    "jacobian_of",
    "regular_doubling",
    "averaging_matrix",
    "projector",
    "counterexample",
    "gen_family",
    "read_matrix",
    "t_r",
    "two_sum",
    "u24",
    "ag23",
    "whirl",
    "write_matrix",
]

__version__ = "0.1.0"
