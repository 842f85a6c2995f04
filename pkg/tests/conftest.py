import functools
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from eisenjac import constructions as C  # noqa: E402
from eisenjac.jacobian import jacobian_of  # noqa: E402
from eisenjac.matroid import enumerate_bases  # noqa: E402


@functools.lru_cache(maxsize=None)
def family(spec: str):
    return C.gen_family(spec, check=False).matrix


@functools.lru_cache(maxsize=None)
def bases_of(spec: str):
    return tuple(enumerate_bases(family(spec)))


@functools.lru_cache(maxsize=None)
def jac_of(spec: str):
    return jacobian_of(family(spec))


@pytest.fixture
def u24():
    return family("u24")


@pytest.fixture
def ag23():
    return family("ag23")


def random_ops(A, rng, count):
    """A random sequence of equivalence moves valid for matrix A."""
    from eisenjac.eisenstein import UNITS
    from eisenjac.hmatrix import EquivalenceOp, apply_op

    ops = []
    m, n = A.shape
    for _ in range(count):
        kind = rng.choice(["scale_row", "scale_col", "swap_rows", "swap_cols", "pivot"])
        if kind == "pivot":
            cells = [(i, j) for i in range(m) for j in range(n) if A.entries[i][j]]
            i, j = rng.choice(cells)
            op = EquivalenceOp("pivot", i, j)
        elif kind.startswith("swap"):
            size = m if kind == "swap_rows" else n
            op = EquivalenceOp(kind, rng.randrange(size), rng.randrange(size))
        else:
            op = EquivalenceOp(kind, rng.randrange(m), rng.randrange(n), rng.choice(UNITS))
        A = apply_op(A, op)
        ops.append(op)
    return ops, A


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS:
        terminalreporter.write_line(line)
