import numpy as np
import pytest
from hypothesis import strategies as st

from ternion import Ternion

# Structure constants read off the basis table: C[i, j] = coords of e_i * e_j
# with e = (1, u, v). Kept separate from ternion.core on purpose.
TABLE = np.zeros((3, 3, 3))
TABLE[0, 0] = [1, 0, 0]   # 1*1 = 1
TABLE[0, 1] = [0, 1, 0]   # 1*u = u
TABLE[0, 2] = [0, 0, 1]   # 1*v = v
TABLE[1, 0] = [0, 1, 0]   # u*1 = u
TABLE[1, 1] = [0, 0, 1]   # u*u = v
TABLE[1, 2] = [-1, 0, 0]  # u*v = -1
TABLE[2, 0] = [0, 0, 1]   # v*1 = v
TABLE[2, 1] = [-1, 0, 0]  # v*u = -1
TABLE[2, 2] = [0, -1, 0]  # v*v = -u


def table_mul(x, y):
    """Oracle product on coordinate arrays of shape (..., 3)."""
    return np.einsum("...i,...j,ijk->...k", x, y, TABLE)


def table_rep(x):
    """Left-multiplication matrix of x built from the table (columns = x*e_k)."""
    return np.einsum("i,ijk->kj", np.asarray(x, dtype=float), TABLE)


def random_coords(rng, n, lo=-10.0, hi=10.0):
    return rng.uniform(lo, hi, size=(n, 3))


def to_ternions(arr):
    return [Ternion(float(a), float(b), float(c)) for a, b, c in arr]


@pytest.fixture
def rng():
    return np.random.default_rng(20261018)


reals = st.floats(min_value=-1e3, max_value=1e3, allow_nan=False, allow_infinity=False)
unit_reals = st.floats(min_value=-1.0, max_value=1.0, allow_nan=False, allow_infinity=False)
ternions = st.builds(Ternion, reals, reals, reals)
unit_ternions = st.builds(Ternion, unit_reals, unit_reals, unit_reals)


def sup(x):
    return max(abs(c) for c in x)


def assert_close(x, y, tol, scale=1.0):
    diff = max(abs(a - b) for a, b in zip(x, y))
    assert diff <= tol * scale, f"{x} vs {y}: diff {diff} > {tol * scale}"


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for number in sorted(results):
            terminalreporter.write_line(results[number])
