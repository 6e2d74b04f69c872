import numpy as np
import pytest
from hypothesis import strategies as st

from quatexpand import Quaternion

reals = st.floats(min_value=-10.0, max_value=10.0, allow_nan=False, allow_infinity=False)
quaternions = st.builds(Quaternion, reals, reals, reals, reals)
matrices4 = st.lists(reals, min_size=16, max_size=16).map(lambda v: np.array(v).reshape(4, 4))


@pytest.fixture
def rng():
    return np.random.default_rng(20261015)


def assert_quat_close(p, q, atol=1e-12):
    assert max(abs(a - b) for a, b in zip(p, q)) <= atol, f"{p} != {q}"


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
