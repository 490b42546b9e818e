import sys
import numpy as np
import pytest
from hypothesis import settings

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


def numeric_cyclotomic(n):
    """Coefficients of prod (X - w) over primitive n-th roots, rounded."""
    import math

    roots = [np.exp(2j * np.pi * k / n) for k in range(1, n + 1) if math.gcd(k, n) == 1]
    return tuple(int(round(v)) for v in np.real(np.poly(roots))[::-1])


@pytest.fixture
def cyclo_oracle():
    return numeric_cyclotomic


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS:
        terminalreporter.write_line(line)
