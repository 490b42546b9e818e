import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from pyjama import _backend, _kernels_py
from pyjama.witness import _axis, rotation_table

pytestmark = pytest.mark.skipif("cython" not in _backend.available(),
                                reason="compiled extension not built")

coords = st.floats(-1e10, 1e10, allow_nan=False)
ns = st.sampled_from([2, 3, 4, 5, 6, 8, 9, 12, 15, 30])


def cy():
    return _backend.load("cython")


def test_backend_selection():
    assert _backend.load("python") is _kernels_py
    assert cy().NAME == "cython"
    assert _backend.available()[0] == "cython"


@given(coords, coords, ns)
def test_margin_bit_identical(x, y, n):
    t = rotation_table(n)
    assert cy().margin(x, y, t) == _kernels_py.margin(x, y, t)


@given(st.lists(st.tuples(coords, coords), min_size=1, max_size=50), ns)
def test_margin_batch_bit_identical(pts, n):
    xs, ys = np.array(pts).T
    t = rotation_table(n)
    a = cy().margin_batch(xs, ys, t)
    assert np.array_equal(a, _kernels_py.margin_batch(xs, ys, t))
    assert [cy().margin(x, y, t) for x, y in pts] == list(a)


@given(st.floats(-100, 100), st.floats(-100, 100), ns)
def test_pattern_search_bit_identical(x, y, n):
    t = rotation_table(n)
    args = (x, y, t, 0.25, 0.5, 60, 1e-12)
    assert cy().pattern_search(*args) == _kernels_py.pattern_search(*args)


@pytest.mark.parametrize("n", [3, 4, 5, 12, 15])
@pytest.mark.parametrize("j0", [0, 10 ** 9])
def test_axis_scan_bit_identical(n, j0):
    atab, c0, _ = _axis(n)
    for tau in (1 / 3, 0.5):
        a = cy().axis_scan(atab, c0, tau, j0, j0 + 300_000, 8)
        b = _kernels_py.axis_scan(atab, c0, tau, j0, j0 + 300_000, 8)
        assert np.array_equal(a[0], b[0]) and np.array_equal(a[1], b[1])


@pytest.mark.parametrize("n", [3, 6, 10])
def test_axis_scan_is_top_k_of_brute_force(n):
    atab, c0, _ = _axis(n)
    j = np.arange(2000, dtype=np.float64)
    x = (1 / 3 + j) / c0
    m = np.full(x.shape, 0.5)
    for k in range(n):
        m = np.minimum(m, _kernels_py._axis_dist(x, atab[k, 0], atab[k, 1]))
    order = np.lexsort((j, -m))[:6]
    ms, xs = cy().axis_scan(atab, c0, 1 / 3, 0, 2000, 6)
    assert np.array_equal(ms, m[order]) and np.array_equal(xs, x[order])


def test_axis_scan_short_range():
    atab, c0, _ = _axis(5)
    for k in (cy(), _kernels_py):
        ms, xs = k.axis_scan(atab, c0, 0.4, 0, 3, 8)
        assert len(ms) == len(xs) == 3
        ms, xs = k.axis_scan(atab, c0, 0.4, 5, 5, 8)
        assert len(ms) == 0
