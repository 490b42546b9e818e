import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from pyjama.exact import (
    IntMat,
    IntPoly,
    X,
    cyclotomic_poly,
    divisors,
    hnf,
    hnf_contains,
    is_power_of_two,
    is_prime,
    pivot_columns,
    poly_divrem,
    poly_mod_cyclic,
    prime_factors,
    rat_kernel_basis,
    totient,
)

coeff_lists = st.lists(st.integers(-20, 20), max_size=8)
polys = coeff_lists.map(IntPoly)
monic = st.lists(st.integers(-9, 9), max_size=5).map(lambda c: IntPoly(c + [1]))
int_rows = st.integers(1, 5).flatmap(
    lambda k: st.lists(st.lists(st.integers(-6, 6), min_size=k, max_size=k), min_size=1, max_size=5))


def test_number_theory_helpers_match_brute_force():
    for n in range(1, 300):
        assert is_prime(n) == (n > 1 and all(n % d for d in range(2, n)))
        assert prime_factors(n) == [d for d in range(2, n + 1) if n % d == 0 and is_prime(d)]
        assert divisors(n) == [d for d in range(1, n + 1) if n % d == 0]
        assert totient(n) == sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)
        assert is_power_of_two(n) == (bin(n).count("1") == 1)


def test_intpoly_normalizes_and_is_immutable():
    p = IntPoly([1, 2, 0, 0])
    assert p.coeffs == (1, 2)
    assert p.degree == 1
    assert IntPoly().degree == -1 and IntPoly().is_zero()
    assert p == IntPoly.from_terms({0: 1, 1: 2})
    assert (X * X - 1)(3) == 8
    with pytest.raises(AttributeError):
        p.coeffs = (0,)


@given(coeff_lists, coeff_lists)
def test_intpoly_ring_ops_match_numpy(a, b):
    pa, pb = IntPoly(a), IntPoly(b)
    na, nb = np.polynomial.Polynomial(a or [0]), np.polynomial.Polynomial(b or [0])
    for got, want in [(pa + pb, na + nb), (pa - pb, na - nb), (pa * pb, na * nb)]:
        w = [int(round(v)) for v in want.coef]
        while w and w[-1] == 0:
            w.pop()
        assert got.coeffs == tuple(w)


@given(polys, st.integers(1, 4))
def test_compose_power(a, k):
    assert a.compose_power(k)(2) == a(2 ** k)


@given(polys, monic)
def test_divrem_identity(a, b):
    q, r = poly_divrem(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


def test_divrem_rejects_bad_divisors():
    with pytest.raises(ValueError):
        poly_divrem(X, IntPoly([1, 2]))
    with pytest.raises(ZeroDivisionError):
        poly_divrem(X, IntPoly())


@given(polys, st.integers(1, 9))
def test_mod_cyclic_matches_divrem(a, n):
    assert poly_mod_cyclic(a, n) == poly_divrem(a, IntPoly.monomial(n) - 1)[1]


def test_cyclotomic_against_numeric_roots(cyclo_oracle):
    for n in range(1, 61):
        assert cyclotomic_poly(n).coeffs == cyclo_oracle(n), n


def test_cyclotomic_frozen_values():
    # [DERIVED] numeric root products
    assert cyclotomic_poly(12).coeffs == (1, 0, -1, 0, 1)
    assert cyclotomic_poly(15).coeffs == (1, -1, 0, 1, -1, 1, 0, -1, 1)
    # smallest index with a coefficient outside {-1, 0, 1}
    assert cyclotomic_poly(105).coeffs[7] == -2
    assert cyclotomic_poly(105).coeffs[41] == -2


@pytest.mark.parametrize("n", range(1, 41))
def test_cyclotomic_product_is_x_n_minus_1(n):
    prod = IntPoly([1])
    for d in divisors(n):
        prod = prod * cyclotomic_poly(d)
    assert prod == IntPoly.monomial(n) - 1
    assert cyclotomic_poly(n).degree == totient(n)


def _is_hnf(h: IntMat):
    piv = pivot_columns(h)
    assert piv == sorted(set(piv))
    for i, (row, c) in enumerate(zip(h.rows, piv)):
        assert all(v == 0 for v in row[:c]) and row[c] > 0
        for above in h.rows[:i]:
            assert 0 <= above[c] < row[c]


@given(int_rows)
def test_hnf_shape_and_idempotence(rows):
    h = hnf(rows)
    _is_hnf(h)
    assert hnf(h) == h
    for r in rows:
        assert hnf_contains(h, r)
    # rank agrees with floating-point rank on these tiny matrices
    assert h.nrows == np.linalg.matrix_rank(np.array(rows, dtype=float))


@given(int_rows, st.data())
def test_hnf_invariant_under_unimodular_ops(rows, data):
    rows = [list(r) for r in rows]
    if len(rows) >= 2:
        i, j = data.draw(st.permutations(range(len(rows))))[:2]
        k = data.draw(st.integers(-4, 4))
        rows2 = [r[:] for r in rows]
        rows2[i] = [a + k * b for a, b in zip(rows2[i], rows2[j])]
        rows2[i], rows2[j] = rows2[j], [-a for a in rows2[i]]
    else:
        rows2 = [[-a for a in rows[0]]]
    assert hnf(rows2, len(rows[0])) == hnf(rows, len(rows[0]))


def test_hnf_contains_rejects_outside_points():
    h = hnf([[2, 0], [0, 3]])
    assert hnf_contains(h, [4, -3])
    assert not hnf_contains(h, [1, 0])
    assert not hnf_contains(h, [0, 1])


@given(st.integers(1, 3).flatmap(lambda r: st.lists(
    st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=4), min_size=5, max_size=5),
    min_size=r, max_size=r)))
def test_rat_kernel_basis(m):
    k = rat_kernel_basis(m, 5)
    for row in k.rows:
        assert all(sum(Fraction(a) * b for a, b in zip(mr, row)) == 0 for mr in m)
    rank = np.linalg.matrix_rank(np.array([[float(a) for a in r] for r in m]))
    assert k.nrows == 5 - rank
    _is_hnf(k)
