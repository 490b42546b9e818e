import numpy as np
import pytest
from fractions import Fraction
from hypothesis import given
from hypothesis import strategies as st

from pyjama.exact import prime_factors, totient
from pyjama.lattice import (
    LatticeBasis,
    general_lambda,
    ideal_basis_oracle,
    is_vanishing,
    lambda_basis,
    lambda_generators,
)


def numeric_sum(l, n):
    return abs(sum(a * np.exp(2j * np.pi * k / n) for k, a in enumerate(l)))


def test_generators_of_6():
    g = lambda_generators(6)
    assert g.labels == ((2, 0), (2, 1), (2, 2), (3, 0), (3, 1))
    assert g.generators[0] == (1, 0, 0, 1, 0, 0)
    assert g.generators[4] == (0, 1, 0, 1, 0, 1)


def test_basis_of_6_frozen():
    # [DERIVED] HNF of the ideal generated by Phi_6 in Z[X]/(X^6 - 1)
    assert lambda_basis(6).basis.tolist() == [
        [1, 0, 0, 0, 1, -1], [0, 1, 0, 0, 1, 0], [0, 0, 1, 0, 0, 1], [0, 0, 0, 1, -1, 1]]


@pytest.mark.parametrize("n", range(2, 31))
def test_generators_vanish_and_count(n):
    g = lambda_generators(n)
    assert len(g) == sum(n // p for p in prime_factors(n))
    for v in g.generators:
        assert is_vanishing(v, n)
        assert numeric_sum(v, n) < 1e-9


@pytest.mark.parametrize("n", range(2, 61))
def test_rank(n):
    assert lambda_basis(n).rank == n - totient(n)


@pytest.mark.parametrize("n", range(2, 21))
def test_generators_span_the_ideal(n):
    assert lambda_basis(n).basis == ideal_basis_oracle(n).basis
    for row in lambda_basis(n).rows:
        assert numeric_sum(row, n) < 1e-9


@given(st.sampled_from([6, 10, 12, 15]), st.data())
def test_contains_integer_combinations(n, data):
    g = lambda_generators(n).generators
    coefs = data.draw(st.lists(st.integers(-3, 3), min_size=len(g), max_size=len(g)))
    v = [sum(c * row[k] for c, row in zip(coefs, g)) for k in range(n)]
    assert lambda_basis(n).contains(v)
    assert is_vanishing(v, n)
    bumped = v[:]
    bumped[0] += 1
    assert not lambda_basis(n).contains(bumped)


def test_rejects_small_n_and_bad_length():
    with pytest.raises(ValueError):
        lambda_generators(1)
    with pytest.raises(ValueError):
        is_vanishing([1, 1], 3)


def test_general_lambda_for_cube_roots():
    # 1, w, w^2 with w = exp(2 pi i / 3); exact data needs sqrt(3), so use
    # the real and imaginary parts scaled to rationals: (1, 0), (-1/2, 1), (-1/2, -1)
    alpha = [(Fraction(1), Fraction(0)), (Fraction(-1, 2), Fraction(1)), (Fraction(-1, 2), Fraction(-1))]
    b = general_lambda(alpha)
    assert b.basis.tolist() == [[1, 1, 1]]
    assert isinstance(b, LatticeBasis)


def test_general_lambda_rational_points():
    b = general_lambda([(1, 0), (2, 0), (0, 1)])
    assert b.basis.tolist() == [[2, -1, 0]]
    with pytest.raises(ValueError):
        general_lambda([(1, 0)], n=2)
