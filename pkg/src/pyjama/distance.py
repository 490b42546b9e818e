"""Exact l-infinity distances from a center to the set E of real vectors with
integral pairings against a lattice, the rank-one formula, the closed form of
delta_n for roots of unity, and the explicit extremal vector xi.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Literal, Sequence

from .exact import (
    IntPoly,
    cyclotomic_poly,
    is_power_of_two,
    is_prime,
    poly_mod_cyclic,
    prime_factors,
)
from .lattice import GeneratorSet, LatticeBasis, lambda_basis, lambda_generators

HALF = Fraction(1, 2)

Method = Literal["closed_form", "rank_one", "oracle"]


class ConstructionError(ArithmeticError):
    """The extremal-vector construction produced something it must not."""


@dataclass(frozen=True)
class DeltaResult:
    n: int
    delta: Fraction
    method: Method
    smallest_odd_prime: int | None = None

    def __post_init__(self):
        if not 0 <= self.delta <= HALF:
            raise ValueError("delta must lie in [0, 1/2]")

    @property
    def eps_bound(self) -> Fraction:
        return HALF - self.delta


@dataclass(frozen=True)
class XiVector:
    n: int
    p: int
    eps: tuple[int, ...]
    xi: tuple[Fraction, ...]

    @property
    def distance(self) -> Fraction:
        return linf_distance(self.xi, half_ones(self.n))


def half_ones(n: int) -> tuple[Fraction, ...]:
    return (HALF,) * n


def linf_distance(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    return max(abs(Fraction(x) - Fraction(y)) for x, y in zip(a, b, strict=True))


def _rows_of(lattice) -> Iterable[Sequence[int]]:
    if isinstance(lattice, (LatticeBasis, GeneratorSet)):
        return lattice.rows
    return lattice


def in_E(xi: Sequence[Fraction], lattice: LatticeBasis | GeneratorSet | Iterable[Sequence[int]]) -> bool:
    """Whether ``xi`` pairs integrally with every row of ``lattice``.

    Any spanning set of the lattice gives the same answer, so a basis or a
    generating set may be passed.
    """
    xi = [Fraction(a) for a in xi]
    for l in _rows_of(lattice):
        if len(l) != len(xi):
            raise ValueError("dimension mismatch between xi and lattice")
        if sum((a * b for a, b in zip(l, xi) if a), Fraction(0)).denominator != 1:
            return False
    return True


def hyperplane_linf_distance(l: Sequence[int], M: int, c: Sequence[Fraction]) -> Fraction:
    """inf over {x : l.x = M} of ||x - c||_inf, which is |M - l.c| / ||l||_1."""
    norm = sum(abs(a) for a in l)
    if norm == 0:
        raise ValueError("l must be nonzero")
    if len(l) != len(c):
        raise ValueError("dimension mismatch")
    lc = sum((a * Fraction(b) for a, b in zip(l, c)), Fraction(0))
    return abs(M - lc) / norm


def delta_rank_one(l: Sequence[int], c: Sequence[Fraction] | None = None) -> Fraction:
    """delta for the lattice spanned by one primitive vector ``l``.

    With the default center 1/2 * 1_n this is 0 for even ||l||_1 and
    1/(2 ||l||_1) otherwise.
    """
    if not any(l):
        raise ValueError("l must be nonzero")
    if math.gcd(*l) != 1:
        raise ValueError(f"l must be primitive (gcd 1), got gcd {math.gcd(*l)}")
    if c is None:
        c = half_ones(len(l))
    lc = sum((a * Fraction(b) for a, b in zip(l, c)), Fraction(0))
    lo = math.floor(lc)
    return min(hyperplane_linf_distance(l, M, c) for M in (lo, lo + 1))


def smallest_odd_prime_divisor(n: int) -> int | None:
    if n < 2:
        raise ValueError("n must be >= 2")
    odd = [p for p in prime_factors(n) if p != 2]
    return odd[0] if odd else None


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"n must be an integer >= 2, got {n!r}")


def delta_closed_form(n: int) -> DeltaResult:
    _check_n(n)
    p = smallest_odd_prime_divisor(n)
    if p is None:
        return DeltaResult(n, Fraction(0), "closed_form", None)
    return DeltaResult(n, Fraction(1, 2 * p), "closed_form", p)


def epsilon_bound(n: int) -> Fraction:
    """Supremum of the admissible epsilon: 1/2 - delta_n."""
    return delta_closed_form(n).eps_bound


# -- the extremal vector -----------------------------------------------------


def psi_poly(q: int, p: int, *, printed: bool = False) -> IntPoly:
    """Signed polynomial attached to the prime ``q | n``; ``p`` is the smallest
    odd prime of n.

    For q > p the first (q+p)/2 coefficients are +1 and the remaining
    (q-p)/2 are -1, so psi(1) = p.  ``printed=True`` gives the variant whose
    +1 block runs one index further (psi(1) = p + 2); it is kept only to show
    that it breaks integrality.
    """
    if not (is_prime(q) and is_prime(p) and p != 2):
        raise ValueError("q must be prime and p an odd prime")
    if q == 2:
        return IntPoly([-1, 1])
    if q == p:
        return cyclotomic_poly(p)
    if q < p:
        raise ValueError("odd q must not be smaller than p")
    split = (q + p) // 2 + (1 if printed else 0)
    return IntPoly([1] * split + [-1] * (q - split))


def radical(n: int) -> int:
    return math.prod(prime_factors(n))


def t_poly(n: int, *, printed: bool = False) -> IntPoly:
    """(1 + X + ... + X^(n/m - 1)) * prod_{q | n} psi_q(X^(n/q)), m = rad(n)."""
    _check_n(n)
    p = smallest_odd_prime_divisor(n)
    if p is None:
        raise ValueError(f"{n} is a power of 2; the construction needs an odd prime divisor")
    t = IntPoly([1] * (n // radical(n)))
    for q in prime_factors(n):
        t = t * psi_poly(q, p, printed=printed).compose_power(n // q)
    return t


def sign_vector(n: int, *, printed: bool = False) -> tuple[int, ...]:
    """Coefficients of t_poly(n) mod X^n - 1; each must be +1 or -1."""
    rho = poly_mod_cyclic(t_poly(n, printed=printed), n)
    eps = tuple(rho.coeffs) + (0,) * (n - len(rho.coeffs))
    bad = [j for j, e in enumerate(eps) if e not in (-1, 1)]
    if bad:
        raise ConstructionError(
            f"n={n}: coefficients at {bad[:8]} are not +-1; exponents collide mod n")
    return eps


def xi_candidate(n: int, *, printed: bool = False) -> tuple[Fraction, ...]:
    """(p - eps_j) / (2p) without any membership check."""
    p = smallest_odd_prime_divisor(n)
    if p is None:
        raise ValueError(f"{n} is a power of 2; use half_ones_in_E instead")
    return tuple(Fraction(p - e, 2 * p) for e in sign_vector(n, printed=printed))


def xi_vector(n: int) -> XiVector:
    """The extremal vector for n not a power of 2, with its defining
    properties verified exactly."""
    p = smallest_odd_prime_divisor(n) if n >= 2 else None
    if p is None:
        _check_n(n)
        raise ValueError(f"{n} is a power of 2; use half_ones_in_E instead")
    eps = sign_vector(n)
    xi = tuple(Fraction(p - e, 2 * p) for e in eps)
    if not in_E(xi, lambda_generators(n)):
        raise ConstructionError(f"n={n}: xi has a non-integral pairing with a generator")
    if linf_distance(xi, half_ones(n)) != Fraction(1, 2 * p):
        raise ConstructionError(f"n={n}: distance from the center is not 1/(2p)")
    return XiVector(n, p, eps, xi)


def half_ones_in_E(n: int) -> bool:
    if not is_power_of_two(n) or n < 2:
        raise ValueError(f"n must be a power of 2 and >= 2, got {n}")
    return in_E(half_ones(n), lambda_basis(n))
