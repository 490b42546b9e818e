"""Lattices of integer relations: the vanishing-sums lattice of the n-th roots
of unity and its analogue for exact rational complex vectors.

Coordinates are 0-based: position k carries the root exp(2*pi*i*k/n) for
0 <= k < n, and the generator ``1_p (x) e(i, n/p)`` uses 0 <= i < n/p.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import (
    IntMat,
    IntPoly,
    cyclotomic_poly,
    hnf,
    hnf_contains,
    poly_divrem,
    poly_mod_cyclic,
    prime_factors,
    rat_kernel_basis,
)


@dataclass(frozen=True)
class LatticeBasis:
    n: int
    basis: IntMat

    def __post_init__(self):
        if self.basis.ncols != self.n:
            raise ValueError("basis width must equal n")

    @property
    def rank(self) -> int:
        return self.basis.nrows

    @property
    def rows(self):
        return self.basis.rows

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], n: int | None = None) -> LatticeBasis:
        """Canonical (HNF) basis of the lattice spanned by ``rows``."""
        h = hnf(IntMat.from_rows(rows, n))
        return cls(h.ncols, h)

    def contains(self, v: Sequence[int]) -> bool:
        return hnf_contains(self.basis, v)


@dataclass(frozen=True)
class GeneratorSet:
    n: int
    generators: tuple[tuple[int, ...], ...]
    labels: tuple[tuple[int, int], ...]  # (p, i) for each generator

    @property
    def rows(self):
        return self.generators

    def __len__(self):
        return len(self.generators)


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"n must be an integer >= 2, got {n!r}")


def lambda_generators(n: int) -> GeneratorSet:
    """All vectors 1_p (x) e(i, n/p): ones at positions i, i + n/p, ..."""
    _check_n(n)
    gens, labels = [], []
    for p in prime_factors(n):
        k = n // p
        for i in range(k):
            g = [0] * n
            for t in range(p):
                g[i + t * k] = 1
            gens.append(tuple(g))
            labels.append((p, i))
    return GeneratorSet(n, tuple(gens), tuple(labels))


def is_vanishing(l: Sequence[int], n: int) -> bool:
    """Whether sum_k l_k * w^k = 0 for a primitive n-th root of unity w."""
    if len(l) != n:
        raise ValueError(f"expected a vector of length {n}, got {len(l)}")
    _, rem = poly_divrem(IntPoly(l), cyclotomic_poly(n))
    return rem.is_zero()


@functools.lru_cache(maxsize=None)
def lambda_basis(n: int) -> LatticeBasis:
    return LatticeBasis.from_rows(lambda_generators(n).generators, n)


def ideal_basis_oracle(n: int) -> LatticeBasis:
    """Coefficient lattice of the ideal (Phi_n) in Z[X]/(X^n - 1).

    Independent of :func:`lambda_generators`; agreement of the two is the
    structure theorem for vanishing sums of roots of unity.
    """
    _check_n(n)
    phi = cyclotomic_poly(n)
    rows = []
    for i in range(n):
        shifted = poly_mod_cyclic(phi * IntPoly.monomial(i), n)
        c = list(shifted.coeffs)
        rows.append(c + [0] * (n - len(c)))
    return LatticeBasis.from_rows(rows, n)


def general_lambda(alpha: Sequence[tuple[Fraction, Fraction]], n: int | None = None) -> LatticeBasis:
    """Integer relations l with l . alpha = 0 for exact complex data
    ``alpha = [(re, im), ...]``."""
    if n is None:
        n = len(alpha)
    elif len(alpha) != n:
        raise ValueError("alpha must have length n")
    re = [Fraction(a[0]) for a in alpha]
    im = [Fraction(a[1]) for a in alpha]
    return LatticeBasis(n, rat_kernel_basis([re, im], n))
