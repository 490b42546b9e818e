"""Exact arithmetic substrate: integer polynomials, cyclotomic polynomials,
Hermite normal form and integer kernels.

Rationals are :class:`fractions.Fraction`, which is always reduced with a
positive denominator.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Rat = Fraction


# -- small number theory helpers ---------------------------------------------


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of ``n`` in increasing order."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def divisors(n: int) -> list[int]:
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def totient(n: int) -> int:
    result = n
    for p in prime_factors(n):
        result -= result // p
    return result


def is_power_of_two(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


# -- polynomials -------------------------------------------------------------


class IntPoly:
    """Dense polynomial with integer coefficients, ``coeffs[i]`` multiplies X^i.

    Trailing zeros are stripped, so the zero polynomial has no coefficients
    and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @classmethod
    def monomial(cls, k: int, coeff: int = 1) -> IntPoly:
        return cls([0] * k + [coeff])

    @classmethod
    def from_terms(cls, terms: dict[int, int]) -> IntPoly:
        if not terms:
            return cls()
        c = [0] * (max(terms) + 1)
        for k, a in terms.items():
            c[k] += a
        return cls(c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.leading == 1

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly([other])
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPoly([other])
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPoly([x + y for x, y in zip(a, b)] + list(a[len(b):]))

    __radd__ = __add__

    def __neg__(self):
        return IntPoly([-a for a in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPoly([other])
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly([other * a for a in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly(out)

    __rmul__ = __mul__

    def __call__(self, x):
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def compose_power(self, k: int) -> IntPoly:
        """Return ``self(X**k)``."""
        if k < 1:
            raise ValueError("k must be positive")
        out = [0] * (k * self.degree + 1) if self.coeffs else []
        for i, a in enumerate(self.coeffs):
            out[k * i] = a
        return IntPoly(out)

    def terms(self) -> dict[int, int]:
        return {i: a for i, a in enumerate(self.coeffs) if a}

    def __repr__(self):
        if not self.coeffs:
            return "IntPoly(0)"
        parts = []
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            mono = "" if i == 0 else ("X" if i == 1 else f"X^{i}")
            if mono and abs(a) == 1:
                s = ("-" if a < 0 else "+") + mono
            else:
                s = f"{a:+d}" + ("*" + mono if mono else "")
            parts.append(s)
        text = " ".join(parts)
        return f"IntPoly({text.lstrip('+')})"


X = IntPoly([0, 1])


def poly_divrem(a: IntPoly, b: IntPoly) -> tuple[IntPoly, IntPoly]:
    """Divide ``a`` by the monic polynomial ``b`` over the integers."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if not b.is_monic():
        raise ValueError("divisor must be monic for exact integer division")
    r = list(a.coeffs)
    db = b.degree
    if len(r) - 1 < db:
        return IntPoly(), IntPoly(r)
    q = [0] * (len(r) - db)
    bc = b.coeffs
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i]
        if c:
            q[i - db] = c
            off = i - db
            for j in range(db + 1):
                r[off + j] -= c * bc[j]
    return IntPoly(q), IntPoly(r[:db])


def poly_mod_cyclic(a: IntPoly, n: int) -> IntPoly:
    """Remainder of ``a`` modulo X^n - 1: exponents folded mod n."""
    if n < 1:
        raise ValueError("n must be positive")
    out = [0] * n
    for i, c in enumerate(a.coeffs):
        out[i % n] += c
    return IntPoly(out)


@functools.lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> IntPoly:
    """The n-th cyclotomic polynomial, by exact division of X^n - 1 by the
    cyclotomic polynomials of the proper divisors of n."""
    if n < 1:
        raise ValueError("n must be positive")
    num = IntPoly.monomial(n) - 1
    for d in divisors(n)[:-1]:
        num, rem = poly_divrem(num, cyclotomic_poly(d))
        assert rem.is_zero()
    return num


# -- integer matrices --------------------------------------------------------


@dataclass(frozen=True)
class IntMat:
    """Integer matrix stored as a tuple of rows; ``ncols`` survives zero rows."""

    rows: tuple[tuple[int, ...], ...]
    ncols: int

    def __post_init__(self):
        for r in self.rows:
            if len(r) != self.ncols:
                raise ValueError("inconsistent row length")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], ncols: int | None = None) -> IntMat:
        rows = tuple(tuple(int(a) for a in r) for r in rows)
        if ncols is None:
            if not rows:
                raise ValueError("ncols required for an empty matrix")
            ncols = len(rows[0])
        return cls(rows, ncols)

    @classmethod
    def identity(cls, k: int) -> IntMat:
        return cls(tuple(tuple(int(i == j) for j in range(k)) for i in range(k)), k)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    def __len__(self):
        return len(self.rows)

    def __getitem__(self, i):
        return self.rows[i]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


def _sub_multiple(r, q, piv):
    return [a - q * b for a, b in zip(r, piv)]


def hnf(m: IntMat | Sequence[Sequence[int]], ncols: int | None = None) -> IntMat:
    """Row-style Hermite normal form of the row lattice of ``m``.

    The result is upper triangular (echelon), pivots are positive, entries
    above a pivot lie in ``[0, pivot)``, and zero rows are dropped.
    """
    if not isinstance(m, IntMat):
        m = IntMat.from_rows(m, ncols)
    ncols = m.ncols
    work = [list(r) for r in m.rows if any(r)]
    out: list[list[int]] = []
    pivots: list[int] = []
    for col in range(ncols):
        if not work:
            break
        nz = [r for r in work if r[col]]
        if not nz:
            continue
        rest = [r for r in work if not r[col]]
        while len(nz) > 1:
            nz.sort(key=lambda r: abs(r[col]))
            piv = nz[0]
            pv = piv[col]
            keep = [piv]
            for r in nz[1:]:
                r = _sub_multiple(r, r[col] // pv, piv)
                if r[col]:
                    keep.append(r)
                elif any(r):
                    rest.append(r)
            nz = keep
        piv = nz[0]
        if piv[col] < 0:
            piv = [-a for a in piv]
        out.append(piv)
        pivots.append(col)
        work = rest
    for i, c in enumerate(pivots):
        piv = out[i]
        pv = piv[c]
        for h in range(i):
            q = out[h][c] // pv
            if q:
                out[h] = _sub_multiple(out[h], q, piv)
    return IntMat(tuple(tuple(r) for r in out), ncols)


def pivot_columns(h: IntMat) -> list[int]:
    return [next(j for j, a in enumerate(r) if a) for r in h.rows]


def hnf_contains(h: IntMat, v: Sequence[int]) -> bool:
    """Membership of ``v`` in the row lattice of the HNF matrix ``h``."""
    v = list(v)
    if len(v) != h.ncols:
        raise ValueError("dimension mismatch")
    for r, c in zip(h.rows, pivot_columns(h)):
        q, rem = divmod(v[c], r[c])
        if rem:
            return False
        if q:
            v = _sub_multiple(v, q, r)
    return not any(v)


def rat_kernel_basis(m: Sequence[Sequence[Fraction | int]], ncols: int | None = None) -> IntMat:
    """HNF basis of the integer vectors annihilated by the rational matrix ``m``."""
    rows = [[Fraction(a) for a in r] for r in m]
    if ncols is None:
        if not rows:
            raise ValueError("ncols required for an empty matrix")
        ncols = len(rows[0])
    ints = []
    for r in rows:
        if len(r) != ncols:
            raise ValueError("inconsistent row length")
        den = math.lcm(*(a.denominator for a in r)) if r else 1
        ints.append([int(a * den) for a in r])
    nr = len(ints)
    # rows of [M^T | I]; unimodular reduction leaves the kernel in the zero-M rows
    aug = [[ints[i][j] for i in range(nr)] + [int(k == j) for k in range(ncols)] for j in range(ncols)]
    h = hnf(IntMat.from_rows(aug, nr + ncols))
    kernel = [r[nr:] for r in h.rows if not any(r[:nr])]
    return hnf(IntMat.from_rows(kernel, ncols))
