"""Numeric witnesses X = x + iy whose rotations X w^k all have real parts far
from the integers.

The margin of X is min_k dist(Re X w^k, Z).  It never exceeds 1/2 - delta_n
and comes arbitrarily close to it, but for n with many independent rotations
the near-optimal X are far from the origin.  The search therefore combines
three kinds of starts before a compass pattern search:

* a scan along a symmetry axis of the regular n-gon, where the rotations
  pair up and the problem loses half its dimensions;
* a warm start solved from the extremal vector xi;
* uniform random starts in a disk.

Margins are evaluated in double-double arithmetic so that they stay correct
to ~1e-20 even for |X| ~ 1e9.
"""

from __future__ import annotations

import functools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import mpmath
import numpy as np

from ._backend import kernels
from .distance import epsilon_bound, smallest_odd_prime_divisor, xi_vector
from .exact import is_power_of_two

DEFAULT_SEED = 20240611
FLOAT_TOL = 1e-9
SCAN_CHUNK = 1 << 22


class TheoremViolation(AssertionError):
    """A float margin exceeded the proven bound 1/2 - delta_n."""


def _dd(value) -> tuple[float, float]:
    hi = float(value)
    return hi, float(value - hi)


@functools.lru_cache(maxsize=None)
def _angle_table(angles: tuple) -> np.ndarray:
    with mpmath.workdps(40):
        rows = [_dd(mpmath.cos(a)) + _dd(mpmath.sin(a)) for a in angles]
    tab = np.array(rows, dtype=np.float64)
    tab.setflags(write=False)
    return tab


def rotation_table(n: int) -> np.ndarray:
    """(n, 4) double-double table of cos, sin of 2 pi k / n."""
    if n < 1:
        raise ValueError("n must be positive")
    with mpmath.workdps(40):
        return _angle_table(tuple(2 * mpmath.pi * k / n for k in range(n)))


def angle_table(angles: Sequence[float]) -> np.ndarray:
    return _angle_table(tuple(mpmath.mpf(a) for a in angles))


@functools.lru_cache(maxsize=None)
def _axis(n: int):
    # rotations of X = x * exp(i pi a / n) have real parts x * cos(pi (a + 2k) / n);
    # a = 1 avoids a zero coefficient when 4 | n
    a = 1 if n % 4 == 0 else 0
    with mpmath.workdps(40):
        coef = [mpmath.cos(mpmath.pi * (a + 2 * k) / n) for k in range(n)]
        atab = np.array([_dd(c) for c in coef], dtype=np.float64)
        direction = (float(mpmath.cos(mpmath.pi * a / n)), float(mpmath.sin(mpmath.pi * a / n)))
    atab.setflags(write=False)
    pin = int(np.argmax(np.abs(atab[:, 0])))
    return atab, float(atab[pin, 0]), direction


def margin(x: float, y: float, n: int) -> float:
    """min over k of the distance from Re((x + iy) w^k) to the nearest integer."""
    if n < 2:
        raise ValueError("n must be >= 2")
    return kernels.margin(float(x), float(y), rotation_table(n))


@dataclass(frozen=True)
class Witness:
    x: float
    y: float
    n: int
    evaluations: int = 0
    margin: float = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "margin", margin(self.x, self.y, self.n))


@dataclass(frozen=True)
class SearchConfig:
    seed: int = DEFAULT_SEED
    starts: int = 32
    max_iterations: int = 400
    initial_step: float = 0.25
    shrink: float = 0.5
    radius: float | None = None  # None means 2n
    scan_length: int = 100_000_000  # axis points per pinned value
    keep: int = 8  # axis candidates polished per pinned value
    min_step: float = 1e-12
    threads: int = 1

    def __post_init__(self):
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        if self.starts < 0 or self.max_iterations < 1 or self.keep < 1 or self.threads < 1:
            raise ValueError("counts must be positive")
        if self.scan_length < 0:
            raise ValueError("scan_length must be nonnegative")
        if not (self.initial_step > 0 and 0 < self.shrink < 1 and self.min_step > 0):
            raise ValueError("need initial_step > 0, 0 < shrink < 1, min_step > 0")
        if self.radius is not None and not self.radius > 0:
            raise ValueError("radius must be positive")


def _pin_values(n: int) -> list[float]:
    # coordinates of the extremal points sit at these residues
    p = smallest_odd_prime_divisor(n)
    if p is None:
        return [0.5]
    return [(p - 1) / (2 * p), (p + 1) / (2 * p)]


def _map(fn, items, threads):
    if threads == 1:
        return [fn(it) for it in items]
    with ThreadPoolExecutor(max_workers=threads) as ex:
        return list(ex.map(fn, items))


def axis_candidates(n: int, length: int, keep: int = 8, threads: int = 1,
                    target: float | None = None) -> tuple[list[tuple[float, float, float]], int]:
    """Scan x = (tau + j) / c0 along the symmetry axis for j < ``length``.

    The largest-coefficient rotation is pinned to each value tau in turn.
    Returns up to ``keep`` candidates (margin, X.real, X.imag) per tau, best
    first, and the number of points scanned.  With ``target`` the scan stops
    after the first chunk (in scan order) that beats it.
    """
    atab, c0, (ux, uy) = _axis(n)
    taus = _pin_values(n)
    tasks = [(t, a, min(length, a + SCAN_CHUNK))
             for a in range(0, length, SCAN_CHUNK) for t in range(len(taus))]

    def run(task):
        t, a, b = task
        return kernels.axis_scan(atab, c0, taus[t], a, b, keep)

    results = []
    batch = max(1, threads)
    for i in range(0, len(tasks), batch):
        part = _map(run, tasks[i:i + batch], threads)
        for task, res in zip(tasks[i:i + batch], part):
            results.append((task, res))
            if target is not None and res[0].size and res[0][0] > target:
                break
        else:
            continue
        break

    scanned = sum(b - a for (_, a, b), _ in results)
    out = []
    for t in range(len(taus)):
        pool = [(-m, a, pos, x) for (tt, a, _), (ms, xs) in results if tt == t
                for pos, (m, x) in enumerate(zip(ms, xs))]
        pool.sort()
        out.extend((-negm, x * ux, x * uy) for negm, _, _, x in pool[:keep])
    out.sort(key=lambda c: -c[0])
    return out, scanned


def seed_from_xi(n: int, shift: int | None = None, seed: int = DEFAULT_SEED,
                 fallback: int = 64) -> tuple[float, float]:
    """Warm start: solve for X matching two coordinates of xi up to integer
    shifts, keeping the best margin.  Random points near the origin compete,
    and are all there is when n is a power of 2."""
    if n < 2:
        raise ValueError("n must be >= 2")
    tab = rotation_table(n)
    xs: list[np.ndarray] = []
    ys: list[np.ndarray] = []
    if not is_power_of_two(n):
        xi = [float(v) for v in xi_vector(n).xi]
        S = n if shift is None else shift
        s, t = np.meshgrid(np.arange(-S, S + 1.0), np.arange(-S, S + 1.0))
        s, t = s.ravel(), t.ravel()
        for b in range(1, n):
            cb, sb = math.cos(2 * math.pi * b / n), math.sin(2 * math.pi * b / n)
            if abs(sb) < 1e-9:
                continue
            # rotation 0 reads Re X = x, rotation b reads x cos + y sin
            x = xi[0] + s
            xs.append(x)
            ys.append((xi[b] + t - x * cb) / sb)
    rng = np.random.default_rng([seed, 0])
    r = 2 * n * np.sqrt(rng.random(fallback))
    th = 2 * np.pi * rng.random(fallback)
    xs.append(r * np.cos(th))
    ys.append(r * np.sin(th))
    X = np.concatenate(xs)
    Y = np.concatenate(ys)
    m = kernels.margin_batch(X, Y, tab)
    i = int(np.argmax(m))
    return float(X[i]), float(Y[i])


def _random_start(seed: int, index: int, radius: float) -> tuple[float, float]:
    rng = np.random.default_rng([seed, index])
    u, v = rng.random(2)
    r = radius * math.sqrt(u)
    return r * math.cos(2 * math.pi * v), r * math.sin(2 * math.pi * v)


def _polish(tab, starts, cfg: SearchConfig):
    def run(st):
        return kernels.pattern_search(st[0], st[1], tab, cfg.initial_step, cfg.shrink,
                                      cfg.max_iterations, cfg.min_step)
    results = _map(run, starts, cfg.threads)
    best = None
    evals = 0
    for i, (x, y, f, e) in enumerate(results):
        evals += e
        if best is None or f > best[2]:
            best = (x, y, f, i)
    return best, evals


def search_witness(n: int, config: SearchConfig | None = None, *,
                   target: float | None = None) -> Witness:
    """Best X found by multistart pattern search maximizing the margin.

    Deterministic for a fixed config; the thread count does not change the
    result.  ``target`` only shortens the axis scan.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    cfg = config or SearchConfig()
    tab = rotation_table(n)
    starts: list[tuple[float, float]] = []
    evals = 0
    if cfg.scan_length:
        cands, scanned = axis_candidates(n, cfg.scan_length, cfg.keep, cfg.threads, target)
        starts.extend((x, y) for _, x, y in cands)
        evals += scanned
    if not is_power_of_two(n):
        starts.append(seed_from_xi(n, seed=cfg.seed))
    radius = cfg.radius if cfg.radius is not None else 2.0 * n
    starts.extend(_random_start(cfg.seed, i, radius) for i in range(cfg.starts))
    if not starts:
        starts.append((0.0, 0.0))
    (x, y, _, _), e = _polish(tab, starts, cfg)
    return Witness(x, y, n, evals + e)


def search_angles(angles: Sequence[float], config: SearchConfig | None = None) -> tuple[float, float, float]:
    """Random-start pattern search for an arbitrary set of rotation angles.

    Returns (x, y, margin).
    """
    cfg = config or SearchConfig()
    tab = angle_table(angles)
    radius = cfg.radius if cfg.radius is not None else 2.0 * len(angles)
    starts = [_random_start(cfg.seed, i, radius) for i in range(max(1, cfg.starts))]
    (x, y, f, _), _ = _polish(tab, starts, cfg)
    return x, y, f


def sample_upper_check(n: int, samples: int = 100_000, radius: float = 10.0,
                       seed: int = DEFAULT_SEED) -> float:
    """Largest margin over uniform random X in a disk; raises if it beats
    1/2 - delta_n by more than float tolerance."""
    if n < 2:
        raise ValueError("n must be >= 2")
    rng = np.random.default_rng(seed)
    r = radius * np.sqrt(rng.random(samples))
    th = 2 * np.pi * rng.random(samples)
    m = kernels.margin_batch(r * np.cos(th), r * np.sin(th), rotation_table(n))
    best = float(m.max()) if samples else 0.0
    check_bound(best, n)
    return best


def check_bound(value: float, n: int) -> None:
    bound = epsilon_bound(n)
    if Fraction(value) > bound + Fraction(FLOAT_TOL):
        raise TheoremViolation(f"margin {value!r} exceeds 1/2 - delta_{n} = {bound} for n={n}")
