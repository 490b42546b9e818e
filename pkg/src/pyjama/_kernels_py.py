"""Pure numpy versions of the witness-search kernels.

Every routine performs the same IEEE operations in the same order as the
compiled module ``_kernels``, so both backends return bit-identical results.

Rotation tables have shape (n, 4): cos hi, cos lo, sin hi, sin lo, each pair
a double-double approximation of cos(2*pi*k/n), sin(2*pi*k/n).
"""

import math

import numpy as np

NAME = "python"

_SPLIT = 134217729.0  # 2**27 + 1
_DX = (1.0, -1.0, 0.0, 0.0, 1.0, 1.0, -1.0, -1.0)
_DY = (0.0, 0.0, 1.0, -1.0, 1.0, -1.0, 1.0, -1.0)
_CHUNK = 1 << 20


def _split(a):
    t = _SPLIT * a
    hi = t - (t - a)
    return hi, a - hi


def _prod_err(a, b, p):
    ah, al = _split(a)
    bh, bl = _split(b)
    return (((ah * bh - p) + ah * bl) + al * bh) + al * bl


def _frac_dist(s, lo):
    r = np.floor(s + 0.5)
    t = (s - r) + lo
    return np.abs(t - np.floor(t + 0.5))


def _dist(x, y, ch, cl, sh, sl):
    p1 = x * ch
    e1 = _prod_err(x, ch, p1)
    p2 = y * sh
    e2 = _prod_err(y, sh, p2)
    s = p1 + p2
    bb = s - p1
    e3 = (p1 - (s - bb)) + (p2 - bb)
    lo = ((e1 + e2) + e3) + ((x * cl) + (y * sl))
    return _frac_dist(s, lo)


def _axis_dist(x, ch, cl):
    p1 = x * ch
    lo = _prod_err(x, ch, p1) + x * cl
    return _frac_dist(p1, lo)


def margin(x, y, tab):
    tab = np.asarray(tab, dtype=np.float64)
    return float(_dist(float(x), float(y), tab[:, 0], tab[:, 1], tab[:, 2], tab[:, 3]).min())


def margin_batch(xs, ys, tab):
    tab = np.asarray(tab, dtype=np.float64)
    xs = np.asarray(xs, dtype=np.float64)[:, None]
    ys = np.asarray(ys, dtype=np.float64)[:, None]
    out = np.full(xs.shape[0], 0.5)
    for k in range(tab.shape[0]):
        d = _dist(xs[:, 0], ys[:, 0], tab[k, 0], tab[k, 1], tab[k, 2], tab[k, 3])
        np.minimum(out, d, out=out)
    return out


def pattern_search(x, y, tab, step, shrink, max_iter, min_step):
    tab = np.asarray(tab, dtype=np.float64)
    ch, cl, sh, sl = tab[:, 0], tab[:, 1], tab[:, 2], tab[:, 3]
    x, y, step = float(x), float(y), float(step)
    f = float(_dist(x, y, ch, cl, sh, sl).min())
    evals = 1
    for _ in range(max_iter):
        improved = False
        for d in range(8):
            nx = x + _DX[d] * step
            ny = y + _DY[d] * step
            nf = float(_dist(nx, ny, ch, cl, sh, sl).min())
            evals += 1
            if nf > f:
                x, y, f = nx, ny, nf
                improved = True
        if not improved:
            step *= shrink
            if step < min_step:
                break
    return x, y, f, evals


def axis_scan(atab, c0, tau, j0, j1, keep):
    """Best ``keep`` points x = (tau + j) / c0, j0 <= j < j1, of the margin
    along an axis with coefficient table ``atab`` (shape (n, 2)).

    Returns (margins, xs) ordered by margin descending, then j ascending.
    """
    atab = np.asarray(atab, dtype=np.float64)
    best_m = np.empty(0)
    best_j = np.empty(0)
    for a in range(j0, j1, _CHUNK):
        j = np.arange(a, min(j1, a + _CHUNK), dtype=np.float64)
        x = (tau + j) / c0
        thr = best_m[-1] if best_m.size >= keep else -math.inf
        if thr > 0:
            # plain double prefilter; its error is below |x| * 4e-16
            slack = np.abs(x) * 1e-15 + 1e-12
            for k in range(atab.shape[0]):
                v = x * atab[k, 0]
                ok = np.abs(v - np.floor(v + 0.5)) >= thr - slack
                j, x, slack = j[ok], x[ok], slack[ok]
                if not j.size:
                    break
        m = np.full(x.shape, 0.5)
        for k in range(atab.shape[0]):
            np.minimum(m, _axis_dist(x, atab[k, 0], atab[k, 1]), out=m)
        sel = m > thr
        ms = np.concatenate([best_m, m[sel]])
        js = np.concatenate([best_j, j[sel]])
        order = np.lexsort((js, -ms))[:keep]
        best_m, best_j = ms[order], js[order]
    return best_m, (tau + best_j) / c0
