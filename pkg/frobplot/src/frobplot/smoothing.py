"""Trend and distribution estimators behind the figures.

The scatter trend line is LOESS rather than a GAM: tricube-weighted
local linear regression over a nearest-neighbour window gives a visually
equivalent curve with no model-fitting machinery, and the span (default
0.6) is the single documented knob. Densities use a Gaussian kernel with
Silverman's bandwidth rule, since no bandwidth is prescribed upstream.
The ECDF is the plain step estimator.
"""

from __future__ import annotations

from typing import Optional, Tuple

import numpy as np


def tricube(u) -> np.ndarray:
    """The LOESS kernel (1 - |u|^3)^3 on [-1, 1], zero outside."""
    # clamp before cubing so far-out arguments cannot overflow
    u = np.minimum(np.abs(np.asarray(u, dtype=float)), 1.0)
    w = 1.0 - u**3
    return w**3


def loess(x, y, span: float = 0.6) -> Tuple[np.ndarray, np.ndarray]:
    """Locally weighted linear trend evaluated at the sample points.

    Each fit window holds the ceil(span * m) nearest neighbours of the
    evaluation point, weighted by tricube of distance scaled to the
    window radius (so the farthest neighbour gets weight zero). Windows
    whose weight mass collapses onto a single abscissa fall back to the
    weighted mean, which keeps the fit exact on affine data. Non-finite
    pairs are dropped; tied x values are averaged in the output, so the
    returned grid is strictly increasing.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.ndim != 1 or x.shape != y.shape:
        raise ValueError("x and y must be one-dimensional and equally long")
    if not 0.0 < span <= 1.0:
        raise ValueError(f"span must be in (0, 1], got {span}")
    keep = np.isfinite(x) & np.isfinite(y)
    x, y = x[keep], y[keep]
    m = x.size
    if m == 0:
        raise ValueError("loess of an empty sample")
    order = np.argsort(x, kind="stable")
    x, y = x[order], y[order]
    k = min(m, max(2, int(np.ceil(span * m))))

    fitted = np.empty(m)
    for i in range(m):
        d = np.abs(x - x[i])
        radius = np.partition(d, k - 1)[k - 1]
        if radius == 0.0:
            # the whole window sits on tied x values
            w = (d == 0.0).astype(float)
        else:
            w = tricube(d / radius)
        total = w.sum()
        mean_x = (w @ x) / total
        mean_y = (w @ y) / total
        centered = x - mean_x
        var_x = (w @ (centered * centered)) / total
        if var_x <= 1e-12 * max(1.0, mean_x * mean_x):
            fitted[i] = mean_y
            continue
        beta = (w @ (centered * (y - mean_y))) / total / var_x
        fitted[i] = mean_y + beta * (x[i] - mean_x)

    grid, starts = np.unique(x, return_index=True)
    sums = np.add.reduceat(fitted, starts)
    counts = np.diff(np.append(starts, m))
    return grid, sums / counts


def silverman_bandwidth(xs) -> float:
    """0.9 min(sd, IQR/1.34) m^(-1/5); zero exactly when the sample is constant."""
    xs = np.asarray(xs, dtype=float)
    if xs.size < 2:
        raise ValueError("bandwidth needs at least two points")
    sd = float(np.std(xs, ddof=1))
    q1, q3 = np.percentile(xs, [25, 75])
    iqr = float(q3 - q1)
    spread = min(sd, iqr / 1.34) if iqr > 0 else sd
    return 0.9 * spread * xs.size ** (-0.2)


def gaussian_kde(
    xs,
    grid=None,
    bandwidth: Optional[float] = None,
    gridsize: int = 256,
    pad: float = 3.0,
) -> Tuple[np.ndarray, np.ndarray]:
    """Average of Gaussian bumps at the sample points, evaluated on a grid.

    The default grid spans the data padded by `pad` bandwidths so the
    curve visibly decays at both ends. Returns (grid, density).
    """
    xs = np.asarray(xs, dtype=float)
    xs = xs[np.isfinite(xs)]
    if xs.size < 2:
        raise ValueError("kde needs at least two points")
    h = silverman_bandwidth(xs) if bandwidth is None else float(bandwidth)
    if h <= 0:
        raise ValueError("bandwidth must be positive; the sample is degenerate")
    if grid is None:
        grid = np.linspace(xs.min() - pad * h, xs.max() + pad * h, gridsize)
    else:
        grid = np.asarray(grid, dtype=float)
    z = (grid[:, None] - xs[None, :]) / h
    density = np.exp(-0.5 * z * z).sum(axis=1) / (xs.size * h * np.sqrt(2.0 * np.pi))
    return grid, density


def ecdf(xs) -> Tuple[np.ndarray, np.ndarray]:
    """Step estimate: at the i-th order statistic the fraction is (i+1)/m."""
    xs = np.asarray(xs, dtype=float)
    xs = xs[np.isfinite(xs)]
    if xs.size == 0:
        raise ValueError("ecdf of an empty sample")
    sorted_xs = np.sort(xs)
    return sorted_xs, np.arange(1, xs.size + 1) / xs.size
