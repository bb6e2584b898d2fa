"""Figure builders: twelve kinds covering the study's visual repertoire.

Distribution views of bound error (box, box_jitter, density, ecdf),
scaling views (mean_line, scatter_smooth, rel_error), regional views
over the input space (best_region, stacked_best, heatmap), and two
standalone panels: cn_growth for the leading constant of the
lattice-point bound and prime_ratio for the sub-quadratic test bounds.

`render` loads the input, builds the figure, writes the image, and
returns the figure object so callers can inspect what was drawn.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import List, Optional, Tuple

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np
from matplotlib.colors import LogNorm
from matplotlib.figure import Figure
from matplotlib.patches import Patch

from .io import (
    BOUND_ORDER,
    load_box_table,
    load_prime_ratios,
    load_trials,
    long_differences,
)
from .smoothing import ecdf, gaussian_kde, loess

KINDS: Tuple[str, ...] = (
    "box",
    "box_jitter",
    "density",
    "ecdf",
    "mean_line",
    "scatter_smooth",
    "best_region",
    "stacked_best",
    "heatmap",
    "rel_error",
    "cn_growth",
    "prime_ratio",
)

# one stable colour per bound, shared by every figure kind
_PALETTE = {
    bound: color
    for bound, color in zip(BOUND_ORDER, matplotlib.colormaps["tab10"].colors)
}

_DIFF_LABEL = "bound - F(a)"
_AN_LABEL = "a_n (largest entry)"


@dataclass(frozen=True)
class FigureSpec:
    """One figure to render: kind, input, output, and style knobs.

    `x_mode` picks the rel_error abscissa (largest entry or entry ratio),
    `color_by` the scatter_smooth grouping, `bound` the rel_error focus
    column, and `n_max` the last dimension of the cn_growth series.
    Jitter draws from a stream seeded by `style_seed`, so images are
    reproducible byte for byte.
    """

    kind: str
    out_path: str
    in_path: Optional[str] = None
    log_x: bool = False
    log_y: bool = False
    style_seed: int = 42
    x_mode: str = "an"
    color_by: str = "bound"
    bound: str = "whcorr"
    n_max: int = 41
    dpi: int = 150

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(
                f"unknown figure kind {self.kind!r}; choose from {', '.join(KINDS)}"
            )
        if self.kind == "cn_growth":
            if self.in_path is not None:
                raise ValueError("cn_growth computes its own series and takes no input CSV")
        elif self.in_path is None:
            raise ValueError(f"kind {self.kind} requires an input CSV")
        if self.x_mode not in ("an", "ratio"):
            raise ValueError(f"x must be 'an' or 'ratio', got {self.x_mode!r}")
        if self.color_by not in ("bound", "n"):
            raise ValueError(f"color must be 'bound' or 'n', got {self.color_by!r}")
        if self.bound not in BOUND_ORDER:
            raise ValueError(f"bound must be one of {', '.join(BOUND_ORDER)}")
        if not 3 <= self.n_max <= 400:
            raise ValueError(f"n-max must be in [3, 400], got {self.n_max}")
        if self.dpi <= 0:
            raise ValueError(f"dpi must be positive, got {self.dpi}")


def render(spec: FigureSpec) -> Figure:
    """Build the figure, write it to spec.out_path, and return it."""
    fig, axes = _BUILDERS[spec.kind](spec)
    for ax in axes:
        if spec.log_x:
            ax.set_xscale("log")
        if spec.log_y:
            ax.set_yscale("log")
    parent = os.path.dirname(os.path.abspath(spec.out_path))
    os.makedirs(parent, exist_ok=True)
    fig.savefig(spec.out_path, dpi=spec.dpi)
    return fig


def _bounds_present(values) -> List[str]:
    present = set(values)
    return [b for b in BOUND_ORDER if b in present]


def _n_palette(ns):
    colors = matplotlib.colormaps["tab10"].colors
    return {n: colors[i % len(colors)] for i, n in enumerate(ns)}


def _grouped_boxes(ax, ns, values_of, bounds, rng=None) -> None:
    """Boxes grouped by dimension, one colour-coded box per bound.

    `values_of(bound, n)` yields the sample. With `rng` set, the raw
    points are overlaid with horizontal jitter inside the box width.
    """
    width = 0.8 / max(len(bounds), 1)
    for j, bound in enumerate(bounds):
        positions, data = [], []
        for i, n in enumerate(ns):
            vals = values_of(bound, n)
            if len(vals) == 0:
                continue
            positions.append(i + (j - (len(bounds) - 1) / 2) * width)
            data.append(vals)
        if not data:
            continue
        artists = ax.boxplot(
            data,
            positions=positions,
            widths=width * 0.9,
            patch_artist=True,
            manage_ticks=False,
            flierprops=dict(markersize=3, alpha=0.6),
        )
        for patch in artists["boxes"]:
            patch.set_facecolor(_PALETTE[bound])
            patch.set_alpha(0.7)
        for med in artists["medians"]:
            med.set_color("black")
        if rng is not None:
            for pos, vals in zip(positions, data):
                xs = pos + (rng.random(len(vals)) - 0.5) * width * 0.8
                ax.plot(
                    xs,
                    vals,
                    linestyle="none",
                    marker="o",
                    markersize=2.2,
                    alpha=0.4,
                    color=_PALETTE[bound],
                    zorder=3,
                )
    ax.set_xticks(range(len(ns)))
    ax.set_xticklabels([str(n) for n in ns])
    ax.set_xlabel("n (dimension)")
    ax.legend(
        handles=[Patch(facecolor=_PALETTE[b], alpha=0.7, label=b) for b in bounds],
        fontsize=8,
        ncols=min(len(bounds), 4),
    )


def _build_box(spec: FigureSpec, jitter: bool = False):
    mode, frame = load_box_table(spec.in_path)
    rng = np.random.default_rng(spec.style_seed) if jitter else None
    fig, ax = plt.subplots(figsize=(10, 5))
    if mode == "ratios":
        # a log axis cannot place sign-flipped ratios, so only clean rows plot
        ok = frame[frame["flag"] == "ok"]
        ns = sorted(ok["n"].unique())
        data = [ok.loc[ok["n"] == n, "r_n"].to_numpy() for n in ns]
        artists = ax.boxplot(
            data,
            positions=range(len(ns)),
            widths=0.5,
            patch_artist=True,
            manage_ticks=False,
            flierprops=dict(markersize=3, alpha=0.6),
        )
        for patch in artists["boxes"]:
            patch.set_facecolor("lightsteelblue")
        for med in artists["medians"]:
            med.set_color("black")
        if rng is not None:
            for i, vals in enumerate(data):
                xs = i + (rng.random(len(vals)) - 0.5) * 0.4
                ax.plot(xs, vals, "o", markersize=2.2, alpha=0.4, color="steelblue", zorder=3)
        ax.axhline(1.0, color="red", linewidth=1.0)
        ax.set_xticks(range(len(ns)))
        ax.set_xticklabels([str(n) for n in ns])
        ax.set_xlabel("n (dimension)")
        ax.set_ylabel("error ratio r_n")
    else:
        long = long_differences(frame)
        ns = sorted(long["n"].unique())
        bounds = _bounds_present(long["bound"])
        grouped = long.groupby(["bound", "n"])["diff"]

        def values_of(bound, n):
            try:
                return grouped.get_group((bound, n)).to_numpy()
            except KeyError:
                return np.empty(0)

        _grouped_boxes(ax, ns, values_of, bounds, rng=rng)
        ax.set_ylabel(_DIFF_LABEL)
    fig.tight_layout()
    return fig, [ax]


def _build_box_plain(spec: FigureSpec):
    return _build_box(spec, jitter=False)


def _build_box_jitter(spec: FigureSpec):
    return _build_box(spec, jitter=True)


def _facet_by_dimension(spec: FigureSpec, draw, ylabel: str):
    """One subplot per dimension; `draw(ax, bound, vals)` adds one curve."""
    frame = load_trials(spec.in_path)
    long = long_differences(frame)
    ns = sorted(long["n"].unique())
    fig, axes = plt.subplots(
        1, len(ns), figsize=(4.0 * len(ns), 3.6), squeeze=False
    )
    row = axes[0]
    for ax, n in zip(row, ns):
        sub = long[long["n"] == n]
        for bound in _bounds_present(sub["bound"]):
            vals = sub.loc[sub["bound"] == bound, "diff"].to_numpy()
            draw(ax, bound, vals)
        ax.set_title(f"n = {n}")
        ax.set_xlabel(_DIFF_LABEL)
    row[0].set_ylabel(ylabel)
    row[-1].legend(fontsize=8)
    fig.tight_layout()
    return fig, list(row)


def _build_density(spec: FigureSpec):
    def draw(ax, bound, vals):
        if len(vals) < 2:
            return
        try:
            grid, density = gaussian_kde(vals)
        except ValueError:
            return  # constant sample, no spread to draw
        ax.plot(grid, density, color=_PALETTE[bound], label=bound)

    return _facet_by_dimension(spec, draw, ylabel="density")


def _build_ecdf(spec: FigureSpec):
    def draw(ax, bound, vals):
        xs, fractions = ecdf(vals)
        ax.step(xs, fractions, where="post", color=_PALETTE[bound], label=bound)

    return _facet_by_dimension(spec, draw, ylabel="fraction of trials")


def _build_mean_line(spec: FigureSpec):
    frame = load_trials(spec.in_path)
    long = long_differences(frame)
    means = long.groupby(["bound", "n"])["diff"].mean()
    fig, ax = plt.subplots(figsize=(7, 4.5))
    for bound in _bounds_present(long["bound"]):
        series = means.loc[bound].sort_index()
        ax.plot(
            series.index,
            series.to_numpy(),
            marker="o",
            color=_PALETTE[bound],
            label=bound,
        )
    ax.set_xticks(sorted(long["n"].unique()))
    ax.set_xlabel("n (dimension)")
    ax.set_ylabel(f"mean {_DIFF_LABEL}")
    ax.legend(fontsize=8)
    fig.tight_layout()
    return fig, [ax]


def _build_scatter_smooth(spec: FigureSpec):
    frame = load_trials(spec.in_path)
    long = long_differences(frame)
    fig, ax = plt.subplots(figsize=(8, 5))
    if spec.color_by == "bound":
        for bound in _bounds_present(long["bound"]):
            sub = long[long["bound"] == bound]
            ax.plot(
                sub["an"],
                sub["diff"],
                "o",
                markersize=2.5,
                alpha=0.35,
                color=_PALETTE[bound],
                label=bound,
            )
    else:
        ns = sorted(long["n"].unique())
        palette = _n_palette(ns)
        for n in ns:
            sub = long[long["n"] == n]
            ax.plot(
                sub["an"],
                sub["diff"],
                "o",
                markersize=2.5,
                alpha=0.35,
                color=palette[n],
                label=f"n = {n}",
            )
    if len(long) >= 3:
        grid, fit = loess(long["an"].to_numpy(), long["diff"].to_numpy())
        ax.plot(grid, fit, color="black", linewidth=1.8, label="loess (span 0.6)")
    ax.set_xlabel(_AN_LABEL)
    ax.set_ylabel(_DIFF_LABEL)
    ax.legend(fontsize=8, markerscale=2)
    fig.tight_layout()
    return fig, [ax]


def _build_best_region(spec: FigureSpec):
    frame = load_trials(spec.in_path)
    fig, ax = plt.subplots(figsize=(7, 5.5))
    for bound in _bounds_present(frame["best"]):
        sub = frame[frame["best"] == bound]
        ax.plot(
            sub["a1"],
            sub["an"],
            "o",
            markersize=3,
            alpha=0.6,
            color=_PALETTE[bound],
            label=bound,
        )
    ax.set_xlabel("a_1 (smallest entry)")
    ax.set_ylabel(_AN_LABEL)
    ax.legend(fontsize=8, title="tightest bound", markerscale=2)
    fig.tight_layout()
    return fig, [ax]


def _build_stacked_best(spec: FigureSpec):
    frame = load_trials(spec.in_path)
    counts = frame.groupby(["n", "best"]).size().unstack(fill_value=0)
    proportions = counts.div(counts.sum(axis=1), axis=0)
    ns = list(proportions.index)
    fig, ax = plt.subplots(figsize=(7, 4.5))
    bottom = np.zeros(len(ns))
    for bound in [b for b in BOUND_ORDER if b in proportions.columns]:
        heights = proportions[bound].to_numpy()
        ax.bar(
            range(len(ns)),
            heights,
            bottom=bottom,
            width=0.7,
            color=_PALETTE[bound],
            label=bound,
        )
        bottom += heights
    ax.set_xticks(range(len(ns)))
    ax.set_xticklabels([str(n) for n in ns])
    ax.set_xlabel("n (dimension)")
    ax.set_ylabel("proportion tightest")
    ax.set_ylim(0, 1)
    ax.legend(fontsize=8, ncols=min(4, max(1, len(proportions.columns))))
    fig.tight_layout()
    return fig, [ax]


def _build_heatmap(spec: FigureSpec):
    frame = load_trials(spec.in_path)
    long = long_differences(frame)
    bounds = _bounds_present(long["bound"])
    ncols = min(4, len(bounds))
    nrows = math.ceil(len(bounds) / ncols)
    fig, axes = plt.subplots(
        nrows, ncols, figsize=(3.6 * ncols, 3.2 * nrows), squeeze=False
    )
    # shared edges keep the facets comparable; 20x20 uniform bins
    x_edges = np.linspace(long["a1"].min(), max(long["a1"].max(), long["a1"].min() + 1), 21)
    y_edges = np.linspace(long["an"].min(), max(long["an"].max(), long["an"].min() + 1), 21)
    content = []
    flat = list(axes.flat)
    for ax, bound in zip(flat, bounds):
        sub = long[(long["bound"] == bound) & (long["diff"] > 0)]
        ax.set_title(bound, fontsize=9)
        content.append(ax)
        if sub.empty:
            ax.text(0.5, 0.5, "no positive errors", ha="center", va="center")
            continue
        sums, _, _ = np.histogram2d(
            sub["a1"], sub["an"], bins=[x_edges, y_edges], weights=sub["diff"]
        )
        cnts, _, _ = np.histogram2d(sub["a1"], sub["an"], bins=[x_edges, y_edges])
        with np.errstate(invalid="ignore"):
            mean = sums / cnts
        masked = np.ma.masked_invalid(mean)
        mesh = ax.pcolormesh(x_edges, y_edges, masked.T, norm=LogNorm(), cmap="viridis")
        fig.colorbar(mesh, ax=ax, shrink=0.85)
    for ax in flat[len(bounds):]:
        ax.axis("off")
    for ax in content:
        ax.set_xlabel("a_1")
        ax.set_ylabel("a_n")
    fig.suptitle(f"mean {_DIFF_LABEL} by (a_1, a_n)", fontsize=10)
    fig.tight_layout()
    return fig, content


def _build_rel_error(spec: FigureSpec):
    frame = load_trials(spec.in_path)
    sub = frame[(frame["frobenius"] > 0) & frame[spec.bound].notna()]
    if sub.empty:
        raise ValueError(
            f"no rows with positive F and a {spec.bound} value; nothing to plot"
        )
    rel = (sub[spec.bound] - sub["frobenius"]) / sub["frobenius"]
    x = sub["an"] if spec.x_mode == "an" else sub["ratio_an_a1"]
    fig, ax = plt.subplots(figsize=(8, 5))
    ns = sorted(sub["n"].unique())
    palette = _n_palette(ns)
    for n in ns:
        mask = sub["n"] == n
        ax.plot(
            x[mask],
            rel[mask],
            "o",
            markersize=3,
            alpha=0.5,
            color=palette[n],
            label=f"n = {n}",
        )
    ax.set_xlabel(_AN_LABEL if spec.x_mode == "an" else "a_n / a_1")
    ax.set_ylabel(f"({spec.bound} - F) / F")
    ax.legend(fontsize=8, markerscale=2)
    fig.tight_layout()
    return fig, [ax]


def _log_c_of_n(n: int) -> float:
    # leading constant of the lattice-point bound:
    # C(n) = (n-1)^2 Gamma((n+1)/2) / pi^((n-1)/2), evaluated in log space
    return (
        2.0 * math.log(n - 1)
        + math.lgamma((n + 1) / 2.0)
        - ((n - 1) / 2.0) * math.log(math.pi)
    )


def _build_cn_growth(spec: FigureSpec):
    ns = np.arange(2, spec.n_max + 1)
    decay = np.exp(-(ns - 1) / 2.0)
    growth = ((ns - 1) / (2.0 * math.pi)) ** ((ns - 1) / 2.0)
    # the constant spans many decades, so a fixed 1e-3 scale keeps the
    # product visually alongside its factors on the shared log axis
    scaled_c = np.array([math.exp(_log_c_of_n(int(n))) for n in ns]) * 1e-3
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.plot(ns, decay, marker=".", label="exp(-(n-1)/2)")
    ax.plot(ns, growth, marker=".", label="((n-1)/2pi)^((n-1)/2)")
    ax.plot(ns, scaled_c, marker=".", label="0.001 C(n)")
    ax.set_yscale("log")
    ax.set_xlabel("n (dimension)")
    ax.set_ylabel("value (log scale)")
    ax.legend(fontsize=8)
    fig.tight_layout()
    return fig, [ax]


def _build_prime_ratio(spec: FigureSpec):
    frame = load_prime_ratios(spec.in_path)
    fig, ax = plt.subplots(figsize=(7, 4.5))
    for eps in sorted(frame["epsilon"].unique()):
        sub = frame[frame["epsilon"] == eps].sort_values("p")
        ax.plot(sub["p"], sub["ratio"], marker="o", markersize=3, label=f"eps = {eps:g}")
    ax.axhline(1.0, color="red", linewidth=1.2)
    c_values = frame["c"].unique()
    title = "F(p, p+1) against C (p(p+1))^(1-eps)"
    if len(c_values) == 1:
        title += f", C = {c_values[0]:g}"
    ax.set_title(title, fontsize=10)
    ax.set_xlabel("p (prime)")
    ax.set_ylabel("ratio F / bound")
    ax.legend(fontsize=8)
    fig.tight_layout()
    return fig, [ax]


_BUILDERS = {
    "box": _build_box_plain,
    "box_jitter": _build_box_jitter,
    "density": _build_density,
    "ecdf": _build_ecdf,
    "mean_line": _build_mean_line,
    "scatter_smooth": _build_scatter_smooth,
    "best_region": _build_best_region,
    "stacked_best": _build_stacked_best,
    "heatmap": _build_heatmap,
    "rel_error": _build_rel_error,
    "cn_growth": _build_cn_growth,
    "prime_ratio": _build_prime_ratio,
}
