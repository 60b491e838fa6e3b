"""The four figure kinds, rendered deterministically to raster files.

Figure geometry, axis limits and colors are all fixed constants, and the
image metadata is pinned, so rendering the same CSV twice produces the
same bytes.  The renderer draws whatever the file says; it never
recomputes or corrects the numbers.
"""

import math
from dataclasses import dataclass

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)
import numpy as np  # noqa: E402

from .io import read_table  # noqa: E402

DIST_MAX = math.sqrt(2.0)
FIGSIZE = (6.4, 4.8)
DPI = 150
METADATA = {"Software": "rqs-plots"}

KINDS = ("bloch3d", "histogram", "sweep_lines", "mean_band")

_SCHEMA_FOR_KIND = {
    "bloch3d": "cloud",
    "histogram": "histogram",
    "sweep_lines": "stats",
    "mean_band": "stats",
}


@dataclass(frozen=True)
class PlotSpec:
    """What to read, how to draw it, where to write it."""

    input_path: str
    kind: str
    output_path: str
    title: str = ""


def render(spec: PlotSpec) -> str:
    """Render ``spec`` and return the output path."""
    if spec.kind not in KINDS:
        raise ValueError(f"unknown plot kind {spec.kind!r}; expected one of {KINDS}")
    rows = read_table(spec.input_path, _SCHEMA_FOR_KIND[spec.kind])
    if not rows:
        raise ValueError(f"{spec.input_path}: no data rows to draw")
    draw = {
        "bloch3d": _draw_cloud,
        "histogram": _draw_histogram,
        "sweep_lines": _draw_sweep_lines,
        "mean_band": _draw_mean_band,
    }[spec.kind]
    fig = draw(rows, spec.title)
    try:
        fig.savefig(spec.output_path, dpi=DPI, metadata=METADATA)
    finally:
        plt.close(fig)
    return spec.output_path


def _draw_cloud(rows, title):
    fig = plt.figure(figsize=(6.4, 6.4))
    ax = fig.add_subplot(projection="3d")
    u = np.linspace(0.0, 2.0 * np.pi, 24)
    v = np.linspace(0.0, np.pi, 12)
    sx = np.outer(np.cos(u), np.sin(v))
    sy = np.outer(np.sin(u), np.sin(v))
    sz = np.outer(np.ones_like(u), np.cos(v))
    ax.plot_wireframe(sx, sy, sz, color="0.8", linewidth=0.4)
    xs = [r["x"] for r in rows]
    ys = [r["y"] for r in rows]
    zs = [r["z"] for r in rows]
    ax.scatter(xs, ys, zs, s=4, c="#1f4e9c", depthshade=False)
    for setter in (ax.set_xlim, ax.set_ylim, ax.set_zlim):
        setter(-1.0, 1.0)
    ax.set_box_aspect((1.0, 1.0, 1.0))
    ax.set_xlabel("x")
    ax.set_ylabel("y")
    ax.set_zlabel("z")
    if title:
        ax.set_title(title)
    return fig


def _draw_histogram(rows, title):
    total = sum(r["count"] for r in rows)
    if total <= 0:
        raise ValueError("histogram has no counted values")
    lowers = np.array([r["bin_lower"] for r in rows])
    uppers = np.array([r["bin_upper"] for r in rows])
    probs = np.array([r["count"] for r in rows], dtype=np.float64) / total
    fig, ax = plt.subplots(figsize=FIGSIZE)
    ax.bar(lowers, probs, width=uppers - lowers, align="edge",
           color="#1f4e9c", edgecolor="none")
    ax.set_xlim(0.0, DIST_MAX)
    ax.set_ylim(bottom=0.0)
    ax.set_xlabel("distance")
    ax.set_ylabel("probability")
    if title:
        ax.set_title(title)
    return fig


def _series_key(row):
    if row["d_prime"] is None:
        return row["method"]
    return f"{row['method']} d={row['d']}"


def _series_x(row):
    return row["d"] if row["d_prime"] is None else row["d_prime"]


def _draw_sweep_lines(rows, title):
    groups: dict[str, list] = {}
    for row in rows:
        groups.setdefault(_series_key(row), []).append(row)
    fig, ax = plt.subplots(figsize=FIGSIZE)
    for label in sorted(groups):
        pts = sorted(groups[label], key=_series_x)
        xs = [_series_x(r) for r in pts]
        means = [r["mean_hsd"] for r in pts]
        stds = [r["std_hsd"] for r in pts]
        ax.errorbar(xs, means, yerr=stds, marker="o", capsize=3, label=label)
    ax.set_xlabel("dimension")
    ax.set_ylabel("mean distance")
    ax.set_ylim(0.0, DIST_MAX)
    ax.legend()
    if title:
        ax.set_title(title)
    return fig


def _draw_mean_band(rows, title):
    groups: dict[str, list] = {}
    for row in rows:
        groups.setdefault(row["method"], []).append(row)
    fig, ax = plt.subplots(figsize=FIGSIZE)
    for label in sorted(groups):
        pts = sorted(groups[label], key=lambda r: r["d"])
        xs = np.array([r["d"] for r in pts], dtype=np.float64)
        means = np.array([r["mean_hsd"] for r in pts])
        stds = np.array([r["std_hsd"] for r in pts])
        # the band collapses to an error bar when there is one point
        ax.fill_between(xs, means - stds, means + stds,
                        color="#9fd8e8", alpha=0.6, linewidth=0.0)
        ax.errorbar(xs, means, yerr=stds, color="black", marker="o",
                    markersize=4, capsize=2, linestyle="-", label=label)
    ax.set_xlabel("dimension")
    ax.set_ylabel("mean distance")
    ax.set_ylim(0.0, DIST_MAX)
    ax.legend()
    if title:
        ax.set_title(title)
    return fig
