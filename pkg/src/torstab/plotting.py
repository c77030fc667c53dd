"""Matplotlib figures written next to an analysis report."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from torstab.fan import Fan2D  # noqa: E402
from torstab.report import AnalysisReport  # noqa: E402


def _lattice_axes(ax, extent):
    xs = range(-extent, extent + 1)
    ax.scatter([x for x in xs for _ in xs], [y for _ in xs for y in xs], s=6, color="0.5", zorder=1)
    ax.set_xlim(-extent - 0.5, extent + 0.5)
    ax.set_ylim(-extent - 0.5, extent + 0.5)
    ax.set_aspect("equal")
    ax.axhline(0, color="0.85", lw=0.8, zorder=0)
    ax.axvline(0, color="0.85", lw=0.8, zorder=0)


def plot_fan(fan: Fan2D, ax=None):
    if ax is None:
        _, ax = plt.subplots(figsize=(4, 4))
    extent = max(2, max(max(abs(x), abs(y)) for x, y in fan.rays) + 1)
    _lattice_axes(ax, extent)
    for i in fan.singular_cones:
        (ux, uy), (vx, vy) = fan.cone(i)
        ax.fill([0, ux * extent, vx * extent], [0, uy * extent, vy * extent], color="0.8", alpha=0.6, zorder=0)
    for x, y in fan.rays:
        ax.annotate("", xy=(x, y), xytext=(0, 0), arrowprops=dict(arrowstyle="->", lw=1.5), zorder=2)
    ax.set_title(f"fan ({len(fan)} rays)")
    return ax


def plot_weights(report: AnalysisReport, ax=None):
    """Deformation weights in N*, marker size by dimension; weights that
    occur in some polystable support are filled."""
    if ax is None:
        _, ax = plt.subplots(figsize=(4, 4))
    ws = report.weights["weights"]
    in_mu = {i for I in report.stability["mu"] for i in I}
    extent = max([2] + [max(abs(c) for c in w["weight"]) + 1 for w in ws])
    _lattice_axes(ax, extent)
    for w in ws:
        x, y = w["weight"]
        filled = w["index"] in in_mu
        ax.scatter([x], [y], s=60 * w["dim"], facecolor="C0" if filled else "white", edgecolor="C0", zorder=3)
        ax.annotate(w["label"], (x, y), textcoords="offset points", xytext=(5, 5), fontsize=7)
    ax.set_title("deformation weights")
    return ax


def write_figures(fan: Fan2D, report: AnalysisReport, directory) -> list[Path]:
    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for name, draw in (("fan.png", lambda ax: plot_fan(fan, ax)), ("weights.png", lambda ax: plot_weights(report, ax))):
        fig, ax = plt.subplots(figsize=(4, 4))
        draw(ax)
        fig.tight_layout()
        path = out / name
        fig.savefig(path, dpi=100)
        plt.close(fig)
        written.append(path)
    return written
