"""Matplotlib figures for Newton polygons and verification summaries."""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
matplotlib.rcParams["svg.fonttype"] = "none"  # keep labels as <text> in SVG output
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.ticker import MaxNLocator  # noqa: E402

from .newton import LatticePolygon  # noqa: E402
from .polyalg import BivarPoly  # noqa: E402

FILL = "lightgray"
EDGE = "black"
EXPECTED = "tab:red"
SUPPORT = "tab:blue"


def _closed(vertices: Sequence[tuple[int, int]]):
    xs = [v[0] for v in vertices]
    ys = [v[1] for v in vertices]
    if len(vertices) > 2:
        xs.append(vertices[0][0])
        ys.append(vertices[0][1])
    return xs, ys


def draw_polygon(ax, polygon: LatticePolygon, support: BivarPoly | None = None,
                 expected: LatticePolygon | None = None, title: str = ""):
    """Polygon in the (q, x) frame: q horizontal, x vertical."""
    verts = polygon.vertices
    if len(verts) > 2:
        ax.fill(*_closed(verts), facecolor=FILL, edgecolor=EDGE, linewidth=2, zorder=1)
    elif verts:
        ax.plot(*_closed(verts), color=EDGE, linewidth=2, marker="o", zorder=1)
    if expected is not None and expected.vertices and expected != polygon:
        ax.plot(*_closed(expected.vertices), color=EXPECTED, linestyle="--",
                linewidth=1.5, label="expected", zorder=2)
    if support is not None:
        pts = support.support()
        ax.scatter([p[0] for p in pts], [p[1] for p in pts], s=12, color=SUPPORT,
                   zorder=3, label="support")
    ax.set_xlabel("q")
    ax.set_ylabel("x")
    ax.xaxis.set_major_locator(MaxNLocator(integer=True))
    ax.yaxis.set_major_locator(MaxNLocator(integer=True))
    ax.grid(True, color="0.85", linewidth=0.5)
    ax.set_aspect("equal", adjustable="datalim")
    if title:
        ax.set_title(title, fontsize=10)
    return ax


def render_polygons(path: str | Path, panels: Sequence[dict]) -> Path:
    """One panel per dict with keys polygon, and optionally support, expected, title.

    The format follows the file suffix (.svg, .png, .pdf).
    """
    path = Path(path)
    fig, axes = plt.subplots(1, len(panels), figsize=(4.5 * len(panels), 4), squeeze=False)
    for ax, panel in zip(axes[0], panels):
        draw_polygon(ax, panel["polygon"], panel.get("support"), panel.get("expected"),
                     panel.get("title", ""))
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path


def render_summary(path: str | Path, counts: dict[int, dict[str, list[int]]]) -> Path:
    """Pass/fail bars per check, one group per poset size m.

    ``counts[m][check] == [passed, failed]``.
    """
    path = Path(path)
    sizes = sorted(counts)
    checks = sorted({c for per in counts.values() for c in per})
    fig, ax = plt.subplots(figsize=(max(6, 1.2 * len(checks)), 3.5))
    width = 0.8 / max(1, len(sizes))
    for j, m in enumerate(sizes):
        passed = [counts[m].get(c, [0, 0])[0] for c in checks]
        failed = [counts[m].get(c, [0, 0])[1] for c in checks]
        xs = [i + j * width for i in range(len(checks))]
        ax.bar(xs, passed, width, label=f"m={m} pass")
        if any(failed):
            ax.bar(xs, failed, width, bottom=passed, color=EXPECTED, label=f"m={m} fail")
    ax.set_xticks([i + 0.4 - width / 2 for i in range(len(checks))])
    ax.set_xticklabels(checks, rotation=30, ha="right", fontsize=8)
    ax.set_ylabel("posets")
    ax.legend(fontsize=7)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path
