"""Figure rendering for reports: graph drawings, degree profiles, tables.

Everything goes through the Agg backend straight to PNG files with fixed
metadata, so report runs never need a display and rerenders are stable.
"""
from __future__ import annotations

import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

_METADATA = {"Software": "orikit"}

# drawings above this order get a degree profile instead of a node layout
DRAW_CAP = 150


def _circle_layout(n: int) -> list[tuple[float, float]]:
    return [(math.cos(2 * math.pi * i / n - math.pi / 2),
             math.sin(2 * math.pi * i / n - math.pi / 2)) for i in range(n)]


def draw_oriented_graph(G, path, coloring=None, title: str | None = None) -> Path:
    """Circular layout with arrowheads; vertices tinted by coloring."""
    path = Path(path)
    pos = _circle_layout(G.n)
    fig, ax = plt.subplots(figsize=(6, 6))
    for u, v in G.arcs:
        ax.annotate(
            "", xy=pos[v], xytext=pos[u],
            arrowprops=dict(arrowstyle="-|>", color="0.35", lw=1.0,
                            shrinkA=12, shrinkB=12))
    cmap = plt.get_cmap("tab20")
    for i, (x, y) in enumerate(pos):
        face = cmap(coloring.values[i] % 20) if coloring else "0.9"
        ax.scatter([x], [y], s=480, color=face, edgecolors="black",
                   zorder=3)
        label = str(i)
        if coloring is not None:
            label = f"{i}\nc{coloring.values[i]}"
        ax.annotate(label, (x, y), ha="center", va="center", fontsize=8,
                    zorder=4)
    if title:
        ax.set_title(title)
    ax.set_aspect("equal")
    ax.set_axis_off()
    margin = 1.25
    ax.set_xlim(-margin, margin)
    ax.set_ylim(-margin, margin)
    fig.savefig(path, dpi=110, metadata=_METADATA)
    plt.close(fig)
    return path


def degree_profile(G, path, title: str | None = None) -> Path:
    """Out-degree histogram; the readable stand-in for very large graphs."""
    path = Path(path)
    outs = [0] * G.n
    for u, _ in G.arcs:
        outs[u] += 1
    counts: dict[int, int] = {}
    for x in outs:
        counts[x] = counts.get(x, 0) + 1
    fig, ax = plt.subplots(figsize=(6, 4))
    xs = sorted(counts)
    ax.bar(xs, [counts[x] for x in xs], color="steelblue")
    ax.set_xlabel("out-degree")
    ax.set_ylabel("vertices")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=110, metadata=_METADATA)
    plt.close(fig)
    return path


def render_graph_figure(G, path, coloring=None, title: str | None = None) -> Path:
    """Drawing when small enough to read, degree profile otherwise."""
    if G.n <= DRAW_CAP:
        return draw_oriented_graph(G, path, coloring, title)
    return degree_profile(G, path, title)


def save_table_png(headers, rows, path, title: str | None = None) -> Path:
    """Render a list-of-lists table to PNG."""
    path = Path(path)
    height = 0.6 + 0.32 * (len(rows) + 1)
    fig, ax = plt.subplots(figsize=(max(6, 1.4 * len(headers)), height))
    ax.set_axis_off()
    table = ax.table(cellText=[[str(x) for x in row] for row in rows],
                     colLabels=[str(h) for h in headers],
                     loc="center", cellLoc="center")
    table.auto_set_font_size(False)
    table.set_fontsize(9)
    table.scale(1, 1.3)
    if title:
        ax.set_title(title, pad=12)
    fig.tight_layout()
    fig.savefig(path, dpi=110, metadata=_METADATA)
    plt.close(fig)
    return path
