"""File-target matplotlib rendering for the reporting subcommands.

Layouts are pure functions of the input (no randomness, no timestamps), so
regenerating a figure from the same data draws the same picture.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.lines import Line2D


def _format_label(label):
    if isinstance(label, tuple):
        return "(" + ",".join(str(v) for v in label) + ")"
    return str(label)


def _layered_positions(size, edges):
    """Longest-path layering: y is the rank, x spreads a rank's nodes evenly."""
    preds = {v: [] for v in range(size)}
    for u, v in edges:
        preds[v].append(u)
    rank = [None] * size
    remaining = set(range(size))
    while remaining:
        progressed = False
        for v in sorted(remaining):
            if all(rank[u] is not None for u in preds[v]):
                rank[v] = max((rank[u] + 1 for u in preds[v]), default=0)
                remaining.discard(v)
                progressed = True
        if not progressed:
            for v in sorted(remaining):
                rank[v] = 0
            break
    levels = {}
    for v in range(size):
        levels.setdefault(rank[v], []).append(v)
    pos = {}
    for r, nodes in levels.items():
        for k, v in enumerate(sorted(nodes)):
            pos[v] = (k - (len(nodes) - 1) / 2.0, r)
    return pos


def save_hasse_figure(labels, edges, path, title="cover relation"):
    """Draw the cover edges of a poset, ranks bottom-up, and save to path."""
    size = len(labels)
    pos = _layered_positions(size, edges)
    fig, ax = plt.subplots(figsize=(max(4.0, 1.2 * size ** 0.9), max(3.0, 1.0 + size * 0.35)))
    for u, v in edges:
        (x0, y0), (x1, y1) = pos[u], pos[v]
        ax.add_line(Line2D([x0, x1], [y0, y1], color="0.4", linewidth=1.2, zorder=1))
    xs = [pos[v][0] for v in range(size)]
    ys = [pos[v][1] for v in range(size)]
    ax.scatter(xs, ys, s=320, color="#dce9f5", edgecolor="#23577e", zorder=2)
    for v in range(size):
        ax.annotate(_format_label(labels[v]), pos[v], ha="center", va="center", fontsize=7.5, zorder=3)
    ax.set_title(title)
    ax.set_axis_off()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_star_figure(members, star_indices, path, title="partial star table"):
    """Grid of the star table: filled cells are defined (annotated with the
    result member's rank), hatched cells are undefined."""
    m = len(members)
    fig, ax = plt.subplots(figsize=(max(4.0, 0.38 * m + 1.5), max(3.5, 0.38 * m + 1.2)))
    grid = [[0 if star_indices[i][j] is None else 1 for j in range(m)] for i in range(m)]
    ax.imshow(grid, cmap="Blues", vmin=-0.4, vmax=2.2, origin="upper")
    for i in range(m):
        for j in range(m):
            v = star_indices[i][j]
            ax.text(j, i, "-" if v is None else str(v),
                    ha="center", va="center", fontsize=6.5,
                    color="#7a2020" if v is None else "#10243a")
    ticks = list(range(m))
    ax.set_xticks(ticks)
    ax.set_yticks(ticks)
    if m <= 24:
        names = [_format_label(t) for t in members]
        ax.set_xticklabels(names, rotation=90, fontsize=6)
        ax.set_yticklabels(names, fontsize=6)
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
