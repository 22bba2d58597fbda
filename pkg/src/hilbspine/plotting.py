"""Matplotlib figures written next to CLI reports."""

from __future__ import annotations

import math
from collections import defaultdict
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import Rectangle  # noqa: E402

from .macaulay import MacaulayMatrix  # noqa: E402
from .poset import DominancePoset, SpineGraph  # noqa: E402
from .staircase import MonomialIdeal  # noqa: E402

BOX = 0.12


def draw_young(ax, M: MonomialIdeal, x0: float, y0: float, box: float = BOX, color: str = "0.85"):
    """Staircase of ``M`` centred at ``(x0, y0)``; row 0 at the bottom."""
    w = M.lam[0] * box
    h = len(M.lam) * box
    for j, row in enumerate(M.lam):
        for i in range(row):
            ax.add_patch(
                Rectangle(
                    (x0 - w / 2 + i * box, y0 - h / 2 + j * box),
                    box,
                    box,
                    facecolor=color,
                    edgecolor="black",
                    linewidth=0.6,
                    zorder=3,
                )
            )


def _layered_positions(levels: dict[int, int]) -> dict[int, tuple[float, float]]:
    by_level = defaultdict(list)
    for v, lev in levels.items():
        by_level[lev].append(v)
    pos = {}
    for lev, vs in by_level.items():
        for k, v in enumerate(sorted(vs)):
            pos[v] = (k - (len(vs) - 1) / 2, -lev)
    return pos


def plot_spine(spine: SpineGraph, path: str | Path) -> Path:
    """Vertices on a circle in enumeration order (one row first), edges as chords."""
    n = len(spine.vertices)
    radius = max(1.0, n / 4)
    pos = {
        k: (radius * math.sin(2 * math.pi * k / n), radius * math.cos(2 * math.pi * k / n))
        for k in range(n)
    }
    size = 2.5 + 0.9 * radius
    fig, ax = plt.subplots(figsize=(size, size + 0.4))
    for (u, v), ws in spine.edges.items():
        (x1, y1), (x2, y2) = pos[u], pos[v]
        ax.plot([x1, x2], [y1, y2], color="0.25", linewidth=1.0, zorder=1)
    for k, M in enumerate(spine.vertices):
        draw_young(ax, M, *pos[k], box=min(BOX * 2, 0.7 / max(M.lam[0], len(M.lam))))
    ax.set_title(f"spine, N = {spine.colength}: {len(spine.edges)} edges")
    ax.set_aspect("equal")
    ax.autoscale_view()
    ax.margins(0.12)
    ax.axis("off")
    return _save(fig, path)


def plot_poset(P: DominancePoset, path: str | Path) -> Path:
    n = len(P.elements)
    height = {k: 0 for k in range(n)}
    for _ in range(n):
        for lo, hi in P.hasse:
            height[hi] = max(height[hi], height[lo] + 1)
    # draw left to right: minimum on the left
    pos = {k: (-y, x) for k, (x, y) in _layered_positions(height).items()}
    fig, ax = plt.subplots(figsize=(1.5 + 1.2 * max(height.values(), default=0), 3))
    for lo, hi in P.hasse:
        (x1, y1), (x2, y2) = pos[lo], pos[hi]
        ax.annotate(
            "", xy=(x2, y2), xytext=(x1, y1),
            arrowprops=dict(arrowstyle="->", shrinkA=18, shrinkB=18, color="0.3"),
        )
    for k, M in enumerate(P.elements):
        color = "tab:blue" if M == P.minimum else "tab:red" if M == P.maximum else "0.85"
        draw_young(ax, M, *pos[k], box=min(BOX, 0.5 / max(M.lam[0], len(M.lam))), color=color)
    ax.set_title(f"dominance order, h = ({P.hf}), grading ({P.grading})", fontsize=9)
    ax.set_aspect("equal")
    ax.autoscale_view()
    ax.margins(0.3)
    ax.axis("off")
    return _save(fig, path)


def plot_macaulay(R: MacaulayMatrix, path: str | Path) -> Path:
    """Support of the matrix, each nonzero cell labelled by its weighted degree."""
    nr, nc = R.shape
    fig, ax = plt.subplots(figsize=(1.5 + 1.1 * nc, 1 + 0.45 * nr))
    for r in range(nr):
        for c in range(nc):
            e = R.entries[r][c]
            if not e:
                continue
            deg = e.weighted_degree()
            ax.add_patch(Rectangle((c, nr - 1 - r), 1, 1, facecolor="tab:orange" if deg else "0.6"))
            ax.text(c + 0.5, nr - 0.5 - r, "?" if deg is None else str(deg), ha="center", va="center")
    ax.set_xlim(0, nc)
    ax.set_ylim(0, nr)
    ax.set_xticks([c + 0.5 for c in range(nc)], [str(m) for m in R.cols], rotation=45)
    ax.set_yticks([nr - 0.5 - r for r in range(nr)], [str(m) for m in R.rows])
    ax.set_title(f"degree-{R.d} Macaulay matrix of <{R.M}>" + (" (bar)" if R.killed else ""), fontsize=9)
    ax.grid(False)
    return _save(fig, path)


def _save(fig, path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
