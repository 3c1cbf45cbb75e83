#!/usr/bin/env python3

"""SVG schematics of point sets in H^2 for a finite hyperfield H.

Cells form an |H| x |H| grid, X1 along the horizontal axis and X2 upward,
each axis ordered negatives, zero, positives.  Every named set is drawn as a
nested coloured square inside the cells it contains.
"""

import logging
from typing import Iterable, List, Sequence, Tuple

import matplotlib

matplotlib.use('Agg')
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import Patch, Rectangle  # noqa: E402

from .errors import ArityError, UnsupportedError  # noqa: E402
from .hyperfield import HElem, Hyperfield  # noqa: E402
from .points import HPoint  # noqa: E402

logger = logging.getLogger(__name__)

COLORS = ('#4c72b0', '#dd8452', '#55a868', '#c44e52', '#8172b3', '#937860')
SVG_SALT = 'hyperconvex'


def axis_order(f: Hyperfield) -> List[HElem]:
    if not f.finite:
        raise UnsupportedError(f"{f.key} is infinite; only finite instances are plotted")
    nonzero = f.nonzero_elements()
    if not f.ordered:
        return [f.zero()] + sorted(nonzero, key=f.sort_key)
    pos = sorted((a for a in nonzero if f.is_positive(a)), key=f.sort_key)
    neg = [f.neg(a) for a in reversed(pos)]
    return neg + [f.zero()] + pos


def plot_grid(f: Hyperfield, sets: Sequence[Tuple[str, Iterable[HPoint]]], path: str, title: str = ''):
    """Write the grid with the named sets filled in; identical input gives identical bytes"""
    order = axis_order(f)
    index = {a.payload: i for i, a in enumerate(order)}
    size = len(order)
    named = []
    for name, points in sets:
        points = list(points)
        for p in points:
            if p.field != f:
                raise ArityError(f"{p} is not over {f.key}")
            if p.dim != 2:
                raise ArityError(f"Only planar sets are plotted, {p} has dimension {p.dim}")
        named.append((name, points))

    plt.rcParams['svg.hashsalt'] = SVG_SALT
    fig, ax = plt.subplots(figsize=(1 + size, 1 + size))
    for i in range(size):
        for j in range(size):
            ax.add_patch(Rectangle((i, j), 1, 1, fill=False, edgecolor='black', linewidth=1))

    step = 0.4 / max(len(named), 1)
    handles = []
    for k, (name, points) in enumerate(named):
        color = COLORS[k % len(COLORS)]
        inset = 0.05 + k * step
        for p in points:
            x, y = index[p[0].payload], index[p[1].payload]
            ax.add_patch(Rectangle((x + inset, y + inset), 1 - 2 * inset, 1 - 2 * inset,
                                   facecolor=color, edgecolor='none', alpha=0.8))
        handles.append(Patch(facecolor=color, label=name))

    labels = [str(a) for a in order]
    ax.set_xticks([i + 0.5 for i in range(size)])
    ax.set_xticklabels(labels)
    ax.set_yticks([i + 0.5 for i in range(size)])
    ax.set_yticklabels(labels)
    ax.set_xlim(0, size)
    ax.set_ylim(0, size)
    ax.set_aspect('equal')
    ax.set_xlabel('X1')
    ax.set_ylabel('X2')
    if title:
        ax.set_title(title)
    if handles:
        ax.legend(handles=handles, loc='upper left', bbox_to_anchor=(1.02, 1), frameon=False)
    fig.savefig(path, format='svg', bbox_inches='tight', metadata={'Date': None})
    plt.close(fig)
    logger.debug("Wrote %s with %d sets", path, len(named))
