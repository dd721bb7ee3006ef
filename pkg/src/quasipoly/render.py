"""Figure rendering via matplotlib, written straight to SVG or PNG files.

The construction figure follows the composition used throughout this
domain: the model set patch drawn faintly, the polygon boldly, and one
representative line per direction through a chosen vertex.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .geometry import DirectionSet, Polygon
from .modelset import PointSet

_SVG_METADATA = {"Date": None}  # keep SVG output byte-stable across runs


def _save(fig, path) -> None:
    if str(path).endswith(".svg"):
        fig.savefig(path, metadata=_SVG_METADATA)
    else:
        fig.savefig(path)
    plt.close(fig)


def render_point_set(ps: PointSet | np.ndarray, path, title: str | None = None) -> None:
    xy = ps.embedded() if isinstance(ps, PointSet) else np.asarray(ps, dtype=float)
    fig, ax = plt.subplots(figsize=(8, 8))
    if len(xy):
        ax.plot(xy[:, 0], xy[:, 1], ".", color="#444444", markersize=2.5)
    ax.set_aspect("equal")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    _save(fig, path)


def render_construction(
    polygon: Polygon,
    dirs: DirectionSet,
    path,
    patch: PointSet | None = None,
    title: str | None = None,
) -> None:
    verts = polygon.as_floats()
    fig, ax = plt.subplots(figsize=(8, 8))

    if patch is not None and len(patch.points):
        xy = patch.embedded()
        ax.plot(xy[:, 0], xy[:, 1], ".", color="#bbbbbb", markersize=2.0, zorder=1)

    span = float(np.abs(verts).max()) * 1.25 + 1.0
    anchor = verts[verts[:, 1].argmax()]
    cmap = plt.get_cmap("tab10")
    for i, u in enumerate(dirs):
        dx, dy = np.cos(u.angle), np.sin(u.angle)
        reach = 2.5 * span
        ax.plot(
            [anchor[0] - reach * dx, anchor[0] + reach * dx],
            [anchor[1] - reach * dy, anchor[1] + reach * dy],
            linestyle="--",
            linewidth=0.8,
            color=cmap(i % 10),
            label=f"{np.degrees(u.angle):.1f}\N{DEGREE SIGN}",
            zorder=2,
        )

    closed = np.vstack([verts, verts[:1]])
    ax.plot(closed[:, 0], closed[:, 1], "-", color="#1a1a1a", linewidth=2.0, zorder=3)
    ax.plot(verts[:, 0], verts[:, 1], "o", color="#1a1a1a", markersize=4.5, zorder=4)

    center = verts.mean(axis=0)
    ax.set_xlim(center[0] - span, center[0] + span)
    ax.set_ylim(center[1] - span, center[1] + span)
    ax.set_aspect("equal")
    ax.legend(loc="upper right", fontsize=7, title="directions")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    _save(fig, path)
