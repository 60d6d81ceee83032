"""Render a report's table to a figure file next to the delimited output."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

__all__ = ["render_report"]


def _numeric_columns(report):
    names = []
    for i, name in enumerate(report.columns):
        vals = [r[i] for r in report.rows]
        if all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in vals):
            names.append(name)
    return names


def render_report(report, path: str, title: str | None = None):
    """One figure per report: first numeric column on x, the rest as lines.

    Rows that carry distinguishing string fields (method, alpha, ...) are
    split into separate lines.  Axes switch to log scale when the data
    spans enough positive decades for that to help.
    """
    numeric = _numeric_columns(report)
    if len(numeric) < 2:
        raise ValueError("nothing to plot: fewer than two numeric columns")
    xcol, ycols = numeric[0], numeric[1:]
    tags = [c for c in report.columns if c not in numeric]

    def key(row):
        return tuple(row[report.columns.index(t)] for t in tags)

    groups = {}
    for row in report.rows:
        groups.setdefault(key(row), []).append(row)

    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    xi = report.columns.index(xcol)
    for gkey, rows in groups.items():
        xs = np.array([r[xi] for r in rows], dtype=float)
        for yc in ycols:
            yi = report.columns.index(yc)
            ys = np.array([r[yi] for r in rows], dtype=float)
            label = yc if not any(str(k) for k in gkey) else f"{yc} [{' '.join(str(k) for k in gkey if str(k))}]"
            ax.plot(xs, ys, marker="o", markersize=3, linewidth=1.2, label=label)

    xs_all = np.array([r[xi] for r in report.rows], dtype=float)
    if np.all(xs_all > 0) and xs_all.max() / max(xs_all.min(), 1e-300) > 50:
        ax.set_xscale("log")
    ys_all = np.concatenate([
        np.asarray([r[report.columns.index(yc)] for r in report.rows], dtype=float)
        for yc in ycols
    ])
    pos = ys_all[ys_all > 0]
    if len(pos) == len(ys_all) and len(pos) and pos.max() / pos.min() > 100:
        ax.set_yscale("log")
    ax.set_xlabel(xcol)
    ax.grid(True, which="both", alpha=0.3)
    ax.legend(fontsize=8, loc="best")
    if title is None:
        title = report.metadata.get("command", "report")
    ax.set_title(str(title))
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
