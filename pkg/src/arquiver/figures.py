"""Matplotlib rendering of mesh fragments to image files."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .classify import Fragment


def render_fragment_figure(frag: Fragment, path: str, title: str | None = None) -> str:
    """Draw the fragment as a labelled mesh and write it to ``path``."""
    fig_w = max(4.0, 1.1 * frag.cols)
    fig_h = max(2.5, 1.0 * frag.rows)
    fig, ax = plt.subplots(figsize=(fig_w, fig_h))
    for (a, b) in frag.arrows():
        ax.annotate(
            "", xy=(b[0] - 0.12, b[1]), xytext=(a[0] + 0.12, a[1]),
            arrowprops=dict(arrowstyle="-|>", color="0.45", lw=0.9,
                            shrinkA=14, shrinkB=14),
        )
    for (c, r) in sorted(frag.nodes):
        ax.text(c, r, frag.label(c, r), ha="center", va="center", fontsize=9,
                bbox=dict(boxstyle="round,pad=0.25", fc="white", ec="0.6", lw=0.7))
    ax.set_xlim(-0.8, frag.cols - 0.2)
    ax.set_ylim(-0.8, frag.rows - 0.2)
    ax.set_axis_off()
    if title:
        ax.set_title(title, fontsize=10)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
