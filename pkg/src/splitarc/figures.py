"""Render interval and arc models to image files with matplotlib."""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .models import ArcModel, IntervalModel


def render_model(model: IntervalModel | ArcModel, path: str) -> None:
    if isinstance(model, IntervalModel):
        _render_intervals(model, path)
    else:
        _render_arcs(model, path)


def _render_intervals(m: IntervalModel, path: str) -> None:
    fig, ax = plt.subplots(figsize=(8, 0.5 * max(2, m.n)))
    for v, (lp, rp) in enumerate(m.spans):
        ax.hlines(v, lp, rp, lw=3)
        ax.plot([lp, rp], [v, v], "|", ms=10)
        ax.annotate(str(v + 1), (lp, v), textcoords="offset points",
                    xytext=(-12, -3))
    ax.set_yticks([])
    ax.set_xlabel("position")
    ax.set_title("interval model")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def _render_arcs(a: ArcModel, path: str) -> None:
    fig, ax = plt.subplots(figsize=(6, 6), subplot_kw={"aspect": "equal"})
    L = a.circle
    for v, arc in enumerate(a.arcs):
        r = 1.0 + 0.12 * v
        if arc is None:
            thetas = [i / 200 * 2 * math.pi for i in range(201)]
        else:
            lp, rp = arc
            span = (rp - lp) % L or L  # degenerate point arcs drawn tiny
            steps = max(2, int(span * 4))
            thetas = [
                2 * math.pi * ((lp + span * i / steps) % L) / L
                for i in range(steps + 1)
            ]
        xs = [r * math.cos(t) for t in thetas]
        ys = [r * math.sin(t) for t in thetas]
        ax.plot(xs, ys, lw=2.5)
        mid = thetas[len(thetas) // 2]
        ax.annotate(
            str(v + 1),
            ((r + 0.06) * math.cos(mid), (r + 0.06) * math.sin(mid)),
            ha="center", va="center", fontsize=8,
        )
    circle = plt.Circle((0, 0), 0.92, fill=False, ls=":", color="gray")
    ax.add_patch(circle)
    lim = 1.2 + 0.12 * a.n
    ax.set_xlim(-lim, lim)
    ax.set_ylim(-lim, lim)
    ax.set_axis_off()
    ax.set_title(f"arc model (circle length {L})")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
