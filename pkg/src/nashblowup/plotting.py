"""Matplotlib renderings of fans and staircases.

Figures are pure functions of the JSON documents the CLI emits.  SVG output
is made reproducible by fixing the hash salt and dropping the date stamp.
"""

from __future__ import annotations

from pathlib import Path
from typing import Mapping

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

_STYLE = {
    "svg.hashsalt": "nashblowup",
    "font.size": 9,
    "axes.spines.top": False,
    "axes.spines.right": False,
}


def _save(fig, path: str | Path) -> Path:
    path = Path(path)
    fmt = path.suffix.lstrip(".") or "svg"
    meta = {"Date": None} if fmt == "svg" else {}
    fig.savefig(path, format=fmt, metadata=meta, bbox_inches="tight")
    plt.close(fig)
    return path


def plot_fan(fan: Mapping, path: str | Path, highlight: Mapping | None = None) -> Path:
    """Draw the rays of a fan inside sigma_n, each cone labelled by its tag.

    ``highlight`` is an optional second fan (the minimal resolution) whose
    rays are overdrawn dashed.
    """
    rays = [tuple(r) for r in fan["rays"]]
    with plt.rc_context(_STYLE):
        fig, ax = plt.subplots(figsize=(5, 5))
        scale = max(max(abs(x), abs(y)) for x, y in rays)
        for x, y in rays:
            ax.plot([0, x / scale], [0, y / scale], color="0.2", lw=1.2)
            ax.annotate(f"({x},{y})", (x / scale, y / scale), textcoords="offset points", xytext=(4, 2), fontsize=7)
        if highlight is not None:
            for x, y in highlight["rays"]:
                s = max(abs(x), abs(y))
                ax.plot([0, x / s], [0, y / s], color="tab:red", lw=0.8, ls="--")
        for cone in fan["cones"]:
            if cone.get("m") is None:
                continue
            i, j = cone["rays"]
            (x1, y1), (x2, y2) = rays[i], rays[j]
            n1 = max(abs(x1), abs(y1))
            n2 = max(abs(x2), abs(y2))
            mx = 0.55 * (x1 / n1 + x2 / n2)
            my = 0.55 * (y1 / n1 + y2 / n2)
            ax.text(mx, my, f"m=({cone['m'][0]},{cone['m'][1]})", fontsize=6, ha="center", color="tab:blue")
        ax.set_aspect("equal")
        ax.set_title(f"fan over sigma_{fan['n']}")
        ax.axhline(0, color="0.85", lw=0.5)
        ax.axvline(0, color="0.85", lw=0.5)
        return _save(fig, path)


def plot_staircase(data: Mapping, path: str | Path, title: str | None = None) -> Path:
    """Scatter the segments of a staircase (T or T'), one colour per segment."""
    with plt.rc_context(_STYLE):
        fig, ax = plt.subplots(figsize=(5, 5))
        cmap = plt.get_cmap("tab10")
        for idx, seg in enumerate(data["segments"]):
            if not seg:
                continue
            xs = [p[0] for p in seg]
            ys = [p[1] for p in seg]
            ax.plot(xs, ys, "o-", ms=4, lw=0.8, color=cmap(idx % 10), label=f"T_{idx}")
        ax.set_aspect("equal")
        ax.grid(True, color="0.9", lw=0.5)
        ax.set_xlabel("x")
        ax.set_ylabel("y")
        ax.legend(fontsize=6, loc="upper left")
        eta = ",".join(map(str, data["eta"]))
        ax.set_title(title or f"eta=({eta})")
        return _save(fig, path)
