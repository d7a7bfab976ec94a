"""Figures written next to the CSV reports of ``analyze`` and ``bench``."""

from __future__ import annotations

import math
from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
from matplotlib.figure import Figure  # noqa: E402

from .analyzer import CaseRecord  # noqa: E402

GOLDEN = (1 + math.sqrt(5)) / 2

_RC = {
    "font.size": 9,
    "axes.spines.top": False,
    "axes.spines.right": False,
}


def _figure(width=6.0, height=None) -> Figure:
    matplotlib.rcParams.update(_RC)
    if height is None:
        height = width / GOLDEN
    return Figure(figsize=(width, height), layout="constrained")


def plot_cases(records: Sequence[CaseRecord], path: str | Path, bound: float | None = None,
               title: str = "worst branching vectors") -> Path:
    """Horizontal bars of branching numbers, worst case on top."""
    path = Path(path)
    fig = _figure(6.0, max(2.0, 0.32 * len(records) + 1.0))
    ax = fig.add_subplot()
    names = [f"a={r.alpha} ({','.join(map(str, r.composed))})" for r in records]
    values = [r.branching_number for r in records]
    colors = ["tab:red" if r.alpha == 2 else "tab:blue" if r.alpha == 3 else "tab:green" for r in records]
    ypos = range(len(records))[::-1]
    ax.barh(list(ypos), values, color=colors, height=0.6)
    ax.set_yticks(list(ypos), names, fontsize=7)
    lo = min(values + [GOLDEN]) - 0.05
    ax.set_xlim(lo, max(values) + 0.03)
    ax.axvline(GOLDEN, color="0.5", ls=":", lw=1, label="(1,2)")
    if bound is not None:
        ax.axvline(bound, color="k", ls="--", lw=1, label=f"bound {bound:.3f}")
    ax.set_xlabel("branching number")
    ax.set_title(title)
    ax.legend(loc="lower right", fontsize=7, frameon=False)
    fig.savefig(path, dpi=150)
    return path


def plot_bench(rows: Sequence[dict], path: str | Path) -> Path:
    """Solve time and search nodes against the optimum, one point per instance."""
    path = Path(path)
    fig = _figure(7.0, 3.0)
    ax_t, ax_n = fig.subplots(1, 2)
    sizes = [r["size"] for r in rows]
    ax_t.scatter(sizes, [max(r["elapsed"], 1e-5) for r in rows], s=12)
    ax_t.set_yscale("log")
    ax_t.set_xlabel("optimum k")
    ax_t.set_ylabel("seconds")
    ax_n.scatter(sizes, [max(r["nodes"], 1) for r in rows], s=12, color="tab:orange")
    ax_n.set_yscale("log")
    ax_n.set_xlabel("optimum k")
    ax_n.set_ylabel("search nodes")
    if sizes and max(sizes) > 0:
        ks = list(range(0, max(sizes) + 1))
        base = min(max(r["nodes"], 1) for r in rows)
        ax_n.plot(ks, [base * 1.811 ** k for k in ks], color="k", ls="--", lw=0.8, label="1.811^k")
        ax_n.legend(fontsize=7, frameon=False)
    fig.savefig(path, dpi=150)
    return path
