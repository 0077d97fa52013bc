"""Figures for the count tables, written next to the TSV output."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

STYLE = {
    "font.size": 10,
    "axes.labelsize": 10,
    "legend.fontsize": 8,
    "xtick.labelsize": 8,
    "ytick.labelsize": 8,
    "figure.figsize": (5.0, 3.4),
    "savefig.dpi": 150,
}


def render_count_table(rows: list[dict], kind: str, path) -> Path:
    """Plot formula counts (line), brute counts (markers) and addends on a log axis.

    ``rows`` are the dicts produced by :func:`latdiff.cli.table_rows`.
    """
    path = Path(path)
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots()
        pts = [(r["n"], r["formula"]) for r in rows if r["formula"] is not None]
        if pts:
            ax.plot(*zip(*pts), "-o", ms=3, label="closed form")
        brute = [(r["n"], r["brute"]) for r in rows if r.get("brute") is not None]
        if brute:
            ax.plot(*zip(*brute), "x", ms=7, label="enumeration")
        if kind == "quasi":
            for key, label in (("cubic", "cubic term"), ("binomial", "binomial sum")):
                pts = [(r["n"], r[key]) for r in rows if r.get(key) is not None]
                if pts:
                    ax.plot(*zip(*pts), "--", lw=1, label=label)
        ax.set_yscale("log")
        ax.set_xlabel("n (lattice size)")
        ax.set_ylabel("difference operators")
        ax.set_title("chains $L_n$" if kind == "chains" else "quasi-antichains $M_{n-2}$")
        ax.legend(frameon=False)
        fig.tight_layout()
        path.parent.mkdir(parents=True, exist_ok=True)
        fig.savefig(path)
        plt.close(fig)
    return path
