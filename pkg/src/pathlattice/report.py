"""Rank-distribution experiment report: delimited tables plus rendered figures.

The experiment computes Whitney numbers of the Dyck lattices over a range
of semilengths with the area dynamic program and records whether each
distribution is unimodal.  Unimodality here is measured and reported,
never asserted: it is an open property of these lattices.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

from .dyck import whitney_dp
from .posets import is_unimodal


@dataclass(frozen=True)
class WhitneyRow:
    n: int
    counts: tuple[int, ...]
    unimodal: bool
    peak_rank: int
    total: int


def whitney_rows(ns) -> list[WhitneyRow]:
    rows = []
    for n in ns:
        counts = whitney_dp(n)
        peak = max(range(len(counts)), key=lambda i: counts[i])
        rows.append(
            WhitneyRow(
                n=n,
                counts=tuple(counts),
                unimodal=is_unimodal(counts),
                peak_rank=peak,
                total=sum(counts),
            )
        )
    return rows


def write_whitney_report(ns, out_dir: str | Path) -> dict[str, Path]:
    """Write the experiment to `out_dir`:

      whitney_counts.csv   one row per (n, rank): exact count
      whitney_summary.csv  one row per n: total, unimodality, peak rank
      whitney_counts.png   rank distributions on a log scale
      whitney_ranks.png    number of ranks and peak position by n

    Returns the written paths keyed by short name.
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    rows = whitney_rows(ns)

    counts_path = out / "whitney_counts.csv"
    with counts_path.open("w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["n", "rank", "count"])
        for row in rows:
            for r, c in enumerate(row.counts):
                w.writerow([row.n, r, c])

    summary_path = out / "whitney_summary.csv"
    with summary_path.open("w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["n", "num_ranks", "total", "unimodal", "peak_rank"])
        for row in rows:
            w.writerow(
                [row.n, len(row.counts), row.total, str(row.unimodal).lower(), row.peak_rank]
            )

    figures = _render_figures(rows, out)
    return {"counts": counts_path, "summary": summary_path, **figures}


def _render_figures(rows: list[WhitneyRow], out: Path) -> dict[str, Path]:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    dist_path = out / "whitney_counts.png"
    fig, ax = plt.subplots(figsize=(8, 5))
    shown = _select_rows(rows)
    for row in shown:
        xs = range(len(row.counts))
        ax.plot(xs, [float(c) for c in row.counts], lw=1.2, label=f"n={row.n}")
    ax.set_yscale("log")
    ax.set_xlabel("rank")
    ax.set_ylabel("paths of that rank")
    verdicts = "all unimodal" if all(r.unimodal for r in rows) else "NON-UNIMODAL CASES"
    ax.set_title(f"Dyck lattice rank distributions ({verdicts} in range)")
    ax.legend(loc="upper right", fontsize=8)
    fig.tight_layout()
    fig.savefig(dist_path, dpi=150)
    plt.close(fig)

    ranks_path = out / "whitney_ranks.png"
    fig, ax = plt.subplots(figsize=(8, 4))
    ax.plot([r.n for r in rows], [len(r.counts) for r in rows], "o-", lw=1, label="ranks")
    ax.plot([r.n for r in rows], [r.peak_rank for r in rows], "s-", lw=1, label="peak rank")
    ax.set_xlabel("semilength n")
    ax.set_ylabel("count")
    ax.set_title("Rank range and distribution peak by semilength")
    ax.legend()
    fig.tight_layout()
    fig.savefig(ranks_path, dpi=150)
    plt.close(fig)
    return {"distributions": dist_path, "ranks": ranks_path}


def _select_rows(rows: list[WhitneyRow], limit: int = 8) -> list[WhitneyRow]:
    if len(rows) <= limit:
        return rows
    stride = max(1, len(rows) // limit)
    picked = rows[::stride]
    if rows[-1] not in picked:
        picked.append(rows[-1])
    return picked
