"""Survey reports: delimited output plus rendered figures.

write_report runs a survey over every admissible exponent class at one m,
writes the rows to a CSV file, and renders two PNG charts next to it: the
certified distance per exponent class, and the differential uniformity of
the matching power map x -> x^e.  The Agg backend is forced so reports
render identically on headless machines.
"""
from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from . import families, planar
from .field import get_field
from .poly3 import F3Poly


@dataclass(frozen=True)
class ReportPaths:
    csv: Path
    figures: tuple[Path, ...]


_CSV_COLUMNS = (
    "m", "e", "coset", "n", "k", "d_lower", "d_upper", "d_exact",
    "optimal", "bound", "families", "generator",
)


def _write_csv(path: Path, m: int, rows: list[families.SurveyRow]) -> None:
    with path.open("w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(_CSV_COLUMNS)
        for row in rows:
            rep = row.report
            writer.writerow([
                m,
                row.e,
                " ".join(str(j) for j in row.coset),
                rep.n,
                rep.k,
                rep.d_lower,
                rep.d_upper,
                "" if rep.d_exact is None else rep.d_exact,
                rep.optimal,
                f"{rep.bound_name}:{rep.bound_cap}",
                ";".join(row.families),
                str(rep.generator),
            ])


def _distance_figure(path: Path, m: int, with_s_check: bool,
                     rows: list[families.SurveyRow]) -> None:
    fig, ax = plt.subplots(figsize=(max(6.0, 0.28 * len(rows) + 2.0), 4.0))
    xs = range(len(rows))
    for i, row in enumerate(rows):
        rep = row.report
        d = rep.d_exact if rep.d_exact is not None else rep.d_lower
        color = "tab:green" if rep.optimal else "tab:blue"
        hatch = None if rep.d_exact is not None else "//"
        ax.bar(i, d, color=color, hatch=hatch, edgecolor="black", linewidth=0.4)
        if rep.d_exact is None:
            ax.annotate(">=", (i, d), ha="center", va="bottom", fontsize=8)
    ax.set_xticks(list(xs))
    ax.set_xticklabels([str(row.e) for row in rows], rotation=90, fontsize=7)
    ax.set_xlabel("coset leader e")
    ax.set_ylabel("certified minimum distance")
    kind = "C(1,e,s)" if with_s_check else "C(1,e)"
    n = 3**m - 1
    ax.set_title(f"{kind} over GF(3^{m}), length {n} (green = optimal)")
    ax.set_ylim(0, max((r.report.d_upper for r in rows), default=5) + 1)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def _uniformity_figure(path: Path, m: int, rows: list[families.SurveyRow],
                       modulus: F3Poly | str | None) -> None:
    ctx = get_field(m, modulus)
    es = [row.e for row in rows]
    deltas = [planar.differential_spectrum(ctx, e).max_count for e in es]
    fig, ax = plt.subplots(figsize=(max(6.0, 0.28 * len(rows) + 2.0), 4.0))
    colors = ["tab:green" if row.report.optimal else "tab:blue" for row in rows]
    ax.bar(range(len(es)), deltas, color=colors, edgecolor="black", linewidth=0.4)
    ax.set_xticks(range(len(es)))
    ax.set_xticklabels([str(e) for e in es], rotation=90, fontsize=7)
    ax.set_xlabel("coset leader e")
    ax.set_ylabel("differential uniformity of x^e")
    ax.set_title(f"power maps on GF(3^{m}) (green = optimal code)")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def write_report(
    m: int,
    with_s_check: bool,
    out_dir: Path | str,
    budget: float | None = None,
    workers: int | None = None,
    modulus: F3Poly | str | None = None,
) -> ReportPaths:
    """Survey all admissible e at this m and write CSV + figures to out_dir.

    All rows are included, not only the optimal ones, so the figures show
    the full landscape.  Returns the paths written.
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    rows = families.survey(
        m,
        with_s_check,
        budget=budget,
        workers=workers,
        modulus=modulus,
        optimal_only=False,
    )
    suffix = f"m{m}_s" if with_s_check else f"m{m}"
    csv_path = out / f"survey_{suffix}.csv"
    _write_csv(csv_path, m, rows)
    fig1 = out / f"distance_{suffix}.png"
    _distance_figure(fig1, m, with_s_check, rows)
    fig2 = out / f"uniformity_{suffix}.png"
    _uniformity_figure(fig2, m, rows, modulus)
    return ReportPaths(csv=csv_path, figures=(fig1, fig2))
