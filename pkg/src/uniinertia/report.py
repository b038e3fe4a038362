"""Figures written next to the text reports of ``census`` and ``verify``.

Uses the object-oriented matplotlib API so no GUI backend is ever touched.
"""

from __future__ import annotations

from pathlib import Path

from matplotlib.backends.backend_agg import FigureCanvasAgg
from matplotlib.figure import Figure

from .classify import CensusResult
from .verify import VerificationReport

STYLE = {
    "font.size": 9,
    "axes.spines.top": False,
    "axes.spines.right": False,
}


def _new_figure(width: float = 6.0, height: float = 3.6) -> Figure:
    fig = Figure(figsize=(width, height), dpi=120)
    FigureCanvasAgg(fig)
    return fig


def _save(fig: Figure, path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.tight_layout()
    # fixed metadata keeps repeated runs byte-identical
    fig.savefig(path, metadata={"Software": None} if path.suffix == ".png" else None)
    return path


def plot_census(result: CensusResult, path: str | Path) -> Path:
    """Grouped bars per girth: all unicyclic graphs of the order vs. those selected."""
    import matplotlib

    with matplotlib.rc_context(STYLE):
        fig = _new_figure()
        ax = fig.add_subplot(1, 1, 1)
        girths = sorted(result.girth_totals)
        selected = {k: 0 for k in girths}
        for rec in result.records:
            selected[rec.girth] += 1
        xs = range(len(girths))
        ax.bar([x - 0.2 for x in xs], [result.girth_totals[k] for k in girths], 0.4, label="all", color="0.75")
        bars = ax.bar([x + 0.2 for x in xs], [selected[k] for k in girths], 0.4, label=result.criterion or "selected", color="C0")
        ax.bar_label(bars, fontsize=8)
        ax.set_xticks(list(xs), [str(k) for k in girths])
        ax.set_xlabel("girth")
        ax.set_ylabel("graphs")
        ax.set_title(f"unicyclic graphs of order {result.order}: {result.count} of {result.total} selected")
        ax.legend(frameon=False)
        return _save(fig, path)


def plot_verification(report: VerificationReport, path: str | Path) -> Path:
    """Horizontal pass/fail bars for every check in a sweep."""
    import matplotlib

    names = sorted(report.tallies)
    with matplotlib.rc_context(STYLE):
        fig = _new_figure(6.5, 0.25 * len(names) + 1.2)
        ax = fig.add_subplot(1, 1, 1)
        ys = range(len(names))
        ax.barh(list(ys), [report.tallies[n].passed for n in names], color="C2", label="pass")
        ax.barh(
            list(ys),
            [report.tallies[n].failed for n in names],
            left=[report.tallies[n].passed for n in names],
            color="C3",
            label="fail",
        )
        ax.set_yticks(list(ys), names)
        ax.set_xscale("log")
        ax.set_xlabel("checks")
        ax.set_title(f"verify order={report.order} samples={report.samples} seed={report.seed}: "
                     f"{'PASS' if report.ok else 'FAIL'}")
        ax.legend(frameon=False, loc="lower right")
        return _save(fig, path)
