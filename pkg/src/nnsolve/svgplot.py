"""Minimal hand-rolled SVG line plots for reconstruction results.

Plain SVG text output: deterministic, diffable, and free of plotting
dependencies.  One file per (problem, solver) pair plus a per-problem
summary overlaying every solver.
"""
from __future__ import annotations

from pathlib import Path
from xml.sax.saxutils import escape

import numpy as np

__all__ = ["render_line_plot", "emit_plots"]

WIDTH, HEIGHT = 640, 400
MARGIN_LEFT, MARGIN_RIGHT, MARGIN_TOP, MARGIN_BOTTOM = 56, 16, 40, 32

# stable per-solver colors so summary plots read consistently
SOLVER_COLORS = {
    "art": "#e6a817",
    "inv": "#b0b0b0",
    "mrnsd": "#2ca02c",
    "nnls": "#9467bd",
    "smart": "#17becf",
    "tr": "#d62728",
    "trnnc": "#1f77b4",
}
REFERENCE_COLOR = "#000000"
FALLBACK_COLOR = "#888888"


def _scale(values, lo, hi, out_lo, out_hi):
    span = hi - lo
    if span == 0.0:
        span = 1.0
    return out_lo + (np.asarray(values, dtype=float) - lo) / span * (out_hi - out_lo)


def _polyline(xs, ys, color, width=1.5, dash=None):
    pts = " ".join(f"{x:.2f},{y:.2f}" for x, y in zip(xs, ys))
    dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
    return (
        f'<polyline fill="none" stroke="{color}" stroke-width="{width}"'
        f'{dash_attr} points="{pts}" />'
    )


def render_line_plot(curves, title: str) -> str:
    """Render labelled index-vs-value curves as an SVG document.

    `curves` is a list of (label, color, dash, values) tuples sharing one
    index axis 1..len(values).
    """
    all_vals = np.concatenate([np.asarray(c[3], dtype=float) for c in curves])
    ymin, ymax = float(all_vals.min()), float(all_vals.max())
    pad = 0.05 * (ymax - ymin or 1.0)
    ymin, ymax = ymin - pad, ymax + pad
    n = max(len(c[3]) for c in curves)

    x_lo, x_hi = MARGIN_LEFT, WIDTH - MARGIN_RIGHT
    y_lo, y_hi = HEIGHT - MARGIN_BOTTOM, MARGIN_TOP

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="#ffffff" />',
        f'<text x="{WIDTH / 2:.0f}" y="24" text-anchor="middle" '
        f'font-family="sans-serif" font-size="15">{escape(title)}</text>',
        # axes
        f'<line x1="{x_lo}" y1="{y_lo}" x2="{x_hi}" y2="{y_lo}" stroke="#333" />',
        f'<line x1="{x_lo}" y1="{y_lo}" x2="{x_lo}" y2="{y_hi}" stroke="#333" />',
        f'<text x="{x_lo - 6}" y="{y_lo + 4}" text-anchor="end" '
        f'font-family="sans-serif" font-size="11">{ymin:.3g}</text>',
        f'<text x="{x_lo - 6}" y="{y_hi + 4}" text-anchor="end" '
        f'font-family="sans-serif" font-size="11">{ymax:.3g}</text>',
        f'<text x="{x_lo}" y="{y_lo + 16}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="11">1</text>',
        f'<text x="{x_hi}" y="{y_lo + 16}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="11">{n}</text>',
    ]
    for label, color, dash, values in curves:
        values = np.asarray(values, dtype=float)
        xs = _scale(np.arange(1, len(values) + 1), 1, n, x_lo, x_hi)
        ys = _scale(values, ymin, ymax, y_lo, y_hi)
        parts.append(_polyline(xs, ys, color, dash=dash))
    # legend, top-left of the plot area
    ly = MARGIN_TOP + 8
    for label, color, _dash, _values in curves:
        parts.append(
            f'<line x1="{x_lo + 8}" y1="{ly}" x2="{x_lo + 28}" y2="{ly}" '
            f'stroke="{color}" stroke-width="2" />'
        )
        parts.append(
            f'<text x="{x_lo + 34}" y="{ly + 4}" font-family="sans-serif" '
            f'font-size="11">{escape(label)}</text>'
        )
        ly += 16
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def emit_plots(records, problems, solutions, outdir) -> list[Path]:
    """Write one SVG per record plus a summary SVG per problem.

    Files are named `<problem>_<solver>.svg` and `<problem>_summary.svg`.
    Records whose solver failed (no retained solution) are skipped.
    Returns the written paths.
    """
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []
    by_problem: dict[str, list] = {}
    for record in records:
        key = (record.problem, record.solver)
        if key not in solutions:
            continue
        problem = problems[record.problem]
        v = solutions[key]
        color = SOLVER_COLORS.get(record.solver, FALLBACK_COLOR)
        title = f"{record.solver} — ρ={record.rho:.3g}"
        svg = render_line_plot(
            [
                ("v0", REFERENCE_COLOR, "4 3", problem.v0),
                (record.solver, color, None, v),
            ],
            title,
        )
        path = out / f"{record.problem}_{record.solver}.svg"
        path.write_text(svg, encoding="utf-8")
        written.append(path)
        by_problem.setdefault(record.problem, []).append((record.solver, color, v))

    for name, solver_curves in by_problem.items():
        problem = problems[name]
        curves = [("v0", REFERENCE_COLOR, "4 3", problem.v0)]
        curves += [(s, c, None, v) for s, c, v in sorted(solver_curves)]
        path = out / f"{name}_summary.svg"
        path.write_text(render_line_plot(curves, name), encoding="utf-8")
        written.append(path)
    return written
