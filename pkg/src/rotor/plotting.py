"""Figure emission: deterministic SVG staircases plus matplotlib rendering.

The SVG writer draws the graph of a lift over one period by hand (byte
stable for fixed input); the PNG path goes through matplotlib for report
figures, and the CSV writer emits the delimited vertex data that sits next
to the figures.
"""

from __future__ import annotations

from fractions import Fraction

from .circle import format_rational
from .plmaps import PLLift

_SVG_SIZE = 420
_MARGIN = 30


class PlotError(OSError):
    """Raised when a figure target cannot be written."""


def _graph_segments(
    lift: PLLift,
) -> tuple[list[tuple[Fraction, Fraction, Fraction, Fraction]], list[tuple[Fraction, Fraction, bool]]]:
    """Segments (x0, y0, x1, y1) over one period plus (x, y, filled) node dots."""
    segments = []
    dots: list[tuple[Fraction, Fraction, bool]] = []
    m = len(lift.breakpoints)
    for i in range(m):
        a, b, va, vb = lift._segment(i)
        segments.append((a, va, b, vb))
        bp, left, point, right = (
            lift.breakpoints[i],
            lift.left[i],
            lift.point[i],
            lift.right[i],
        )
        dots.append((bp, point, True))
        if left != point:
            dots.append((bp, left, False))
        if right != point:
            dots.append((bp, right, False))
    return segments, dots


def _bounds(lift: PLLift) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    x0 = lift.breakpoints[0]
    values = list(lift.left) + list(lift.point) + list(lift.right)
    values.append(lift.left[0] + lift.rise)
    return x0, x0 + 1, min(values), max(values)


def emit_svg(lift: PLLift, path: str) -> None:
    """Write a deterministic SVG of the graph over one period.

    Jumps appear as vertical gaps with open circles at unattained one-sided
    limits and a filled dot at the value.
    """
    xmin, xmax, ymin, ymax = _bounds(lift)
    if ymax == ymin:
        ymax = ymin + 1
    span_x = xmax - xmin
    span_y = ymax - ymin
    inner = _SVG_SIZE - 2 * _MARGIN

    def sx(x: Fraction) -> float:
        return _MARGIN + float((x - xmin) / span_x) * inner

    def sy(y: Fraction) -> float:
        return _SVG_SIZE - _MARGIN - float((y - ymin) / span_y) * inner

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SVG_SIZE}" height="{_SVG_SIZE}" '
        f'viewBox="0 0 {_SVG_SIZE} {_SVG_SIZE}">',
        f'<rect width="{_SVG_SIZE}" height="{_SVG_SIZE}" fill="white"/>',
        f'<rect x="{_MARGIN}" y="{_MARGIN}" width="{inner}" height="{inner}" '
        'fill="none" stroke="#999" stroke-width="1"/>',
    ]
    segments, dots = _graph_segments(lift)
    for x0, y0, x1, y1 in segments:
        parts.append(
            f'<line x1="{sx(x0):.3f}" y1="{sy(y0):.3f}" x2="{sx(x1):.3f}" y2="{sy(y1):.3f}" '
            'stroke="#1f4e9c" stroke-width="2"/>'
        )
    for x, y, filled in dots:
        fill = "#1f4e9c" if filled else "white"
        parts.append(
            f'<circle cx="{sx(x):.3f}" cy="{sy(y):.3f}" r="3.5" fill="{fill}" '
            'stroke="#1f4e9c" stroke-width="1.5"/>'
        )
    parts.append("</svg>")
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write("\n".join(parts) + "\n")
    except OSError as exc:
        raise PlotError(f"cannot write SVG to {path}: {exc}") from exc


def emit_csv(lift: PLLift, path: str) -> None:
    """Delimited breakpoint data: breakpoint, left, value, right per row."""
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write("breakpoint,left,value,right\n")
            for b, l, v, r in lift.graph_vertices():
                fh.write(
                    ",".join(format_rational(t) for t in (b, l, v, r)) + "\n"
                )
    except OSError as exc:
        raise PlotError(f"cannot write CSV to {path}: {exc}") from exc


def emit_png(lift: PLLift, path: str, title: str = "") -> None:
    """Render the staircase with matplotlib (report figure path)."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(5, 5))
    segments, dots = _graph_segments(lift)
    for x0, y0, x1, y1 in segments:
        ax.plot([float(x0), float(x1)], [float(y0), float(y1)], color="#1f4e9c", lw=2)
    for x, y, filled in dots:
        ax.plot(
            [float(x)], [float(y)],
            marker="o", ms=6,
            mfc="#1f4e9c" if filled else "white",
            mec="#1f4e9c",
        )
    ax.set_xlabel("x")
    ax.set_ylabel("lift(x)")
    if title:
        ax.set_title(title)
    ax.grid(True, alpha=0.3)
    try:
        fig.savefig(path, dpi=120, bbox_inches="tight")
    except OSError as exc:
        raise PlotError(f"cannot write PNG to {path}: {exc}") from exc
    finally:
        plt.close(fig)
