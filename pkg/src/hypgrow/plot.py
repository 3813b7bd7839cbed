"""Static SVG line plots of profile CSV files.

The SVG is written by hand (no plotting library) so that identical input
gives byte-identical output.
"""

from __future__ import annotations

import math

from .profile import ProfileParseError, read_profile_csv, write_atomic

WIDTH, HEIGHT = 640, 420
MARGIN = dict(left=64, right=20, top=24, bottom=48)
STYLES = {"f": "#1f4e9c", "g": "#1f4e9c", "env_lo": "#b03a2e", "env_hi": "#2e8b57"}


def _fmt(x: float) -> str:
    return f"{x:.3f}"


def _ticks(lo: float, hi: float, n: int = 5):
    if hi <= lo:
        return [lo]
    return [lo + (hi - lo) * i / (n - 1) for i in range(n)]


def profile_svg(rows) -> str:
    """SVG text for the rows of a profile CSV."""
    has_f = any(r.f is not None for r in rows)
    series = {}
    if has_f:
        series["f"] = [(r.t, r.f) for r in rows if r.f is not None]
        for name in ("env_lo", "env_hi"):
            pts = [(r.t, getattr(r, name)) for r in rows if getattr(r, name) is not None]
            if pts:
                series[name] = pts
    else:
        series["g"] = [(r.t, r.g) for r in rows]
    xs = [p[0] for pts in series.values() for p in pts]
    ys = [p[1] for pts in series.values() for p in pts if math.isfinite(p[1])]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys + [0.0]), max(ys)
    if x1 == x0:
        x1 = x0 + 1.0
    if y1 == y0:
        y1 = y0 + 1.0
    pw = WIDTH - MARGIN["left"] - MARGIN["right"]
    ph = HEIGHT - MARGIN["top"] - MARGIN["bottom"]
    X = lambda x: MARGIN["left"] + (x - x0) / (x1 - x0) * pw
    Y = lambda y: MARGIN["top"] + (1.0 - (y - y0) / (y1 - y0)) * ph
    ylabel = "f_m(t)" if has_f else "g(t)"

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
           f'viewBox="0 0 {WIDTH} {HEIGHT}">',
           f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
           f'<g stroke="black" stroke-width="1">'
           f'<line x1="{MARGIN["left"]}" y1="{_fmt(Y(y0))}" x2="{MARGIN["left"] + pw}" y2="{_fmt(Y(y0))}"/>'
           f'<line x1="{MARGIN["left"]}" y1="{MARGIN["top"]}" x2="{MARGIN["left"]}" y2="{MARGIN["top"] + ph}"/></g>',
           '<g font-family="sans-serif" font-size="11" fill="black">']
    for tx in _ticks(x0, x1):
        out.append(f'<text x="{_fmt(X(tx))}" y="{MARGIN["top"] + ph + 16}" text-anchor="middle">{tx:.3g}</text>')
    for ty in _ticks(y0, y1):
        out.append(f'<text x="{MARGIN["left"] - 6}" y="{_fmt(Y(ty) + 4)}" text-anchor="end">{ty:.3g}</text>')
    out.append(f'<text x="{MARGIN["left"] + pw / 2:.1f}" y="{HEIGHT - 10}" text-anchor="middle" '
               f'font-size="13">t</text>')
    out.append(f'<text x="16" y="{MARGIN["top"] + ph / 2:.1f}" text-anchor="middle" font-size="13" '
               f'transform="rotate(-90 16 {MARGIN["top"] + ph / 2:.1f})">{ylabel}</text>')
    out.append("</g>")
    for name, pts in series.items():
        pts = [(x, y) for x, y in pts if math.isfinite(y)]
        coords = " ".join(f"{_fmt(X(x))},{_fmt(Y(y))}" for x, y in pts)
        dash = ' stroke-dasharray="5,3"' if name.startswith("env") else ""
        out.append(f'<polyline data-series="{name}" fill="none" stroke="{STYLES[name]}" stroke-width="1.5"'
                   f'{dash} points="{coords}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def emit_svg_plot(in_csv, out_svg) -> None:
    rows = read_profile_csv(in_csv)
    if not rows:
        raise ProfileParseError(f"{in_csv}: no data rows")
    write_atomic(out_svg, profile_svg(rows))
