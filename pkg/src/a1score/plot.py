"""Sampled A1 curves and their CSV / SVG renderings."""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from typing import List, Sequence, Tuple
from xml.sax.saxutils import escape

from .comparator import ScanRange
from .errors import EvaluationOverflow
from .metric import DEFAULT_CONFIG, A1Config, AlgorithmProfile, a1_score

CSV_HEADER = ("n", "a1_x", "a1_y")


@dataclass(frozen=True)
class PlotSeries:
    label: str
    points: Tuple[Tuple[float, float], ...]

    def __post_init__(self):
        prev = 1.0
        for n, a1 in self.points:
            if not n > prev:
                raise ValueError(f"sample n values must be increasing and > 1 (got {n} after {prev})")
            if not (math.isfinite(a1) and a1 > 0):
                raise ValueError(f"A1 sample must be finite and positive, got {a1} at n={n}")
            prev = n

    @property
    def ns(self) -> List[float]:
        return [p[0] for p in self.points]

    @property
    def values(self) -> List[float]:
        return [p[1] for p in self.points]


@dataclass(frozen=True)
class PlotData:
    x: PlotSeries
    y: PlotSeries
    omitted: int

    def rows(self) -> List[Tuple[float, float, float]]:
        return [(n, ax, ay) for (n, ax), (_, ay) in zip(self.x.points, self.y.points)]


def sample_pair(x: AlgorithmProfile, y: AlgorithmProfile, config: A1Config = DEFAULT_CONFIG,
                scan_range: ScanRange = ScanRange()) -> PlotData:
    """Sample both curves on the scan grid; points where either side overflows are dropped."""
    xs, ys = [], []
    omitted = 0
    for n in scan_range.points():
        try:
            ax, ay = a1_score(x, n, config), a1_score(y, n, config)
        except EvaluationOverflow:
            omitted += 1
            continue
        xs.append((n, ax))
        ys.append((n, ay))
    return PlotData(PlotSeries(x.name, tuple(xs)), PlotSeries(y.name, tuple(ys)), omitted)


def format_value(v: float) -> str:
    # alternate form keeps trailing zeros: always 12 significant digits
    return format(v, "#.12g")


def to_csv(data: PlotData) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in data.rows():
        writer.writerow([format_value(v) for v in row])
    return buf.getvalue()


def read_csv(text: str) -> List[Tuple[float, float, float]]:
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    if tuple(header) != CSV_HEADER:
        raise ValueError(f"unexpected CSV header {header}")
    return [tuple(float(v) for v in row) for row in reader]


def _nice_step(span: float, target: int = 5) -> float:
    raw = span / target
    mag = 10 ** math.floor(math.log10(raw))
    for m in (1, 2, 2.5, 5, 10):
        if m * mag >= raw:
            return m * mag
    return 10 * mag


def _ticks(lo: float, hi: float) -> Tuple[float, float, List[float]]:
    if hi <= lo:
        pad = abs(lo) * 0.05 or 1.0
        lo, hi = lo - pad, hi + pad
    step = _nice_step(hi - lo)
    start = math.floor(lo / step) * step
    stop = math.ceil(hi / step) * step
    ticks = []
    t = start
    while t <= stop + step * 1e-9:
        ticks.append(round(t, 12))
        t += step
    return start, stop, ticks


def _tick_label(v: float) -> str:
    return format(v, ".6g")


COLORS = ("#1f77b4", "#d62728")


def to_svg(series: Sequence[PlotSeries], title: str = "A1-Score vs n",
           width: int = 720, height: int = 440) -> str:
    """Self-contained line chart, one polyline per series, linear axes."""
    left, right, top, bottom = 70, 170, 40, 50
    pw, ph = width - left - right, height - top - bottom
    all_n = [n for s in series for n in s.ns]
    all_v = [v for s in series for v in s.values]
    if not all_n:
        all_n, all_v = [2.0, 3.0], [0.0, 1.0]
    x0, x1, xticks = _ticks(min(all_n), max(all_n))
    y0, y1, yticks = _ticks(min(all_v), max(all_v))

    def sx(n: float) -> float:
        return left + (n - x0) / (x1 - x0) * pw

    def sy(v: float) -> float:
        return top + ph - (v - y0) / (y1 - y0) * ph

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="12">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
        f'<text x="{left + pw / 2:.1f}" y="{top - 15}" text-anchor="middle" font-size="14">{escape(title)}</text>',
        f'<line x1="{left}" y1="{top + ph}" x2="{left + pw}" y2="{top + ph}" stroke="black"/>',
        f'<line x1="{left}" y1="{top}" x2="{left}" y2="{top + ph}" stroke="black"/>',
    ]
    for t in xticks:
        x = sx(t)
        out.append(f'<line x1="{x:.2f}" y1="{top + ph}" x2="{x:.2f}" y2="{top + ph + 5}" stroke="black"/>')
        out.append(f'<text x="{x:.2f}" y="{top + ph + 18}" text-anchor="middle">{_tick_label(t)}</text>')
    for t in yticks:
        y = sy(t)
        out.append(f'<line x1="{left - 5}" y1="{y:.2f}" x2="{left}" y2="{y:.2f}" stroke="black"/>')
        out.append(f'<text x="{left - 8}" y="{y + 4:.2f}" text-anchor="end">{_tick_label(t)}</text>')
    out.append(f'<text x="{left + pw / 2:.1f}" y="{height - 10}" text-anchor="middle">n</text>')
    out.append(f'<text x="15" y="{top + ph / 2:.1f}" text-anchor="middle" '
               f'transform="rotate(-90 15 {top + ph / 2:.1f})">A1-Score</text>')
    for i, s in enumerate(series):
        color = COLORS[i % len(COLORS)]
        pts = " ".join(f"{sx(n):.2f},{sy(v):.2f}" for n, v in s.points)
        out.append(f'<polyline fill="none" stroke="{color}" stroke-width="2" points="{pts}"/>')
    lx, ly = left + pw + 15, top + 10
    for i, s in enumerate(series):
        color = COLORS[i % len(COLORS)]
        y = ly + 20 * i
        out.append(f'<line x1="{lx}" y1="{y}" x2="{lx + 25}" y2="{y}" stroke="{color}" stroke-width="2"/>')
        out.append(f'<text x="{lx + 32}" y="{y + 4}">{escape(s.label)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
