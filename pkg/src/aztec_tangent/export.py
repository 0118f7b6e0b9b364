"""CSV, JSON and SVG writers.

Exact values are written as "p/q" strings, floats with repr() so they parse
back bit for bit.
"""
import csv
import io
import json
from fractions import Fraction

import numpy as np


def fmt(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (float, np.floating)):
        # numpy scalars repr as "np.float64(...)"; go through the builtin float
        return repr(float(x))
    return str(x)


def parse_cell(s):
    """Inverse of fmt: integers become int, p/q Fractions, decimals floats, the rest stays text."""
    try:
        return int(s)
    except ValueError:
        pass
    if "/" in s:
        try:
            return Fraction(s)
        except (ValueError, ZeroDivisionError):
            return s
    try:
        return float(s)
    except ValueError:
        return s


def to_csv(header, rows):
    buf = io.StringIO()
    wr = csv.writer(buf, lineterminator="\n")
    wr.writerow(header)
    for row in rows:
        wr.writerow([fmt(x) for x in row])
    return buf.getvalue()


def read_csv(text):
    rd = csv.reader(io.StringIO(text))
    header = next(rd)
    return header, [[parse_cell(c) for c in row] for row in rd]


def to_json(obj):
    return json.dumps(obj, indent=2, default=fmt)


def to_svg(curves, size=480, stroke_width=0.006, colors=None, show_diamond=True):
    """Render polylines in [-1, 1]^2 (y up) with the diamond |X| + |Y| = 1."""
    colors = colors or ["#c0392b", "#2471a3", "#229954", "#7d3c98"]
    parts = ['<svg xmlns="http://www.w3.org/2000/svg" width="%d" height="%d" viewBox="-1.05 -1.05 2.1 2.1">'
             % (size, size)]
    parts.append('<g transform="scale(1,-1)">')
    if show_diamond:
        parts.append('<polygon points="-1,0 0,1 1,0 0,-1" fill="none" stroke="black" stroke-width="%g"/>'
                     % stroke_width)
    for idx, pts in enumerate(curves):
        coords = " ".join("%.6f,%.6f" % (x, y) for x, y in pts)
        parts.append('<polyline points="%s" fill="none" stroke="%s" stroke-width="%g"/>'
                     % (coords, colors[idx % len(colors)], stroke_width))
    parts.append("</g></svg>")
    return "\n".join(parts) + "\n"
