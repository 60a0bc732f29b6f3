"""SVG drawings of arrangements: faces shaded by ply, maximal faces outlined,
optional dual-graph overlay.  Floats appear only here; the picture is not
authoritative.
"""
from __future__ import annotations

from dataclasses import dataclass
from xml.sax.saxutils import escape

from .analysis import maximal_faces, two_disk_classification
from .arrangement import Arrangement

# light-to-dark sequential ramp, indexed by ply
PLY_COLOURS = ["#ffffff", "#fde0c5", "#facba6", "#f8b58b", "#f59e72", "#f2855d",
               "#ef6a4c", "#eb4a40", "#c7303b", "#9e1c3a"]
TWO_DISK_COLOURS = {"white": "#ffffff", "red": "#e8746a", "blue": "#6a9be8", "purple": "#9a62c4"}


@dataclass
class RenderOptions:
    width: int = 640
    margin: float = 0.05
    dual: bool = False
    highlight_maximal: bool = True
    two_disk_colours: bool = False
    markers: dict | None = None


def _fmt(v: float) -> str:
    return f"{v:.3f}".rstrip("0").rstrip(".")


def render_svg(arr: Arrangement, options: RenderOptions | None = None) -> str:
    opt = options or RenderOptions()
    pts = [v.point for v in arr.vertices]
    xs = [float(p.x) for p in pts]
    ys = [float(p.y) for p in pts]
    span = max(max(xs) - min(xs), max(ys) - min(ys)) or 1.0
    pad = span * opt.margin
    x0, y1 = min(xs) - pad, max(ys) + pad
    scale = opt.width / (max(xs) - min(xs) + 2 * pad)
    height = (max(ys) - min(ys) + 2 * pad) * scale

    def tx(p):
        return _fmt((float(p.x) - x0) * scale), _fmt((y1 - float(p.y)) * scale)

    def loop(points):
        coords = [tx(p) for p in points]
        return "M" + " L".join(f"{x} {y}" for x, y in coords) + " Z"

    if opt.two_disk_colours and arr.n == 2:
        colours = {f: TWO_DISK_COLOURS[c] for f, c in two_disk_classification(arr).items()}
    else:
        colours = {f.id: PLY_COLOURS[min(f.ply, len(PLY_COLOURS) - 1)] for f in arr.faces}
    maximal = {f.id for f in maximal_faces(arr)} if opt.highlight_maximal else set()

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_fmt(opt.width)}" '
        f'height="{_fmt(height)}" viewBox="0 0 {_fmt(opt.width)} {_fmt(height)}">',
        f"<title>arrangement of {arr.n} disks, {len(arr.faces)} faces</title>",
    ]
    w, h = _fmt(opt.width), _fmt(height)
    background = f"M0 0 L{w} 0 L{w} {h} L0 {h} Z"
    for f in arr.faces:
        loops = arr.face_polygon(f)
        d = " ".join(loop(ls) for ls in loops)
        if not f.bounded:
            d = (background + " " + d).strip()
        stroke = ' stroke="#000000" stroke-width="2"' if f.id in maximal else ' stroke="none"'
        out.append(
            f'<path class="face" data-face="{f.id}" data-ply="{f.ply}" fill="{colours[f.id]}" '
            f'fill-rule="evenodd"{stroke} d="{d}"/>'
        )
    for disk in arr.disks:
        coords = " ".join(",".join(tx(p)) for p in disk.vertices)
        out.append(f'<polygon class="disk" data-disk="{disk.id}" fill="none" stroke="#333333" '
                   f'stroke-width="0.75" points="{coords}"/>')
    if opt.dual:
        reps = {f.id: tx(f.rep) for f in arr.faces}
        for f in arr.faces:
            for g in arr.adjacency()[f.id]:
                if g > f.id:
                    (ax, ay), (bx, by) = reps[f.id], reps[g]
                    out.append(f'<line class="dual-edge" x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}" '
                               f'stroke="#1b7837" stroke-width="1"/>')
        for f in arr.faces:
            x, y = reps[f.id]
            fill = "#000000" if f.id in maximal else "#1b7837"
            out.append(f'<circle class="dual-node" cx="{x}" cy="{y}" r="3" fill="{fill}"/>')
    for name, p in sorted((opt.markers or {}).items()):
        x, y = tx(p)
        out.append(f'<circle class="marker" cx="{x}" cy="{y}" r="4" fill="none" stroke="#000000"/>')
        out.append(f'<text x="{x}" y="{y}" font-size="10" dx="5">{escape(name)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
