"""Render the standard instances to SVG.

    python3 scripts/render_figures.py --outdir figures
"""
from __future__ import annotations

import argparse
from pathlib import Path

from diskarr.arrangement import build_arrangement
from diskarr.generators import comb_pair, grid_instance, random_instance, spiral_pair
from diskarr.render import RenderOptions, render_svg

FIGURES = {
    "spiral6": (lambda: spiral_pair(6), RenderOptions(dual=True, two_disk_colours=True)),
    "spiral6_ply": (lambda: spiral_pair(6), RenderOptions()),
    "grid3x2": (lambda: grid_instance(3, 2), RenderOptions()),
    "comb4": (lambda: comb_pair(4), RenderOptions(two_disk_colours=True)),
    "random4": (lambda: random_instance(4, 10, 3), RenderOptions(dual=True)),
}


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description="render example arrangements as SVG")
    ap.add_argument("--outdir", default="figures")
    ap.add_argument("--width", type=int, default=640)
    args = ap.parse_args(argv)

    out = Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)
    for name, (make, opts) in FIGURES.items():
        inst = make()
        opts.width = args.width
        if inst.markers:
            opts.markers = inst.markers
        path = out / f"{name}.svg"
        path.write_text(render_svg(build_arrangement(inst.disks), opts))
        print(path)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
