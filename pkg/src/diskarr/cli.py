"""Command-line entry point: ``diskarr generate|analyze|oracle-check|render``.

Exit codes: 0 success (all verdicts PASS, oracle agrees), 1 verification
failure (a FAIL verdict, an expected-value mismatch, oracle disagreement or
an inconclusive oracle run), 2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass
from pathlib import Path

from .analysis import st_distance, verify_bounds
from .arrangement import BoundaryPointError, build_arrangement
from .generators import GeneratorError, comb_pair, grid_instance, random_instance, spiral_pair
from .geometry import GeometryError
from .io import InstanceFormatError, read_instance, report_to_dict, serialize_instance
from .oracle import compare_with_exact
from .render import RenderOptions, render_svg

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    kind: str | None = None  # generator name for ``generate``
    instance: str | None = None
    out: str | None = None
    svg: str | None = None
    delta: int | None = None
    n: int | None = None
    k: int | None = None
    teeth: int | None = None
    max_vertices: int = 10
    seed: int | None = None
    oracle: bool = False
    resolution: int = 200  # starting raster resolution; refined automatically
    max_resolution: int = 3200
    samples: int = 10
    dual: bool = False
    two_disk_colours: bool = False

    @classmethod
    def from_args(cls, ns: argparse.Namespace) -> RunConfig:
        fields = cls.__dataclass_fields__
        return cls(**{k: v for k, v in vars(ns).items() if k in fields})


def _positive(name):
    def parse(text):
        try:
            v = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{name} must be an integer, got {text!r}") from None
        if v < 1:
            raise argparse.ArgumentTypeError(f"{name} must be positive, got {v}")
        return v
    return parse


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="diskarr", description="Exact arrangements of polygonal topological disks.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="write a generated instance file")
    g.add_argument("kind", choices=["spiral", "grid", "comb", "random"])
    g.add_argument("--delta", type=_positive("--delta"), help="spiral: overlap number (>= 2)")
    g.add_argument("--n", type=_positive("--n"), help="grid/random: number of disks")
    g.add_argument("--k", type=_positive("--k"), help="grid: strains per side")
    g.add_argument("--teeth", type=_positive("--teeth"), help="comb: number of teeth")
    g.add_argument("--max-vertices", type=_positive("--max-vertices"), default=10,
                   help="random: vertex cap for star-shaped disks (default 10)")
    g.add_argument("--seed", type=int, help="random: seed (required)")
    g.add_argument("--out", help="output path (default stdout)")

    a = sub.add_parser("analyze", help="analyze an instance and check every bound")
    a.add_argument("instance")
    a.add_argument("--out", help="report path (default stdout)")
    a.add_argument("--svg", help="also write an SVG drawing here")
    a.add_argument("--oracle", action="store_true", help="also run the raster oracle")
    a.add_argument("--resolution", type=_positive("--resolution"), default=200,
                   help="starting oracle resolution in pixels (default 200)")

    o = sub.add_parser("oracle-check", help="compare the exact pipeline with the raster oracle")
    o.add_argument("instance")
    o.add_argument("--resolution", type=_positive("--resolution"), default=200,
                   help="starting resolution in pixels (default 200)")
    o.add_argument("--max-resolution", type=_positive("--max-resolution"), default=3200,
                   help="refinement cap (default 3200)")
    o.add_argument("--seed", type=int, default=0, help="seed for the sampled s-t pairs (default 0)")
    o.add_argument("--out", help="comparison report path (default stdout)")

    r = sub.add_parser("render", help="draw an instance as SVG")
    r.add_argument("instance")
    r.add_argument("--out", "--svg", dest="out", required=True, help="SVG output path")
    r.add_argument("--dual", action="store_true", help="overlay the dual graph")
    r.add_argument("--two-disk-colours", action="store_true", help="white/red/blue/purple for two disks")
    return p


def _emit(text: str, path: str | None) -> None:
    if path:
        Path(path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _require(cfg: RunConfig, *names: str) -> None:
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(cfg, n) is None]
    if missing:
        raise UsageError(f"generate {cfg.kind} needs {', '.join(missing)}")


def cmd_generate(cfg: RunConfig) -> int:
    if cfg.kind == "spiral":
        _require(cfg, "delta")
        inst = spiral_pair(cfg.delta)
    elif cfg.kind == "grid":
        _require(cfg, "n", "k")
        inst = grid_instance(cfg.n, cfg.k)
    elif cfg.kind == "comb":
        _require(cfg, "teeth")
        inst = comb_pair(cfg.teeth)
    else:
        _require(cfg, "n", "seed")
        inst = random_instance(cfg.n, cfg.max_vertices, cfg.seed)
    _emit(serialize_instance(inst), cfg.out)
    return EXIT_OK


def expected_checks(inst, arr, report) -> list[dict]:
    """Compare the instance's expected block with measured values."""
    measured = {"delta": report.delta, "mu": report.mu, "diameter": report.diameter,
                "faces": report.faces, "p_max": report.p_max}
    if "marker_distance" in inst.expected:
        measured["marker_distance"] = st_distance(arr, inst.markers["inner"], inst.markers["outer"]).hops
    checks = []
    for name, want in sorted(inst.expected.items()):
        got = measured.get(name)
        status = "PASS" if got == want else "FAIL"
        checks.append({"name": name, "expected": want, "measured": got, "status": status})
    return checks


def _oracle_dict(cmp) -> dict:
    d = asdict(cmp)
    d["passed"] = cmp.passed
    return d


def _marker_pairs(inst) -> list:
    if {"inner", "outer"} <= set(inst.markers):
        return [(inst.markers["inner"], inst.markers["outer"])]
    return []


def cmd_analyze(cfg: RunConfig) -> int:
    inst = read_instance(cfg.instance)
    t0 = time.perf_counter()
    arr = build_arrangement(inst.disks)
    t1 = time.perf_counter()
    report = verify_bounds(arr)
    t2 = time.perf_counter()
    checks = expected_checks(inst, arr, report)
    doc = report_to_dict(report, checks, {"build_s": round(t1 - t0, 4), "analyze_s": round(t2 - t1, 4)})
    ok = doc["status"] == "PASS"
    if cfg.oracle:
        cmp = compare_with_exact(arr, cfg.resolution, cfg.samples, seed=0, max_resolution=cfg.max_resolution,
                                 pairs=_marker_pairs(inst))
        doc["oracle"] = _oracle_dict(cmp)
        ok = ok and cmp.passed
        doc["status"] = "PASS" if ok else "FAIL"
    if cfg.svg:
        Path(cfg.svg).write_text(render_svg(arr, RenderOptions(markers=inst.markers)), encoding="utf-8")
    _emit(json.dumps(doc, indent=2, sort_keys=True) + "\n", cfg.out)
    for v in report.failures():
        print(f"FAIL {v.name}: {v.value} vs bound {v.bound}", file=sys.stderr)
    for c in checks:
        if c["status"] != "PASS":
            print(f"FAIL expected {c['name']}: {c['expected']}, measured {c['measured']}", file=sys.stderr)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_oracle_check(cfg: RunConfig) -> int:
    inst = read_instance(cfg.instance)
    arr = build_arrangement(inst.disks)
    cmp = compare_with_exact(arr, cfg.resolution, cfg.samples, seed=cfg.seed or 0,
                             max_resolution=cfg.max_resolution, pairs=_marker_pairs(inst))
    _emit(json.dumps(_oracle_dict(cmp), indent=2, sort_keys=True) + "\n", cfg.out)
    print(f"oracle {cmp.status}" + (f", {cmp.agreement}" if cmp.agreement else "")
          + f" at resolution {cmp.resolution}", file=sys.stderr)
    return EXIT_OK if cmp.passed else EXIT_FAIL


def cmd_render(cfg: RunConfig) -> int:
    inst = read_instance(cfg.instance)
    arr = build_arrangement(inst.disks)
    opts = RenderOptions(dual=cfg.dual, two_disk_colours=cfg.two_disk_colours, markers=inst.markers)
    Path(cfg.out).write_text(render_svg(arr, opts), encoding="utf-8")
    return EXIT_OK


COMMANDS = {
    "generate": cmd_generate,
    "analyze": cmd_analyze,
    "oracle-check": cmd_oracle_check,
    "render": cmd_render,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    cfg = RunConfig.from_args(ns)
    try:
        return COMMANDS[cfg.command](cfg)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"diskarr: error: {exc}", file=sys.stderr)
    except (InstanceFormatError, GeneratorError, BoundaryPointError, GeometryError, OSError) as exc:
        print(f"diskarr: error: {exc}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
