"""Instance and report files.

Instances are UTF-8 JSON with every coordinate written as an exact
``"numerator/denominator"`` string in lowest terms.  The writer is
canonical: polygons are listed counterclockwise from their smallest
vertex, so equal instances produce byte-identical files.
"""
from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path

from .analysis import AnalysisReport
from .generators import GeneratedInstance
from .geometry import Disk, GeometryError, Point

FORMAT_VERSION = 1
_RATIONAL = re.compile(r"^\s*(-?\d+)(?:/(\d+))?\s*$")


class InstanceFormatError(ValueError):
    """Malformed instance file; the message names the offending location."""


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text, where: str = "") -> Fraction:
    if not isinstance(text, str):
        raise InstanceFormatError(f"{where}: expected a string like \"p/q\", got {text!r}")
    m = _RATIONAL.match(text)
    if not m:
        raise InstanceFormatError(f"{where}: malformed rational {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise InstanceFormatError(f"{where}: zero denominator in {text!r}")
    return Fraction(num, den)


def _point_json(p: Point) -> list[str]:
    return [format_rational(p.x), format_rational(p.y)]


def instance_to_dict(inst: GeneratedInstance) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "generator": inst.generator,
        "params": dict(inst.params),
        "disks": [[_point_json(p) for p in d.canonical().vertices] for d in inst.disks],
        "expected": dict(inst.expected),
        "markers": {k: _point_json(v) for k, v in inst.markers.items()},
    }


def serialize_instance(inst: GeneratedInstance) -> str:
    """Canonical text form: sorted keys, one disk per line, trailing newline."""
    doc = instance_to_dict(inst)
    lines = ["{"]
    keys = sorted(doc)
    for k, key in enumerate(keys):
        comma = "," if k < len(keys) - 1 else ""
        if key == "disks":
            lines.append('  "disks": [')
            for j, disk in enumerate(doc["disks"]):
                sep = "," if j < len(doc["disks"]) - 1 else ""
                lines.append("    " + json.dumps(disk) + sep)
            lines.append("  ]" + comma)
        else:
            lines.append(f"  {json.dumps(key)}: {json.dumps(doc[key], sort_keys=True)}{comma}")
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_instance(data: bytes | str) -> GeneratedInstance:
    """Parse an instance file, normalising rationals, orientation and starting vertex."""
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise InstanceFormatError(f"byte {exc.start}: not UTF-8") from None
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise InstanceFormatError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise InstanceFormatError("top level must be an object")
    version = doc.get("format_version")
    if version != FORMAT_VERSION:
        raise InstanceFormatError(f"format_version: expected {FORMAT_VERSION}, got {version!r}")
    raw_disks = doc.get("disks")
    if not isinstance(raw_disks, list):
        raise InstanceFormatError("disks: expected a list of polygons")
    disks = []
    for i, poly in enumerate(raw_disks):
        if not isinstance(poly, list):
            raise InstanceFormatError(f"disks[{i}]: expected a list of vertices")
        pts = []
        for k, v in enumerate(poly):
            if not (isinstance(v, list) and len(v) == 2):
                raise InstanceFormatError(f"disks[{i}][{k}]: expected [x, y]")
            pts.append(Point(parse_rational(v[0], f"disks[{i}][{k}].x"),
                             parse_rational(v[1], f"disks[{i}][{k}].y")))
        try:
            disks.append(Disk.from_points(i, pts).canonical())
        except GeometryError as exc:
            raise InstanceFormatError(f"disks[{i}]: {exc}") from None
    markers = {}
    for name, v in (doc.get("markers") or {}).items():
        if not (isinstance(v, list) and len(v) == 2):
            raise InstanceFormatError(f"markers.{name}: expected [x, y]")
        markers[name] = Point(parse_rational(v[0], f"markers.{name}.x"),
                              parse_rational(v[1], f"markers.{name}.y"))
    expected = doc.get("expected") or {}
    if not isinstance(expected, dict) or not all(isinstance(x, int) for x in expected.values()):
        raise InstanceFormatError("expected: must map names to integers")
    return GeneratedInstance(disks, str(doc.get("generator", "custom")), dict(doc.get("params") or {}),
                             expected=dict(expected), markers=markers)


def canonicalize(data: bytes | str) -> str:
    return serialize_instance(parse_instance(data))


def write_instance(inst: GeneratedInstance, path) -> None:
    Path(path).write_text(serialize_instance(inst), encoding="utf-8")


def read_instance(path) -> GeneratedInstance:
    return parse_instance(Path(path).read_bytes())


# -- reports -------------------------------------------------------------------

def report_to_dict(report: AnalysisReport, expected_checks=(), timings=None) -> dict:
    return {
        "n": report.n,
        "faces": report.faces,
        "delta_matrix": report.overlap_matrix,
        "delta": report.delta,
        "p_max": report.p_max,
        "mu": report.mu,
        "diameter": report.diameter,
        "verdicts": [
            {"name": v.name, "status": v.status, "value": v.value, "bound": v.bound,
             "relation": v.relation, "slack": v.slack}
            for v in report.verdicts
        ],
        "expected": [dict(c) for c in expected_checks],
        "status": "PASS" if report.ok and all(c["status"] == "PASS" for c in expected_checks) else "FAIL",
        "timings": dict(timings or {}),
    }


def serialize_report(report: AnalysisReport, expected_checks=(), timings=None) -> str:
    return json.dumps(report_to_dict(report, expected_checks, timings), indent=2, sort_keys=True) + "\n"
