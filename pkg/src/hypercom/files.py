"""System files and report serialization for the CLI.

A system file is one JSON document:

    {
      "radius": 1.0,
      "model": "disk",
      "particles": [
        {"mass": 1.0, "coords": [0.5, 0.0]},
        {"mass": 2.0, "coords": [-0.26794919243112270, 0.0]}
      ]
    }

``coords`` holds 1 number for "line", 2 ([re, im]) for "disk" and
3 ([x, y, z]) for "hyperboloid".  Reports are JSON with sorted keys and
fixed indentation; CSV traces use fixed headers.  Identical inputs
therefore produce byte-identical output.
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path

from .barycenter import (
    DISK,
    HYPERBOLOID,
    LINE,
    MODELS,
    MassedSystem,
    disk_system,
    hyperboloid_system,
    line_system,
)
from .errors import ValidationError

COORD_ARITY = {LINE: 1, DISK: 2, HYPERBOLOID: 3}
TOP_LEVEL_KEYS = {"radius", "model", "particles"}
PARTICLE_KEYS = {"mass", "coords"}


def _number(value, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ValidationError(f"{where} must be a number, got {value!r}")
    return float(value)


def read_system_text(text: str) -> MassedSystem:
    """Parse and validate a system document from its JSON text."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"system file is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ValidationError("system file must be a JSON object")
    unknown = set(data) - TOP_LEVEL_KEYS
    if unknown:
        raise ValidationError(f"unknown system file keys: {sorted(unknown)}")
    missing = TOP_LEVEL_KEYS - set(data)
    if missing:
        raise ValidationError(f"system file is missing keys: {sorted(missing)}")
    radius = _number(data["radius"], "radius")
    model = data["model"]
    if model not in MODELS:
        raise ValidationError(
            f"model must be one of {list(MODELS)}, got {model!r}"
        )
    particles = data["particles"]
    if not isinstance(particles, list) or not particles:
        raise ValidationError("particles must be a nonempty list")
    arity = COORD_ARITY[model]
    masses = []
    coords = []
    for index, entry in enumerate(particles):
        where = f"particles[{index}]"
        if not isinstance(entry, dict) or set(entry) != PARTICLE_KEYS:
            raise ValidationError(
                f"{where} must be an object with keys ['coords', 'mass']"
            )
        masses.append(_number(entry["mass"], f"{where}.mass"))
        raw = entry["coords"]
        if not isinstance(raw, list) or len(raw) != arity:
            raise ValidationError(
                f"{where}.coords must be a list of {arity} numbers for "
                f"model {model!r}"
            )
        coords.append(
            [_number(c, f"{where}.coords[{k}]") for k, c in enumerate(raw)]
        )
    if model == LINE:
        return line_system(masses, [c[0] for c in coords], radius)
    if model == DISK:
        return disk_system(masses, [complex(c[0], c[1]) for c in coords], radius)
    return hyperboloid_system(masses, coords, radius)


def load_system(path) -> MassedSystem:
    """Read and validate a system file from disk."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ValidationError(f"cannot read system file {path!r}: {exc}") from exc
    return read_system_text(text)


def file_digest(path) -> str:
    """sha256 of the raw input bytes, echoed into reports."""
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def format_float(value: float) -> str:
    """Shortest decimal that round-trips; integral values lose the '.0'."""
    text = repr(float(value))
    if text.endswith(".0"):
        text = text[:-2]
    return text


def report_text(report: dict) -> str:
    """Deterministic JSON serialization for report documents."""
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def csv_text(header: str, rows) -> str:
    """CSV with a fixed header; floats in shortest round-trip form."""
    lines = [header]
    for row in rows:
        lines.append(",".join(format_float(v) for v in row))
    return "\n".join(lines) + "\n"
