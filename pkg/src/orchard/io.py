"""JSON serialisation of configurations.

Schema::

    {"dim": int, "points": [[rational, ...], ...], "labels": [str, ...]?,
     "antipodal": bool?}

A rational is an integer literal or a string ``"p/q"`` (decimal strings are
accepted and read exactly); integers are written back as literals. An
antipodal file stores one vector per line.
"""

from __future__ import annotations

import json
from pathlib import Path

from .antipodal import AntipodalConfiguration
from .errors import InputError
from .geom import Configuration
from .predicates import as_fraction, format_fraction
from .twopart import GroundSet


def parse_configuration(obj):
    """Build a :class:`Configuration` or :class:`AntipodalConfiguration` from parsed JSON."""
    if not isinstance(obj, dict):
        raise InputError("configuration must be a JSON object")
    dim = obj.get("dim")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise InputError("'dim' must be a positive integer")
    points = obj.get("points")
    if not isinstance(points, list) or not all(isinstance(p, list) for p in points):
        raise InputError("'points' must be a list of coordinate lists")
    for p in points:
        if len(p) != dim:
            raise InputError(f"point {p!r} does not have {dim} coordinates")
        for v in p:
            if isinstance(v, float):
                raise InputError("write non-integer coordinates as strings 'p/q'")
    coords = [[as_fraction(v) for v in p] for p in points]
    labels = obj.get("labels")
    if labels is not None:
        if not isinstance(labels, list) or len(labels) != len(points):
            raise InputError("'labels' must list one label per point")
        labels = tuple(str(x) for x in labels)
    if obj.get("antipodal", False):
        return AntipodalConfiguration.make(coords, labels, canonicalize=True)
    ground = GroundSet(tuple(range(len(coords))) if labels is None else labels)
    return Configuration(dim, tuple(map(tuple, coords)), ground)


def load_configuration(path):
    """Read a configuration file; returns ``(configuration, raw bytes)``."""
    raw = Path(path).read_bytes()
    try:
        obj = json.loads(raw)
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise InputError(f"{path}: invalid JSON ({exc})") from None
    return parse_configuration(obj), raw


def _coord(q):
    return q.numerator if q.denominator == 1 else format_fraction(q)


def configuration_to_json(c) -> dict:
    if isinstance(c, AntipodalConfiguration):
        out = {"dim": c.dim, "antipodal": True, "points": [[_coord(v) for v in r] for r in c.reps]}
        labels = c.base.quotient.labels
    else:
        out = {"dim": c.dim, "points": [[_coord(v) for v in p] for p in c.points]}
        labels = c.labels.labels
    if labels != tuple(range(len(labels))):
        out["labels"] = [str(x) for x in labels]
    return out


def dump_configuration(c, path) -> None:
    Path(path).write_text(json.dumps(configuration_to_json(c), indent=2) + "\n", encoding="utf-8")
