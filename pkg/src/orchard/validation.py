"""Input validation helpers for the estimator interface."""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .errors import InputError
from .predicates import as_fraction


def check_rational_array(X, *, n_features=None, min_samples=1, name="X") -> tuple:
    """Validate a 2-d array-like and convert every entry to an exact Fraction.

    Floats are converted exactly from their binary value; NaN and infinity
    are rejected. Returns a tuple of row tuples.
    """
    if isinstance(X, np.ndarray) and X.ndim != 2:
        raise InputError(f"{name} must be 2-dimensional, got shape {X.shape}")
    rows = [list(r) for r in X]
    if len(rows) < min_samples:
        raise InputError(f"{name} needs at least {min_samples} rows, got {len(rows)}")
    width = len(rows[0]) if rows else 0
    if any(len(r) != width for r in rows):
        raise InputError(f"{name} is ragged")
    if width == 0:
        raise InputError(f"{name} has no columns")
    if n_features is not None and width != n_features:
        raise InputError(f"{name} has {width} features, expected {n_features}")
    return tuple(tuple(as_fraction(v) for v in r) for r in rows)


def to_object_array(rows) -> np.ndarray:
    """2-d object array of Fractions, the exact counterpart of a float matrix."""
    out = np.empty((len(rows), len(rows[0]) if rows else 0), dtype=object)
    for i, r in enumerate(rows):
        for j, v in enumerate(r):
            out[i, j] = Fraction(v)
    return out
