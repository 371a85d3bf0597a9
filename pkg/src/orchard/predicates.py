"""Exact sign predicates on rational coordinates.

Everything here is exact: rows of rationals are scaled to integers by a
positive factor per row (which preserves the sign of a determinant) and the
determinant is evaluated with fraction-free elimination.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Integral, Rational
from typing import Sequence

from .errors import InputError


def as_fraction(value) -> Fraction:
    """Convert an int, Fraction, finite float or ``"p/q"``/decimal string exactly."""
    if isinstance(value, bool):
        raise InputError("booleans are not coordinates")
    if isinstance(value, (Integral, Rational)):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise InputError(f"non-finite coordinate {value!r}")
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise InputError(f"cannot parse rational {value!r}") from None
    try:
        return as_fraction(value.item())  # numpy scalars
    except AttributeError:
        raise InputError(f"unsupported coordinate {value!r}") from None


def format_fraction(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def integer_row(row: Sequence) -> list:
    """Scale a rational row by the positive lcm of its denominators."""
    den = 1
    for v in row:
        d = v.denominator if isinstance(v, Fraction) else 1
        den = den * d // math.gcd(den, d)
    if den == 1:
        return [int(v) for v in row]
    return [int(v * den) for v in row]


def det_int(rows: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix (Bareiss elimination)."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    if n == 2:
        (a, b), (c, d) = rows
        return a * d - b * c
    if n == 3:
        (a, b, c), (d, e, f), (g, h, i) = rows
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def det_value(rows: Sequence[Sequence]) -> Fraction:
    """Exact determinant of a square rational matrix."""
    scale = Fraction(1)
    int_rows = []
    for r in rows:
        ir = integer_row(r)
        nz = next((i for i, v in enumerate(r) if v != 0), None)
        if nz is not None:
            scale *= Fraction(ir[nz]) / Fraction(r[nz])
        int_rows.append(ir)
    return Fraction(det_int(int_rows)) / scale


def det_sign(rows: Sequence[Sequence]) -> int:
    """Sign (-1, 0, +1) of the determinant of a square rational matrix."""
    d = det_int([integer_row(r) for r in rows])
    return (d > 0) - (d < 0)


def rank(rows: Sequence[Sequence]) -> int:
    """Exact rank of a rational matrix."""
    m = [[Fraction(v) for v in r] for r in rows]
    if not m:
        return 0
    rk = 0
    ncols = len(m[0])
    for c in range(ncols):
        pivot = next((r for r in range(rk, len(m)) if m[r][c] != 0), None)
        if pivot is None:
            continue
        m[rk], m[pivot] = m[pivot], m[rk]
        for r in range(rk + 1, len(m)):
            if m[r][c] != 0:
                f = m[r][c] / m[rk][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[rk])]
        rk += 1
        if rk == len(m):
            break
    return rk


def orientation_sign(points: Sequence[Sequence]) -> int:
    """Orientation of ``d+1`` points in dimension ``d``; ``0`` flags degeneracy.

    This is the sign of ``det(P1 - P0, ..., Pd - P0)``.
    """
    points = [[as_fraction(v) for v in p] for p in points]
    if not points:
        raise InputError("need d+1 points")
    d = len(points) - 1
    if any(len(p) != d for p in points):
        raise InputError(f"{len(points)} points need dimension {d}")
    p0 = points[0]
    return det_sign([[a - b for a, b in zip(p, p0)] for p in points[1:]])


def affinely_independent(points: Sequence[Sequence]) -> bool:
    if len(points) <= 1:
        return True
    p0 = points[0]
    return rank([[a - b for a, b in zip(p, p0)] for p in points[1:]]) == len(points) - 1
