"""Orchard relations for separation by zero sets of a function space.

A ``(d+1)``-dimensional space of functions containing the constants is
given by a basis ``1, b_1, ..., b_d``. ``d`` points ``S`` cut out a line of
functions vanishing on ``S``; it separates ``P`` from ``Q`` when a nonzero
such function takes opposite signs at ``P`` and ``Q``. Lifting each point to
``(b_1(x), ..., b_d(x))`` turns this into hyperplane separation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, Sequence

from .errors import GenericityError, InputError
from .geom import Configuration, geometric_partition, is_generic, partition_from_counts
from .predicates import as_fraction, det_sign, rank
from .signfn import binom
from .twopart import GroundSet, TwoPartition


def _no_check(points):
    return None


@dataclass(frozen=True)
class FunctionBasis:
    """Basis ``1, b_1, ..., b_d`` of functions on ``R^ambient_dim``.

    ``functions`` lists ``b_1..b_d``; the constant is implicit.
    """

    name: str
    ambient_dim: int
    functions: tuple
    degeneracy: str = "points are not generic for this basis"
    check_points: Callable = _no_check

    @property
    def dim(self) -> int:
        return len(self.functions)

    def lift(self, x: Sequence[Fraction]) -> tuple:
        return tuple(f(x) for f in self.functions)

    def row(self, x: Sequence[Fraction]) -> tuple:
        return (Fraction(1),) + self.lift(x)


def affine_basis(k: int) -> FunctionBasis:
    return FunctionBasis(
        f"affine:{k}",
        k,
        tuple((lambda x, i=i: x[i]) for i in range(k)),
        f"{k + 1} points lie on a common hyperplane",
    )


def conic_basis() -> FunctionBasis:
    return FunctionBasis(
        "conic",
        2,
        (
            lambda p: p[0],
            lambda p: p[1],
            lambda p: p[0] * p[0],
            lambda p: p[0] * p[1],
            lambda p: p[1] * p[1],
        ),
        "six points lie on a common conic, or five do not determine a unique conic",
    )


def circle_basis() -> FunctionBasis:
    return FunctionBasis(
        "circle",
        2,
        (lambda p: p[0], lambda p: p[1], lambda p: p[0] * p[0] + p[1] * p[1]),
        "four points lie on a common circle or line",
    )


def _distinct_abscissae(points):
    xs = [p[0] for p in points]
    if len(set(xs)) != len(xs):
        raise InputError("interpolation basis needs pairwise distinct x-coordinates")


def interpolation_basis(d: int) -> FunctionBasis:
    """``1, x, ..., x^(d-1)`` together with ``y``, on the plane."""
    if d < 1:
        raise InputError("degree bound must be at least 1")
    funcs = tuple((lambda p, k=k: p[0] ** k) for k in range(1, d)) + ((lambda p: p[1]),)
    return FunctionBasis(
        f"interp:{d}",
        2,
        funcs,
        f"{d + 1} points lie on the graph of one polynomial of degree < {d}",
        _distinct_abscissae,
    )


def basis_from_name(name: str, ambient_dim: int | None = None) -> FunctionBasis:
    """Parse ``affine``, ``conic``, ``circle`` or ``interp:<d>``."""
    if name == "affine" or name.startswith("affine:"):
        k = int(name.split(":")[1]) if ":" in name else ambient_dim
        if k is None:
            raise InputError("affine basis needs the ambient dimension")
        return affine_basis(k)
    if name == "conic":
        return conic_basis()
    if name == "circle":
        return circle_basis()
    if name.startswith("interp:"):
        try:
            return interpolation_basis(int(name.split(":", 1)[1]))
        except ValueError:
            raise InputError(f"bad interpolation degree in {name!r}") from None
    raise InputError(f"unknown basis {name!r}")


def _as_points(points, basis: FunctionBasis) -> list:
    pts = [tuple(as_fraction(v) for v in p) for p in points]
    if any(len(p) != basis.ambient_dim for p in pts):
        raise InputError(f"basis {basis.name} needs points in R^{basis.ambient_dim}")
    basis.check_points(pts)
    return pts


def cgeneric_lift(points, basis: FunctionBasis, labels: Sequence | None = None) -> Configuration:
    """Lift points through ``x -> (b_1(x), ..., b_d(x))`` and check genericity."""
    pts = _as_points(points, basis)
    ground = GroundSet(tuple(range(len(pts))) if labels is None else tuple(labels))
    lifted = Configuration(basis.dim, tuple(basis.lift(p) for p in pts), ground)
    generic, witness = is_generic(lifted)
    if not generic:
        raise GenericityError(f"{basis.name}: {basis.degeneracy} (points {list(witness)})", witness)
    return lifted


def cgeneric_separating(points, basis: FunctionBasis, subset: Sequence[int], p: int, q: int) -> int:
    """``-1`` if the functions vanishing on ``subset`` separate points ``p`` and ``q``, else ``+1``.

    The vanishing function is ``x -> det[row(x); row(s_1); ...; row(s_d)]``,
    so the answer is the product of two determinant signs.
    """
    return _separating_sign(_as_points(points, basis), basis, subset, p, q)


def _separating_sign(pts, basis, subset, p, q):
    subset = list(subset)
    if len(subset) != basis.dim or len(set(subset)) != basis.dim or p in subset or q in subset:
        raise InputError(f"need {basis.dim} distinct subset points avoiding p and q")
    s_rows = [basis.row(pts[i]) for i in subset]
    if rank(s_rows) != basis.dim:
        raise GenericityError(f"{basis.name}: points {subset} do not determine a unique zero set", tuple(subset))
    fp = det_sign([basis.row(pts[p])] + s_rows)
    fq = det_sign([basis.row(pts[q])] + s_rows)
    if fp == 0 or fq == 0:
        witness = tuple(subset) + ((p,) if fp == 0 else (q,))
        raise GenericityError(f"{basis.name}: {basis.degeneracy}", witness)
    return fp * fq


def cgeneric_partition(points, basis: FunctionBasis, labels: Sequence | None = None) -> TwoPartition:
    """Partition from counts of separating zero sets, without lifting."""
    pts = _as_points(points, basis)
    lifted = cgeneric_lift(pts, basis, labels)
    n, d = lifted.n, basis.dim
    if n <= d + 1:
        return TwoPartition.trivial(lifted.labels)
    counts = [[0] * n for _ in range(n)]
    for i, j in combinations(range(n), 2):
        rest = [k for k in range(n) if k != i and k != j]
        s = sum(1 for sub in combinations(rest, d) if _separating_sign(pts, basis, sub, i, j) == -1)
        counts[i][j] = counts[j][i] = s
    return partition_from_counts(lifted.labels, counts, binom(n - 3, d - 1) % 2)


def lifted_partition(points, basis: FunctionBasis, labels: Sequence | None = None) -> TwoPartition:
    return geometric_partition(cgeneric_lift(points, basis, labels))
