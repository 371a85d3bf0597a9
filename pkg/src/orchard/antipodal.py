"""Antipodal point sets, lines through the origin and projective points.

An antipodal set ``{+-x_1, ..., +-x_e}`` in ``R^d`` is an orientable set
(``iota`` is negation). Determinant signs of ``d`` vectors give an odd
antisymmetric function of arity ``d``; its oriented Orchard partition is a
two-partition of the lines when ``C(e-2, d-1)`` is even and a
semi-orientation when it is odd.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .errors import GenericityError, InputError, InvariantError
from .oriented import OrientableSet, OrientedSignFunction, OrientedTwoPartition, ori_make, ori_rho
from .predicates import as_fraction, det_sign, rank
from .signfn import binom, colex_tuples


def canonical_representative(v: Sequence) -> tuple:
    """The one of ``v, -v`` whose first nonzero coordinate is positive."""
    for c in v:
        if c != 0:
            return tuple(v) if c > 0 else tuple(-x for x in v)
    raise InputError("the zero vector does not span a line")


@dataclass(frozen=True)
class AntipodalConfiguration:
    """``e`` lines through the origin of ``R^dim``, one representative each.

    The positive copy of line ``i`` is ``reps[i]``, the negative copy its
    negation.
    """

    base: OrientableSet
    dim: int
    reps: tuple

    def __post_init__(self):
        reps = tuple(tuple(as_fraction(v) for v in r) for r in self.reps)
        if len(reps) != self.base.e:
            raise InputError("need one representative per line")
        if any(len(r) != self.dim for r in reps):
            raise InputError(f"every representative needs {self.dim} coordinates")
        if any(all(v == 0 for v in r) for r in reps):
            raise InputError("the zero vector does not span a line")
        object.__setattr__(self, "reps", reps)

    @classmethod
    def make(cls, vectors: Sequence[Sequence], labels: Sequence | None = None, canonicalize: bool = False):
        vectors = [tuple(as_fraction(v) for v in r) for r in vectors]
        if not vectors:
            raise InputError("need at least one line")
        if canonicalize:
            vectors = [canonical_representative(v) for v in vectors]
        labels = tuple(range(len(vectors))) if labels is None else tuple(labels)
        return cls(ori_make(labels), len(vectors[0]), tuple(vectors))

    @property
    def e(self) -> int:
        return self.base.e

    def vector(self, x) -> tuple:
        """Coordinates of the element ``x`` (a signed copy of a line)."""
        i, s = self.base.locate(x)
        return self.reps[i] if s == 1 else tuple(-v for v in self.reps[i])


def antipodal_is_generic(a: AntipodalConfiguration):
    """``(True, None)`` if any ``k <= d`` lines span a ``k``-dimensional space."""
    d, e = a.dim, a.e
    labels = a.base.quotient.labels
    if e < d:
        if rank(a.reps) == e:
            return True, None
        for k in range(2, e + 1):
            for idx in combinations(range(e), k):
                if rank([a.reps[i] for i in idx]) < k:
                    return False, tuple(labels[i] for i in idx)
    for idx in combinations(range(e), d):
        if det_sign([a.reps[i] for i in idx]) == 0:
            return False, tuple(labels[i] for i in idx)
    return True, None


def antipodal_phi(a: AntipodalConfiguration) -> OrientedSignFunction:
    """Odd antisymmetric function ``(x_1..x_d) -> sign det(x_1, ..., x_d)``."""
    generic, witness = antipodal_is_generic(a)
    if not generic:
        raise GenericityError(f"lines {list(witness)} are linearly dependent", witness)
    if a.e < a.dim:
        raise InputError("need at least d lines")
    values = tuple(det_sign([a.reps[i] for i in t]) for t in colex_tuples(a.e, a.dim))
    return OrientedSignFunction(a.base, a.dim, -1, -1, values)


def line_parity(e: int, d: int) -> int:
    """``+1`` (two-partition of lines) or ``-1`` (semi-orientation)."""
    return -1 if binom(e - 2, d - 1) % 2 else 1


def line_structure(a: AntipodalConfiguration) -> OrientedTwoPartition:
    """Oriented Orchard partition of the determinant function of ``a``."""
    p = ori_rho(antipodal_phi(a))
    if p.parity != line_parity(a.e, a.dim):
        raise InvariantError("line structure has the wrong parity")
    return p


def projective_structure(points: Sequence[Sequence], labels: Sequence | None = None) -> OrientedTwoPartition:
    """Structure on points of ``RP^d`` given by homogeneous coordinates in ``R^(d+1)``.

    A two-partition of the points exactly when ``C(#points - 2, d)`` is even.
    """
    return line_structure(AntipodalConfiguration.make(points, labels, canonicalize=True))
