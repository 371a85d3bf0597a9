"""Generic point configurations and the geometric form of the Orchard partition.

Two points ``P, Q`` of a generic configuration of ``n`` points in ``R^d``
lie in the same class iff the number ``s(P, Q)`` of hyperplanes spanned by
``d`` other points that separate them satisfies
``s(P, Q) = C(n-3, d-1) (mod 2)``.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import NamedTuple, Sequence

from .errors import GenerationError, GenericityError, InputError, InvariantError
from .morphism import changed_pairs, crossing_pairs, orchard_rho
from .predicates import affinely_independent, as_fraction, det_int, det_value
from .signfn import SignFunction, binom, colex_tuples
from .twopart import GroundSet, PairwiseSign, TwoPartition, partition_from_pairwise


@dataclass(frozen=True)
class Configuration:
    """``n`` labelled points with exact rational coordinates in ``R^dim``.

    Construction only checks shapes; operations that need genericity call
    :func:`require_generic`.
    """

    dim: int
    points: tuple
    labels: GroundSet
    _scaled: tuple = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.dim < 1:
            raise InputError("dimension must be at least 1")
        pts = tuple(tuple(as_fraction(v) for v in p) for p in self.points)
        if any(len(p) != self.dim for p in pts):
            raise InputError(f"every point needs {self.dim} coordinates")
        if self.labels.n != len(pts):
            raise InputError("need one label per point")
        den = 1
        for p in pts:
            for v in p:
                den = den * v.denominator // math.gcd(den, v.denominator)
        scaled = tuple(tuple(int(v * den) for v in p) for p in pts)
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "_scaled", scaled)

    @classmethod
    def make(cls, points: Sequence[Sequence], labels: Sequence | None = None, dim: int | None = None):
        points = [list(p) for p in points]
        if dim is None:
            if not points:
                raise InputError("cannot infer the dimension of an empty configuration")
            dim = len(points[0])
        ground = GroundSet(tuple(range(len(points))) if labels is None else tuple(labels))
        return cls(dim, tuple(points), ground)

    @property
    def n(self) -> int:
        return len(self.points)

    def orientation(self, idx: Sequence[int]) -> int:
        """Orientation sign of the points with indices ``idx`` (``d+1`` of them)."""
        p = self._scaled
        p0 = p[idx[0]]
        d = det_int([[a - b for a, b in zip(p[i], p0)] for i in idx[1:]])
        return (d > 0) - (d < 0)

    def relabel(self, perm: Sequence[int]) -> "Configuration":
        """Configuration whose point ``i`` is the old point ``perm[i]``."""
        return Configuration(self.dim, tuple(self.points[j] for j in perm), self.labels)

    def to_json(self) -> dict:
        from .io import configuration_to_json

        return configuration_to_json(self)


class GenericityReport(NamedTuple):
    generic: bool
    witness: tuple | None


def is_generic(c: Configuration) -> GenericityReport:
    """Check that every subset of at most ``d+1`` points is affinely independent."""
    d, n = c.dim, c.n
    labels = c.labels.labels
    if n <= d + 1:
        if affinely_independent(c.points):
            return GenericityReport(True, None)
        # smallest dependent subset as witness
        for k in range(2, n + 1):
            for idx in combinations(range(n), k):
                if not affinely_independent([c.points[i] for i in idx]):
                    return GenericityReport(False, tuple(labels[i] for i in idx))
    for idx in combinations(range(n), d + 1):
        if c.orientation(idx) == 0:
            return GenericityReport(False, tuple(labels[i] for i in idx))
    return GenericityReport(True, None)


def require_generic(c: Configuration, what: str = "configuration") -> None:
    generic, witness = is_generic(c)
    if not generic:
        raise GenericityError(f"{what} is not generic: points {list(witness)} are affinely dependent", witness)


def orientation_function(c: Configuration) -> SignFunction:
    """The antisymmetric function of arity ``d+1`` given by simplex orientations."""
    require_generic(c)
    if c.n < c.dim + 1:
        raise InputError("orientation function needs at least d+1 points")
    values = tuple(c.orientation(t) for t in colex_tuples(c.n, c.dim + 1))
    return SignFunction(c.labels, c.dim + 1, -1, values)


def _separating(c: Configuration, i: int, j: int) -> int:
    rest = [k for k in range(c.n) if k != i and k != j]
    count = 0
    for s in combinations(rest, c.dim):
        if c.orientation(s + (i,)) != c.orientation(s + (j,)):
            count += 1
    return count


def separating_count(c: Configuration, p, q) -> int:
    """Number of hyperplanes through ``d`` other points separating ``p`` and ``q``."""
    require_generic(c)
    i, j = c.labels.index(p), c.labels.index(q)
    if i == j:
        raise InputError("p and q must be distinct")
    return _separating(c, i, j)


def separating_matrix(c: Configuration) -> list:
    """Symmetric ``n x n`` matrix of separating counts (zero diagonal)."""
    require_generic(c)
    m = [[0] * c.n for _ in range(c.n)]
    for i, j in combinations(range(c.n), 2):
        m[i][j] = m[j][i] = _separating(c, i, j)
    return m


def partition_from_counts(ground: GroundSet, counts, target_parity: int) -> TwoPartition:
    """Two-partition where distinct ``i, j`` are equivalent iff ``counts[i][j]`` has the target parity."""
    s = PairwiseSign.make(
        ground,
        lambda x, y: 1 if counts[ground.index(x)][ground.index(y)] % 2 == target_parity else -1,
    )
    if s.gamma != 1:
        raise InvariantError("separating counts do not define a two-partition")
    partition, _ = partition_from_pairwise(s)
    return partition


def geometric_partition(c: Configuration, verify: bool = False) -> TwoPartition:
    """Orchard partition of a generic configuration, from separating counts.

    Trivial when ``n <= d+1``. With ``verify=True`` the result is compared
    against the Orchard partition of the orientation function.
    """
    require_generic(c)
    n, d = c.n, c.dim
    if n <= d + 1:
        return TwoPartition.trivial(c.labels)
    partition = partition_from_counts(c.labels, separating_matrix(c), binom(n - 3, d - 1) % 2)
    if verify and partition != orchard_rho(orientation_function(c)):
        raise InvariantError("geometric partition differs from the Orchard partition")
    return partition


@dataclass(frozen=True)
class FlipReport:
    flipset: tuple | None
    differing: int
    before: TwoPartition | None = None
    after: TwoPartition | None = None
    changed: frozenset = frozenset()


def flip_relation(c1: Configuration, c2: Configuration) -> FlipReport:
    """Detect whether two configurations differ by one orientation flip.

    When they do, the class changes must be exactly the pairs separated by
    the flipset; anything else raises ``InvariantError``.
    """
    if c1.n != c2.n or c1.dim != c2.dim:
        raise InputError("configurations must have the same size and dimension")
    require_generic(c1, "first configuration")
    require_generic(c2, "second configuration")
    tuples = colex_tuples(c1.n, c1.dim + 1) if c1.n >= c1.dim + 1 else ()
    diff = [t for t in tuples if c1.orientation(t) != c2.orientation(t)]
    if len(diff) != 1:
        return FlipReport(None, len(diff))
    labels = c1.labels.labels
    flipset = tuple(labels[i] for i in diff[0])
    before, after = geometric_partition(c1), geometric_partition(c2)
    changed = changed_pairs(before, after)
    if changed != crossing_pairs(c1.labels, flipset):
        raise InvariantError(f"flip {flipset!r} changed {sorted(changed)!r}")
    return FlipReport(flipset, 1, before, after, changed)


def random_configuration(
    n: int,
    d: int,
    seed=None,
    coord_range: int | None = None,
    max_tries: int = 1000,
) -> Configuration:
    """Generic configuration with integer coordinates drawn uniformly from ``[-M, M]``.

    ``M`` defaults to ``10 * n * d``. Draws are rejected until generic.
    """
    if n < 1 or d < 1:
        raise InputError("need n >= 1 and d >= 1")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    m = coord_range if coord_range is not None else 10 * n * d
    for _ in range(max_tries):
        pts = tuple(tuple(Fraction(rng.randint(-m, m)) for _ in range(d)) for _ in range(n))
        c = Configuration(d, pts, GroundSet.range(n))
        if is_generic(c).generic:
            return c
    raise GenerationError(f"no generic configuration after {max_tries} draws")


def _hyperplane_normal(points: Sequence[Sequence[Fraction]]) -> list:
    """Normal vector of the hyperplane through ``d`` points of ``R^d``."""
    d = len(points[0])
    a0 = points[0]
    rows = [[a - b for a, b in zip(p, a0)] for p in points[1:]]
    normal = []
    for k in range(d):
        unit = [Fraction(int(i == k)) for i in range(d)]
        normal.append(det_value([unit] + rows))
    return normal


def flip_pair(c: Configuration, flipset: Sequence[int], moving: int, max_halvings: int = 60):
    """Two configurations on either side of a single flip of ``flipset``.

    The point ``moving`` (an index in ``flipset``) is placed just before and
    just after the hyperplane spanned by the rest of ``flipset``, near the
    foot of its perpendicular. Returns ``(c_before, c_after)``, or ``None``
    when no step size isolates the flip.
    """
    d = c.dim
    flipset = list(flipset)
    if len(flipset) != d + 1 or moving not in flipset:
        raise InputError("flipset must have d+1 indices and contain the moving point")
    others = [c.points[i] for i in flipset if i != moving]
    normal = _hyperplane_normal(others)
    p = c.points[moving]
    nn = sum(v * v for v in normal)
    if nn == 0:
        return None
    t = sum(v * (a - b) for v, a, b in zip(normal, p, others[0])) / nn
    foot = [a - t * v for a, v in zip(p, normal)]
    offset = [a - b for a, b in zip(p, foot)]
    target = tuple(sorted(flipset))
    eps = Fraction(1, 2)
    for _ in range(max_halvings):
        near = tuple(f + eps * o for f, o in zip(foot, offset))
        far = tuple(f - eps * o for f, o in zip(foot, offset))
        pts_a = list(c.points)
        pts_b = list(c.points)
        pts_a[moving], pts_b[moving] = near, far
        ca = Configuration(d, tuple(pts_a), c.labels)
        cb = Configuration(d, tuple(pts_b), c.labels)
        if is_generic(ca).generic and is_generic(cb).generic:
            diff = [u for u in colex_tuples(c.n, d + 1) if ca.orientation(u) != cb.orientation(u)]
            if diff == [target]:
                return ca, cb
        eps /= 2
    return None
