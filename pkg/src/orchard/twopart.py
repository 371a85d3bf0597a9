"""Two-partitions of a finite set and their construction from pairwise signs.

A two-partition ``{A, B}`` of ``E`` (one part may be empty) is stored as a
``+1/-1`` labelling normalised so that the first label of the ground set
carries ``+1``. With that normalisation equality is a pointwise comparison
and the group law is the pointwise product.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Hashable, Iterable, Mapping

import networkx as nx

from .errors import InputError, TripleConstantError

Label = Hashable


def _check_sign(value) -> int:
    if value not in (1, -1):
        raise InputError(f"expected a sign +1 or -1, got {value!r}")
    return int(value)


@dataclass(frozen=True)
class GroundSet:
    """An ordered finite set of distinct labels.

    The order is fixed at construction and is the one used whenever an
    increasing tuple of labels is needed.
    """

    labels: tuple
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        labels = tuple(self.labels)
        index = {}
        for i, label in enumerate(labels):
            if label in index:
                raise InputError(f"duplicate label {label!r}")
            index[label] = i
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_index", index)

    @classmethod
    def range(cls, n: int) -> "GroundSet":
        return cls(tuple(range(n)))

    @property
    def n(self) -> int:
        return len(self.labels)

    def __len__(self):
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def __contains__(self, label):
        return label in self._index

    def index(self, label) -> int:
        try:
            return self._index[label]
        except (KeyError, TypeError):
            raise InputError(f"label {label!r} is not in the ground set") from None

    def sort(self, labels: Iterable) -> tuple:
        return tuple(sorted(labels, key=self.index))


def check_permutation(ground: GroundSet, perm: Mapping) -> dict:
    """Validate that ``perm`` is a bijection of the ground set onto itself."""
    perm = dict(perm)
    if set(perm) != set(ground.labels) or set(perm.values()) != set(ground.labels):
        raise InputError("permutation must be a bijection of the ground set")
    return perm


def invert_permutation(perm: Mapping) -> dict:
    return {v: k for k, v in perm.items()}


@dataclass(frozen=True)
class TwoPartition:
    """An element of the group of two-partitions of ``ground``.

    ``alpha`` is a tuple of signs aligned with ``ground.labels`` and always
    satisfies ``alpha[0] == +1``.
    """

    ground: GroundSet
    alpha: tuple

    def __post_init__(self):
        alpha = tuple(_check_sign(a) for a in self.alpha)
        if len(alpha) != self.ground.n:
            raise InputError("alpha must have one sign per ground label")
        if alpha and alpha[0] == -1:
            alpha = tuple(-a for a in alpha)
        object.__setattr__(self, "alpha", alpha)

    @classmethod
    def trivial(cls, ground: GroundSet) -> "TwoPartition":
        return cls(ground, (1,) * ground.n)

    @classmethod
    def from_classes(cls, ground: GroundSet, part: Iterable) -> "TwoPartition":
        """Build the partition ``part | ground \\ part``."""
        part = set(part)
        for x in part:
            ground.index(x)
        return cls(ground, tuple(1 if x in part else -1 for x in ground.labels))

    def __mul__(self, other: "TwoPartition") -> "TwoPartition":
        if not isinstance(other, TwoPartition):
            return NotImplemented
        if other.ground != self.ground:
            raise InputError("cannot multiply two-partitions of different sets")
        return TwoPartition(self.ground, tuple(a * b for a, b in zip(self.alpha, other.alpha)))

    def sign_of(self, label) -> int:
        return self.alpha[self.ground.index(label)]

    def same_class(self, x, y) -> bool:
        return self.sign_of(x) == self.sign_of(y)

    def classes(self) -> tuple:
        """Return ``(A, B)`` with ``A`` the class of the first label; ``B`` may be empty."""
        a = tuple(x for x, s in zip(self.ground.labels, self.alpha) if s == 1)
        b = tuple(x for x, s in zip(self.ground.labels, self.alpha) if s == -1)
        return a, b

    def is_trivial(self) -> bool:
        return all(s == 1 for s in self.alpha)

    def permute(self, perm: Mapping) -> "TwoPartition":
        """Left action of a label permutation: ``(pi.alpha)(x) = alpha(pi^-1 x)``."""
        inv = invert_permutation(check_permutation(self.ground, perm))
        return TwoPartition(self.ground, tuple(self.sign_of(inv[x]) for x in self.ground.labels))

    def to_json(self) -> dict:
        a, b = self.classes()
        return {"classes": [list(a), list(b)], "alpha": list(self.alpha)}

    def __repr__(self):
        a, b = self.classes()
        return f"TwoPartition({list(a)} | {list(b)})"


def partition_make(ground: GroundSet, raw_alpha: Mapping) -> TwoPartition:
    """Canonical two-partition for a label -> sign mapping."""
    missing = [x for x in ground.labels if x not in raw_alpha]
    if missing:
        raise InputError(f"raw_alpha has no value for labels {missing!r}")
    return TwoPartition(ground, tuple(raw_alpha[x] for x in ground.labels))


def partition_multiply(p: TwoPartition, q: TwoPartition) -> TwoPartition:
    return p * q


def _pair_key(i: int, j: int) -> tuple:
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class PairwiseSign:
    """A symmetric sign function on unordered pairs of distinct labels.

    ``values`` maps index pairs ``(i, j)`` with ``i < j`` to ``+1/-1``.
    ``gamma`` is the common value of the triple product, or ``None`` when
    the triple product is not constant; ``violation`` then holds a triple
    whose product differs from that of the first triple.
    """

    ground: GroundSet
    values: Mapping
    gamma: int | None
    violation: tuple | None = None

    @classmethod
    def make(cls, ground: GroundSet, sigma, gamma: int | None = None) -> "PairwiseSign":
        """Validate ``sigma`` on every pair and every triple.

        ``sigma`` is either a mapping keyed by label pairs (either order) or a
        callable ``sigma(x, y)``. If ``gamma`` is given, every triple must
        have that product, else ``TripleConstantError`` is raised. When
        ``gamma`` is omitted it is computed; a non-constant triple product
        leaves it undefined.
        """
        values = {}
        labels = ground.labels
        for i, j in combinations(range(ground.n), 2):
            x, y = labels[i], labels[j]
            if callable(sigma):
                v = sigma(x, y)
            elif (x, y) in sigma:
                v = sigma[(x, y)]
            elif (y, x) in sigma:
                v = sigma[(y, x)]
            else:
                raise InputError(f"sigma has no value for pair {(x, y)!r}")
            values[(i, j)] = _check_sign(v)
        observed, violation = _triple_constant(ground, values)
        if gamma is not None:
            gamma = _check_sign(gamma)
            if violation is None and observed not in (None, gamma):
                violation = labels[:3]
            if violation is not None:
                raise TripleConstantError(
                    f"triple {violation!r} does not have product {gamma}", violation
                )
        elif violation is None:
            gamma = 1 if observed is None else observed
        return cls(ground, values, gamma, violation)

    @classmethod
    def unchecked(cls, ground: GroundSet, values: Mapping, gamma: int) -> "PairwiseSign":
        """Wrap index-pair values whose triple constant is already known."""
        return cls(ground, values, gamma)

    def __call__(self, x, y) -> int:
        i, j = self.ground.index(x), self.ground.index(y)
        if i == j:
            raise InputError("sigma is only defined on distinct labels")
        return self.values[_pair_key(i, j)]

    def at(self, i: int, j: int) -> int:
        return self.values[_pair_key(i, j)]

    def permute(self, perm: Mapping) -> "PairwiseSign":
        inv = invert_permutation(check_permutation(self.ground, perm))
        return PairwiseSign.make(self.ground, lambda x, y: self(inv[x], inv[y]))


def _triple_constant(ground: GroundSet, values: Mapping):
    """Return ``(gamma, None)`` if constant, ``(None, triple)`` otherwise."""
    gamma = None
    for a, b, c in combinations(range(ground.n), 3):
        prod = values[(a, b)] * values[(b, c)] * values[(a, c)]
        if gamma is None:
            gamma = prod
        elif prod != gamma:
            labels = ground.labels
            return None, (labels[a], labels[b], labels[c])
    return gamma, None


def _require_gamma(s: PairwiseSign) -> int:
    if s.gamma is None:
        triple = s.violation
        raise TripleConstantError(f"triple product is not constant, see {triple!r}", triple)
    # fewer than three labels: the triple condition is vacuous
    return s.gamma if s.ground.n >= 3 else 1


def partition_from_pairwise(s: PairwiseSign, base=None) -> tuple:
    """Two-partition induced by a pairwise sign with constant triple product.

    Returns ``(partition, gamma)``. ``base`` selects the base point; the
    result does not depend on it.
    """
    gamma = _require_gamma(s)
    ground = s.ground
    if ground.n == 0:
        return TwoPartition(ground, ()), gamma
    b = 0 if base is None else ground.index(base)
    alpha = tuple(1 if i == b else gamma * s.at(i, b) for i in range(ground.n))
    return TwoPartition(ground, alpha), gamma


def complete_components(s: PairwiseSign) -> tuple:
    """Same result as :func:`partition_from_pairwise`, via graph components.

    Builds the graph whose edges are the pairs with sign ``+1``, passes to
    the complement when the triple product is ``-1``, and reads the classes
    off the connected components, each of which must be a complete graph.
    """
    gamma = _require_gamma(s)
    ground = s.ground
    graph = nx.Graph()
    graph.add_nodes_from(range(ground.n))
    graph.add_edges_from(pair for pair, v in s.values.items() if v == 1)
    if gamma == -1:
        graph = nx.complement(graph)
    components = list(nx.connected_components(graph))
    if len(components) > 2:
        raise TripleConstantError("graph has more than two components")
    for comp in components:
        k = len(comp)
        if graph.subgraph(comp).number_of_edges() != k * (k - 1) // 2:
            raise TripleConstantError(f"component {sorted(comp)} is not complete")
    first = next((c for c in components if 0 in c), set())
    alpha = tuple(1 if i in first else -1 for i in range(ground.n))
    return TwoPartition(ground, alpha), gamma
