"""Orientable sets, even/odd two-partitions and the oriented Orchard morphism.

An orientable set is a finite set with a fixpoint-free involution ``iota``.
It is described by an ordered quotient (one label per ``iota``-orbit) and,
for each quotient label, a pair ``(positive copy, negative copy)``. The
positive copies form the canonical section.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations, permutations, product
from math import comb
from typing import Mapping, Sequence

from .errors import InputError, InvariantError, TripleConstantError
from .signfn import SignFunction, binom, colex_rank, colex_tuples, inversion_parity
from .twopart import GroundSet, TwoPartition


@dataclass(frozen=True)
class OrientableSet:
    quotient: GroundSet
    lifts: tuple
    _where: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        lifts = tuple(tuple(pair) for pair in self.lifts)
        if len(lifts) != self.quotient.n:
            raise InputError("need one (positive, negative) pair per quotient label")
        where = {}
        for i, pair in enumerate(lifts):
            if len(pair) != 2:
                raise InputError("each lift must be a (positive, negative) pair")
            for s, x in zip((1, -1), pair):
                if x in where:
                    raise InputError(f"duplicate element {x!r}")
                where[x] = (i, s)
        object.__setattr__(self, "lifts", lifts)
        object.__setattr__(self, "_where", where)

    @property
    def e(self) -> int:
        return self.quotient.n

    @property
    def elements(self) -> tuple:
        return tuple(x for pair in self.lifts for x in pair)

    def locate(self, x) -> tuple:
        """``(quotient index, +1 or -1)`` for the element ``x``."""
        try:
            return self._where[x]
        except (KeyError, TypeError):
            raise InputError(f"{x!r} is not an element of the orientable set") from None

    def element(self, i: int, s: int):
        return self.lifts[i][0 if s == 1 else 1]

    def iota(self, x):
        i, s = self.locate(x)
        return self.element(i, -s)

    def canonical_section(self) -> tuple:
        return tuple(pair[0] for pair in self.lifts)


def ori_make(quotient_labels: Sequence, lifts: Sequence | None = None) -> OrientableSet:
    """Orientable set on ``quotient_labels``; default lifts are ``(x, '-x')``."""
    quotient = GroundSet(tuple(quotient_labels))
    if lifts is None:
        lifts = [(f"+{x}", f"-{x}") for x in quotient.labels]
    return OrientableSet(quotient, tuple(lifts))


def _check_sign(v) -> int:
    if v not in (1, -1):
        raise InputError(f"expected +1 or -1, got {v!r}")
    return int(v)


@dataclass(frozen=True)
class OrientedTwoPartition:
    """An even (``parity=+1``) or odd (``parity=-1``) two-partition.

    ``signs`` holds the labelling of the positive copies; the negative copy
    of class ``i`` carries ``parity * signs[i]``. Canonical form has
    ``signs[0] == +1``.
    """

    base: OrientableSet
    parity: int
    signs: tuple

    def __post_init__(self):
        _check_sign(self.parity)
        signs = tuple(_check_sign(s) for s in self.signs)
        if len(signs) != self.base.e:
            raise InputError("need one sign per quotient label")
        if signs and signs[0] == -1:
            signs = tuple(-s for s in signs)
        object.__setattr__(self, "signs", signs)

    @classmethod
    def trivial(cls, base: OrientableSet) -> "OrientedTwoPartition":
        return cls(base, 1, (1,) * base.e)

    @classmethod
    def from_alpha(cls, base: OrientableSet, alpha: Mapping) -> "OrientedTwoPartition":
        """From a labelling of all elements; it must be even or odd."""
        signs = tuple(alpha[p] for p, _ in base.lifts)
        ratios = {alpha[p] * alpha[m] for p, m in base.lifts}
        if len(ratios) > 1:
            raise InputError("labelling is neither even nor odd")
        parity = ratios.pop() if ratios else 1
        return cls(base, parity, signs)

    def alpha(self, x) -> int:
        i, s = self.base.locate(x)
        return self.signs[i] * (self.parity if s == -1 else 1)

    def __mul__(self, other: "OrientedTwoPartition") -> "OrientedTwoPartition":
        if not isinstance(other, OrientedTwoPartition):
            return NotImplemented
        if other.base != self.base:
            raise InputError("cannot multiply partitions of different orientable sets")
        return OrientedTwoPartition(
            self.base,
            self.parity * other.parity,
            tuple(a * b for a, b in zip(self.signs, other.signs)),
        )

    def classes(self) -> tuple:
        plus = tuple(x for x in self.base.elements if self.alpha(x) == 1)
        minus = tuple(x for x in self.base.elements if self.alpha(x) == -1)
        return plus, minus

    def is_trivial(self) -> bool:
        return self.parity == 1 and all(s == 1 for s in self.signs)

    def permute(self, perm: Mapping) -> "OrientedTwoPartition":
        inv = {v: k for k, v in check_signed_permutation(self.base, perm).items()}
        return OrientedTwoPartition.from_alpha(
            self.base, {x: self.alpha(inv[x]) for x in self.base.elements}
        )

    def quotient_partition(self) -> TwoPartition:
        """The induced two-partition of the quotient; only for even partitions."""
        if self.parity != 1:
            raise InputError("only even partitions descend to the quotient")
        return TwoPartition(self.base.quotient, self.signs)

    def to_json(self) -> dict:
        plus, minus = self.classes()
        return {"parity": self.parity, "classes": [list(plus), list(minus)]}


def even_lift(p: TwoPartition, base: OrientableSet) -> OrientedTwoPartition:
    if p.ground != base.quotient:
        raise InputError("partition is not on the quotient of this orientable set")
    return OrientedTwoPartition(base, 1, p.alpha)


def semi_orientation_sections(p: OrientedTwoPartition) -> tuple:
    """The two complementary sections making up an odd two-partition."""
    if p.parity != -1:
        raise InputError("only odd partitions are semi-orientations")
    base = p.base
    plus = tuple(base.element(i, s) for i, s in enumerate(p.signs))
    minus = tuple(base.iota(x) for x in plus)
    return plus, minus


def check_signed_permutation(base: OrientableSet, perm: Mapping) -> dict:
    """Validate an ``iota``-equivariant permutation of the elements."""
    perm = dict(perm)
    elements = set(base.elements)
    if set(perm) != elements or set(perm.values()) != elements:
        raise InputError("permutation must be a bijection of the elements")
    for x in elements:
        if perm[base.iota(x)] != base.iota(perm[x]):
            raise InputError("permutation does not commute with iota")
    return perm


def random_signed_permutation(base: OrientableSet, seed=None) -> dict:
    """Uniform element of the hyperoctahedral group acting on ``base``."""
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    order = list(range(base.e))
    rng.shuffle(order)
    perm = {}
    for i, j in enumerate(order):
        s = rng.choice((1, -1))
        perm[base.element(i, 1)] = base.element(j, s)
        perm[base.element(i, -1)] = base.element(j, -s)
    return perm


@dataclass(frozen=True)
class OrientedPairwiseSign:
    """Symmetric sign on pairs of elements from distinct ``iota``-orbits.

    ``values`` is keyed by ``((i, s), (j, t))`` with ``i < j`` quotient
    indices and ``s, t`` copy signs.
    """

    base: OrientableSet
    values: Mapping
    parity: int
    gamma: int

    @classmethod
    def make(cls, base: OrientableSet, sigma, parity: int) -> "OrientedPairwiseSign":
        """Validate declared parity and the triple constant of ``sigma(x, y)``."""
        parity = _check_sign(parity)
        values = {}
        for i, j in combinations(range(base.e), 2):
            for s, t in product((1, -1), repeat=2):
                values[((i, s), (j, t))] = _check_sign(sigma(base.element(i, s), base.element(j, t)))
        for ((i, s), (j, t)), v in values.items():
            if values[((i, -s), (j, t))] != parity * v or values[((i, s), (j, -t))] != parity * v:
                raise InputError(f"sigma does not have parity {parity}")
        gamma = None
        for a, b, c in combinations(range(base.e), 3):
            for s, t, u in product((1, -1), repeat=3):
                prod_ = values[((a, s), (b, t))] * values[((b, t), (c, u))] * values[((a, s), (c, u))]
                if gamma is None:
                    gamma = prod_
                elif prod_ != gamma:
                    triple = (base.element(a, s), base.element(b, t), base.element(c, u))
                    raise TripleConstantError(f"triple {triple!r} breaks the triple constant", triple)
        return cls(base, values, parity, 1 if gamma is None else gamma)

    def __call__(self, x, y) -> int:
        (i, s), (j, t) = self.base.locate(x), self.base.locate(y)
        if i == j:
            raise InputError("sigma needs elements of distinct orbits")
        if i > j:
            (i, s), (j, t) = (j, t), (i, s)
        return self.values[((i, s), (j, t))]


def ori_partition_from_pairwise(s: OrientedPairwiseSign, base_point=None) -> OrientedTwoPartition:
    """Even or odd two-partition induced by ``s``; independent of ``base_point``."""
    base = s.base
    if base.e == 0:
        return OrientedTwoPartition(base, s.parity, ())
    x0 = base.element(0, 1) if base_point is None else base_point
    i0, _ = base.locate(x0)
    gamma = s.gamma if base.e >= 3 else 1
    alpha = {x0: 1, base.iota(x0): s.parity}
    for x in base.elements:
        if base.locate(x)[0] != i0:
            alpha[x] = gamma * s(x0, x)
    try:
        return OrientedTwoPartition.from_alpha(base, alpha)
    except InputError:
        raise InvariantError("sigma parity and partition parity disagree") from None


@dataclass(frozen=True)
class OrientedSignFunction:
    """Even/odd, symmetric/antisymmetric sign function on an orientable set.

    ``values`` are the values on increasing tuples of positive copies, in
    colex order of quotient indices.
    """

    base: OrientableSet
    arity: int
    sign: int
    parity: int
    values: tuple

    def __post_init__(self):
        e, l = self.base.e, self.arity
        if not 1 <= l <= e:
            raise InputError(f"arity {l} outside 1..{e}")
        _check_sign(self.sign)
        _check_sign(self.parity)
        values = tuple(_check_sign(v) for v in self.values)
        if len(values) != comb(e, l):
            raise InputError(f"expected {comb(e, l)} table values")
        object.__setattr__(self, "values", values)

    @classmethod
    def from_callable(cls, base: OrientableSet, arity: int, func) -> "OrientedSignFunction":
        """Tabulate ``func`` on all admissible tuples, inferring sign and parity.

        Mixed functions (neither symmetric nor antisymmetric, or neither even
        nor odd) are rejected with ``InputError``.
        """
        if not 1 <= arity <= base.e:
            raise InputError(f"arity {arity} outside 1..{base.e}")
        first = colex_tuples(base.e, arity)[0]
        ref = func(*(base.element(i, 1) for i in first))
        sign = 1
        if arity >= 2:
            swapped = (first[1], first[0]) + first[2:]
            sign = func(*(base.element(i, 1) for i in swapped)) * ref
        parity = func(*(base.element(i, -1 if k == 0 else 1) for k, i in enumerate(first))) * ref
        values = []
        for t in colex_tuples(base.e, arity):
            ref = func(*(base.element(i, 1) for i in t))
            values.append(ref)
            for perm in permutations(range(arity)):
                psign = inversion_parity(perm)
                for copies in product((1, -1), repeat=arity):
                    v = func(*(base.element(t[k], copies[k]) for k in perm))
                    neg = sum(1 for c in copies if c == -1)
                    expect = ref * (sign if psign == -1 else 1) * (parity if neg % 2 else 1)
                    if v != expect:
                        raise InputError("function is not of pure signature and parity")
        return cls(base, arity, sign, parity, tuple(values))

    @property
    def e(self) -> int:
        return self.base.e

    def value_on(self, classes: Sequence[int], copies: Sequence[int]) -> int:
        """Value at the elements ``element(classes[k], copies[k])``."""
        v = self.values[colex_rank(sorted(classes))]
        if self.sign == -1 and inversion_parity(classes) == -1:
            v = -v
        if self.parity == -1 and sum(1 for c in copies if c == -1) & 1:
            v = -v
        return v

    def __call__(self, *elements) -> int:
        located = [self.base.locate(x) for x in elements]
        classes = [i for i, _ in located]
        if len(classes) != self.arity or len(set(classes)) != self.arity:
            raise InputError("arguments must come from distinct orbits")
        return self.value_on(classes, [s for _, s in located])

    def __mul__(self, other: "OrientedSignFunction") -> "OrientedSignFunction":
        if not isinstance(other, OrientedSignFunction):
            return NotImplemented
        if other.base != self.base or other.arity != self.arity:
            raise InputError("functions must share base and arity")
        return OrientedSignFunction(
            self.base,
            self.arity,
            self.sign * other.sign,
            self.parity * other.parity,
            tuple(a * b for a, b in zip(self.values, other.values)),
        )

    def quotient_function(self) -> SignFunction:
        """The function on the quotient carried by an even function."""
        if self.parity != 1:
            raise InputError("only even functions descend to the quotient")
        return SignFunction(self.base.quotient, self.arity, self.sign, self.values)


def ori_constant(base: OrientableSet, arity: int, parity: int = 1, value: int = 1) -> OrientedSignFunction:
    """Symmetric function equal to ``value`` on the canonical section."""
    return OrientedSignFunction(base, arity, 1, parity, (value,) * comb(base.e, arity))


def ori_flip(base: OrientableSet, flipset) -> OrientedSignFunction:
    """Even symmetric flip on a set of quotient labels."""
    pos = sorted({base.quotient.index(x) for x in flipset})
    values = [1] * comb(base.e, len(pos))
    values[colex_rank(pos)] = -1
    return OrientedSignFunction(base, len(pos), 1, 1, tuple(values))


def ori_random(base: OrientableSet, arity: int, sign: int, parity: int, seed=None) -> OrientedSignFunction:
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    values = tuple(rng.choice((1, -1)) for _ in range(comb(base.e, arity)))
    return OrientedSignFunction(base, arity, sign, parity, values)


def ori_permute(perm: Mapping, phi: OrientedSignFunction) -> OrientedSignFunction:
    """Left action ``(pi.phi)(x) = phi(pi^-1 x)`` of ``Sym(E, iota)``."""
    base = phi.base
    inv = {v: k for k, v in check_signed_permutation(base, perm).items()}
    values = []
    for t in colex_tuples(base.e, phi.arity):
        located = [base.locate(inv[base.element(i, 1)]) for i in t]
        values.append(phi.value_on([i for i, _ in located], [s for _, s in located]))
    return OrientedSignFunction(base, phi.arity, phi.sign, phi.parity, tuple(values))


def _section_copies(base: OrientableSet, section) -> list:
    if section is None:
        return [1] * base.e
    if isinstance(section, Mapping):
        copies = [None] * base.e
        for q, x in section.items():
            i, s = base.locate(x)
            if i != base.quotient.index(q):
                raise InputError(f"{x!r} does not lie over {q!r}")
            copies[i] = s
        if None in copies:
            raise InputError("section must cover every quotient label")
        return copies
    copies = [_check_sign(s) for s in section]
    if len(copies) != base.e:
        raise InputError("section must give one copy sign per quotient label")
    return copies


def _ori_sigma(phi: OrientedSignFunction, y: tuple, z: tuple, copies: Sequence[int]) -> int:
    (i, s), (j, t) = y, z
    rest = [k for k in range(phi.e) if k != i and k != j]
    value = 1
    for r in combinations(rest, phi.arity - 1):
        rc = [copies[k] for k in r]
        value *= phi.value_on(list(r) + [i], rc + [s]) * phi.value_on(list(r) + [j], rc + [t])
    return value


def ori_sigma_phi(phi: OrientedSignFunction, y, z, section=None) -> int:
    """Pairwise sign of ``phi`` at elements ``y``, ``z`` of distinct orbits.

    ``section`` picks the copy used for the remaining orbits: ``None`` for
    the positive copies, a sequence of copy signs, or a mapping from
    quotient labels to elements. The value does not depend on it.
    """
    ly, lz = phi.base.locate(y), phi.base.locate(z)
    if ly[0] == lz[0]:
        raise InputError("y and z lie in the same orbit")
    return _ori_sigma(phi, ly, lz, _section_copies(phi.base, section))


def sigma_parity(phi: OrientedSignFunction) -> int:
    """Parity of the pairwise sign of ``phi``."""
    if phi.parity == 1:
        return 1
    return (-1) ** binom(phi.e - 2, phi.arity - 1)


def ori_triple_constant(phi: OrientedSignFunction) -> int:
    return phi.sign ** binom(phi.e - 3, phi.arity - 2)


def ori_sigma_table(phi: OrientedSignFunction, section=None) -> OrientedPairwiseSign:
    base = phi.base
    copies = _section_copies(base, section)
    values = {}
    for i, j in combinations(range(base.e), 2):
        for s, t in product((1, -1), repeat=2):
            values[((i, s), (j, t))] = _ori_sigma(phi, (i, s), (j, t), copies)
    return OrientedPairwiseSign(base, values, sigma_parity(phi), ori_triple_constant(phi))


def ori_rho(phi: OrientedSignFunction, verify: bool = False) -> OrientedTwoPartition:
    """The oriented Orchard partition of ``phi``.

    Even functions give even partitions; odd functions give odd ones
    (semi-orientations) exactly when ``C(e-2, l-1)`` is odd.
    """
    table = ori_sigma_table(phi)
    if verify:
        checked = OrientedPairwiseSign.make(phi.base, table, table.parity)
        if phi.e >= 3 and checked.gamma != table.gamma:
            raise InvariantError("oriented triple constant mismatch")
    return ori_partition_from_pairwise(table)


def uniqueness_guaranteed(e: int, arity: int) -> bool:
    """Whether ``(e, l)`` lies in the range where the oriented morphism is the unique one."""
    return 2 * arity < 2 * e and 2 * e >= 6
