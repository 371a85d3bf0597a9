"""Symmetric and antisymmetric sign functions on tuples of distinct labels.

A function of arity ``l`` is stored by its values on increasing ``l``-tuples
(increasing in ground order), listed in colexicographic order of the index
tuples. Its value on any other tuple follows from the signature: a symmetric
function (``sign == +1``) ignores argument order, an antisymmetric one
(``sign == -1``) picks up the parity of the sorting permutation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from math import comb
from typing import Iterable, Mapping, Sequence

from .errors import InputError
from .twopart import GroundSet, check_permutation, invert_permutation


@lru_cache(maxsize=None)
def colex_tuples(n: int, k: int) -> tuple:
    """All increasing ``k``-tuples of ``range(n)`` in colex order."""
    return tuple(sorted(combinations(range(n), k), key=lambda t: t[::-1]))


def colex_rank(positions: Sequence[int]) -> int:
    """Rank of an increasing index tuple within :func:`colex_tuples`."""
    return sum(comb(p, i + 1) for i, p in enumerate(positions))


def inversion_parity(seq: Sequence) -> int:
    """``+1`` for an even number of inversions, ``-1`` for odd."""
    inv = 0
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                inv += 1
    return -1 if inv & 1 else 1


def binom(a: int, b: int) -> int:
    """Binomial coefficient, zero outside ``0 <= b <= a``."""
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


@dataclass(frozen=True)
class SignFunction:
    """An ``l``-symmetric (``sign=+1``) or ``l``-antisymmetric (``sign=-1``) function."""

    ground: GroundSet
    arity: int
    sign: int
    values: tuple

    def __post_init__(self):
        n, l = self.ground.n, self.arity
        if not 1 <= l <= n:
            raise InputError(f"arity {l} outside 1..{n}")
        if self.sign not in (1, -1):
            raise InputError("sign must be +1 or -1")
        values = tuple(self.values)
        if len(values) != comb(n, l):
            raise InputError(f"expected {comb(n, l)} table values, got {len(values)}")
        if any(v not in (1, -1) for v in values):
            raise InputError("table values must be +1 or -1")
        object.__setattr__(self, "values", values)

    @classmethod
    def from_table(cls, ground: GroundSet, arity: int, sign: int, table: Mapping) -> "SignFunction":
        """Build from a mapping ``label tuple -> value``.

        Keys may list the labels in any order; the value is read as the value
        on that ordering.
        """
        values = [None] * comb(ground.n, arity)
        for key, v in table.items():
            pos = [ground.index(x) for x in key]
            if len(pos) != arity or len(set(pos)) != arity:
                raise InputError(f"bad table key {key!r}")
            r = colex_rank(sorted(pos))
            values[r] = v * (sign if inversion_parity(pos) == -1 else 1)
        if any(v is None for v in values):
            raise InputError("table must cover every l-subset")
        return cls(ground, arity, sign, tuple(values))

    @classmethod
    def from_callable(cls, ground: GroundSet, arity: int, func) -> "SignFunction":
        """Tabulate ``func`` on every injective tuple and infer its signature.

        Raises ``InputError`` if ``func`` is neither symmetric nor antisymmetric.
        """
        if not 1 <= arity <= ground.n:
            raise InputError(f"arity {arity} outside 1..{ground.n}")
        labels = ground.labels
        values = []
        sign = None
        for t in colex_tuples(ground.n, arity):
            base = func(*(labels[i] for i in t))
            values.append(base)
            for p in permutations(range(arity)):
                v = func(*(labels[t[i]] for i in p))
                if v not in (1, -1):
                    raise InputError(f"function value {v!r} is not a sign")
                if inversion_parity(p) == -1:
                    s = v * base
                    if sign is None:
                        sign = s
                    elif s != sign:
                        raise InputError("function is neither symmetric nor antisymmetric")
                elif v != base:
                    raise InputError("function is neither symmetric nor antisymmetric")
        return cls(ground, arity, 1 if sign is None else sign, tuple(values))

    @property
    def n(self) -> int:
        return self.ground.n

    @property
    def table(self) -> dict:
        labels = self.ground.labels
        return {
            tuple(labels[i] for i in t): v
            for t, v in zip(colex_tuples(self.n, self.arity), self.values)
        }

    def value_at(self, positions: Sequence[int]) -> int:
        """Evaluate on a tuple of distinct ground indices."""
        s = sorted(positions)
        v = self.values[colex_rank(s)]
        if self.sign == -1 and inversion_parity(positions) == -1:
            v = -v
        return v

    def value_appended(self, increasing: Sequence[int], last: int) -> int:
        """Evaluate on ``(*increasing, last)`` for an increasing index tuple."""
        after = 0
        s = []
        for p in increasing:
            if p > last:
                after += 1
            s.append(p)
        s.append(last)
        s.sort()
        v = self.values[colex_rank(s)]
        if self.sign == -1 and after & 1:
            v = -v
        return v

    def __call__(self, *labels) -> int:
        return fn_eval(self, labels)

    def __mul__(self, other: "SignFunction") -> "SignFunction":
        if not isinstance(other, SignFunction):
            return NotImplemented
        return fn_multiply(self, other)

    def __neg__(self) -> "SignFunction":
        return SignFunction(self.ground, self.arity, self.sign, tuple(-v for v in self.values))


def fn_constant(ground: GroundSet, arity: int, value: int = 1) -> SignFunction:
    if value not in (1, -1):
        raise InputError("value must be +1 or -1")
    if not 1 <= arity <= ground.n:
        raise InputError(f"arity {arity} outside 1..{ground.n}")
    return SignFunction(ground, arity, 1, (value,) * comb(ground.n, arity))


def fn_flip(ground: GroundSet, flipset: Iterable) -> SignFunction:
    """The symmetric function equal to ``-1`` exactly on arrangements of ``flipset``."""
    flipset = tuple(flipset)
    pos = sorted({ground.index(x) for x in flipset})
    if len(pos) != len(flipset) or not 1 <= len(pos) <= ground.n:
        raise InputError("flipset must consist of 1..n distinct labels")
    l = len(pos)
    values = [1] * comb(ground.n, l)
    values[colex_rank(pos)] = -1
    return SignFunction(ground, l, 1, tuple(values))


def fn_eval(phi: SignFunction, labels: Sequence) -> int:
    pos = [phi.ground.index(x) for x in labels]
    if len(pos) != phi.arity:
        raise InputError(f"expected {phi.arity} arguments, got {len(pos)}")
    if len(set(pos)) != len(pos):
        raise InputError("arguments must be distinct")
    return phi.value_at(pos)


def fn_multiply(phi: SignFunction, psi: SignFunction) -> SignFunction:
    if phi.ground != psi.ground or phi.arity != psi.arity:
        raise InputError("sign functions must share ground set and arity")
    return SignFunction(
        phi.ground,
        phi.arity,
        phi.sign * psi.sign,
        tuple(a * b for a, b in zip(phi.values, psi.values)),
    )


def fn_permute(perm: Mapping, phi: SignFunction) -> SignFunction:
    """Left action ``(pi.phi)(x_1..x_l) = phi(pi^-1 x_1, .., pi^-1 x_l)``."""
    ground = phi.ground
    inv = invert_permutation(check_permutation(ground, perm))
    inv_pos = [ground.index(inv[x]) for x in ground.labels]
    values = tuple(
        phi.value_at([inv_pos[i] for i in t]) for t in colex_tuples(ground.n, phi.arity)
    )
    return SignFunction(ground, phi.arity, phi.sign, values)


def fn_flip_decompose(phi: SignFunction) -> list:
    """Flipsets whose flips multiply to the symmetric function ``phi``."""
    if phi.sign != 1:
        raise InputError("only symmetric functions are products of flips")
    labels = phi.ground.labels
    return [
        tuple(labels[i] for i in t)
        for t, v in zip(colex_tuples(phi.n, phi.arity), phi.values)
        if v == -1
    ]


def fn_random(ground: GroundSet, arity: int, sign: int, seed=None) -> SignFunction:
    """Uniformly random table with the requested signature; reproducible per seed."""
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    if not 1 <= arity <= ground.n:
        raise InputError(f"arity {arity} outside 1..{ground.n}")
    values = tuple(rng.choice((1, -1)) for _ in range(comb(ground.n, arity)))
    return SignFunction(ground, arity, sign, values)
