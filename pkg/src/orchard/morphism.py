"""The Orchard morphism from sign functions to two-partitions.

For a sign function ``phi`` of arity ``l`` on ``E`` the pairwise sign

    sigma(y, z) = prod over increasing (l-1)-tuples R of E \\ {y, z}
                  of phi(*R, y) * phi(*R, z)

has constant triple product ``sign(phi) ** C(n-3, l-2)``; the two-partition
it induces is ``orchard_rho(phi)``.
"""

from __future__ import annotations

from contextlib import contextmanager
from dataclasses import dataclass
from itertools import combinations

from .errors import InputError, InvariantError
from .signfn import SignFunction, binom, colex_tuples, fn_flip, fn_multiply
from .twopart import GroundSet, PairwiseSign, TwoPartition, partition_from_pairwise

# Test-only: when set, called as hook(phi, i, j, value) on every sigma value.
_sigma_mutation = None


@contextmanager
def sigma_mutation(hook):
    """Temporarily corrupt sigma values; used to check that verification catches bugs."""
    global _sigma_mutation
    previous, _sigma_mutation = _sigma_mutation, hook
    try:
        yield
    finally:
        _sigma_mutation = previous


def triple_constant(phi: SignFunction) -> int:
    """The triple product ``sign(phi) ** C(n-3, l-2)``."""
    return phi.sign ** binom(phi.n - 3, phi.arity - 2)


def _sigma_direct(phi: SignFunction, i: int, j: int) -> int:
    rest = [k for k in range(phi.n) if k != i and k != j]
    value = 1
    for r in combinations(rest, phi.arity - 1):
        value *= phi.value_appended(r, i) * phi.value_appended(r, j)
    return value


def _mu_values(phi: SignFunction) -> list:
    mu = []
    for x in range(phi.n):
        rest = [k for k in range(phi.n) if k != x]
        value = 1
        for r in combinations(rest, phi.arity - 1):
            value *= phi.value_appended(r, x)
        mu.append(value)
    return mu


def _mutate(phi, i, j, value):
    if _sigma_mutation is not None:
        return _sigma_mutation(phi, i, j, value)
    return value


def sigma_phi(phi: SignFunction, y, z) -> int:
    """Pairwise sign of ``phi`` at the distinct labels ``y`` and ``z``."""
    i, j = phi.ground.index(y), phi.ground.index(z)
    if i == j:
        raise InputError("sigma_phi needs two distinct labels")
    i, j = min(i, j), max(i, j)
    return _mutate(phi, i, j, _sigma_direct(phi, i, j))


def sigma_table(phi: SignFunction, verify: bool = False) -> PairwiseSign:
    """All pairwise signs of ``phi`` together with their triple constant.

    Symmetric functions go through the vertex products ``mu`` (for them
    ``sigma(y, z) = mu(y) mu(z)``); antisymmetric ones use the direct double
    product. With ``verify=True`` both routes and the triple identity are
    checked and an ``InvariantError`` is raised on disagreement.
    """
    n = phi.n
    if n < 2:
        raise InputError("sigma_table needs at least two labels")
    values = {}
    if phi.sign == 1:
        mu = _mu_values(phi)
        for i, j in combinations(range(n), 2):
            values[(i, j)] = _mutate(phi, i, j, mu[i] * mu[j])
    else:
        for i, j in combinations(range(n), 2):
            values[(i, j)] = _mutate(phi, i, j, _sigma_direct(phi, i, j))
    gamma = triple_constant(phi)
    if verify:
        for (i, j), v in values.items():
            if v != _sigma_direct(phi, i, j):
                raise InvariantError(f"sigma routes disagree at {(i, j)}")
        for a, b, c in combinations(range(n), 3):
            if values[(a, b)] * values[(b, c)] * values[(a, c)] != gamma:
                raise InvariantError(f"triple {(a, b, c)} breaks the triple constant {gamma}")
    return PairwiseSign.unchecked(phi.ground, values, gamma)


def orchard_rho(phi: SignFunction, verify: bool = False) -> TwoPartition:
    """The Orchard partition of ``phi``."""
    if phi.n < 2:
        return TwoPartition.trivial(phi.ground)
    partition, _ = partition_from_pairwise(sigma_table(phi, verify=verify))
    return partition


def mu_phi(phi: SignFunction) -> TwoPartition:
    """Orchard partition of a symmetric function read off its vertex products."""
    if phi.sign != 1:
        raise InputError("mu_phi is defined for symmetric functions only")
    return TwoPartition(phi.ground, tuple(_mu_values(phi)))


def mu_tilde_check(phi: SignFunction) -> int:
    """Global sign ``c`` relating the complementary vertex products to ``mu``.

    Checks that the product of ``phi`` over ``l``-subsets avoiding ``x`` equals
    ``c * mu(x)`` for every ``x`` and returns ``c``, the product of all
    table values.
    """
    if phi.sign != 1:
        raise InputError("mu_tilde_check is defined for symmetric functions only")
    c = 1
    for v in phi.values:
        c *= v
    mu = _mu_values(phi)
    for x in range(phi.n):
        tilde = 1
        for t, v in zip(colex_tuples(phi.n, phi.arity), phi.values):
            if x not in t:
                tilde *= v
        if tilde != c * mu[x]:
            raise InvariantError(f"mu-tilde identity fails at {phi.ground.labels[x]!r}")
    return c


def changed_pairs(p: TwoPartition, q: TwoPartition) -> frozenset:
    """Unordered pairs on which two partitions disagree as equivalence relations."""
    labels = p.ground.labels
    return frozenset(
        (labels[i], labels[j])
        for i, j in combinations(range(p.ground.n), 2)
        if (p.alpha[i] == p.alpha[j]) != (q.alpha[i] == q.alpha[j])
    )


def crossing_pairs(ground: GroundSet, flipset) -> frozenset:
    """Unordered pairs with exactly one element in ``flipset``."""
    flipset = set(flipset)
    labels = ground.labels
    return frozenset(
        (labels[i], labels[j])
        for i, j in combinations(range(ground.n), 2)
        if (labels[i] in flipset) != (labels[j] in flipset)
    )


@dataclass(frozen=True)
class FlipDelta:
    flipset: tuple
    before: TwoPartition
    after: TwoPartition
    changed: frozenset


def flip_delta(phi: SignFunction, flipset) -> FlipDelta:
    """Compare ``rho(phi)`` with ``rho(phi * f_X)``; the change must be ``X x (E \\ X)``."""
    flip = fn_flip(phi.ground, flipset)
    if flip.arity != phi.arity:
        raise InputError(f"flipset must have {phi.arity} elements")
    before = orchard_rho(phi)
    after = orchard_rho(fn_multiply(phi, flip))
    changed = changed_pairs(before, after)
    expected = crossing_pairs(phi.ground, flipset)
    if changed != expected:
        raise InvariantError(f"flip by {tuple(flipset)!r} changed {sorted(changed)!r}")
    return FlipDelta(tuple(phi.ground.sort(flipset)), before, after, changed)


@dataclass(frozen=True)
class ExoticReport:
    pairwise: TwoPartition
    rho: TwoPartition
    coincide: bool


def exotic_check(s: PairwiseSign) -> ExoticReport:
    """Compare the partition of a pairwise sign with the Orchard partition of it.

    The pairwise sign is read as a 2-symmetric function. The two partitions
    agree when ``n`` is odd; when ``n`` is even the Orchard partition is
    trivial.
    """
    ground = s.ground
    n = ground.n
    if n < 3:
        raise InputError("exotic_check needs at least three labels")
    pairwise, _ = partition_from_pairwise(s)
    values = tuple(s.at(i, j) for i, j in colex_tuples(n, 2))
    rho = orchard_rho(SignFunction(ground, 2, 1, values))
    coincide = pairwise == rho
    if n % 2 == 1 and not coincide:
        raise InvariantError("partitions differ for odd n")
    if n % 2 == 0 and not rho.is_trivial():
        raise InvariantError("Orchard partition is not trivial for even n")
    return ExoticReport(pairwise, rho, coincide)


def rho_prime_two_point(phi: SignFunction) -> TwoPartition:
    """The other natural homomorphism on a two-element set with arity two.

    Trivial on symmetric functions, the discrete partition on antisymmetric
    ones. Never used as the Orchard morphism.
    """
    if phi.n != 2 or phi.arity != 2:
        raise InputError("defined only for two labels and arity two")
    return TwoPartition(phi.ground, (1, phi.sign))
