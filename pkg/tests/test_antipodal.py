import random
from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest

from orchard.antipodal import (
    AntipodalConfiguration,
    antipodal_is_generic,
    antipodal_phi,
    canonical_representative,
    line_parity,
    line_structure,
    projective_structure,
)
from orchard.errors import GenericityError, InputError
from orchard.oriented import semi_orientation_sections
from orchard.signfn import binom


def random_lines(rng, e, d, spread=9):
    while True:
        reps = [[rng.randint(-spread, spread) for _ in range(d)] for _ in range(e)]
        if any(not any(r) for r in reps):
            continue
        a = AntipodalConfiguration.make(reps)
        if antipodal_is_generic(a)[0]:
            return a


def float_sigma(a, y, z, section):
    """sigma straight from floating point determinants over a chosen section."""
    base = a.base
    iy, iz = base.locate(y)[0], base.locate(z)[0]
    rest = [np.array(a.vector(x), dtype=float) for x in section if base.locate(x)[0] not in (iy, iz)]
    vy, vz = np.array(a.vector(y), dtype=float), np.array(a.vector(z), dtype=float)
    value = 1
    for r in combinations(rest, a.dim - 1):
        value *= np.sign(np.linalg.det(np.vstack(r + (vy,)))) * np.sign(np.linalg.det(np.vstack(r + (vz,))))
    return int(value)


def test_canonical_representative():
    assert canonical_representative((0, -2, 1)) == (0, 2, -1)
    assert canonical_representative((3, -1)) == (3, -1)
    with pytest.raises(InputError):
        canonical_representative((0, 0))


def test_validation():
    with pytest.raises(InputError):
        AntipodalConfiguration.make([[0, 0], [1, 0]])
    with pytest.raises(InputError):
        AntipodalConfiguration.make([[1, 0], [1]])
    with pytest.raises(InputError):
        AntipodalConfiguration.make([])


def test_non_generic_lines():
    a = AntipodalConfiguration.make([[1, 0], [2, 0], [0, 1]], labels="abc")
    assert antipodal_is_generic(a) == (False, ("a", "b"))
    with pytest.raises(GenericityError):
        line_structure(a)
    few = AntipodalConfiguration.make([[1, 1, 0], [2, 2, 0]])
    assert not antipodal_is_generic(few)[0]


def test_three_plane_lines():
    a = AntipodalConfiguration.make([[1, 0], [0, 1], [1, 1]])
    p = line_structure(a)
    assert p.parity == -1
    s, t = semi_orientation_sections(p)
    assert s == ("+0", "+1", "-2")
    assert [a.vector(x) for x in s] == [(1, 0), (0, 1), (-1, -1)]
    assert t == ("-0", "-1", "+2")


def test_four_plane_lines():
    a = AntipodalConfiguration.make([[1, 0], [0, 1], [1, 1], [1, -1]])
    p = line_structure(a)
    assert p.parity == 1
    assert p.quotient_partition().classes() == ((0, 1), (2, 3))


def test_line_parity():
    assert line_parity(3, 2) == -1
    assert line_parity(4, 2) == 1
    assert line_parity(4, 3) == -1
    assert line_parity(5, 3) == -1
    assert line_parity(6, 3) == 1


@pytest.mark.parametrize("d", [2, 3, 4])
def test_simplex_sections_are_positive_dependencies(d):
    # d+1 generic lines: the kernel of the d x (d+1) matrix has no zero entries
    rng = random.Random(d)
    for _ in range(10):
        a = random_lines(rng, d + 1, d)
        p = line_structure(a)
        assert p.parity == -1
        kernel = np.linalg.svd(np.array(a.reps, dtype=float).T)[2][-1]
        want = tuple(int(np.sign(k)) for k in kernel)
        want = want if want[0] == 1 else tuple(-w for w in want)
        assert p.signs == want


@pytest.mark.parametrize("e,d", [(4, 2), (5, 2), (6, 2), (5, 3), (6, 3), (6, 4)])
def test_structure_against_float_sigma(e, d):
    rng = random.Random(e * 10 + d)
    gamma = (-1) ** binom(e - 3, d - 2)
    for _ in range(6):
        a = random_lines(rng, e, d)
        p = line_structure(a)
        assert p.parity == line_parity(e, d)
        base = a.base
        section = [base.element(i, rng.choice((1, -1))) for i in range(e)]
        for i, j in combinations(range(e), 2):
            for s in (1, -1):
                y, z = base.element(i, 1), base.element(j, s)
                assert p.alpha(y) * p.alpha(z) == gamma * float_sigma(a, y, z, section)


def test_rescaling_lines():
    rng = random.Random(5)
    for e, d in [(3, 2), (5, 2), (5, 3), (6, 3)]:
        a = random_lines(rng, e, d)
        factors = [Fraction(rng.choice((1, -1)) * rng.randint(1, 5), rng.randint(1, 4)) for _ in range(e)]
        b = AntipodalConfiguration.make([[f * v for v in r] for f, r in zip(factors, a.reps)])
        pa, pb = line_structure(a), line_structure(b)
        assert pa.parity == pb.parity
        flips = [1 if f > 0 else -1 for f in factors]
        adjusted = [s * f for s, f in zip(pb.signs, flips)]
        if pa.parity == -1:
            eps = adjusted[0] * pa.signs[0]
            assert adjusted == [eps * s for s in pa.signs]
        else:
            assert pb.signs == pa.signs


def test_swapping_representative_moves_section():
    a = AntipodalConfiguration.make([[1, 0], [0, 1], [1, 1]])
    b = AntipodalConfiguration.make([[1, 0], [0, 1], [-1, -1]])
    sa = {a.vector(x) for x in semi_orientation_sections(line_structure(a))[0]}
    sb = {b.vector(x) for x in semi_orientation_sections(line_structure(b))[0]}
    assert sa == sb


def test_phi_is_odd_antisymmetric():
    a = AntipodalConfiguration.make([[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 2, 3]])
    phi = antipodal_phi(a)
    assert (phi.sign, phi.parity, phi.arity) == (-1, -1, 3)
    assert phi("+0", "+1", "+2") == 1
    assert phi("+1", "+0", "+2") == -1
    assert phi("-0", "+1", "+2") == -1
    with pytest.raises(InputError):
        antipodal_phi(AntipodalConfiguration.make([[1, 0, 0], [0, 1, 0]]))


@pytest.mark.parametrize("k,d", [(4, 2), (5, 2), (6, 2), (5, 3)])
def test_projective_parity(k, d):
    rng = random.Random(k + d)
    while True:
        pts = [[rng.randint(-6, 6) for _ in range(d + 1)] for _ in range(k)]
        try:
            p = projective_structure(pts)
            break
        except (GenericityError, InputError):
            continue
    assert p.parity == (-1 if binom(k - 2, d) % 2 else 1)
    # scaling a homogeneous coordinate vector does not move the point
    scaled = [[-3 * v for v in pts[0]]] + pts[1:]
    assert projective_structure(scaled) == p
