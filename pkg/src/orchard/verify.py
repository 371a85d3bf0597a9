"""Self-contained invariant suites behind ``orchard verify``.

Every check draws its inputs from a generator seeded by ``(seed, check
name)``, so reports are reproducible and independent of which suites run.
A failing check stops at its first counterexample and reports it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product

from .antipodal import AntipodalConfiguration, antipodal_is_generic, line_parity, line_structure
from .errors import InputError
from .geom import (
    Configuration,
    flip_pair,
    flip_relation,
    geometric_partition,
    is_generic,
    orientation_function,
    random_configuration,
    separating_matrix,
)
from .io import configuration_to_json
from .lift import _as_points, _separating_sign, basis_from_name, cgeneric_lift, cgeneric_partition
from .morphism import (
    exotic_check,
    flip_delta,
    mu_phi,
    mu_tilde_check,
    orchard_rho,
    sigma_phi,
    sigma_table,
)
from .oriented import (
    OrientedTwoPartition,
    even_lift,
    ori_make,
    ori_permute,
    ori_random,
    ori_rho,
    ori_sigma_table,
    random_signed_permutation,
    sigma_parity,
)
from .signfn import (
    SignFunction,
    binom,
    colex_tuples,
    fn_constant,
    fn_eval,
    fn_flip,
    fn_flip_decompose,
    fn_multiply,
    fn_permute,
    fn_random,
)
from .twopart import GroundSet, PairwiseSign, TwoPartition, complete_components, partition_from_pairwise

SUITES = ("core", "geometry", "oriented")


class CheckFailure(Exception):
    def __init__(self, message, counterexample=None):
        super().__init__(message)
        self.counterexample = counterexample


@dataclass
class Context:
    seed: int
    n_max: int
    samples: int
    name: str = ""
    rng: random.Random = field(default=None, repr=False)

    def for_check(self, name: str) -> "Context":
        return Context(self.seed, self.n_max, self.samples, name, random.Random(f"{self.seed}:{name}"))


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    passed: bool
    cases: int
    message: str | None = None
    counterexample: dict | None = None

    def to_json(self) -> dict:
        out = {"suite": self.suite, "name": self.name, "passed": self.passed, "cases": self.cases}
        if not self.passed:
            out["message"] = self.message
            out["counterexample"] = self.counterexample
        return out


def _fn_json(phi) -> dict:
    return {"labels": list(phi.ground.labels), "arity": phi.arity, "sign": phi.sign, "values": list(phi.values)}


def _ori_json(phi) -> dict:
    return {
        "e": phi.e,
        "arity": phi.arity,
        "sign": phi.sign,
        "parity": phi.parity,
        "values": list(phi.values),
    }


def _expect(cond, message, **counterexample):
    if not cond:
        raise CheckFailure(message, counterexample or None)


def _random_partition(ground, rng):
    return TwoPartition(ground, tuple(rng.choice((1, -1)) for _ in range(ground.n)))


def _random_perm(ground, rng):
    image = list(ground.labels)
    rng.shuffle(image)
    return dict(zip(ground.labels, image))


def _functions(n, arity, sign, ctx, exhaustive_limit=6):
    """All tables when there are few, otherwise ``ctx.samples`` random ones."""
    ground = GroundSet.range(n)
    cells = binom(n, arity)
    if cells <= exhaustive_limit:
        for values in product((1, -1), repeat=cells):
            yield SignFunction(ground, arity, sign, values)
    else:
        for _ in range(ctx.samples):
            yield fn_random(ground, arity, sign, ctx.rng)


# ---- core -------------------------------------------------------------


def check_partition_group(ctx):
    cases = 0
    for n in range(1, max(ctx.n_max, 2) + 1):
        ground = GroundSet.range(n)
        one = TwoPartition.trivial(ground)
        for _ in range(ctx.samples):
            p, q, r = (_random_partition(ground, ctx.rng) for _ in range(3))
            _expect((p * q) * r == p * (q * r), "not associative", p=p.to_json(), q=q.to_json(), r=r.to_json())
            _expect(p * one == p and p * p == one, "identity or inverse law fails", p=p.to_json())
            _expect(p * q == q * p, "not commutative", p=p.to_json(), q=q.to_json())
            cases += 1
    for n in range(1, min(ctx.n_max, 5) + 1):
        ground = GroundSet.range(n)
        found = {TwoPartition(ground, a) for a in product((1, -1), repeat=n)}
        _expect(len(found) == 2 ** (n - 1), "wrong number of two-partitions", n=n, found=len(found))
        cases += 1
    return cases


def check_pairwise_constructor(ctx):
    cases = 0
    for n in range(1, ctx.n_max + 1):
        ground = GroundSet.range(n)
        for alpha in product((1, -1), repeat=n):
            if alpha[0] != 1:
                continue
            p = TwoPartition(ground, alpha)
            for gamma in ((1, -1) if n >= 3 else (1,)):
                s = PairwiseSign.make(ground, lambda x, y: gamma * alpha[x] * alpha[y], gamma)
                for b in ground.labels:
                    got, g = partition_from_pairwise(s, base=b)
                    _expect(got == p and g == gamma, "pairwise constructor wrong", alpha=alpha, gamma=gamma, base=b)
                if n >= 3:
                    got, g = complete_components(s)
                    _expect(got == p and g == gamma, "graph oracle disagrees", alpha=alpha, gamma=gamma)
                perm = _random_perm(ground, ctx.rng)
                got, _ = partition_from_pairwise(s.permute(perm))
                _expect(got == p.permute(perm), "constructor not equivariant", alpha=alpha, perm=perm)
                cases += 1
    return cases


def check_evaluation(ctx):
    """Evaluation through random adjacent transpositions matches the table rule."""
    cases = 0
    for n in range(2, ctx.n_max + 1):
        ground = GroundSet.range(n)
        for arity in range(2, n + 1):
            for sign in (1, -1):
                phi = fn_random(ground, arity, sign, ctx.rng)
                for _ in range(ctx.samples):
                    seq = ctx.rng.sample(range(n), arity)
                    # bubble sort in a random order of adjacent swaps
                    work, flips = list(seq), 0
                    while work != sorted(work):
                        k = ctx.rng.choice([i for i in range(arity - 1) if work[i] > work[i + 1]])
                        work[k], work[k + 1] = work[k + 1], work[k]
                        flips += 1
                    expected = phi.values[colex_tuples(n, arity).index(tuple(work))] * sign**flips
                    _expect(fn_eval(phi, seq) == expected, "evaluation is path dependent", phi=_fn_json(phi), args=seq)
                    cases += 1
    return cases


def check_function_group(ctx):
    cases = 0
    for n in range(2, min(ctx.n_max, 5) + 1):
        ground = GroundSet.range(n)
        for arity in range(2, min(3, n) + 1):
            cells = binom(n, arity)
            found = {
                SignFunction(ground, arity, sign, values)
                for sign in (1, -1)
                for values in product((1, -1), repeat=cells)
            }
            _expect(len(found) == 2 ** (cells + 1), "wrong group order", n=n, arity=arity)
            cases += 1
    # antisymmetric functions form a free orbit of the symmetric ones
    for n in range(2, min(ctx.n_max, 4) + 1):
        ground = GroundSet.range(n)
        phi = fn_random(ground, 2, -1, ctx.rng)
        images = set()
        for values in product((1, -1), repeat=binom(n, 2)):
            img = fn_multiply(phi, SignFunction(ground, 2, 1, values))
            _expect(img.sign == -1, "product left the antisymmetric coset", n=n)
            images.add(img)
        _expect(len(images) == 2 ** binom(n, 2), "multiplication is not a bijection", n=n)
        cases += 1
    return cases


def check_homomorphism(ctx):
    cases = 0
    for n in range(1, ctx.n_max + 1):
        ground = GroundSet.range(n)
        for arity in range(1, n + 1):
            for _ in range(ctx.samples):
                phi = fn_random(ground, arity, ctx.rng.choice((1, -1)), ctx.rng)
                psi = fn_random(ground, arity, ctx.rng.choice((1, -1)), ctx.rng)
                rp, rq = orchard_rho(phi), orchard_rho(psi)
                _expect(orchard_rho(phi * psi) == rp * rq, "not a homomorphism", phi=_fn_json(phi), psi=_fn_json(psi))
                perm = _random_perm(ground, ctx.rng)
                _expect(orchard_rho(fn_permute(perm, phi)) == rp.permute(perm), "not equivariant", phi=_fn_json(phi), perm=perm)
                _expect(orchard_rho(-phi) == rp, "depends on the global sign", phi=_fn_json(phi))
                cases += 1
    return cases


def check_triple_constant(ctx):
    cases = 0
    for n in range(2, ctx.n_max + 1):
        for arity in range(1, n + 1):
            for sign in (1, -1):
                gamma = sign ** binom(n - 3, arity - 2)
                for phi in _functions(n, arity, sign, ctx):
                    table = sigma_table(phi)
                    sig = {(i, j): sigma_phi(phi, i, j) for i, j in combinations(range(n), 2)}
                    _expect(all(table.at(i, j) == v for (i, j), v in sig.items()), "sigma routes disagree", phi=_fn_json(phi))
                    _expect(table.gamma == gamma, "wrong declared triple constant", phi=_fn_json(phi))
                    for a, b, c in combinations(range(n), 3):
                        prod_ = sig[(a, b)] * sig[(b, c)] * sig[(a, c)]
                        _expect(prod_ == gamma, "triple product differs", phi=_fn_json(phi), triple=[a, b, c], expected=gamma)
                    cases += 1
    return cases


def check_flip_laws(ctx):
    cases = 0
    for n in range(1, ctx.n_max + 1):
        ground = GroundSet.range(n)
        for arity in range(1, min(4, n) + 1):
            phi = fn_random(ground, arity, ctx.rng.choice((1, -1)), ctx.rng)
            for flipset in combinations(range(n), arity):
                f = fn_flip(ground, flipset)
                flipped = fn_multiply(phi, f)
                for a, b in combinations(range(n), 2):
                    crosses = (a in flipset) != (b in flipset)
                    _expect(
                        (sigma_phi(phi, a, b) * sigma_phi(flipped, a, b) == -1) == crosses,
                        "flip product law fails",
                        phi=_fn_json(phi),
                        flipset=list(flipset),
                        pair=[a, b],
                    )
                flip_delta(phi, flipset)
                expected = TwoPartition(ground, tuple(-1 if i in flipset else 1 for i in range(n)))
                if arity == n:
                    expected = TwoPartition.trivial(ground)
                _expect(orchard_rho(f) == expected, "image of a flip is wrong", n=n, flipset=list(flipset))
                cases += 1
    return cases


def check_flip_basis(ctx):
    cases = 0
    for n in range(1, ctx.n_max + 1):
        ground = GroundSet.range(n)
        for arity in range(1, n + 1):
            phi = fn_random(ground, arity, 1, ctx.rng)
            rebuilt = fn_constant(ground, arity)
            for x in fn_flip_decompose(phi):
                rebuilt = rebuilt * fn_flip(ground, x)
            _expect(rebuilt == phi, "flips do not rebuild the function", phi=_fn_json(phi))
            _expect(orchard_rho(rebuilt) == orchard_rho(phi), "flip basis changes the partition", phi=_fn_json(phi))
            cases += 1
    return cases


def check_mu_shortcut(ctx):
    cases = 0
    for n in range(2, ctx.n_max + 3):
        ground = GroundSet.range(n)
        for arity in range(1, n + 1):
            for _ in range(max(1, ctx.samples // 2)):
                phi = fn_random(ground, arity, 1, ctx.rng)
                direct = PairwiseSign.make(ground, lambda x, y: sigma_phi(phi, x, y))
                expected, _ = partition_from_pairwise(direct)
                _expect(mu_phi(phi) == expected, "mu shortcut disagrees with sigma", phi=_fn_json(phi))
                c = 1
                for v in phi.values:
                    c *= v
                _expect(mu_tilde_check(phi) == c, "complementary products off by the wrong sign", phi=_fn_json(phi))
                cases += 1
    return cases


def check_exotic(ctx):
    cases = 0
    for n in range(3, ctx.n_max + 2):
        ground = GroundSet.range(n)
        for _ in range(ctx.samples):
            p = _random_partition(ground, ctx.rng)
            gamma = ctx.rng.choice((1, -1))
            s = PairwiseSign.make(ground, lambda x, y: gamma * p.alpha[x] * p.alpha[y], gamma)
            report = exotic_check(s)
            if n % 2:
                _expect(report.coincide, "partitions differ for odd n", n=n, alpha=p.alpha, gamma=gamma)
            else:
                _expect(report.rho.is_trivial(), "Orchard partition not trivial for even n", n=n, alpha=p.alpha)
                _expect(report.coincide == p.is_trivial(), "coincidence for even n", n=n, alpha=p.alpha)
            cases += 1
    return cases


def check_full_arity(ctx):
    cases = 0
    for n in range(1, ctx.n_max + 1):
        ground = GroundSet.range(n)
        for sign in (1, -1):
            for value in (1, -1):
                phi = SignFunction(ground, n, sign, (value,))
                _expect(orchard_rho(phi).is_trivial(), "full arity is not trivial", phi=_fn_json(phi))
                cases += 1
    return cases


# ---- geometry ---------------------------------------------------------


def _config_json(c):
    return configuration_to_json(c)


def check_oracle_equivalence(ctx):
    cases = 0
    for d in (2, 3):
        for n in range(d + 2, max(ctx.n_max, d + 2) + 1):
            for _ in range(ctx.samples):
                c = random_configuration(n, d, ctx.rng)
                geo = geometric_partition(c)
                alg = orchard_rho(orientation_function(c))
                _expect(geo == alg, "separating counts disagree with the algebraic partition", config=_config_json(c))
                cases += 1
    return cases


def check_fixtures(ctx):
    square = Configuration.make([(0, 0), (1, 0), (1, 1), (0, 1)])
    _expect(
        geometric_partition(square) == TwoPartition(square.labels, (1, -1, 1, -1)),
        "square is not split along the diagonals",
    )
    _expect(separating_matrix(square)[0][1] == 0 and separating_matrix(square)[0][2] == 1, "square counts wrong")
    tri = Configuration.make([(0, 0), (4, 0), (0, 4), (1, 1)])
    _expect(geometric_partition(tri) == TwoPartition(tri.labels, (1, 1, 1, -1)), "triangle and interior point not split 3/1")
    return 2


def _affine_image(c, matrix, shift):
    pts = [tuple(sum(m * x for m, x in zip(row, p)) + t for row, t in zip(matrix, shift)) for p in c.points]
    return Configuration(c.dim, tuple(pts), c.labels)


def check_invariance(ctx):
    from .predicates import det_value

    cases = 0
    for d in (2, 3):
        for n in range(d + 2, max(ctx.n_max, d + 2) + 1):
            c = random_configuration(n, d, ctx.rng)
            phi = orientation_function(c)
            part = geometric_partition(c)
            for _ in range(ctx.samples):
                while True:
                    m = [[Fraction(ctx.rng.randint(-5, 5)) for _ in range(d)] for _ in range(d)]
                    det = det_value(m)
                    if det != 0:
                        break
                shift = [Fraction(ctx.rng.randint(-9, 9), ctx.rng.randint(1, 4)) for _ in range(d)]
                img = _affine_image(c, m, shift)
                want = phi if det > 0 else -phi
                _expect(orientation_function(img) == want, "affine map changes orientations wrongly", config=_config_json(c))
                _expect(geometric_partition(img) == part, "affine map changes the partition", config=_config_json(c))
                order = list(range(n))
                ctx.rng.shuffle(order)
                relabelled = c.relabel(order)
                # point i of the relabelled set is old point order[i]
                perm = {order[i]: i for i in range(n)}
                _expect(geometric_partition(relabelled) == part.permute(perm), "relabelling is not equivariant", config=_config_json(c))
                cases += 1
    return cases


def check_geometric_flips(ctx):
    cases = 0
    attempts = 0
    target = max(5, ctx.samples)
    for d in (2, 3):
        made = 0
        while made < target and attempts < 50 * target:
            attempts += 1
            n = ctx.rng.randint(d + 2, max(ctx.n_max, d + 2))
            c = random_configuration(n, d, ctx.rng)
            flipset = sorted(ctx.rng.sample(range(n), d + 1))
            pair = flip_pair(c, flipset, ctx.rng.choice(flipset))
            if pair is None:
                continue
            report = flip_relation(*pair)
            _expect(report.flipset == tuple(flipset), "flip detected on the wrong set", config=_config_json(c), flipset=flipset)
            made += 1
            cases += 1
        _expect(made == target, "could not construct enough flips", d=d, made=made)
        c = random_configuration(d + 3, d, ctx.rng)
        _expect(flip_relation(c, c).flipset is None, "identical configurations reported as a flip")
        mirror = Configuration(d, tuple((-p[0],) + p[1:] for p in c.points), c.labels)
        _expect(flip_relation(c, mirror).flipset is None, "mirror image reported as a flip")
        cases += 2
    return cases


def check_small_configurations(ctx):
    cases = 0
    for d in (1, 2, 3):
        for n in range(1, d + 2):
            c = random_configuration(n, d, ctx.rng)
            _expect(geometric_partition(c).is_trivial(), "small configuration not trivial", config=_config_json(c))
            cases += 1
    return cases


def _random_points(ctx, n, basis, span=60):
    for _ in range(1000):
        pts = [(ctx.rng.randint(-span, span), ctx.rng.randint(-span, span)) for _ in range(n)]
        if basis.name.startswith("interp") and len({p[0] for p in pts}) < n:
            continue
        lifted = Configuration(basis.dim, tuple(basis.lift(_as_points([p], basis)[0]) for p in pts), GroundSet.range(n))
        if is_generic(lifted).generic:
            return pts
    raise CheckFailure("could not draw generic points", {"basis": basis.name})


def check_lifts(ctx):
    cases = 0
    for name in ("circle", "conic", "interp:1", "interp:2", "interp:3", "affine:2"):
        basis = basis_from_name(name)
        for _ in range(max(1, ctx.samples // 2)):
            n = ctx.rng.randint(basis.dim + 2, basis.dim + 3)
            pts = _random_points(ctx, n, basis)
            lifted = cgeneric_lift(pts, basis)
            pts_q = _as_points(pts, basis)
            for i, j in combinations(range(n), 2):
                rest = [k for k in range(n) if k != i and k != j]
                for sub in combinations(rest, basis.dim):
                    a = _separating_sign(pts_q, basis, sub, i, j)
                    b = lifted.orientation(sub + (i,)) * lifted.orientation(sub + (j,))
                    _expect(a == b, "function separation disagrees with the lift", basis=name, points=pts, subset=list(sub), pair=[i, j])
            _expect(cgeneric_partition(pts, basis) == geometric_partition(lifted), "lifted partition differs", basis=name, points=pts)
            cases += 1
    return cases


# ---- oriented ---------------------------------------------------------


def check_oriented_partitions(ctx):
    cases = 0
    for e in range(1, min(ctx.n_max, 4) + 1):
        base = ori_make(range(e))
        found = set()
        for alpha in product((1, -1), repeat=2 * e):
            labelling = dict(zip(base.elements, alpha))
            try:
                found.add(OrientedTwoPartition.from_alpha(base, labelling))
            except InputError:
                continue
        _expect(len(found) == 2**e, "wrong number of oriented two-partitions", e=e, found=len(found))
        cases += 1
    return cases


def _oriented_value(table, i, s, j, t):
    if i > j:
        i, s, j, t = j, t, i, s
    return table.values[((i, s), (j, t))]


def check_oriented_sigma(ctx):
    """Triple constant, parity transfer and section independence."""
    cases = 0
    for e in range(2, min(ctx.n_max, 5) + 1):
        base = ori_make(range(e))
        for arity in range(1, e + 1):
            for sign, parity in product((1, -1), repeat=2):
                gamma = sign ** binom(e - 3, arity - 2)
                want_parity = 1 if parity == 1 else (-1) ** binom(e - 2, arity - 1)
                for _ in range(max(1, ctx.samples // 4)):
                    phi = ori_random(base, arity, sign, parity, ctx.rng)
                    table = ori_sigma_table(phi)
                    _expect(sigma_parity(phi) == want_parity, "sigma parity formula", phi=_ori_json(phi))
                    for (i, s), (j, t) in table.values:
                        v = _oriented_value(table, i, s, j, t)
                        _expect(
                            _oriented_value(table, i, -s, j, t) == want_parity * v,
                            "sigma has the wrong parity",
                            phi=_ori_json(phi),
                        )
                    if e >= 3:
                        for a, b, c in combinations(range(e), 3):
                            for s, t, u in product((1, -1), repeat=3):
                                prod_ = (
                                    _oriented_value(table, a, s, b, t)
                                    * _oriented_value(table, b, t, c, u)
                                    * _oriented_value(table, a, s, c, u)
                                )
                                _expect(prod_ == gamma, "oriented triple constant", phi=_ori_json(phi), triple=[a, b, c])
                    sections = list(product((1, -1), repeat=e))
                    if len(sections) > 8:
                        sections = ctx.rng.sample(sections, 8)
                    for section in sections:
                        other = ori_sigma_table(phi, section=section)
                        _expect(other.values == table.values, "sigma depends on the section", phi=_ori_json(phi), section=section)
                    p = ori_rho(phi)
                    _expect(p.parity == want_parity, "partition has the wrong parity", phi=_ori_json(phi))
                    cases += 1
    return cases


def check_oriented_morphism(ctx):
    cases = 0
    for e in range(2, min(ctx.n_max, 5) + 1):
        base = ori_make(range(e))
        for arity in range(1, e + 1):
            for _ in range(max(1, ctx.samples // 4)):
                phi = ori_random(base, arity, ctx.rng.choice((1, -1)), ctx.rng.choice((1, -1)), ctx.rng)
                psi = ori_random(base, arity, ctx.rng.choice((1, -1)), ctx.rng.choice((1, -1)), ctx.rng)
                rp = ori_rho(phi)
                _expect(ori_rho(phi * psi) == rp * ori_rho(psi), "oriented morphism not multiplicative", phi=_ori_json(phi), psi=_ori_json(psi))
                perm = random_signed_permutation(base, ctx.rng)
                _expect(ori_rho(ori_permute(perm, phi)) == rp.permute(perm), "oriented morphism not equivariant", phi=_ori_json(phi))
                if phi.parity == 1:
                    want = even_lift(orchard_rho(phi.quotient_function()), base)
                    _expect(rp == want, "even functions disagree with the quotient", phi=_ori_json(phi))
                cases += 1
    return cases


def check_lines(ctx):
    cases = 0
    three = AntipodalConfiguration.make([(1, 0), (0, 1), (1, 1)])
    p = line_structure(three)
    plus = {three.vector(x) for x in p.classes()[0]}
    want = {(1, 0), (0, 1), (-1, -1)}
    flipped = {tuple(-v for v in w) for w in want}
    _expect(p.parity == -1 and plus in (want, flipped), "three planar lines give the wrong semi-orientation")
    cases += 1
    for d in (2, 3):
        for e in range(d, max(ctx.n_max, d + 2) + 1):
            for _ in range(max(1, ctx.samples // 4)):
                for _ in range(1000):
                    vecs = [tuple(ctx.rng.randint(-20, 20) for _ in range(d)) for _ in range(e)]
                    if any(all(v == 0 for v in w) for w in vecs):
                        continue
                    a = AntipodalConfiguration.make(vecs, canonicalize=True)
                    if antipodal_is_generic(a)[0]:
                        break
                p = line_structure(a)
                _expect(p.parity == line_parity(e, d), "line structure parity", vectors=vecs)
                factors = [ctx.rng.randint(1, 5) for _ in a.reps]
                scaled = AntipodalConfiguration.make(
                    [tuple(k * v for v in w) for k, w in zip(factors, a.reps)], canonicalize=True
                )
                _expect(line_structure(scaled) == p, "rescaling changes the line structure", vectors=vecs)
                cases += 1
    return cases


CHECKS = {
    "core": [
        ("partition_group", check_partition_group),
        ("pairwise_constructor", check_pairwise_constructor),
        ("evaluation", check_evaluation),
        ("function_group", check_function_group),
        ("homomorphism", check_homomorphism),
        ("triple_constant", check_triple_constant),
        ("flip_laws", check_flip_laws),
        ("flip_basis", check_flip_basis),
        ("mu_shortcut", check_mu_shortcut),
        ("exotic", check_exotic),
        ("full_arity", check_full_arity),
    ],
    "geometry": [
        ("oracle_equivalence", check_oracle_equivalence),
        ("fixtures", check_fixtures),
        ("invariance", check_invariance),
        ("geometric_flips", check_geometric_flips),
        ("small_configurations", check_small_configurations),
        ("lifts", check_lifts),
    ],
    "oriented": [
        ("oriented_partitions", check_oriented_partitions),
        ("oriented_sigma", check_oriented_sigma),
        ("oriented_morphism", check_oriented_morphism),
        ("lines", check_lines),
    ],
}


def _run_one(suite, name, func, ctx) -> CheckResult:
    try:
        cases = func(ctx.for_check(name))
    except CheckFailure as exc:
        return CheckResult(suite, name, False, 0, str(exc), exc.counterexample)
    except (AssertionError, ValueError, RuntimeError) as exc:
        return CheckResult(suite, name, False, 0, f"{type(exc).__name__}: {exc}", None)
    return CheckResult(suite, name, True, cases)


def run_suite(suite: str = "all", n_max: int = 6, seed: int = 0, samples: int = 8) -> list:
    """Run one suite (or ``"all"``) and return a :class:`CheckResult` per check."""
    if suite == "all":
        chosen = SUITES
    elif suite in CHECKS:
        chosen = (suite,)
    else:
        raise ValueError(f"unknown suite {suite!r}")
    if n_max < 3:
        raise ValueError("n_max must be at least 3")
    ctx = Context(seed, n_max, samples)
    return [_run_one(s, name, func, ctx) for s in chosen for name, func in CHECKS[s]]
