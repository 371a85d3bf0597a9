from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orchard.errors import InputError, TripleConstantError
from orchard.twopart import (
    GroundSet,
    PairwiseSign,
    TwoPartition,
    complete_components,
    partition_from_pairwise,
    partition_make,
    partition_multiply,
)


def signs(n):
    return st.lists(st.sampled_from((1, -1)), min_size=n, max_size=n)


@st.composite
def partitions(draw, n=None):
    n = draw(st.integers(1, 8)) if n is None else n
    return TwoPartition(GroundSet.range(n), tuple(draw(signs(n))))


@st.composite
def partition_triples(draw):
    n = draw(st.integers(1, 8))
    return tuple(draw(partitions(n)) for _ in range(3))


def test_ground_set_rejects_duplicates():
    with pytest.raises(InputError):
        GroundSet(("a", "b", "a"))


def test_ground_set_index_and_sort():
    g = GroundSet(("c", "a", "b"))
    assert g.index("a") == 1
    assert g.sort(["b", "c"]) == ("c", "b")
    with pytest.raises(InputError):
        g.index("z")


def test_partition_make_canonical_examples():
    g = GroundSet.range(3)
    assert partition_make(g, {0: 1, 1: -1, 2: 1}).alpha == (1, -1, 1)
    assert partition_make(g, {0: -1, 1: 1, 2: -1}).alpha == (1, -1, 1)
    g2 = GroundSet.range(2)
    assert partition_make(g2, {0: 1, 1: 1}) == TwoPartition.trivial(g2)


def test_partition_make_missing_label():
    with pytest.raises(InputError):
        partition_make(GroundSet.range(3), {0: 1, 1: 1})


def test_partition_make_rejects_non_signs():
    with pytest.raises(InputError):
        partition_make(GroundSet.range(2), {0: 1, 1: 0})


def test_product_example():
    g = GroundSet.range(4)
    p = TwoPartition.from_classes(g, {0, 1})
    q = TwoPartition.from_classes(g, {0, 2})
    assert partition_multiply(p, q) == TwoPartition.from_classes(g, {0, 3})


def test_product_matches_set_description():
    # C1 = (A1 & B1) | (A2 & B2)
    g = GroundSet.range(6)
    p = TwoPartition.from_classes(g, {0, 1, 4})
    q = TwoPartition.from_classes(g, {0, 2, 4, 5})
    a1, a2 = map(set, p.classes())
    b1, b2 = map(set, q.classes())
    assert set((p * q).classes()[0]) == (a1 & b1) | (a2 & b2)


def test_product_ground_mismatch():
    with pytest.raises(InputError):
        TwoPartition.trivial(GroundSet.range(2)) * TwoPartition.trivial(GroundSet.range(3))


@given(partition_triples())
def test_group_laws(triple):
    p, q, r = triple
    one = TwoPartition.trivial(p.ground)
    assert (p * q) * r == p * (q * r)
    assert p * one == p
    assert p * p == one
    assert p * q == q * p


@pytest.mark.parametrize("n", range(1, 6))
def test_group_order(n):
    g = GroundSet.range(n)
    assert len({TwoPartition(g, a) for a in product((1, -1), repeat=n)}) == 2 ** (n - 1)


def test_classes_and_empty_part():
    g = GroundSet(("x", "y", "z"))
    p = TwoPartition(g, (-1, 1, -1))
    assert p.classes() == (("x", "z"), ("y",))
    assert TwoPartition.trivial(g).classes() == (("x", "y", "z"), ())
    assert p.same_class("x", "z") and not p.same_class("x", "y")


def test_permute_action():
    g = GroundSet.range(4)
    p = TwoPartition.from_classes(g, {0, 1})
    perm = {0: 2, 1: 3, 2: 0, 3: 1}
    assert p.permute(perm) == TwoPartition.from_classes(g, {2, 3})
    tau = {0: 1, 1: 0, 2: 2, 3: 3}
    composed = {x: perm[tau[x]] for x in g.labels}
    assert p.permute(composed) == p.permute(tau).permute(perm)


def test_permute_rejects_non_bijection():
    p = TwoPartition.trivial(GroundSet.range(3))
    with pytest.raises(InputError):
        p.permute({0: 1, 1: 1, 2: 2})


# pairwise constructor


def test_pairwise_example_three_points():
    g = GroundSet.range(3)
    s = PairwiseSign.make(g, {(0, 1): 1, (0, 2): -1, (1, 2): -1})
    p, gamma = partition_from_pairwise(s)
    assert gamma == 1
    assert p == TwoPartition.from_classes(g, {0, 1})
    assert complete_components(s) == (p, 1)


def test_pairwise_constant_plus():
    g = GroundSet.range(5)
    p, gamma = partition_from_pairwise(PairwiseSign.make(g, lambda x, y: 1))
    assert gamma == 1 and p.is_trivial()


def test_pairwise_non_constant_triple():
    g = GroundSet.range(4)
    s = PairwiseSign.make(g, lambda x, y: -1 if {x, y} == {0, 1} else 1)
    assert s.gamma is None and s.violation is not None
    with pytest.raises(TripleConstantError):
        partition_from_pairwise(s)
    with pytest.raises(TripleConstantError):
        complete_components(s)


def test_pairwise_declared_gamma_mismatch():
    g = GroundSet.range(3)
    with pytest.raises(TripleConstantError):
        PairwiseSign.make(g, lambda x, y: 1, gamma=-1)


def test_pairwise_missing_pair():
    with pytest.raises(InputError):
        PairwiseSign.make(GroundSet.range(3), {(0, 1): 1, (0, 2): 1})


def test_complete_components_all_minus():
    g = GroundSet.range(4)
    p, gamma = complete_components(PairwiseSign.make(g, lambda x, y: -1))
    assert gamma == -1 and p.is_trivial()


def test_two_plus_edges():
    # each triple holds one +1 edge and two -1 edges, so the product is +1
    g = GroundSet.range(4)
    s = PairwiseSign.make(g, lambda x, y: 1 if {x, y} in ({0, 1}, {2, 3}) else -1)
    assert s.gamma == 1
    p, _ = complete_components(s)
    assert p == TwoPartition.from_classes(g, {0, 1})
    assert partition_from_pairwise(s)[0] == p


def test_complete_components_negative_gamma():
    # -1 exactly on the matching {01, 23}; the complement graph is two edges
    g = GroundSet.range(4)
    s = PairwiseSign.make(g, lambda x, y: -1 if {x, y} in ({0, 1}, {2, 3}) else 1)
    assert s.gamma == -1
    p, gamma = complete_components(s)
    assert gamma == -1
    assert p == TwoPartition.from_classes(g, {0, 1})
    assert partition_from_pairwise(s) == (p, -1)


@pytest.mark.parametrize("n", [1, 2])
def test_small_sets_use_positive_gamma(n):
    g = GroundSet.range(n)
    s = PairwiseSign.make(g, lambda x, y: -1)
    p, gamma = partition_from_pairwise(s)
    assert gamma == 1
    if n == 2:
        assert p == TwoPartition(g, (1, -1))


def _all_pairwise(n):
    g = GroundSet.range(n)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for values in product((1, -1), repeat=len(pairs)):
        yield PairwiseSign.make(g, dict(zip(pairs, values)))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_constructor_matches_graph_oracle_exhaustively(n):
    valid = 0
    for s in _all_pairwise(n):
        if s.gamma is None:
            with pytest.raises(TripleConstantError):
                complete_components(s)
            continue
        valid += 1
        p, gamma = partition_from_pairwise(s)
        assert complete_components(s) == (p, gamma)
        for b in s.ground.labels:
            assert partition_from_pairwise(s, base=b) == (p, gamma)
    # 2^(n-1) partitions, each with two triple constants
    assert valid == 2**n


@st.composite
def valid_pairwise(draw):
    n = draw(st.integers(3, 8))
    alpha = draw(signs(n))
    gamma = draw(st.sampled_from((1, -1)))
    s = PairwiseSign.make(GroundSet.range(n), lambda x, y: gamma * alpha[x] * alpha[y])
    return s, TwoPartition(GroundSet.range(n), tuple(alpha)), gamma


@settings(max_examples=150)
@given(valid_pairwise(), st.randoms(use_true_random=False))
def test_constructor_random(data, rnd):
    s, p, gamma = data
    assert partition_from_pairwise(s) == (p, gamma)
    assert complete_components(s) == (p, gamma)
    image = list(s.ground.labels)
    rnd.shuffle(image)
    perm = dict(zip(s.ground.labels, image))
    assert partition_from_pairwise(s.permute(perm))[0] == p.permute(perm)
