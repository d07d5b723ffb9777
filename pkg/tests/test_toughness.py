import math
from fractions import Fraction

import networkx as nx
import pytest

from alphatough import (
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    edgeless,
    family_gs2,
    is_t_tough,
    path,
    star,
    toughness,
    worst_cut,
)
from alphatough.toughness import independence_number, toughness_bruteforce

from conftest import from_nx, to_nx, random_connected, random_graph


def atlas_connected(max_n=7):
    for h in nx.graph_atlas_g()[1:]:
        if h.number_of_nodes() <= max_n and nx.is_connected(h):
            yield from_nx(h)


@pytest.mark.parametrize("n", range(1, 9))
def test_complete_is_infinite(n):
    t = toughness(complete(n))
    assert t.is_infinite and t.value == math.inf and t.witness is None
    assert str(t) == "infinite"


@pytest.mark.parametrize("n", range(5, 11))
def test_extremal_family(n):
    t = toughness(family_gs2(n, 1))
    assert t.value == Fraction(1, 2)
    assert t.witness == frozenset({0})
    assert t.components == 2
    assert str(t) == "1/2"


def test_small_examples():
    assert toughness(cycle(6)).value == 1
    assert toughness(path(3)).value == Fraction(1, 2)
    assert toughness(cycle(5)).value == 1


def test_disconnected_convention():
    t = toughness(disjoint_union(complete(3), complete(2)))
    assert t.value == 0 and t.witness == frozenset() and t.components == 2
    assert toughness(edgeless(3)).value == 0
    assert not is_t_tough(edgeless(2), Fraction(1, 5))


def test_empty_graph_rejected():
    with pytest.raises(ValueError):
        toughness(edgeless(0))


def test_is_t_tough_examples():
    assert not is_t_tough(family_gs2(6, 1), 1)
    assert is_t_tough(cycle(5), 1)
    assert is_t_tough(complete(5), 100)
    with pytest.raises(ValueError):
        is_t_tough(cycle(5), -1)


def test_zero_toughness_threshold(rng):
    for _ in range(20):
        assert is_t_tough(random_connected(rng, 8), 0)


def test_worst_cut_examples():
    assert worst_cut(family_gs2(6, 1)) == (frozenset({0}), 2)
    assert worst_cut(star(3)) == (frozenset({0}), 3)
    with pytest.raises(ValueError):
        worst_cut(complete(4))
    with pytest.raises(ValueError):
        worst_cut(edgeless(3))


def test_independence_number(rng):
    for _ in range(100):
        g = random_graph(rng, int(rng.integers(1, 14)), float(rng.uniform(0.1, 0.9)))
        want = max((len(c) for c in nx.find_cliques(nx.complement(to_nx(g)))), default=0)
        assert independence_number(g) == want


def test_pruned_matches_bruteforce_atlas():
    count = 0
    for g in atlas_connected(7):
        fast, slow = toughness(g), toughness_bruteforce(g)
        assert (fast.value, fast.witness, fast.components) == (slow.value, slow.witness, slow.components)
        count += 1
    assert count == 1 + 1 + 2 + 6 + 21 + 112 + 853  # connected graphs on 1..7 vertices


def test_pruned_matches_bruteforce_order8(rng):
    for _ in range(300):
        g = random_connected(rng, 8)
        fast, slow = toughness(g), toughness_bruteforce(g)
        assert (fast.value, fast.witness) == (slow.value, slow.witness)


def test_value_is_tight(rng):
    for _ in range(150):
        n = int(rng.integers(3, 10))
        g = random_connected(rng, n)
        if g.is_complete():
            continue
        t = toughness(g).value
        assert is_t_tough(g, t)
        assert not is_t_tough(g, t + Fraction(1, n * n))


def test_edge_addition_monotone(rng):
    for _ in range(80):
        g = random_connected(rng, int(rng.integers(3, 10)))
        t = toughness(g).value
        missing = [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)]
        for u, v in missing[:4]:
            assert toughness(g.add_edge(u, v)).value >= t


@pytest.mark.parametrize("a", range(1, 5))
@pytest.mark.parametrize("b", range(1, 5))
def test_complete_bipartite(a, b):
    if a > b:
        return
    g = complete_bipartite(a, b)
    want = toughness_bruteforce(g).value if g.n > 1 and not g.is_complete() else math.inf
    got = toughness(g).value
    assert got == want
    if not g.is_complete():
        assert got == Fraction(a, b)


def test_larger_graph_finishes():
    # dense cut structure well beyond brute-force reach
    g = family_gs2(22, 3)
    assert toughness(g).value == Fraction(3, 4)
    assert not is_t_tough(g, 1)
