import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from conftest import gadget_a, gadget_c
from planeif import corpus
from planeif.cover import (
    Cover,
    IFPartition,
    Transversal,
    ValuedCover,
    canonical_cover,
    choose_level,
    find_sfdt,
    is_strictly_f_degenerate,
    partition_from_transversal,
    partition_IF,
    special_valued_cover,
    transversal_from_partition,
    validate_partition,
)
from planeif.errors import NotInClass, PartitionFailed, SizeBound
from planeif.oracles import oracle_sfdt, transversal_is_sfd

K2 = nx.complete_graph(2)


def test_canonical_cover_sizes():
    H = canonical_cover(K2, 2)
    assert len(H.vertices) == 4 and H.num_edges == 2
    C = canonical_cover(corpus.cycle(5), 2)
    for i in (1, 2):
        layer = [x for x in C.vertices if x[1] == i]
        assert all(len(C.adj[x]) == 2 and all(y[1] == i for y in C.adj[x]) for x in layer)
    E = canonical_cover(nx.empty_graph(3), 2)
    assert E.num_edges == 0 and dict(E.matchings) == {}


def test_cover_validation():
    with pytest.raises(ValueError):
        Cover({0: {1}, 1: {0}}, 2, {(0, 1): frozenset({(1, 1), (1, 2)})})
    with pytest.raises(ValueError):
        Cover({0: {1}, 1: {0}}, 2, {(1, 0): frozenset({(1, 1)})})
    with pytest.raises(ValueError):
        Cover({0: {1}, 1: {0}}, 2, {(0, 1): frozenset({(3, 1)})})
    with pytest.raises(ValueError):
        Cover({0: set()}, 0, {})


def test_valued_cover_validation():
    H = canonical_cover(K2, 2)
    with pytest.raises(ValueError):
        ValuedCover(H, {(0, 1): 1})
    with pytest.raises(ValueError):
        ValuedCover.uniform(H, (1,))
    with pytest.raises(ValueError):
        ValuedCover.uniform(H, (1, -1))


def test_strict_degeneracy_examples():
    H = canonical_cover(K2, 2)
    both_one = ValuedCover.uniform(H, (1, 1))
    assert not is_strictly_f_degenerate(both_one, Transversal({0: 1, 1: 1}))
    f = dict(both_one.f)
    f[(0, 1)] = 2
    assert is_strictly_f_degenerate(ValuedCover(H, f), Transversal({0: 1, 1: 1}))
    assert is_strictly_f_degenerate(both_one, Transversal({0: 1, 1: 2}))


def test_transversal_check():
    H = canonical_cover(K2, 2)
    with pytest.raises(ValueError):
        Transversal({0: 1}).check(H)
    with pytest.raises(ValueError):
        Transversal({0: 1, 1: 3}).check(H)


def test_find_sfdt_examples():
    assert find_sfdt(special_valued_cover(K2)) is not None
    single = ValuedCover.uniform(canonical_cover(nx.empty_graph(1), 2), (0, 0))
    assert find_sfdt(single) is None
    T = find_sfdt(special_valued_cover(corpus.cycle(5)))
    assert T is not None and is_strictly_f_degenerate(special_valued_cover(corpus.cycle(5)), T)
    with pytest.raises(SizeBound):
        find_sfdt(special_valued_cover(corpus.cycle(15)))
    assert find_sfdt(special_valued_cover(nx.complete_graph(5))) is None


def test_oracle_sfdt_examples():
    assert oracle_sfdt(special_valued_cover(K2)) is not None
    assert oracle_sfdt(special_valued_cover(nx.empty_graph(0))) == Transversal({})
    zeros = ValuedCover.uniform(canonical_cover(nx.path_graph(3), 2), (0, 0))
    assert oracle_sfdt(zeros) is None
    with pytest.raises(SizeBound):
        oracle_sfdt(special_valued_cover(corpus.cycle(21)))


def test_validate_partition_examples():
    P = corpus.path(5)
    assert validate_partition(P, IFPartition(frozenset({0, 2, 4}), frozenset({1, 3})))
    assert validate_partition(P, IFPartition(frozenset(), frozenset(range(5))))
    assert not validate_partition(P, IFPartition(frozenset({0, 1}), frozenset({2, 3, 4})))
    C = corpus.cycle(5)
    assert not validate_partition(C, IFPartition(frozenset(), frozenset(range(5))))
    assert not validate_partition(C, IFPartition(frozenset({0}), frozenset({1, 2, 3})))


def test_partition_examples():
    C5 = corpus.cycle(5)
    P = partition_IF(C5)
    assert validate_partition(C5, P) and P.to_dict()["I"]
    one = corpus.path(1)
    assert validate_partition(one, partition_IF(one))
    with pytest.raises(NotInClass):
        partition_IF(corpus.cycle(4))
    with pytest.raises(PartitionFailed):
        partition_IF(corpus.prism(5), check_class=False)


@pytest.mark.parametrize("name", corpus.HOST_NAMES)
def test_partition_hosts(hosts, name):
    G = hosts[name]
    stats = {}
    P = partition_IF(G, stats=stats)
    assert validate_partition(G, P)
    assert sum(v for k, v in stats.items()) >= 1


@pytest.mark.parametrize("build, kind", [(gadget_a, "A"), (gadget_c, "C")])
def test_partition_gadget_blocks(build, kind):
    G = build()
    stats = {}
    assert validate_partition(G, partition_IF(G, check_class=False, stats=stats))
    assert stats == {f"{kind}:search": 1}


def test_partition_b_ordered(hosts):
    G = hosts["bad_face_44"]
    stats = {}
    P = partition_IF(G, order=("B", "A", "C"), stats=stats)
    assert validate_partition(G, P)
    assert stats.get("B:ordered", 0) >= 1


def test_round_trip_partition_transversal():
    P = IFPartition(frozenset({0, 3}), frozenset({1, 2}))
    assert partition_from_transversal(transversal_from_partition(P)) == P


def _random_cover(rng, n, p, s):
    g = nx.gnp_random_graph(n, p, seed=rng.randrange(10**6))
    m = {}
    for u, v in g.edges:
        a, b = min(u, v), max(u, v)
        perm = list(range(1, s + 1))
        rng.shuffle(perm)
        pairs = [(i, perm[i - 1]) for i in range(1, s + 1) if rng.random() < 0.8]
        m[(a, b)] = frozenset(pairs)
    cover = Cover({v: set(g[v]) for v in g}, s, m)
    f = {x: rng.randint(0, 3) for x in cover.adj}
    return ValuedCover(cover, f)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**6), st.integers(0, 8), st.floats(0.1, 0.9), st.integers(1, 3))
def test_peeling_matches_definition(seed, n, p, s):
    rng = random.Random(seed)
    H = _random_cover(rng, n, p, s)
    T = Transversal({v: rng.randint(1, s) for v in H.cover.base})
    assert is_strictly_f_degenerate(H, T) == transversal_is_sfd(H, T)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.integers(0, 7), st.floats(0.1, 0.9), st.integers(1, 2))
def test_find_sfdt_matches_oracle(seed, n, p, s):
    H = _random_cover(random.Random(seed), n, p, s)
    T = find_sfdt(H)
    assert (T is None) == (oracle_sfdt(H) is None)
    if T is not None:
        assert transversal_is_sfd(H, T)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 12))
def test_partition_implies_sfdt(seed, steps):
    G = corpus.ear_random(seed, steps, max_n=14, class_bias=True)
    try:
        P = partition_IF(G)
    except NotInClass:
        return
    assert validate_partition(G, P)
    assert find_sfdt(special_valued_cover(G)) is not None


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 12), st.data())
def test_low_vertex_always_has_a_level(seed, steps, data):
    G = corpus.ear_random(seed, steps, max_n=16, pendant_prob=0.3)
    H = special_valued_cover(G)
    low = [v for v in range(G.n) if G.degree(v) < 3]
    if not low:
        return
    v = data.draw(st.sampled_from(low))
    decided = {w: data.draw(st.integers(1, 2)) for w in G.neighbors(v)}
    assert choose_level(H, decided, v) in (1, 2)
