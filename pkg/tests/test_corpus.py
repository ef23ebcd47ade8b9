import json

import pytest
from hypothesis import given, settings, strategies as st

from planeif import corpus
from planeif.cycles import in_class
from planeif.errors import UnknownFamily
from planeif.io import write_planar_code


def test_generate_family_examples():
    (C5,) = corpus.generate_family("cycle", {"n": 5})
    assert C5 == corpus.cycle(5) and (C5.n, C5.m) == (5, 5)
    (P,) = corpus.generate_family("prism", {"k": 3})
    assert (P.n, P.m, len(P.faces)) == (6, 9, 5)
    with pytest.raises(UnknownFamily):
        corpus.generate_family("hypercube", {})


def test_family_shapes():
    assert corpus.wheel(5).degree(0) == 5 or max(corpus.wheel(5).degree(v) for v in range(6)) == 5
    assert corpus.grid(3, 4).n == 12
    assert corpus.dodecahedral().n == 20
    assert corpus.theta(1, 2, 3).n == 8
    with pytest.raises(ValueError):
        corpus.theta(0, 0, 3)
    with pytest.raises(ValueError):
        corpus.cycle(2)
    with pytest.raises(ValueError):
        corpus.path(0)


def test_ear_random_reproducible():
    a = corpus.ear_random(seed=1, steps=10)
    b = corpus.ear_random(seed=1, steps=10)
    assert a == b and a.digest == b.digest
    assert a.n - a.m + len(a.faces) == 2


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.integers(0, 20), st.integers(3, 10), st.integers(1, 5), st.booleans())
def test_ear_random_respects_bounds(seed, steps, start, max_ear, bias):
    G = corpus.ear_random(seed, steps, start=start, max_ear=max_ear, max_n=20, class_bias=bias,
                          pendant_prob=0.2)
    assert G.is_connected and G.n <= 20
    if bias and in_class(corpus.cycle(start)):
        assert in_class(G)


def test_expand_truncation():
    T = corpus.expand(corpus.dodecahedral())
    assert (T.n, T.m, len(T.faces)) == (60, 90, 32)
    with pytest.raises(ValueError):
        corpus.expand(corpus.cycle(5), {0: (0, [1, 1])})


def test_hosts_in_class(hosts):
    for name, G in hosts.items():
        assert G.min_degree == 3, name
        assert in_class(G), name
    with pytest.raises(UnknownFamily):
        corpus.load_host("nowhere")


def test_corpus_shape(corpus_items):
    assert len(corpus_items) >= 1000
    assert all(it.graph.is_connected and it.graph.n <= 24 for it in corpus_items)
    assert len({it.id for it in corpus_items}) == len(corpus_items)
    assert sum(it.in_class for it in corpus_items) >= 300


def test_corpus_deterministic():
    a = corpus.build_corpus(seed=5, max_n=12, random_count=40)
    b = corpus.build_corpus(seed=5, max_n=12, random_count=40)
    assert json.dumps(corpus.manifest(a)) == json.dumps(corpus.manifest(b))
    c = corpus.build_corpus(seed=6, max_n=12, random_count=40)
    assert corpus.manifest(a) != corpus.manifest(c)


def test_regenerate_bit_identical(corpus_items):
    for it in corpus_items[::37]:
        assert it.regenerate().digest == it.graph.digest


def test_manifest_round_trip(tmp_path):
    items = corpus.build_corpus(seed=2, max_n=10, random_count=20) + corpus.host_items()
    path = tmp_path / "manifest.json"
    corpus.write_manifest(items, path)
    back = corpus.load_manifest(path)
    assert [it.graph.digest for it in back] == [it.graph.digest for it in items]
    data = json.loads(path.read_text())
    data["items"][0]["digest"] = "0" * 64
    with pytest.raises(ValueError):
        corpus.load_manifest(data)


def test_ingest_planar_code(tmp_path):
    graphs = [corpus.cycle(5), corpus.prism(5)]
    path = tmp_path / "g.pc"
    path.write_bytes(write_planar_code(graphs))
    items = corpus.ingest(path, "planar_code")
    assert [it.graph for it in items] == graphs
    assert [it.in_class for it in items] == [True, False]
    assert items[1].regenerate() == graphs[1]
