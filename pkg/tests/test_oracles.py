import networkx as nx
import pytest

from planeif import corpus
from planeif.errors import SizeBound
from planeif.oracles import oracle_cycles, oracle_if_partition, oracle_wd, oracle_wd_value

# frozen by enumeration
IF_EXISTS = {"C5": True, "K4": False, "K5": False, "K1": True, "grid44": True, "wheel5": False}


def _graphs():
    return {"C5": corpus.cycle(5), "K4": nx.complete_graph(4), "K5": nx.complete_graph(5),
            "K1": nx.empty_graph(1), "grid44": corpus.grid(4, 4), "wheel5": corpus.wheel(5)}


@pytest.mark.parametrize("name", sorted(IF_EXISTS))
def test_if_partition(name):
    G = _graphs()[name]
    P = oracle_if_partition(G)
    assert (P is not None) == IF_EXISTS[name]


def test_if_partition_wheel_reason():
    # the hub cannot join I (the rim is a cycle), and any independent rim set leaves
    # two consecutive rim vertices that close a triangle with the hub
    assert oracle_if_partition(corpus.wheel(5)) is None
    assert oracle_if_partition(corpus.wheel(4)) is not None


def test_if_partition_k4_reason():
    # any independent set of K4 has one vertex, leaving a triangle
    assert oracle_if_partition(nx.complete_graph(4)) is None
    assert oracle_if_partition(nx.complete_graph(4).subgraph([0, 1, 2])) is not None


def test_wd_examples():
    assert not oracle_wd(nx.complete_graph(3), 1)
    assert oracle_wd(nx.complete_graph(3), 2)
    assert oracle_wd(nx.empty_graph(1), 0)
    assert [oracle_wd_value(g) for g in (nx.complete_graph(4), corpus.cycle(5), corpus.path(4))] == [3, 2, 1]


def test_cycles_examples():
    assert oracle_cycles(nx.complete_graph(4), 3) == 4
    assert oracle_cycles(corpus.cycle(6), 6) == 1
    assert oracle_cycles(corpus.cycle(6), 3) == 0
    assert oracle_cycles(corpus.prism(4), 4) == 6


def test_size_bounds():
    with pytest.raises(SizeBound):
        oracle_if_partition(corpus.path(17))
    with pytest.raises(SizeBound):
        oracle_wd(corpus.path(13), 1)
    with pytest.raises(SizeBound):
        oracle_cycles(corpus.path(13), 3)
