import json

import pytest

from planeif import corpus
from planeif.errors import InvalidRotation
from planeif.io import PLANAR_CODE_HEADER, graph_from_json, graph_to_json, load_graphs, read_planar_code, write_planar_code


def test_json_round_trip():
    G = corpus.prism(4)
    assert graph_from_json(json.dumps(graph_to_json(G))) == G


def test_json_n_mismatch():
    with pytest.raises(InvalidRotation):
        graph_from_json({"n": 4, "rotation": [[1], [0]]})


def test_planar_code_round_trip():
    graphs = [corpus.cycle(5), corpus.dodecahedral(), corpus.wheel(6)]
    data = write_planar_code(graphs)
    assert data.startswith(PLANAR_CODE_HEADER)
    assert list(read_planar_code(data)) == graphs
    assert list(read_planar_code(write_planar_code(graphs, header=False))) == graphs


def test_planar_code_bytes():
    # triangle: n=3, then 1-based neighbour lists each closed by 0
    data = bytes([3, 2, 3, 0, 3, 1, 0, 1, 2, 0])
    (G,) = read_planar_code(data)
    assert G.rotation == ((1, 2), (2, 0), (0, 1))


def test_load_graphs_files(tmp_path):
    G = corpus.cycle(5)
    one = tmp_path / "one.json"
    one.write_text(json.dumps(G.to_dict()))
    many = tmp_path / "many.json"
    many.write_text(json.dumps([G.to_dict(), corpus.prism(3).to_dict()]))
    pc = tmp_path / "g.pc"
    pc.write_bytes(write_planar_code([G]))
    assert load_graphs(one) == [G]
    assert len(load_graphs(many)) == 2
    assert load_graphs(pc, "planar_code") == [G]
