"""Reading and writing plane graphs: the JSON schema and planar_code."""

from __future__ import annotations

import json
from collections.abc import Iterable, Iterator
from pathlib import Path

from .errors import InvalidRotation
from .plane_graph import PlaneGraph

PLANAR_CODE_HEADER = b">>planar_code<<"


def graph_from_json(data: dict | str) -> PlaneGraph:
    """``{"n": int, "rotation": [[...], ...]}`` with 0-based ids."""
    if isinstance(data, str):
        data = json.loads(data)
    rotation = data["rotation"]
    if "n" in data and data["n"] != len(rotation):
        raise InvalidRotation(f"n={data['n']} but {len(rotation)} rotation rows")
    return PlaneGraph(rotation, allow_disconnected=bool(data.get("multi_component", False)))


def graph_to_json(G: PlaneGraph) -> dict:
    return G.to_dict()


def read_planar_code(data: bytes, *, allow_disconnected: bool = False) -> Iterator[PlaneGraph]:
    """Decode a planar_code byte stream (header optional, 1-based neighbours)."""
    pos = len(PLANAR_CODE_HEADER) if data.startswith(PLANAR_CODE_HEADER) else 0
    while pos < len(data):
        n = data[pos]
        pos += 1
        rows: list[list[int]] = []
        for _ in range(n):
            row = []
            while True:
                if pos >= len(data):
                    raise InvalidRotation("truncated planar_code stream")
                b = data[pos]
                pos += 1
                if b == 0:
                    break
                row.append(b - 1)
            rows.append(row)
        yield PlaneGraph(rows, allow_disconnected=allow_disconnected)


def write_planar_code(graphs: Iterable[PlaneGraph], *, header: bool = True) -> bytes:
    out = bytearray(PLANAR_CODE_HEADER if header else b"")
    for G in graphs:
        if G.n > 255:
            raise ValueError("single-byte planar_code supports at most 255 vertices")
        out.append(G.n)
        for row in G.rotation:
            out.extend(w + 1 for w in row)
            out.append(0)
    return bytes(out)


def load_graphs(path: str | Path, fmt: str = "json") -> list[PlaneGraph]:
    """Load one JSON graph, a JSON list of graphs, or a planar_code file."""
    path = Path(path)
    if fmt == "planar_code":
        return list(read_planar_code(path.read_bytes()))
    if fmt != "json":
        raise ValueError(f"unknown format {fmt!r}")
    data = json.loads(path.read_text())
    if isinstance(data, list):
        return [graph_from_json(d) for d in data]
    if "graphs" in data:
        return [graph_from_json(d) for d in data["graphs"]]
    return [graph_from_json(data)]
