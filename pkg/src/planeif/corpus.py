"""Deterministic graph families, ear-grown random plane graphs and the test corpus.

Every :class:`CorpusItem` carries a provenance record from which the exact
same rotation system can be regenerated.
"""

from __future__ import annotations

import json
import random
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from functools import cached_property
from importlib import resources
from pathlib import Path

import networkx as nx

from .cycles import DEFAULT_SPEC, ClassVerdict, in_class
from .errors import NonPlanarEuler, UnknownFamily
from .io import load_graphs
from .plane_graph import PlaneGraph, from_networkx

FAMILIES = ("cycle", "path", "theta", "prism", "wheel", "grid", "dodecahedral", "ear_random",
            "expansion", "host")
HOST_NAMES = ("truncated_dodecahedron", "bad_face_44", "bad_face_44_no_b", "bad_face_54")


def _nx(graph: nx.Graph) -> PlaneGraph:
    return PlaneGraph(from_networkx(nx.convert_node_labels_to_integers(graph, ordering="sorted")).rotation)


def cycle(n: int) -> PlaneGraph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return PlaneGraph([[(v - 1) % n, (v + 1) % n] for v in range(n)])


def path(n: int) -> PlaneGraph:
    if n < 1:
        raise ValueError("a path needs at least one vertex")
    return PlaneGraph([[w for w in (v - 1, v + 1) if 0 <= w < n] for v in range(n)])


def theta(a: int, b: int, c: int) -> PlaneGraph:
    """Two poles joined by paths with ``a``, ``b`` and ``c`` inner vertices."""
    if min(a, b, c) < 0 or sorted((a, b, c))[1] == 0:
        raise ValueError("theta graphs allow at most one direct pole-to-pole edge")
    g = nx.Graph()
    g.add_nodes_from((0, 1))
    nxt = 2
    for k in (a, b, c):
        chain = [0] + list(range(nxt, nxt + k)) + [1]
        nxt += k
        nx.add_path(g, chain)
    return _nx(g)


def prism(k: int) -> PlaneGraph:
    return _nx(nx.circular_ladder_graph(k))


def wheel(k: int) -> PlaneGraph:
    """Hub joined to every vertex of ``C_k``."""
    return _nx(nx.wheel_graph(k + 1))


def grid(rows: int, cols: int) -> PlaneGraph:
    return _nx(nx.grid_2d_graph(rows, cols))


def dodecahedral() -> PlaneGraph:
    return _nx(nx.dodecahedral_graph())


def _insert_after(row: list[int], anchor: int, x: int) -> None:
    row.insert(row.index(anchor) + 1, x)


def ear_random(
    seed: int,
    steps: int,
    *,
    start: int = 5,
    max_ear: int = 4,
    max_n: int = 24,
    pendant_prob: float = 0.0,
    class_bias: bool = False,
    tries: int = 20,
) -> PlaneGraph:
    """Grow a plane graph from ``C_start`` by adding paths inside faces.

    Each step picks a face and two corners on its boundary walk and joins
    them by a new path of 0 to ``max_ear`` inner vertices drawn inside that
    face; with probability ``pendant_prob`` it hangs a pendant vertex in a
    corner instead.  With ``class_bias`` a step is redrawn (up to ``tries``
    times) whenever it would leave the class.
    """
    rng = random.Random(seed)
    G = cycle(start)
    for _ in range(steps):
        if G.n >= max_n:
            break
        for _ in range(tries if class_bias else 1):
            H = _ear_step(G, rng, max_ear, max_n, pendant_prob)
            if H is not None and (not class_bias or in_class(H)):
                G = H
                break
    return G


def _ear_step(G: PlaneGraph, rng: random.Random, max_ear: int, max_n: int, pendant_prob: float):
    rows = [list(r) for r in G.rotation]
    face = rng.choice([f for f in G.faces if f.size])
    walk = face.darts
    room = max_n - G.n
    if rng.random() < pendant_prob:
        if room < 1:
            return None
        prev, a = walk[rng.randrange(len(walk))]
        nxt = G.next_dart((prev, a))[1]
        x = G.n
        _insert_after(rows[a], nxt, x)
        rows.append([a])
        return PlaneGraph(rows)
    i, j = sorted(rng.sample(range(len(walk)), 2)) if len(walk) >= 2 else (0, 0)
    if i == j:
        return None
    (pa, a), (pb, b) = walk[i - 1], walk[j - 1]
    na, nb = walk[i][1], walk[j][1]
    lo = 0
    if a == b:
        lo = 2
    elif b in G.adjacency[a]:
        lo = 1
    hi = min(max_ear, room)
    if lo > hi:
        return None
    k = rng.randint(lo, hi)
    inner = list(range(G.n, G.n + k))
    chain = [a] + inner + [b]
    for x in inner:
        rows.append([])
    for p, x in enumerate(chain[1:-1], start=1):
        rows[x] = [chain[p - 1], chain[p + 1]]
    _insert_after(rows[a], na, chain[1])
    _insert_after(rows[b], nb, chain[-2])
    try:
        return PlaneGraph(rows)
    except NonPlanarEuler:  # pragma: no cover - the construction keeps Euler's formula
        return None


def expand(D: PlaneGraph, groups: Mapping[int, tuple[int, Sequence[int]]] | None = None) -> PlaneGraph:
    """Replace vertices of ``D`` by cycles of corner vertices.

    ``groups[v] = (offset, sizes)`` rotates ``rot(v)`` by ``offset`` and cuts
    it into consecutive blocks of the given sizes; each block becomes one
    corner vertex carrying those edges, and the corners of ``v`` form a
    cycle.  Vertices not listed are cut into singletons, so ``expand`` with
    no groups is the truncation of ``D``.  A single block keeps ``v`` as is.
    """
    groups = groups or {}
    corner_of: dict[tuple[int, int], int] = {}
    corners: dict[int, list[int]] = {}
    blocks: dict[int, list[list[int]]] = {}
    nid = 0
    for v in range(D.n):
        r = list(D.rotation[v])
        off, sizes = groups.get(v, (0, [1] * len(r)))
        if sum(sizes) != len(r) or len(sizes) == 2:
            raise ValueError(f"bad grouping {sizes} for a vertex of degree {len(r)}")
        r = r[off:] + r[:off]
        bs, i = [], 0
        for s in sizes:
            bs.append(r[i:i + s])
            i += s
        corners[v] = list(range(nid, nid + len(bs)))
        nid += len(bs)
        blocks[v] = bs
        for c, b in zip(corners[v], bs):
            for w in b:
                corner_of[(v, w)] = c
    rows: list[list[int]] = [[] for _ in range(nid)]
    for v in range(D.n):
        cs = corners[v]
        k = len(cs)
        for j, (c, b) in enumerate(zip(cs, blocks[v])):
            row = [corner_of[(w, v)] for w in b]
            if k >= 3:
                row += [cs[(j + 1) % k], cs[(j - 1) % k]]
            rows[c] = row
    return PlaneGraph(rows)


def load_host(name: str) -> PlaneGraph:
    if name == "truncated_dodecahedron":
        return expand(dodecahedral())
    if name not in HOST_NAMES:
        raise UnknownFamily(f"unknown host {name!r}; known: {', '.join(HOST_NAMES)}")
    text = resources.files("planeif").joinpath("data", f"{name}.json").read_text()
    return PlaneGraph(json.loads(text)["rotation"])


_BUILDERS = {
    "cycle": lambda p: cycle(p["n"]),
    "path": lambda p: path(p["n"]),
    "theta": lambda p: theta(p["a"], p["b"], p["c"]),
    "prism": lambda p: prism(p["k"]),
    "wheel": lambda p: wheel(p["k"]),
    "grid": lambda p: grid(p["rows"], p["cols"]),
    "dodecahedral": lambda p: dodecahedral(),
    "ear_random": lambda p: ear_random(**p),
    "expansion": lambda p: expand(generate_family(p["base"], p.get("base_params", {}))[0]),
    "host": lambda p: load_host(p["name"]),
}


def generate_family(name: str, params: Mapping | None = None) -> list[PlaneGraph]:
    """One graph per call, returned as a list for uniformity with file ingestion."""
    if name not in _BUILDERS:
        raise UnknownFamily(f"unknown family {name!r}; known: {', '.join(FAMILIES)}")
    return [_BUILDERS[name](dict(params or {}))]


@dataclass(frozen=True)
class CorpusItem:
    id: str
    graph: PlaneGraph = field(compare=False, repr=False)
    provenance: dict = field(compare=False)

    @cached_property
    def verdict(self) -> ClassVerdict:
        return in_class(self.graph, DEFAULT_SPEC)

    @property
    def in_class(self) -> bool:
        return bool(self.verdict)

    def regenerate(self) -> PlaneGraph:
        return regenerate(self.provenance)

    def to_dict(self) -> dict:
        return {"id": self.id, "provenance": self.provenance, "digest": self.graph.digest,
                "n": self.graph.n}


def regenerate(prov: Mapping) -> PlaneGraph:
    if "file" in prov:
        return load_graphs(prov["file"], prov.get("format", "json"))[prov["offset"]]
    return generate_family(prov["family"], prov.get("params"))[0]


def _item(family: str, params: dict, idx: int) -> CorpusItem:
    G = generate_family(family, params)[0]
    return CorpusItem(f"{family}-{idx:04d}", G, {"family": family, "params": params})


def family_params(max_n: int = 24) -> list[tuple[str, dict]]:
    out: list[tuple[str, dict]] = []
    out += [("cycle", {"n": n}) for n in range(3, max_n + 1)]
    out += [("path", {"n": n}) for n in range(1, max_n + 1)]
    for a in range(0, max_n):
        for b in range(max(a, 1), max_n):
            for c in range(b, max_n):
                if a + b + c + 2 <= max_n:
                    out.append(("theta", {"a": a, "b": b, "c": c}))
    out += [("prism", {"k": k}) for k in range(3, max_n // 2 + 1)]
    out += [("wheel", {"k": k}) for k in range(3, max_n)]
    out += [("grid", {"rows": r, "cols": c}) for r in range(2, max_n) for c in range(r, max_n)
            if r * c <= max_n]
    if max_n >= 20:
        out.append(("dodecahedral", {}))
    return out


def build_corpus(seed: int = 0, max_n: int = 24, random_count: int = 700) -> list[CorpusItem]:
    """Structured families plus seeded ear-grown graphs, all with ``n <= max_n``.

    Half of the random graphs are grown with the class bias so that the
    corpus holds many class members; a quarter also hang pendant vertices.
    """
    entries = family_params(max_n)
    rng = random.Random(seed)
    for k in range(random_count):
        params = {
            "seed": rng.randrange(2**31),
            "steps": rng.randint(1, 14),
            "start": rng.choice((3, 5, 6, 8, 10)),
            "max_ear": rng.randint(1, 5),
            "max_n": max_n,
            "pendant_prob": 0.25 if k % 4 == 3 else 0.0,
            "class_bias": k % 2 == 0,
        }
        params["start"] = min(params["start"], max_n)
        entries.append(("ear_random", params))
    return [_item(fam, params, i) for i, (fam, params) in enumerate(entries)]


def host_items() -> list[CorpusItem]:
    """Constructed minimum-degree-3 class members (larger than the corpus bound)."""
    return [_item("host", {"name": name}, 9000 + i) for i, name in enumerate(HOST_NAMES)]


def manifest(items: Iterable[CorpusItem]) -> dict:
    return {"version": 1, "items": [it.to_dict() for it in items]}


def write_manifest(items: Iterable[CorpusItem], path: str | Path) -> None:
    Path(path).write_text(json.dumps(manifest(items), indent=1, sort_keys=True))


def load_manifest(data: Mapping | str | Path) -> list[CorpusItem]:
    """Regenerate every manifest entry and insist on identical digests."""
    if not isinstance(data, Mapping):
        data = json.loads(Path(data).read_text())
    out = []
    for entry in data["items"]:
        prov = entry["provenance"]
        G = regenerate(prov)
        if G.digest != entry["digest"]:
            raise ValueError(f"{entry['id']}: regenerated graph differs from the manifest")
        out.append(CorpusItem(entry["id"], G, prov))
    return out


def ingest(path: str | Path, fmt: str = "json") -> list[CorpusItem]:
    """Corpus items from an external file (JSON or planar_code)."""
    graphs = load_graphs(path, fmt)
    return [
        CorpusItem(f"file-{i:04d}", G, {"file": str(path), "format": fmt, "offset": i})
        for i, G in enumerate(graphs)
    ]
