"""Face-anchored detection of the three reducible configurations.

Degrees are always degrees in the host graph.  Roles use these names:

* ``A``: ``v1..v10`` walk the 10-face, ``v1 v2`` is the edge shared with
  the 3-face and ``apex`` is its third vertex.
* ``C``: ``v1..v8`` walk the 8-face, ``v1 v2`` is shared with the 5-face,
  whose remaining vertices are ``w1 w2 w3`` (``w1`` next to ``v1``).
* ``B``: ``x1..x10`` and ``y3..y10`` as in the labelled drawing of two
  adjacent 10-faces.  In the operational reading the two unlabelled
  vertices of the second face are ``x2`` and ``x1`` themselves, so the
  configuration has 18 vertices; ``x3 x2 y3`` and ``x1 x10 y10`` are the
  3-faces of the bad face.  The literal reading keeps the drawn
  vertex-disjoint cycles and adds roles ``a`` and ``b``.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass, field
from typing import Literal

from .cycles import DEFAULT_SPEC, CycleSpec, in_class
from .errors import NotInClass, PlaneIFError
from .plane_graph import Face, PlaneGraph, intersection_is_k2

Kind = Literal["A", "B", "C"]


class LocalStructureNotFound(PlaneIFError):
    """A component with minimum degree 3 contains no configuration."""


@dataclass(frozen=True)
class ConfigMatch:
    kind: Kind
    roles: dict[str, int]
    faces: tuple[int, ...]
    mode: str = "operational"

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.roles.values())

    def relabel(self, labels) -> "ConfigMatch":
        return ConfigMatch(self.kind, {r: labels[v] for r, v in self.roles.items()}, self.faces, self.mode)

    def to_dict(self) -> dict:
        return {"kind": self.kind, "mode": self.mode, "roles": dict(sorted(self.roles.items())),
                "faces": list(self.faces)}


@dataclass(frozen=True)
class BadFaceRecord:
    face: int
    vertices: tuple[int, ...]  # v1..v10
    u1: int
    u3: int
    good_face: int
    good_face_size: int

    @property
    def good_edge(self) -> tuple[int, int]:
        return (self.vertices[1], self.vertices[2])

    @property
    def good_path(self) -> tuple[int, int, int, int]:
        return (self.u1, self.vertices[1], self.vertices[2], self.u3)

    @property
    def good_face_ok(self) -> bool:
        return self.good_face_size >= 10


@dataclass(frozen=True)
class MinDegreeWitness:
    vertex: int
    degree: int


@dataclass(frozen=True)
class NotFound:
    reason: str = "no vertex of degree <= 2 and no configuration"


def _light_cycle_face(G: PlaneGraph, f: Face, size: int) -> bool:
    return f.size == size and f.is_simple_cycle() and all(G.degree(v) == 3 for v in f.vertices)


def _triangle_apex(G: PlaneGraph, f: Face, a: int, b: int) -> int | None:
    h = G.face_across(f, a, b)
    if h.id == f.id or h.size != 3 or not h.is_simple_cycle():
        return None
    (c,) = set(h.vertices) - {a, b}
    return c


def find_config_a(G: PlaneGraph) -> list[ConfigMatch]:
    out = []
    for f in G.faces:
        if not _light_cycle_face(G, f, 10):
            continue
        walk = f.vertices
        for i in range(10):
            a, b = walk[i], walk[(i + 1) % 10]
            c = _triangle_apex(G, f, a, b)
            if c is None or c in walk or G.degree(c) != 3:
                continue
            roles = {f"v{k + 1}": walk[(i + k) % 10] for k in range(10)}
            roles["apex"] = c
            out.append(ConfigMatch("A", roles, (f.id, G.face_across(f, a, b).id)))
    return out


def find_config_c(G: PlaneGraph) -> list[ConfigMatch]:
    out = []
    for f in G.faces:
        if not _light_cycle_face(G, f, 8):
            continue
        walk = f.vertices
        for i in range(8):
            a, b = walk[i], walk[(i + 1) % 8]
            h = G.face_across(f, a, b)
            if h.size != 5 or not h.is_simple_cycle() or not intersection_is_k2(walk, h.vertices):
                continue
            hw = h.vertices
            j = hw.index(a)  # h runs b -> a -> w1 -> w2 -> w3
            others = [hw[(j + k) % 5] for k in (1, 2, 3)]
            if any(G.degree(w) != 3 for w in others):
                continue
            roles = {f"v{k + 1}": walk[(i + k) % 8] for k in range(8)}
            roles.update(w1=others[0], w2=others[1], w3=others[2])
            out.append(ConfigMatch("C", roles, (f.id, h.id)))
    return out


def find_bad_faces(G: PlaneGraph) -> list[BadFaceRecord]:
    """Every (bad face, good edge) pair; apexes must be 4+-vertices."""
    out = []
    for f in G.faces:
        if not _light_cycle_face(G, f, 10):
            continue
        walk = f.vertices
        for i in range(10):
            v = [walk[(i - 1 + k) % 10] for k in range(10)]  # v1..v10
            u1 = _triangle_apex(G, f, v[0], v[1])
            u3 = _triangle_apex(G, f, v[2], v[3])
            if u1 is None or u3 is None or u1 == u3 or u1 in walk or u3 in walk:
                continue
            if G.degree(u1) < 4 or G.degree(u3) < 4:
                continue
            g = G.face_across(f, v[1], v[2])
            out.append(BadFaceRecord(f.id, tuple(v), u1, u3, g.id, g.size))
    return out


def _operational_b(G: PlaneGraph, rec: BadFaceRecord) -> ConfigMatch | None:
    if G.degree(rec.u1) != 4 or G.degree(rec.u3) != 4:
        return None
    g = G.faces[rec.good_face]
    if g.size != 10 or not g.is_simple_cycle():
        return None
    if any(G.degree(w) != 3 for w in g.vertices if w not in (rec.u1, rec.u3)):
        return None
    gw = g.vertices
    j = gw.index(rec.u1)
    ys = {f"y{k}": gw[(j + k - 3) % 10] for k in range(3, 11)}
    v = rec.vertices
    if ys["y10"] != rec.u3 or gw[(j + 8) % 10] != v[2] or gw[(j + 9) % 10] != v[1]:
        return None
    xs = {"x3": v[0], "x2": v[1], "x1": v[2]}
    xs.update({f"x{k}": v[13 - k] for k in range(4, 11)})
    if set(xs.values()) & set(ys.values()):
        return None
    return ConfigMatch("B", {**xs, **ys}, (rec.face, rec.good_face), "operational")


def _literal_b(G: PlaneGraph) -> list[ConfigMatch]:
    tens = [f for f in G.faces if f.size == 10 and f.is_simple_cycle()]
    xs_faces = [f for f in tens if all(G.degree(v) == 3 for v in f.vertices)]
    out, seen = [], set()
    for X in xs_faces:
        for Y in tens:
            if Y.id == X.id or set(X.vertices) & set(Y.vertices):
                continue
            yset = set(Y.vertices)
            for xw in (X.vertices, X.vertices[::-1]):
                for yw in (Y.vertices, Y.vertices[::-1]):
                    for i in range(10):
                        # xw[i] = x3, xw[i+1] = x2, xw[i+2] = x1, xw[i+3] = x10
                        x3, x10 = xw[i], xw[(i + 3) % 10]
                        for y3 in G.adjacency[x3] & yset:
                            j = yw.index(y3)
                            y10 = yw[(j + 3) % 10]
                            if y10 not in G.adjacency[x10]:
                                continue
                            ycyc = [yw[(j + k) % 10] for k in range(10)]
                            if G.degree(y3) != 4 or G.degree(y10) != 4:
                                continue
                            if any(G.degree(w) != 3 for w in ycyc if w not in (y3, y10)):
                                continue
                            roles = {"x3": x3, "x2": xw[(i + 1) % 10], "x1": xw[(i + 2) % 10],
                                     "x10": x10}
                            roles.update({f"x{k}": xw[(i + 13 - k) % 10] for k in range(4, 10)})
                            roles.update(y3=y3, a=ycyc[1], b=ycyc[2], y10=y10)
                            roles.update({f"y{k}": ycyc[(13 - k) % 10] for k in range(4, 10)})
                            key = (frozenset(roles.values()), frozenset({(x3, y3), (x10, y10)}))
                            if key in seen:
                                continue
                            seen.add(key)
                            out.append(ConfigMatch("B", roles, (X.id, Y.id), "literal"))
    return out


def find_config_b(G: PlaneGraph, mode: str = "operational") -> list[ConfigMatch]:
    if mode == "literal":
        return _literal_b(G)
    if mode != "operational":
        raise ValueError(f"unknown mode {mode!r}")
    return [m for rec in find_bad_faces(G) if (m := _operational_b(G, rec)) is not None]


DEFAULT_ORDER: tuple[Kind, ...] = ("A", "C", "B")


def iter_configs(
    G: PlaneGraph, mode: str = "operational", order: tuple[str, ...] = DEFAULT_ORDER
) -> Iterator[ConfigMatch]:
    finders = {"A": find_config_a, "C": find_config_c, "B": lambda H: find_config_b(H, mode)}
    for kind in order:
        yield from finders[kind](G)


def find_any_config(
    G: PlaneGraph, mode: str = "operational", order: tuple[str, ...] = DEFAULT_ORDER
) -> ConfigMatch | None:
    return next(iter_configs(G, mode, order), None)


def replay_match(G: PlaneGraph, match: ConfigMatch) -> bool:
    """Re-derive ``match`` from scratch on ``G``."""
    finder = {"A": find_config_a, "C": find_config_c}.get(match.kind)
    found = finder(G) if finder else find_config_b(G, match.mode)
    return any(m.roles == match.roles for m in found)


def local_structure(G: PlaneGraph, spec: CycleSpec = DEFAULT_SPEC, *, check_class: bool = True):
    """A vertex of degree at most 2, else a configuration, else ``NotFound``."""
    if check_class:
        verdict = in_class(G, spec)
        if not verdict:
            raise NotInClass("graph is not in the class", verdict.witness)
    if G.n == 0:
        return NotFound("empty graph")
    v = min(range(G.n), key=lambda x: (G.degree(x), x))
    if G.degree(v) <= 2:
        return MinDegreeWitness(v, G.degree(v))
    match = find_any_config(G)
    return match if match is not None else NotFound()


# ---------------------------------------------------------------------------
# Reduction schedules shared by the certifiers


@dataclass(frozen=True)
class Reduction:
    """One removal step: vertices removed together from the current graph.

    ``alive`` is the vertex set of the current graph just before removal,
    so residual budgets can be computed from it.
    """

    kind: str  # "low", "A", "B" or "C"
    vertices: tuple[int, ...]
    alive: frozenset[int]
    match: ConfigMatch | None = None

    def outside_neighbors(self, G: PlaneGraph, v: int) -> list[int]:
        inside = set(self.vertices)
        return [w for w in G.neighbors(v) if w in self.alive and w not in inside]


def reduction_schedule(G: PlaneGraph, order: tuple[str, ...] = DEFAULT_ORDER) -> list[Reduction]:
    """Empty ``G`` by removing 2^- vertices or whole configurations.

    Low-degree vertices are peeled first; only when the remaining graph
    has minimum degree 3 are faces re-traced to look for a configuration,
    trying kinds in ``order``.  Raises ``LocalStructureNotFound`` if a component gets stuck.
    """
    alive = set(range(G.n))
    deg = {v: G.degree(v) for v in alive}
    steps: list[Reduction] = []
    queue = sorted(v for v in alive if deg[v] <= 2)

    def remove(vs):
        for v in vs:
            alive.discard(v)
        for v in vs:
            for w in G.neighbors(v):
                if w in alive:
                    deg[w] -= 1
                    if deg[w] == 2:
                        queue.append(w)

    while alive:
        while queue:
            v = queue.pop()
            if v in alive and deg[v] <= 2:
                steps.append(Reduction("low", (v,), frozenset(alive)))
                remove([v])
        if not alive:
            break
        H, labels = G.induced(alive)
        match = None
        for comp in H.components():
            C, clabels = H.induced(comp)
            match = find_any_config(C, order=order)
            if match is not None:
                match = match.relabel([labels[x] for x in clabels])
                break
        if match is None:
            raise LocalStructureNotFound(f"stuck on {len(alive)} vertices with minimum degree >= 3")
        vs = tuple(sorted(match.vertices))
        steps.append(Reduction(match.kind, vs, frozenset(alive), match))
        remove(vs)
        queue.extend(sorted(v for v in alive if deg[v] <= 2))
    return steps
