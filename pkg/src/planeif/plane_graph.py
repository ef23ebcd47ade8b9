"""Embedded plane graphs given by rotation systems.

A rotation lists the neighbours of a vertex in clockwise order.  Faces are
traced with one fixed rule: the dart following ``(u, v)`` on its face is
``(v, w)`` where ``w`` immediately precedes ``u`` in the rotation of ``v``.
Every dart lies on exactly one face, so the outgoing darts of a vertex are
its face incidences ("corners"), counted with multiplicity.
"""

from __future__ import annotations

import hashlib
import json
import math
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from functools import cached_property

from .errors import (
    AsymmetricRotation,
    Disconnected,
    InvalidRotation,
    LoopOrMultiEdge,
    NonCycleBoundary,
    NonPlanarEuler,
)

Dart = tuple[int, int]
Edge = tuple[int, int]


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Face:
    """One face of a plane graph.

    ``darts`` is the boundary walk.  An isolated vertex has a single face
    with an empty walk; ``anchor`` then records that vertex.
    """

    id: int
    darts: tuple[Dart, ...]
    anchor: int | None = None

    @property
    def size(self) -> int:
        return len(self.darts)

    @property
    def vertices(self) -> tuple[int, ...]:
        """Vertices along the walk, one per dart (with repetition)."""
        if not self.darts:
            return () if self.anchor is None else (self.anchor,)
        return tuple(d[0] for d in self.darts)

    @property
    def edges(self) -> frozenset[Edge]:
        return frozenset(edge_key(u, v) for u, v in self.darts)

    def is_simple_cycle(self) -> bool:
        verts = self.vertices
        return len(self.darts) >= 3 and len(set(verts)) == len(verts)


@dataclass(frozen=True)
class BoundaryDecomposition:
    cycles: tuple[tuple[int, ...], ...]
    cut_edges: tuple[Edge, ...]

    def dart_multiset(self) -> list[Dart]:
        out: list[Dart] = []
        for cyc in self.cycles:
            out.extend((cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))
        for u, v in self.cut_edges:
            out.extend([(u, v), (v, u)])
        return sorted(out)

    def cycle_lengths(self) -> tuple[int, ...]:
        return tuple(sorted(len(c) for c in self.cycles))


class PlaneGraph:
    """Immutable simple plane graph on vertices ``0..n-1``.

    Construction validates symmetry and simplicity, traces the faces and
    checks Euler's formula on every component.  Pass
    ``allow_disconnected=True`` for multi-component inputs.
    """

    def __init__(
        self,
        rotation: Sequence[Sequence[int]] | Mapping[int, Sequence[int]],
        *,
        allow_disconnected: bool = False,
    ) -> None:
        if isinstance(rotation, Mapping):
            n = (max(rotation) + 1) if rotation else 0
            if set(rotation) != set(range(n)):
                raise InvalidRotation("rotation keys must be exactly 0..n-1")
            rows = [rotation[v] for v in range(n)]
        else:
            rows = list(rotation)
        self._rotation: tuple[tuple[int, ...], ...] = tuple(
            tuple(int(x) for x in row) for row in rows
        )
        self._validate_rotation()
        self._pos = tuple({w: i for i, w in enumerate(row)} for row in self._rotation)
        comps = self.components()
        if len(comps) > 1 and not allow_disconnected:
            raise Disconnected(f"graph has {len(comps)} components")
        self._check_euler(comps)

    # ------------------------------------------------------------------ basics
    def _validate_rotation(self) -> None:
        n = len(self._rotation)
        for v, row in enumerate(self._rotation):
            if len(set(row)) != len(row):
                raise LoopOrMultiEdge(f"vertex {v} repeats a neighbour: {row}")
            for w in row:
                if not 0 <= w < n:
                    raise InvalidRotation(f"vertex {v} lists out-of-range neighbour {w}")
                if w == v:
                    raise LoopOrMultiEdge(f"loop at vertex {v}")
        for v, row in enumerate(self._rotation):
            for w in row:
                if v not in self._rotation[w]:
                    raise AsymmetricRotation(f"{v} lists {w} but {w} omits {v}")

    @property
    def n(self) -> int:
        return len(self._rotation)

    @property
    def rotation(self) -> tuple[tuple[int, ...], ...]:
        return self._rotation

    @cached_property
    def m(self) -> int:
        return sum(len(r) for r in self._rotation) // 2

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(sorted({edge_key(v, w) for v, row in enumerate(self._rotation) for w in row}))

    @cached_property
    def darts(self) -> tuple[Dart, ...]:
        return tuple((v, w) for v, row in enumerate(self._rotation) for w in row)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(row) for row in self._rotation)

    def degree(self, v: int) -> int:
        return len(self._rotation[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._rotation[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    @cached_property
    def min_degree(self) -> int:
        return min((len(r) for r in self._rotation), default=0)

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in self._rotation[v]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    @property
    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    # ------------------------------------------------------------------- faces
    def next_dart(self, dart: Dart) -> Dart:
        u, v = dart
        row = self._rotation[v]
        return (v, row[(self._pos[v][u] - 1) % len(row)])

    @cached_property
    def faces(self) -> tuple[Face, ...]:
        seen: set[Dart] = set()
        faces: list[Face] = []
        for start in self.darts:
            if start in seen:
                continue
            walk = []
            d = start
            while d not in seen:
                seen.add(d)
                walk.append(d)
                d = self.next_dart(d)
            faces.append(Face(len(faces), tuple(walk)))
        for v in range(self.n):
            if not self._rotation[v]:
                faces.append(Face(len(faces), (), anchor=v))
        return tuple(faces)

    @cached_property
    def face_of_dart(self) -> dict[Dart, int]:
        return {d: f.id for f in self.faces for d in f.darts}

    def face_across(self, face: Face | int, u: int, v: int) -> Face:
        """The face on the other side of edge ``uv`` from ``face``."""
        fid = face if isinstance(face, int) else face.id
        a, b = self.face_of_dart[(u, v)], self.face_of_dart[(v, u)]
        if a == fid:
            return self.faces[b]
        if b == fid:
            return self.faces[a]
        raise ValueError(f"edge {u}-{v} is not on face {fid}")

    def incident_faces(self, v: int) -> tuple[int, ...]:
        """Face ids at ``v`` in rotation order, one per corner."""
        if not self._rotation[v]:
            return tuple(f.id for f in self.faces if f.anchor == v)
        return tuple(self.face_of_dart[(v, w)] for w in self._rotation[v])

    def _check_euler(self, comps: list[list[int]]) -> None:
        comp_of = {}
        for i, comp in enumerate(comps):
            for v in comp:
                comp_of[v] = i
        face_count = [0] * len(comps)
        for f in self.faces:
            face_count[comp_of[f.vertices[0]]] += 1
        for i, comp in enumerate(comps):
            nv = len(comp)
            me = sum(len(self._rotation[v]) for v in comp) // 2
            if nv - me + face_count[i] != 2:
                raise NonPlanarEuler(
                    f"component {i}: n={nv}, m={me}, F={face_count[i]} gives "
                    f"Euler characteristic {nv - me + face_count[i]}"
                )

    # ---------------------------------------------------------------- derived
    def induced(self, vertices: Iterable[int]) -> tuple["PlaneGraph", tuple[int, ...]]:
        """Induced plane subgraph with inherited rotations.

        Returns the subgraph (relabelled ``0..k-1``) and the tuple mapping
        new labels back to the original ones.
        """
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        rows = [[index[w] for w in self._rotation[v] if w in index] for v in keep]
        return PlaneGraph(rows, allow_disconnected=True), tuple(keep)

    def to_dict(self) -> dict:
        return {"n": self.n, "rotation": [list(r) for r in self._rotation]}

    @cached_property
    def digest(self) -> str:
        payload = json.dumps(self.to_dict(), separators=(",", ":"), sort_keys=True)
        return hashlib.sha256(payload.encode()).hexdigest()

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PlaneGraph) and self._rotation == other._rotation

    def __hash__(self) -> int:
        return hash(self._rotation)

    def __repr__(self) -> str:
        return f"PlaneGraph(n={self.n}, m={self.m}, faces={len(self.faces)})"


# ---------------------------------------------------------------------------
# Module-level operations


def build(rotation, *, allow_disconnected: bool = False) -> PlaneGraph:
    """Validate a rotation system and return the plane graph it encodes."""
    return PlaneGraph(rotation, allow_disconnected=allow_disconnected)


def trace_faces(G: PlaneGraph) -> list[Face]:
    return list(G.faces)


def face_degree(f: Face) -> int:
    return f.size


def faces_adjacent(f: Face, g: Face) -> bool:
    if f.id == g.id:
        raise ValueError("faces_adjacent requires two distinct faces")
    return bool(f.edges & g.edges)


def cycle_edges(cycle: Sequence[int]) -> frozenset[Edge]:
    k = len(cycle)
    return frozenset(edge_key(cycle[i], cycle[(i + 1) % k]) for i in range(k))


def intersection_is_k2(c1: Sequence[int], c2: Sequence[int]) -> bool:
    """True iff two simple cycles meet in exactly one edge and its ends."""
    shared_v = set(c1) & set(c2)
    if len(shared_v) != 2:
        return False
    shared_e = cycle_edges(c1) & cycle_edges(c2)
    return len(shared_e) == 1 and set(next(iter(shared_e))) == shared_v


def faces_normally_adjacent(f: Face, g: Face) -> bool:
    for h in (f, g):
        if not h.is_simple_cycle():
            raise NonCycleBoundary(f"face {h.id} boundary is not a simple cycle")
    return intersection_is_k2(f.vertices, g.vertices)


def decompose_boundary(f: Face) -> BoundaryDecomposition:
    """Split a boundary walk into simple cycles and doubly traversed edges."""
    if not f.darts:
        return BoundaryDecomposition((), ())
    cycles: list[tuple[int, ...]] = []
    cuts: list[Edge] = []
    stack = [f.darts[0][0]]
    where = {stack[0]: 0}
    for _, v in f.darts:
        if v in where:
            i = where[v]
            piece = stack[i:]
            for x in piece[1:]:
                del where[x]
            del stack[i + 1 :]
            if len(piece) == 2:
                cuts.append(edge_key(*piece))
            elif len(piece) >= 3:
                cycles.append(tuple(piece))
        else:
            where[v] = len(stack)
            stack.append(v)
    return BoundaryDecomposition(tuple(cycles), tuple(cuts))


# ---------------------------------------------------------------------------
# Alternative constructors


def from_coordinates(pos: Mapping[int, tuple[float, float]], edges: Iterable[Edge]) -> PlaneGraph:
    """Rotation system of a straight-line drawing (clockwise by angle)."""
    n = len(pos)
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    rows = []
    for v in range(n):
        x0, y0 = pos[v]
        rows.append(sorted(nbrs[v], key=lambda w: -math.atan2(pos[w][1] - y0, pos[w][0] - x0)))
    return PlaneGraph(rows, allow_disconnected=True)


def from_networkx(graph) -> PlaneGraph:
    """Embed an abstract planar networkx graph (nodes must be 0..n-1)."""
    import networkx as nx

    ok, emb = nx.check_planarity(graph)
    if not ok:
        raise NonPlanarEuler("graph is not planar")
    n = graph.number_of_nodes()
    if set(graph.nodes) != set(range(n)):
        raise InvalidRotation("networkx nodes must be 0..n-1")
    rows = [list(emb.neighbors_cw_order(v)) if graph.degree(v) else [] for v in range(n)]
    return PlaneGraph(rows, allow_disconnected=True)
