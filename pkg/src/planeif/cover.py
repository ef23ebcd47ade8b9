"""Covers, strictly f-degenerate transversals and the (I, F) partitioner.

A cover vertex is a pair ``(v, i)`` with ``1 <= i <= s``.  The partitioner
works on the canonical cover with ``s = 2`` and budgets ``f(v,1) = 1``,
``f(v,2) = 2``.  Level 1 vertices are never adjacent to each other and
level 2 vertices induce a forest, which is exactly an (I, F) partition.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field

from .configurations import DEFAULT_ORDER, LocalStructureNotFound, reduction_schedule
from .cycles import DEFAULT_SPEC, CycleSpec, in_class
from .errors import NotInClass, PartitionFailed, SizeBound
from .plane_graph import PlaneGraph
from .weak_degeneracy import B_WW_ORDER, adjacency_of

CoverVertex = tuple[int, int]
DEFAULT_BOUND = 14


@dataclass(frozen=True)
class Cover:
    """``matchings[(u, v)]`` (``u < v``) holds pairs ``(i, j)`` joining ``(u,i)`` to ``(v,j)``."""

    base: Mapping[int, frozenset[int]]
    s: int
    matchings: Mapping[tuple[int, int], frozenset[tuple[int, int]]]
    adj: dict[CoverVertex, frozenset[CoverVertex]] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.s < 1:
            raise ValueError("cover width must be at least 1")
        base = adjacency_of(self.base)
        object.__setattr__(self, "base", base)
        adj: dict[CoverVertex, set[CoverVertex]] = {(v, i): set() for v in base for i in range(1, self.s + 1)}
        for (u, v), pairs in self.matchings.items():
            if not u < v or v not in base.get(u, ()):
                raise ValueError(f"matching on {u}{v}, which is not a base edge with u < v")
            left = [i for i, _ in pairs]
            right = [j for _, j in pairs]
            if len(set(left)) != len(left) or len(set(right)) != len(right):
                raise ValueError(f"M_{u}{v} is not a matching")
            for i, j in pairs:
                if not (1 <= i <= self.s and 1 <= j <= self.s):
                    raise ValueError(f"level out of range in M_{u}{v}")
                adj[(u, i)].add((v, j))
                adj[(v, j)].add((u, i))
        object.__setattr__(self, "adj", {x: frozenset(ys) for x, ys in adj.items()})

    @property
    def vertices(self) -> list[CoverVertex]:
        return sorted(self.adj)

    @property
    def num_edges(self) -> int:
        return sum(len(p) for p in self.matchings.values())


def canonical_cover(G, s: int) -> Cover:
    """``s`` disjoint copies of ``G``: ``(u,i)(v,j)`` is an edge iff ``uv`` is and ``i = j``."""
    base = adjacency_of(G)
    pairs = frozenset((i, i) for i in range(1, s + 1))
    m = {(u, v): pairs for u in base for v in base[u] if u < v}
    return Cover(base, s, m)


@dataclass(frozen=True)
class ValuedCover:
    cover: Cover
    f: Mapping[CoverVertex, int]

    def __post_init__(self):
        if set(self.f) != set(self.cover.adj):
            raise ValueError("f must be defined on every cover vertex")
        if any(x < 0 for x in self.f.values()):
            raise ValueError("f must be nonnegative")

    @classmethod
    def uniform(cls, cover: Cover, levels: Sequence[int]) -> "ValuedCover":
        """``f(v, i) = levels[i - 1]`` for every base vertex."""
        if len(levels) != cover.s:
            raise ValueError("need one value per level")
        return cls(cover, {(v, i): levels[i - 1] for v, i in cover.adj})


def special_valued_cover(G) -> ValuedCover:
    return ValuedCover.uniform(canonical_cover(G, 2), (1, 2))


@dataclass(frozen=True)
class Transversal:
    choice: Mapping[int, int]

    def vertices(self) -> list[CoverVertex]:
        return sorted(self.choice.items())

    def check(self, cover: Cover) -> None:
        if set(self.choice) != set(cover.base):
            raise ValueError("a transversal picks exactly one level per base vertex")
        if any(not 1 <= i <= cover.s for i in self.choice.values()):
            raise ValueError("transversal level out of range")


@dataclass(frozen=True)
class IFPartition:
    I: frozenset[int]
    F: frozenset[int]

    def to_dict(self) -> dict:
        return {"I": sorted(self.I), "F": sorted(self.F)}


def _peels(adj, f, chosen: Iterable[CoverVertex]) -> bool:
    """Peel vertices of degree below budget; True if everything goes."""
    alive = set(chosen)
    deg = {x: sum(1 for y in adj[x] if y in alive) for x in alive}
    stack = [x for x in alive if deg[x] < f[x]]
    while stack:
        x = stack.pop()
        if x not in alive:
            continue
        alive.remove(x)
        for y in adj[x]:
            if y in alive:
                deg[y] -= 1
                if deg[y] < f[y]:
                    stack.append(y)
    return not alive


def is_strictly_f_degenerate(H: ValuedCover, T: Transversal) -> bool:
    T.check(H.cover)
    return _peels(H.cover.adj, H.f, T.vertices())


def _extend(H: ValuedCover, decided: dict[int, int], block: Sequence[int]) -> dict[int, int] | None:
    """Choose levels for ``block`` so the decided part stays strictly f-degenerate.

    Budgets on the block are cut by the decided outside neighbours matched
    at that level, and the block alone is then required to peel under those
    residual budgets.  Backtracks over ``block`` in the given order.
    """
    adj, s = H.cover.adj, H.cover.s
    inside = set(block)
    residual = {}
    for v in block:
        for i in range(1, s + 1):
            used = sum(1 for (w, j) in adj[(v, i)] if w not in inside and decided.get(w) == j)
            residual[(v, i)] = H.f[(v, i)] - used
    chosen: dict[int, int] = {}

    def rec(k: int) -> bool:
        if k == len(block):
            return True
        v = block[k]
        for i in range(1, s + 1):
            if residual[(v, i)] <= 0:
                continue
            chosen[v] = i
            if _peels(adj, residual, ((w, j) for w, j in chosen.items())) and rec(k + 1):
                return True
            del chosen[v]
        return False

    return dict(chosen) if rec(0) else None


def choose_level(H: ValuedCover, decided: Mapping[int, int], v: int) -> int | None:
    """First level whose already-used neighbour count is below its budget."""
    for i in range(1, H.cover.s + 1):
        used = sum(1 for (w, j) in H.cover.adj[(v, i)] if decided.get(w) == j)
        if used < H.f[(v, i)]:
            return i
    return None


def find_sfdt(H: ValuedCover, *, bound: int = DEFAULT_BOUND) -> Transversal | None:
    """Exhaustive backtracking; partial choices are pruned because strict
    f-degeneracy passes to subsets."""
    base = H.cover.base
    if len(base) > bound:
        raise SizeBound(f"exhaustive transversal search is limited to {bound} base vertices")
    choice = _extend(H, {}, sorted(base))
    return None if choice is None else Transversal(choice)


def partition_from_transversal(T: Transversal) -> IFPartition:
    return IFPartition(
        frozenset(v for v, i in T.choice.items() if i == 1),
        frozenset(v for v, i in T.choice.items() if i == 2),
    )


def transversal_from_partition(P: IFPartition) -> Transversal:
    return Transversal({**{v: 1 for v in P.I}, **{v: 2 for v in P.F}})


def validate_partition(G, P: IFPartition) -> bool:
    adj = adjacency_of(G)
    I, F = set(P.I), set(P.F)
    if I & F or I | F != set(adj):
        return False
    if any(w in I for v in I for w in adj[v]):
        return False
    parent = {v: v for v in F}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for v in F:
        for w in adj[v]:
            if w in F and v < w:
                a, b = find(v), find(w)
                if a == b:
                    return False
                parent[a] = b
    return True


def partition_IF(
    G: PlaneGraph,
    spec: CycleSpec = DEFAULT_SPEC,
    *,
    check_class: bool = True,
    order: tuple[str, ...] = DEFAULT_ORDER,
    stats: dict | None = None,
) -> IFPartition:
    """Partition ``V(G)`` into an independent set and a forest.

    Levels are decided in reverse reduction order: a 2^- vertex takes the
    first level with spare budget (one always exists since its degree is
    below 1 + 2), and a configuration is extended by backtracking against
    residual budgets; B is tried along its fixed vertex order first.
    """
    if check_class:
        verdict = in_class(G, spec)
        if not verdict:
            raise NotInClass("graph is not in the class", verdict.witness)
    try:
        schedule = reduction_schedule(G, order)
    except LocalStructureNotFound as exc:
        raise PartitionFailed(str(exc)) from exc
    H = special_valued_cover(G)
    decided: dict[int, int] = {}
    counts: dict[str, int] = {}
    for red in reversed(schedule):
        if red.kind == "low":
            (v,) = red.vertices
            level = choose_level(H, decided, v)
            if level is None:
                raise PartitionFailed(f"no level with spare budget at vertex {v}")
            decided[v] = level
            continue
        block = list(red.vertices)
        how = "search"
        ext = None
        if red.match is not None and red.match.kind == "B":
            ext = _extend(H, decided, [red.match.roles[r] for r in B_WW_ORDER])
            how = "ordered"
        if ext is None:
            ext = _extend(H, decided, block)
            how = "search"
        if ext is None:
            raise PartitionFailed(f"configuration {red.kind} could not be extended")
        counts[f"{red.kind}:{how}"] = counts.get(f"{red.kind}:{how}", 0) + 1
        decided.update(ext)
    if stats is not None:
        stats.update(counts)
    P = partition_from_transversal(Transversal(decided))
    if not validate_partition(G, P):
        raise PartitionFailed("constructed partition failed validation")
    return P
