"""Short cycles, chords, normal adjacency and the forbidden-cycle classes."""

from __future__ import annotations

from collections import defaultdict, deque
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field

from .plane_graph import PlaneGraph, cycle_edges, edge_key, intersection_is_k2

MIN_LENGTH, MAX_LENGTH = 3, 12


@dataclass(frozen=True)
class CycleSpec:
    """Which cycle structures a graph class forbids."""

    forbidden_lengths: frozenset[int] = field(default_factory=lambda: frozenset({4, 7, 9}))
    forbid_5_normally_adjacent_3: bool = True

    def __post_init__(self):
        object.__setattr__(self, "forbidden_lengths", frozenset(self.forbidden_lengths))
        bad = [k for k in self.forbidden_lengths if not MIN_LENGTH <= k <= MAX_LENGTH]
        if bad:
            raise ValueError(f"forbidden lengths must lie in 3..12, got {sorted(bad)}")
        if not self.forbidden_lengths and not self.forbid_5_normally_adjacent_3:
            raise ValueError("a CycleSpec needs at least one active constraint")


DEFAULT_SPEC = CycleSpec()
NO_4679_SPEC = CycleSpec(frozenset({4, 6, 7, 9}), False)


@dataclass(frozen=True)
class ClassVerdict:
    in_class: bool
    witness: dict | None = None

    def __bool__(self) -> bool:
        return self.in_class


def _bfs_dist(adj, source: int, limit: int) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        if dist[v] >= limit:
            continue
        for w in adj[v]:
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def iter_cycles(G: PlaneGraph, length: int) -> Iterator[tuple[int, ...]]:
    """Yield each simple cycle of the given length once.

    A cycle is reported starting at its smallest vertex, oriented so that
    the second vertex is smaller than the last.
    """
    if not MIN_LENGTH <= length <= MAX_LENGTH:
        raise ValueError(f"cycle length must lie in {MIN_LENGTH}..{MAX_LENGTH}")
    adj = [sorted(a) for a in G.adjacency]
    for s in range(G.n):
        if len(adj[s]) < 2:
            continue
        dist = _bfs_dist(adj, s, length // 2 + 1)
        path = [s]
        on_path = {s}
        iters = [iter(adj[s])]
        while iters:
            advanced = False
            for w in iters[-1]:
                if w <= s or w in on_path:
                    continue
                if len(path) == length - 1:
                    if s in G.adjacency[w] and path[1] < w:
                        yield (*path, w)
                    continue
                if dist.get(w, length) > length - len(path):
                    continue
                path.append(w)
                on_path.add(w)
                iters.append(iter(adj[w]))
                advanced = True
                break
            if not advanced:
                iters.pop()
                on_path.discard(path.pop())


def enumerate_cycles(G: PlaneGraph, length: int) -> list[tuple[int, ...]]:
    return list(iter_cycles(G, length))


def has_chord(G: PlaneGraph, cycle: Sequence[int]) -> bool:
    k = len(cycle)
    index = {v: i for i, v in enumerate(cycle)}
    for i, v in enumerate(cycle):
        for w in G.adjacency[v]:
            j = index.get(w)
            if j is not None and j > i and (j - i) % k not in (1, k - 1):
                return True
    return False


def cycles_normally_adjacent(c1: Sequence[int], c2: Sequence[int]) -> bool:
    return intersection_is_k2(c1, c2)


def find_normally_adjacent_pair(
    G: PlaneGraph, short: int = 3, long: int = 5
) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """First (long-cycle, short-cycle) pair meeting in exactly one edge."""
    by_edge = defaultdict(list)
    for c in iter_cycles(G, long):
        for e in cycle_edges(c):
            by_edge[e].append(c)
    if not by_edge:
        return None
    for t in iter_cycles(G, short):
        for i in range(short):
            e = edge_key(t[i], t[(i + 1) % short])
            for c in by_edge.get(e, ()):
                if intersection_is_k2(c, t):
                    return c, t
    return None


def in_class(G: PlaneGraph, spec: CycleSpec = DEFAULT_SPEC) -> ClassVerdict:
    """Decide membership; a failing verdict carries one violating structure."""
    for length in sorted(spec.forbidden_lengths):
        for c in iter_cycles(G, length):
            return ClassVerdict(False, {"kind": "cycle", "length": length, "cycle": list(c)})
    if spec.forbid_5_normally_adjacent_3:
        pair = find_normally_adjacent_pair(G)
        if pair is not None:
            five, three = pair
            return ClassVerdict(
                False,
                {"kind": "normally_adjacent", "five_cycle": list(five), "three_cycle": list(three)},
            )
    return ClassVerdict(True, None)
