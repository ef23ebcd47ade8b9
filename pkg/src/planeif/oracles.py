"""Brute-force ground truth for small inputs.

Nothing here reuses the search code it is meant to check: each oracle works
from the bare adjacency and the definitions, and refuses inputs above its
size bound instead of falling back to something cleverer.
"""

from __future__ import annotations

from collections.abc import Mapping
from functools import lru_cache
from itertools import combinations

import numpy as np

from .cover import IFPartition, Transversal, ValuedCover
from .errors import SizeBound
from .plane_graph import PlaneGraph

IF_BOUND = 16
WD_BOUND = 12
CYCLE_BOUND = 12
SFDT_BOUND = 2**20


def _adj(G) -> dict[int, frozenset[int]]:
    if isinstance(G, PlaneGraph):
        return {v: frozenset(G.rotation[v]) for v in range(G.n)}
    if isinstance(G, Mapping):
        return {v: frozenset(ns) for v, ns in G.items()}
    return {v: frozenset(G.adj[v]) for v in G.nodes}


def _masks(adj) -> tuple[list[int], list[int]]:
    verts = sorted(adj)
    idx = {v: i for i, v in enumerate(verts)}
    return verts, [sum(1 << idx[w] for w in adj[v]) for v in verts]


def _is_forest(nb: list[int], mask: int) -> bool:
    """Induced subgraph on ``mask`` is acyclic iff edges = vertices - components."""
    seen = 0
    edges = 0
    comps = 0
    for i in range(len(nb)):
        if mask >> i & 1:
            edges += bin(nb[i] & mask).count("1")
            if not seen >> i & 1:
                comps += 1
                stack = [i]
                seen |= 1 << i
                while stack:
                    x = stack.pop()
                    rest = nb[x] & mask & ~seen
                    while rest:
                        low = rest & -rest
                        seen |= low
                        stack.append(low.bit_length() - 1)
                        rest ^= low
    return edges // 2 == bin(mask).count("1") - comps


def oracle_if_partition(G) -> IFPartition | None:
    """Try every independent set ``I`` and test whether the rest is a forest."""
    adj = _adj(G)
    n = len(adj)
    if n > IF_BOUND:
        raise SizeBound(f"oracle_if_partition is limited to {IF_BOUND} vertices")
    verts, nb = _masks(adj)
    full = (1 << n) - 1
    for I in range(1 << n):
        if any(I >> i & 1 and nb[i] & I for i in range(n)):
            continue
        if _is_forest(nb, full & ~I):
            return IFPartition(
                frozenset(verts[i] for i in range(n) if I >> i & 1),
                frozenset(verts[i] for i in range(n) if not I >> i & 1),
            )
    return None


def oracle_wd(G, d: int) -> bool:
    """Full game tree with memoisation on (remaining set, budgets)."""
    adj = _adj(G)
    n = len(adj)
    if n > WD_BOUND:
        raise SizeBound(f"oracle_wd is limited to {WD_BOUND} vertices")
    verts, nb = _masks(adj)

    @lru_cache(maxsize=None)
    def win(alive: int, f: tuple[int, ...]) -> bool:
        if not alive:
            return True
        for u in range(n):
            if not alive >> u & 1:
                continue
            ns = [x for x in range(n) if nb[u] >> x & 1 and alive >> x & 1]
            for w in [None] + ns:
                if w is not None and not f[u] > f[w]:
                    continue
                g = list(f)
                for x in ns:
                    if x != w:
                        g[x] -= 1
                if any(g[x] < 0 for x in ns):
                    continue
                g[u] = 0
                if win(alive & ~(1 << u), tuple(g)):
                    return True
        return False

    return win((1 << n) - 1, tuple([d] * n))


def oracle_wd_value(G) -> int:
    d = 0
    while not oracle_wd(G, d):
        d += 1
    return d


def oracle_cycles(G, length: int) -> int:
    """Count cycles of ``length`` as Hamiltonian cycles of induced subgraphs."""
    adj = _adj(G)
    n = len(adj)
    if n > CYCLE_BOUND:
        raise SizeBound(f"oracle_cycles is limited to {CYCLE_BOUND} vertices")
    if length < 3:
        return 0
    verts, nb = _masks(adj)
    total = 0
    for subset in combinations(range(n), length):
        start = subset[0]
        bits = sum(1 << i for i in subset)
        # paths from start, keyed by (visited, end)
        ways = {(1 << start, start): 1}
        for _ in range(length - 1):
            nxt: dict[tuple[int, int], int] = {}
            for (seen, end), c in ways.items():
                rest = nb[end] & bits & ~seen
                while rest:
                    low = rest & -rest
                    key = (seen | low, low.bit_length() - 1)
                    nxt[key] = nxt.get(key, 0) + c
                    rest ^= low
            ways = nxt
        total += sum(c for (_, end), c in ways.items() if nb[end] >> start & 1)
    return total // 2


def _strictly_degenerate_bruteforce(nb: np.ndarray, f: np.ndarray) -> bool:
    """No nonempty vertex subset has every member at degree >= its budget."""
    k = len(f)
    if k > 20:
        raise SizeBound("subset enumeration is limited to 20 vertices")
    if k == 0:
        return True
    S = np.arange(1 << k, dtype=np.int64)
    stuck = np.ones(1 << k, dtype=bool)
    for x in range(k):
        member = (S >> x) & 1
        deg = np.zeros(1 << k, dtype=np.int64)
        for y in range(k):
            if nb[x] >> y & 1:
                deg += (S >> y) & 1
        stuck &= (member == 0) | (deg >= f[x])
    stuck[0] = False
    return not stuck.any()


def oracle_sfdt(H: ValuedCover) -> Transversal | None:
    """Enumerate every transversal and test it against all of its subsets."""
    base = sorted(H.cover.base)
    s = H.cover.s
    if s ** len(base) > SFDT_BOUND:
        raise SizeBound(f"oracle_sfdt is limited to {SFDT_BOUND} transversals")
    adj = H.cover.adj
    for code in range(s ** len(base)):
        choice, c = {}, code
        for v in base:
            choice[v] = c % s + 1
            c //= s
        picked = [(v, choice[v]) for v in base]
        pos = {x: i for i, x in enumerate(picked)}
        nb = np.array([sum(1 << pos[y] for y in adj[x] if y in pos) for x in picked], dtype=np.int64)
        f = np.array([H.f[x] for x in picked], dtype=np.int64)
        if _strictly_degenerate_bruteforce(nb, f):
            return Transversal(choice)
    return None


def transversal_is_sfd(H: ValuedCover, T: Transversal) -> bool:
    """All-subsets check of one transversal."""
    picked = T.vertices()
    pos = {x: i for i, x in enumerate(picked)}
    adj = H.cover.adj
    nb = np.array([sum(1 << pos[y] for y in adj[x] if y in pos) for x in picked], dtype=np.int64)
    f = np.array([H.f[x] for x in picked], dtype=np.int64)
    return _strictly_degenerate_bruteforce(nb, f)
