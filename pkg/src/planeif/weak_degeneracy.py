"""The Delete / DeleteSave game, exact weak degeneracy and a constructive
weakly 2-degenerate certifier for members of the class.

Graphs may be given as a :class:`PlaneGraph`, a ``networkx`` graph or a
mapping from vertex to neighbours.  The game never needs the embedding.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from typing import Literal

import networkx as nx

from .configurations import DEFAULT_ORDER, ConfigMatch, LocalStructureNotFound, reduction_schedule
from .cycles import DEFAULT_SPEC, CycleSpec, in_class
from .errors import CertificationFailed, IllegalStep, NotAnEdge, NotInClass, SizeBound
from .plane_graph import PlaneGraph

Adjacency = dict[int, frozenset[int]]

DEFAULT_BOUND = 14
BLOCK_BOUND = 20


def adjacency_of(G) -> Adjacency:
    if isinstance(G, PlaneGraph):
        return {v: frozenset(G.adjacency[v]) for v in range(G.n)}
    if isinstance(G, nx.Graph):
        return {v: frozenset(G.adj[v]) for v in G.nodes}
    return {v: frozenset(ws) for v, ws in G.items()}


@dataclass(frozen=True)
class DeficitFn(Mapping):
    """A nonnegative integer budget per vertex."""

    values: Mapping[int, int]

    def __post_init__(self):
        vals = dict(self.values)
        neg = [v for v, x in vals.items() if x < 0]
        if neg:
            raise ValueError(f"deficits must be nonnegative, got negatives at {sorted(neg)}")
        object.__setattr__(self, "values", vals)

    @classmethod
    def constant(cls, vertices: Iterable[int], d: int) -> "DeficitFn":
        return cls({v: d for v in vertices})

    def __getitem__(self, v):
        return self.values[v]

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def check_domain(self, G) -> None:
        if set(self.values) != set(adjacency_of(G)):
            raise ValueError("deficit function must be defined on exactly V(G)")


@dataclass(frozen=True)
class EliminationStep:
    kind: Literal["Delete", "DeleteSave"]
    u: int
    w: int | None = None
    before: tuple[tuple[int, int], ...] | None = None  # optional audit snapshot

    def __post_init__(self):
        if (self.kind == "DeleteSave") != (self.w is not None):
            raise ValueError("DeleteSave needs a saved vertex and Delete must not have one")

    def to_dict(self) -> dict:
        d = {"op": self.kind, "u": self.u}
        if self.w is not None:
            d["w"] = self.w
        return d

    @classmethod
    def from_dict(cls, d: Mapping) -> "EliminationStep":
        return cls(d["op"], d["u"], d.get("w"))


def apply_delete(G, f: Mapping[int, int], u: int) -> tuple[Adjacency, dict[int, int]]:
    """Delete ``u``; every neighbour loses one unit of budget."""
    return _apply(adjacency_of(G), dict(f), u, None)


def apply_delete_save(G, f: Mapping[int, int], u: int, w: int) -> tuple[Adjacency, dict[int, int]]:
    """Delete ``u`` while sparing neighbour ``w``; needs ``f(u) > f(w)``."""
    return _apply(adjacency_of(G), dict(f), u, w)


def _apply(adj: Adjacency, f: dict[int, int], u: int, w: int | None):
    if u not in adj:
        raise IllegalStep(f"vertex {u} is not in the graph")
    if w is not None:
        if w not in adj[u]:
            raise NotAnEdge(f"{u}{w} is not an edge")
        if not f[u] > f[w]:
            raise IllegalStep(f"DeleteSave({u};{w}) needs f({u})={f[u]} > f({w})={f[w]}")
    for x in adj[u]:
        if x != w and f[x] < 1:
            raise IllegalStep(f"removing {u} would make f({x}) negative")
    new_adj = {v: ns - {u} for v, ns in adj.items() if v != u}
    new_f = {v: (x - 1 if v in adj[u] and v != w else x) for v, x in f.items() if v != u}
    return new_adj, new_f


@dataclass(frozen=True)
class EliminationCertificate:
    steps: tuple[EliminationStep, ...]
    initial: DeficitFn
    meta: dict = field(default_factory=dict, compare=False)

    def __len__(self):
        return len(self.steps)

    @property
    def saves(self) -> int:
        return sum(s.kind == "DeleteSave" for s in self.steps)

    def replay(self, G) -> bool:
        try:
            self.verify(G)
        except (IllegalStep, ValueError):
            return False
        return True

    def verify(self, G) -> None:
        """Raise ``IllegalStep`` at the first illegal step."""
        adj = adjacency_of(G)
        self.initial.check_domain(adj)
        f = dict(self.initial)
        for i, s in enumerate(self.steps):
            try:
                adj, f = _apply(adj, f, s.u, s.w)
            except IllegalStep as exc:
                raise type(exc)(f"step {i}: {exc}") from None
        if adj:
            raise IllegalStep(f"{len(adj)} vertices left after the last step")

    def to_json(self) -> list[dict]:
        return [s.to_dict() for s in self.steps]

    def to_dict(self, G=None) -> dict:
        """Serialisable form; passing ``G`` binds it to the graph digest."""
        out = {"initial": {str(v): x for v, x in sorted(self.initial.items())}, "steps": self.to_json()}
        if G is not None:
            out["graph_digest"] = G.digest
        return out

    @classmethod
    def from_dict(cls, data: Mapping, G=None) -> "EliminationCertificate":
        if G is not None and data.get("graph_digest") not in (None, G.digest):
            raise ValueError("certificate was issued for a different graph")
        initial = DeficitFn({int(v): x for v, x in data["initial"].items()})
        return cls(tuple(EliminationStep.from_dict(s) for s in data["steps"]), initial)


# ---------------------------------------------------------------------------
# Exhaustive game search


class _Game:
    """Bitmask search over (alive set, budgets, saves left) with memoised losses.

    A vertex whose budget is at least its current degree can always be
    deleted last, so such vertices are set aside before branching.
    """

    def __init__(self, adj: Adjacency, order: Sequence[int]):
        self.order = list(order)
        idx = {v: i for i, v in enumerate(self.order)}
        self.nbr = [0] * len(order)
        for v in self.order:
            for w in adj[v]:
                if w in idx:
                    self.nbr[idx[v]] |= 1 << idx[w]
        self.dead: set = set()

    def solve(self, f: list[int], max_saves: int | None):
        n = len(self.order)
        moves = self._solve((1 << n) - 1, tuple(f), max_saves)
        if moves is None:
            return None
        return [(self.order[u], None if w is None else self.order[w]) for u, w in moves]

    def _solve(self, mask, f, saves):
        nbr = self.nbr
        tail = []
        changed = True
        while changed and mask:
            changed = False
            m = mask
            while m:
                low = m & -m
                v = low.bit_length() - 1
                m ^= low
                if f[v] >= (nbr[v] & mask).bit_count():
                    mask ^= low
                    tail.append(v)
                    changed = True
        ending = [(v, None) for v in reversed(tail)]
        if not mask:
            return ending
        key = (mask, tuple(f[v] for v in _bits(mask)), saves)
        if key in self.dead:
            return None
        for u in _bits(mask):
            nb = list(_bits(nbr[u] & mask))
            sub = mask & ~(1 << u)
            if all(f[x] >= 1 for x in nb):
                g = list(f)
                for x in nb:
                    g[x] -= 1
                r = self._solve(sub, tuple(g), saves)
                if r is not None:
                    return [(u, None)] + r + ending
            if saves == 0:
                continue
            for w in nb:
                if f[u] <= f[w] or any(f[x] < 1 for x in nb if x != w):
                    continue
                g = list(f)
                for x in nb:
                    if x != w:
                        g[x] -= 1
                r = self._solve(sub, tuple(g), None if saves is None else saves - 1)
                if r is not None:
                    return [(u, w)] + r + ending
        self.dead.add(key)
        return None


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def is_weakly_f_degenerate(
    G, f: Mapping[int, int], *, bound: int = DEFAULT_BOUND, max_saves: int | None = None
) -> EliminationCertificate | None:
    """Exhaustively decide the game; return a winning certificate or ``None``."""
    adj = adjacency_of(G)
    if len(adj) > bound:
        raise SizeBound(f"exhaustive search is limited to {bound} vertices, got {len(adj)}")
    fn = f if isinstance(f, DeficitFn) else DeficitFn(f)
    fn.check_domain(adj)
    order = sorted(adj)
    moves = _Game(adj, order).solve([fn[v] for v in order], max_saves)
    if moves is None:
        return None
    steps = tuple(EliminationStep("Delete" if w is None else "DeleteSave", u, w) for u, w in moves)
    return EliminationCertificate(steps, fn)


def weak_degeneracy(G, *, bound: int = DEFAULT_BOUND) -> int:
    adj = adjacency_of(G)
    if len(adj) > bound:
        raise SizeBound(f"exact weak degeneracy is limited to {bound} vertices, got {len(adj)}")
    d = 0
    while is_weakly_f_degenerate(adj, DeficitFn.constant(adj, d), bound=bound) is None:
        d += 1
    return d


def degeneracy(G) -> int:
    """Largest minimum degree met while repeatedly removing a min-degree vertex."""
    adj = adjacency_of(G)
    deg = {v: len(ns) for v, ns in adj.items()}
    alive = set(adj)
    best = 0
    while alive:
        v = min(alive, key=lambda x: (deg[x], x))
        best = max(best, deg[v])
        alive.remove(v)
        for w in adj[v]:
            if w in alive:
                deg[w] -= 1
    return best


def gdp_tree_check(H) -> bool:
    """True iff ``H`` is connected and every block is a cycle or complete."""
    g = nx.Graph()
    adj = adjacency_of(H)
    g.add_nodes_from(adj)
    g.add_edges_from((v, w) for v, ns in adj.items() for w in ns)
    if g.number_of_nodes() == 0 or not nx.is_connected(g):
        return False
    for block in nx.biconnected_components(g):
        b = g.subgraph(block)
        k, m = b.number_of_nodes(), b.number_of_edges()
        complete = m == k * (k - 1) // 2
        cycle = k >= 3 and m == k and all(d == 2 for _, d in b.degree)
        if not (complete or cycle):
            return False
    return True


def validate_ww_order(G, K: Sequence[int], k: int) -> bool:
    """Check the three ordering conditions for an induced subgraph ``K``.

    (i)   ``v1`` has fewer neighbours outside ``K`` than ``vm``;
    (ii)  ``d_G(vm) <= k`` and ``v1 vm`` is an edge;
    (iii) each inner ``vi`` has at most ``k - 1`` neighbours among
          ``V(G)`` minus the later vertices of the order.
    """
    adj = adjacency_of(G)
    if len(K) < 2 or len(set(K)) != len(K) or any(v not in adj for v in K):
        return False
    inside = set(K)
    ext = {v: len(adj[v] - inside) for v in K}
    v1, vm = K[0], K[-1]
    if not k - ext[v1] > k - ext[vm]:
        return False
    if len(adj[vm]) > k or vm not in adj[v1]:
        return False
    later = set()
    for i in range(len(K) - 1, 0, -1):
        v = K[i]
        if i < len(K) - 1 and len(adj[v] - later) > k - 1:
            return False
        later.add(v)
    return True


# ---------------------------------------------------------------------------
# Constructive certificate for class members

B_WW_ORDER = ("x3", "y3", "y4", "y5", "y6", "y7", "y8", "y9", "y10",
              "x2", "x1", "x10", "x9", "x8", "x7", "x6", "x5", "x4")
B_DELETE_ORDER = B_WW_ORDER[1:]


def b_block_plan(match: ConfigMatch) -> list[tuple[int, int | None]]:
    """DeleteSave x3 sparing x4, then Delete the rest in the fixed order."""
    r = match.roles
    return [(r["x3"], r["x4"])] + [(r[name], None) for name in B_DELETE_ORDER]


def _simulate(adj: Adjacency, f: dict[int, int], plan, alive: set[int]) -> bool:
    """Replay ``plan`` inside ``alive`` on a scratch copy of ``f``."""
    f = dict(f)
    alive = set(alive)
    for u, w in plan:
        if u not in alive:
            return False
        if w is not None and (w not in adj[u] or w not in alive or f[u] <= f[w]):
            return False
        for x in adj[u]:
            if x in alive and x != w:
                if f[x] < 1:
                    return False
                f[x] -= 1
        alive.discard(u)
    return True


def _block_plan(adj: Adjacency, block: Sequence[int], f: dict[int, int], match, max_saves):
    if match is not None and match.kind == "B":
        plan = b_block_plan(match)
        if _simulate(adj, f, plan, set(block)):
            return plan, "fixed-order"
    if len(block) > BLOCK_BOUND:
        raise CertificationFailed(f"block of {len(block)} vertices exceeds the search cap")
    sub = {v: adj[v] & set(block) for v in block}
    for saves in (max_saves, None):
        moves = _Game(sub, sorted(block)).solve([f[v] for v in sorted(block)], saves)
        if moves is not None:
            return moves, "search" if saves is not None else "search-unbounded"
    return None, None


def certify_weakly_2_degenerate(
    G: PlaneGraph,
    spec: CycleSpec = DEFAULT_SPEC,
    *,
    check_class: bool = True,
    max_saves: int = 1,
    order: tuple[str, ...] = DEFAULT_ORDER,
) -> EliminationCertificate:
    """Build a replay-valid certificate for the constant budget 2.

    Vertices are removed in a reduction schedule (2^- vertices and whole
    configurations).  Each removed block gets a local plan against its
    residual budgets ``2 - #(neighbours still present when it was removed)``,
    and the certificate plays the blocks in reverse removal order.  Actual
    budgets can only exceed the residual ones; a planned DeleteSave whose
    strict inequality then fails is played as a Delete, which keeps every
    later step legal.
    """
    if check_class:
        verdict = in_class(G, spec)
        if not verdict:
            raise NotInClass("graph is not in the class", verdict.witness)
    adj = adjacency_of(G)
    try:
        schedule = reduction_schedule(G, order)
    except LocalStructureNotFound as exc:
        raise CertificationFailed(str(exc)) from exc
    plans = []
    strategies: dict[str, int] = {}
    for red in schedule:
        if red.kind == "low":
            plans.append([(red.vertices[0], None)])
            continue
        residual = {v: 2 - len(red.outside_neighbors(G, v)) for v in red.vertices}
        if min(residual.values()) < 0:
            raise CertificationFailed(f"negative residual budget in a {red.kind} block")
        plan, how = _block_plan(adj, red.vertices, residual, red.match, max_saves)
        if plan is None:
            raise CertificationFailed(f"no local plan for configuration {red.kind}")
        strategies[f"{red.kind}:{how}"] = strategies.get(f"{red.kind}:{how}", 0) + 1
        plans.append(plan)

    f = {v: 2 for v in adj}
    alive = set(adj)
    steps = []
    for plan in reversed(plans):
        for u, w in plan:
            if w is not None and not (w in alive and f[u] > f[w]):
                w = None
            for x in adj[u]:
                if x in alive and x != w:
                    f[x] -= 1
                    if f[x] < 0:
                        raise CertificationFailed(f"budget of {x} went negative")
            alive.discard(u)
            steps.append(EliminationStep("Delete" if w is None else "DeleteSave", u, w))
    cert = EliminationCertificate(
        tuple(steps), DeficitFn.constant(adj, 2),
        {"reductions": [r.kind for r in schedule if r.kind != "low"], "strategies": strategies},
    )
    try:
        cert.verify(adj)
    except IllegalStep as exc:
        raise CertificationFailed(f"certificate does not replay: {exc}") from exc
    return cert
