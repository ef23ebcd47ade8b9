"""Exact discharging audit: charges, tags, rules R1 to R5 and the lemma suite.

Vertex-face incidences are corners (outgoing darts), so a face met twice
at a vertex counts twice.  Corner ``i`` at ``v`` is the face of dart
``(v, rot(v)[i])``; corners ``i - 1`` and ``i + 1`` are the faces across
the two edges of corner ``i``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .configurations import BadFaceRecord, find_any_config, find_bad_faces
from .cycles import DEFAULT_SPEC, CycleSpec, has_chord, in_class, iter_cycles
from .errors import EulerMismatch, PreconditionViolated
from .plane_graph import PlaneGraph, decompose_boundary, faces_normally_adjacent

Element = tuple[str, int]  # ("v", vertex) or ("f", face id)

R2_TABLE = {
    # tag, light 5-faces among the incident 5-faces -> (to each light, to each non-light, from each 8+)
    ("worse", 1): (Fraction(1, 3), None, Fraction(1, 6)),
    ("worse", 0): (None, Fraction(1, 8), Fraction(1, 16)),
    ("worst", 2): (Fraction(1, 6), None, Fraction(1, 3)),
    ("worst", 0): (None, Fraction(1, 8), Fraction(1, 4)),
    ("worst", 1): (Fraction(1, 6), Fraction(1, 8), Fraction(1, 3)),
}
R2_RULE = {("worse", 1): "R2b", ("worse", 0): "R2c", ("worst", 2): "R2d",
           ("worst", 0): "R2e", ("worst", 1): "R2f"}


@dataclass(frozen=True)
class Transfer:
    source: Element
    sink: Element
    amount: Fraction
    rule: str

    def to_dict(self) -> dict:
        return {"from": list(self.source), "to": list(self.sink), "amount": str(self.amount),
                "rule": self.rule}


@dataclass
class ChargeLedger:
    mu: dict[Element, Fraction]
    mu_star: dict[Element, Fraction] = field(default_factory=dict)
    mu_prime: dict[Element, Fraction] = field(default_factory=dict)
    transfers: list[Transfer] = field(default_factory=list)

    @property
    def charge(self) -> dict[Element, Fraction]:
        return self.mu_prime or self.mu_star or self.mu

    def totals(self) -> dict[str, Fraction]:
        out = {"mu": sum(self.mu.values(), Fraction(0))}
        if self.mu_star:
            out["mu_star"] = sum(self.mu_star.values(), Fraction(0))
        if self.mu_prime:
            out["mu_prime"] = sum(self.mu_prime.values(), Fraction(0))
        return out

    def conserved(self) -> bool:
        return len(set(self.totals().values())) == 1

    def to_dict(self) -> dict:
        def snap(d):
            return {f"{k}{i}": str(x) for (k, i), x in sorted(d.items())}

        return {"mu": snap(self.mu), "mu_star": snap(self.mu_star), "mu_prime": snap(self.mu_prime),
                "totals": {k: str(v) for k, v in self.totals().items()},
                "transfers": [t.to_dict() for t in self.transfers]}


@dataclass(frozen=True)
class Classification:
    vertex_tags: dict[int, str]  # 3-vertices only: bad, worse, worst or none
    face_tags: dict[int, str]  # light5, bad10, good or none
    bad_faces: tuple[BadFaceRecord, ...]

    def good_pairs(self, g: int) -> list[BadFaceRecord]:
        return [r for r in self.bad_faces if r.good_face == g]


def initial_charges(G: PlaneGraph) -> ChargeLedger:
    mu: dict[Element, Fraction] = {("v", v): Fraction(2 * G.degree(v) - 6) for v in range(G.n)}
    mu.update({("f", f.id): Fraction(f.size - 6) for f in G.faces})
    expected = -12 * len(G.components())
    total = sum(mu.values(), Fraction(0))
    if total != expected:
        raise EulerMismatch(f"initial charges sum to {total}, expected {expected}")
    return ChargeLedger(mu)


def _sizes(G: PlaneGraph, v: int) -> list[int]:
    return [G.faces[f].size for f in G.incident_faces(v)] if G.degree(v) else []


def classify(G: PlaneGraph) -> Classification:
    light = {f.id for f in G.faces if f.size == 5 and all(G.degree(v) == 3 for v in f.vertices)}
    tags = {}
    for v in range(G.n):
        if G.degree(v) != 3:
            continue
        sizes = _sizes(G, v)
        fives = sizes.count(5)
        if 3 in sizes:
            tags[v] = "bad"
        elif fives == 2:
            tags[v] = "worst"
        elif fives == 1:
            tags[v] = "worse"
        else:
            tags[v] = "none"
    bad = tuple(find_bad_faces(G))
    bad_ids = {r.face for r in bad}
    good_ids = {r.good_face for r in bad}
    ftags = {}
    for f in G.faces:
        if f.id in light:
            ftags[f.id] = "light5"
        elif f.id in bad_ids:
            ftags[f.id] = "bad10"
        elif f.id in good_ids:
            ftags[f.id] = "good"
        else:
            ftags[f.id] = "none"
    return Classification(tags, ftags, bad)


def _check_regime(G: PlaneGraph, spec: CycleSpec) -> None:
    if G.min_degree < 3:
        raise PreconditionViolated(f"minimum degree is {G.min_degree}, the rules need at least 3")
    verdict = in_class(G, spec)
    if not verdict:
        raise PreconditionViolated(f"graph is not in the class: {verdict.witness}")


def apply_rules(G: PlaneGraph, spec: CycleSpec = DEFAULT_SPEC, *, strict: bool = True) -> ChargeLedger:
    """Run R1 to R4, snapshot, then R5.  ``strict=False`` skips the
    minimum-degree and class checks so conservation can be audited on any
    plane graph."""
    if strict:
        _check_regime(G, spec)
    ledger = initial_charges(G)
    cls = classify(G)
    moves: list[Transfer] = []

    def send(src: Element, dst: Element, amount: Fraction, rule: str):
        moves.append(Transfer(src, dst, amount, rule))

    for v in range(G.n):
        d = G.degree(v)
        if d == 0:
            continue
        corners = G.incident_faces(v)
        sizes = [G.faces[f].size for f in corners]
        me = ("v", v)
        for f, s in zip(corners, sizes):
            if s == 3:
                send(me, ("f", f), Fraction(1), "R1")
        if d == 3:
            tag = cls.vertex_tags[v]
            if tag == "bad":
                for f, s in zip(corners, sizes):
                    if s >= 10:
                        send(("f", f), me, Fraction(1, 2), "R2a")
            elif tag in ("worse", "worst"):
                fives = [f for f, s in zip(corners, sizes) if s == 5]
                n_light = sum(cls.face_tags[f] == "light5" for f in fives)
                to_light, to_other, receive = R2_TABLE[(tag, n_light)]
                rule = R2_RULE[(tag, n_light)]
                for f in fives:
                    amount = to_light if cls.face_tags[f] == "light5" else to_other
                    send(me, ("f", f), amount, rule)
                for f, s in zip(corners, sizes):
                    if s >= 8:
                        send(("f", f), me, receive, rule)
        elif d == 4:
            n3, n5 = sizes.count(3), sizes.count(5)
            if n3 == 1 and n5 == 1:
                send(me, ("f", corners[sizes.index(5)]), Fraction(1), "R3a")
            elif n3 == 1 and n5 == 0:
                i = sizes.index(3)
                for j in (i - 1, (i + 1) % 4):
                    send(me, ("f", corners[j]), Fraction(1, 2), "R3b")
            elif all(s >= 5 for s in sizes):
                for f in corners:
                    send(me, ("f", f), Fraction(1, 2), "R3c")
        elif d >= 5:
            for f, s in zip(corners, sizes):
                if s >= 5:
                    send(me, ("f", f), Fraction(2, 3), "R4")

    charge = dict(ledger.mu)
    for t in moves:
        charge[t.source] -= t.amount
        charge[t.sink] += t.amount
    ledger.mu_star = dict(charge)

    r5: list[Transfer] = []
    for g in sorted({r.good_face for r in cls.bad_faces}):
        pairs = cls.good_pairs(g)
        avail = ledger.mu_star[("f", g)]
        if avail <= 0:
            continue
        share = avail / len(pairs)
        for r in pairs:
            r5.append(Transfer(("f", g), ("f", r.face), share, "R5"))
    for t in r5:
        charge[t.source] -= t.amount
        charge[t.sink] += t.amount
    ledger.mu_prime = charge
    ledger.transfers = moves + r5
    return ledger


def audit(G: PlaneGraph, spec: CycleSpec = DEFAULT_SPEC, *, strict: bool = True) -> dict:
    ledger = apply_rules(G, spec, strict=strict)
    totals = ledger.totals()
    negatives = sorted(k for k, x in ledger.mu_prime.items() if x < 0)
    config = find_any_config(G)
    return {
        "totals": {k: str(v) for k, v in totals.items()},
        "conserved": ledger.conserved(),
        "expected_total": str(-12 * len(G.components())),
        "negatives": [f"{k}{i}" for k, i in negatives],
        "has_configuration": config is not None,
        "configuration": None if config is None else config.to_dict(),
        "rule_counts": dict(sorted(Counter(t.rule for t in ledger.transfers).items())),
        "ledger": ledger,
    }


# ---------------------------------------------------------------------------
# Structural lemma suite


@dataclass(frozen=True)
class ItemResult:
    item: str
    passed: bool
    witnesses: tuple = ()


LEMMA_ITEMS = ("i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix", "x")


def _boundary_shape(f) -> tuple[tuple[int, ...], int]:
    dec = decompose_boundary(f)
    return dec.cycle_lengths(), len(dec.cut_edges)


def check_lemma_s(G: PlaneGraph, spec: CycleSpec = DEFAULT_SPEC, *, limit: int = 5) -> dict[str, ItemResult]:
    """All ten structural items; each failing item keeps up to ``limit`` witnesses."""
    _check_regime(G, spec)
    faces = [f for f in G.faces if f.size]
    found: dict[str, list] = {k: [] for k in LEMMA_ITEMS}

    def note(item, w):
        if len(found[item]) < limit:
            found[item].append(w)

    for item, length in (("i", 5), ("ii", 6)):
        for c in iter_cycles(G, length):
            if has_chord(G, c):
                note(item, list(c))
    allowed = {6: {((6,), 0), ((3, 3), 0)},
               8: {((8,), 0), ((3, 3), 1), ((3, 5), 0)},
               9: {((3, 6), 0), ((3, 3, 3), 0)}}
    for item, size in (("iii", 6), ("viii", 8), ("ix", 9)):
        for f in faces:
            if f.size == size and _boundary_shape(f) not in allowed[size]:
                note(item, {"face": f.id, "shape": _boundary_shape(f)})
    by_edge: dict = {}
    for f in faces:
        for e in f.edges:
            by_edge.setdefault(e, set()).add(f.id)
    pairs = {tuple(sorted(ids)) for ids in by_edge.values() if len(ids) == 2}
    for a, b in sorted(pairs):
        fa, fb = G.faces[a], G.faces[b]
        sa, sb = sorted((fa.size, fb.size))
        if (sa, sb) == (5, 6):
            note("iv", [a, b])
        if (sa, sb) == (5, 5):
            ok = fa.is_simple_cycle() and fb.is_simple_cycle() and faces_normally_adjacent(fa, fb)
            if not ok:
                note("v", [a, b])
        if sa == 3 and sb < 10:
            note("x", [a, b])
    for v in range(G.n):
        if G.degree(v) == 3 and _sizes(G, v).count(5) > 2:
            note("vi", v)
    for f in faces:
        if f.size == 7:
            note("vii", f.id)
    return {k: ItemResult(k, not found[k], tuple(found[k])) for k in LEMMA_ITEMS}


@dataclass(frozen=True)
class RuleCheck:
    record: BadFaceRecord
    apex_degrees: tuple[int, int]
    transfer: Fraction
    required: Fraction
    mu_star_good: Fraction
    pairs_at_good: int

    @property
    def ok(self) -> bool:
        return self.transfer >= self.required


def check_lemma_rule(G: PlaneGraph, spec: CycleSpec = DEFAULT_SPEC, ledger: ChargeLedger | None = None) -> list[RuleCheck]:
    """R5 share received through each (bad face, good edge) pair."""
    ledger = ledger or apply_rules(G, spec)
    cls = classify(G)
    out = []
    for r in cls.bad_faces:
        degs = (G.degree(r.u1), G.degree(r.u3))
        required = Fraction(1, 4) if max(degs) == 4 else Fraction(1, 2)
        avail = ledger.mu_star[("f", r.good_face)]
        t = len(cls.good_pairs(r.good_face))
        share = avail / t if avail > 0 else Fraction(0)
        out.append(RuleCheck(r, degs, share, required, avail, t))
    return out
