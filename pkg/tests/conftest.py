import math

import pytest

from planeif import corpus
from planeif.plane_graph import from_coordinates


@pytest.fixture(scope="session")
def corpus_items():
    return corpus.build_corpus()


@pytest.fixture(scope="session")
def class_members(corpus_items):
    return [it for it in corpus_items if it.in_class]


@pytest.fixture(scope="session")
def hosts():
    return {name: corpus.load_host(name) for name in corpus.HOST_NAMES}


def ring(k, center=(0.0, 0.0), radius=1.0, start=90.0, step=None):
    """Points of a regular k-gon, listed clockwise from ``start`` degrees."""
    step = 360.0 / k if step is None else step
    cx, cy = center
    return [(cx + radius * math.cos(math.radians(start - i * step)),
             cy + radius * math.sin(math.radians(start - i * step))) for i in range(k)]


def radial_leaf(pos, center, v, scale=1.3):
    x, y = pos[v]
    cx, cy = center
    return (cx + (x - cx) * scale, cy + (y - cy) * scale)


def gadget_a(apex_extra=False):
    """Outer 10-cycle of 3-vertices with a 3-face on edge 0-1 pointing inwards."""
    pos = dict(enumerate(ring(10)))
    edges = [(i, (i + 1) % 10) for i in range(10)]
    mid = math.radians(90 - 18)
    pos[10] = (0.6 * math.cos(mid), 0.6 * math.sin(mid))  # apex
    pos[11] = (0.0, 0.0)  # hub
    edges += [(0, 10), (1, 10), (10, 11)] + [(i, 11) for i in range(2, 10)]
    if apex_extra:
        pos[12] = (0.62, 0.55)
        edges.append((10, 12))
    return from_coordinates(pos, edges)


def gadget_c(raise_vertex=False):
    """Outer 8-cycle of 3-vertices with an inner 5-face on edge 0-1."""
    pos = dict(enumerate(ring(8)))
    edges = [(i, (i + 1) % 8) for i in range(8)]
    a0, a1 = math.radians(90), math.radians(90 - 45)
    pods = [a1 - 0.1, (a0 + a1) / 2, a0 + 0.1]
    for k, ang in enumerate(pods):
        pos[8 + k] = (0.6 * math.cos(ang), 0.6 * math.sin(ang))
    pos[11] = (0.0, 0.0)
    edges += [(1, 8), (8, 9), (9, 10), (10, 0)] + [(8 + k, 11) for k in range(3)]
    edges += [(i, 11) for i in range(2, 8)]
    if raise_vertex:
        pos[12] = (0.55 * pos[3][0] + 0.3 * pos[4][0], 0.55 * pos[3][1] + 0.3 * pos[4][1])
        edges.append((3, 12))
    return from_coordinates(pos, edges)


def gadget_literal_b():
    """Two face-bounding 10-cycles joined by x3-y3 and x10-y10, degrees padded by leaves."""
    cx, cy = (-2.0, 0.0), (2.0, 0.0)
    # X clockwise: x3, x2, x1, x10, x9, ..., x4
    xs = ["x3", "x2", "x1", "x10", "x9", "x8", "x7", "x6", "x5", "x4"]
    xang = [30, 10, -10, -30, -70, -110, -150, -190, -230, -270]
    # Y counter-clockwise around its left side: y3, a, b, y10, then the rest
    ys = ["y3", "a", "b", "y10", "y9", "y8", "y7", "y6", "y5", "y4"]
    yang = [150, 170, 190, 210, 250, 290, 330, 370, 410, 460]
    names = xs + ys
    idx = {r: i for i, r in enumerate(names)}
    pos = {}
    for r, a in zip(xs, xang):
        pos[idx[r]] = (cx[0] + math.cos(math.radians(a)), math.sin(math.radians(a)))
    for r, a in zip(ys, yang):
        pos[idx[r]] = (cy[0] + math.cos(math.radians(a)), math.sin(math.radians(a)))
    edges = [(idx[xs[i]], idx[xs[(i + 1) % 10]]) for i in range(10)]
    edges += [(idx[ys[i]], idx[ys[(i + 1) % 10]]) for i in range(10)]
    edges += [(idx["x3"], idx["y3"]), (idx["x10"], idx["y10"])]
    need = {r: 1 for r in names if r not in ("x3", "x10")}
    nid = len(names)
    for r, k in need.items():
        v = idx[r]
        center = cx if r.startswith("x") else cy
        for _ in range(k):
            pos[nid] = radial_leaf(pos, center, v)
            edges.append((v, nid))
            nid += 1
    return from_coordinates(pos, edges), idx
