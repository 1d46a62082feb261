"""Reference plane graphs: the tight family, named solids, random graphs."""

from __future__ import annotations

import itertools
import math
import random
import re

import numpy as np

from .embedding import EmbeddingError, PlaneGraph, build_from_rotation

NAMED_KINDS = ("tetrahedron", "cube", "octahedron", "dodecahedron",
               "icosahedron", "cycle", "wheel")


def _clockwise(center, nbrs, coords, normal=None) -> list[int]:
    """Order ``nbrs`` clockwise around ``center`` seen from outside."""
    c = np.asarray(coords[center], dtype=float)
    if normal is None:
        angles = [math.atan2(coords[w][1] - c[1], coords[w][0] - c[0]) for w in nbrs]
    else:
        nrm = np.asarray(normal, dtype=float)
        nrm = nrm / np.linalg.norm(nrm)
        ref = np.asarray(coords[nbrs[0]], dtype=float) - c
        e1 = ref - ref.dot(nrm) * nrm
        e1 /= np.linalg.norm(e1)
        e2 = np.cross(nrm, e1)
        angles = []
        for w in nbrs:
            x = np.asarray(coords[w], dtype=float) - c
            angles.append(math.atan2(x.dot(e2), x.dot(e1)))
    order = sorted(range(len(nbrs)), key=lambda i: -angles[i])
    return [nbrs[i] for i in order]


def _polyhedron(points) -> PlaneGraph:
    """Plane graph of a convex polyhedron whose edges are the shortest chords."""
    pts = np.asarray(points, dtype=float)
    pts = pts - pts.mean(axis=0)
    dist = np.linalg.norm(pts[:, None, :] - pts[None, :, :], axis=-1)
    np.fill_diagonal(dist, np.inf)
    edge_len = dist.min()
    n = len(pts)
    coords = {i + 1: pts[i] for i in range(n)}
    adj = {}
    for i in range(n):
        nbrs = [j + 1 for j in range(n) if abs(dist[i, j] - edge_len) < 1e-6]
        adj[i + 1] = _clockwise(i + 1, nbrs, coords, normal=pts[i])
    return build_from_rotation(adj)


def cycle(n: int) -> PlaneGraph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return build_from_rotation({i: [i % n + 1, (i - 2) % n + 1] for i in range(1, n + 1)})


def path(n: int) -> PlaneGraph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    adj = {i: [j for j in (i - 1, i + 1) if 1 <= j <= n] for i in range(1, n + 1)}
    return build_from_rotation(adj)


def wheel(n: int) -> PlaneGraph:
    """Wheel W_n: hub 1 joined to the rim cycle 2..n+1."""
    if n < 3:
        raise ValueError("wheel needs n >= 3")
    coords = {1: (0.0, 0.0)}
    for i in range(n):
        a = 2 * math.pi * i / n
        coords[i + 2] = (math.cos(a), math.sin(a))
    adj = {1: _clockwise(1, list(range(2, n + 2)), coords)}
    for i in range(n):
        v = i + 2
        nbrs = [1, (i + 1) % n + 2, (i - 1) % n + 2]
        adj[v] = _clockwise(v, nbrs, coords)
    return build_from_rotation(adj)


def _platonic(kind: str) -> PlaneGraph:
    phi = (1 + 5 ** 0.5) / 2
    if kind == "tetrahedron":
        pts = [(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)]
    elif kind == "cube":
        pts = list(itertools.product((-1, 1), repeat=3))
    elif kind == "octahedron":
        pts = [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)]
    elif kind == "icosahedron":
        pts = []
        for s1, s2 in itertools.product((-1, 1), repeat=2):
            pts += [(0, s1, s2 * phi), (s1, s2 * phi, 0), (s2 * phi, 0, s1)]
    elif kind == "dodecahedron":
        pts = list(itertools.product((-1, 1), repeat=3))
        for s1, s2 in itertools.product((-1, 1), repeat=2):
            pts += [(0, s1 / phi, s2 * phi), (s1 / phi, s2 * phi, 0), (s2 * phi, 0, s1 / phi)]
    else:
        raise ValueError(f"unknown solid {kind!r}")
    return _polyhedron(pts)


def named(kind: str, n: int | None = None) -> PlaneGraph:
    """Named reference graph.

    ``kind`` is one of the platonic solids, ``cycle``/``wheel`` with ``n``,
    or the compact forms ``C9`` and ``W6``.
    """
    key = kind.strip().lower()
    m = re.fullmatch(r"([cw])_?(\d+)", key)
    if m:
        key, n = ("cycle" if m.group(1) == "c" else "wheel"), int(m.group(2))
    if key == "k4":
        key = "tetrahedron"
    if key in ("cycle", "wheel"):
        if n is None:
            raise ValueError(f"{key} needs a size")
        return cycle(n) if key == "cycle" else wheel(n)
    if key in ("tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron"):
        return _platonic(key)
    raise ValueError(f"unknown graph kind {kind!r}")


def tight_example(l: int) -> PlaneGraph:
    """Plane graph on 3l+1 pairwise l-facially adjacent vertices.

    Triangle 1,2,3 with a centre vertex 4 joined to each corner by a path of
    length ``l``. The threads cut the inside of the triangle into three faces
    of size 2l+1, and the outside is a 3-face.
    """
    if l < 1:
        raise ValueError("l must be >= 1")
    corners = {1: (0.0, 1.0), 2: (math.sqrt(3) / 2, -0.5), 3: (-math.sqrt(3) / 2, -0.5)}
    coords = dict(corners)
    coords[4] = (0.0, 0.0)
    adj: dict[int, list[int]] = {1: [2, 3], 2: [1, 3], 3: [1, 2], 4: []}
    nxt = 5
    for corner, (x, y) in corners.items():
        prev = 4
        for step in range(1, l):
            coords[nxt] = (x * step / l, y * step / l)
            adj[nxt] = [prev]
            adj[prev].append(nxt)
            prev = nxt
            nxt += 1
        adj[prev].append(corner)
        adj[corner].append(prev)
    g = build_from_rotation({v: _clockwise(v, nbrs, coords) for v, nbrs in adj.items()})

    from .facial import facial_adjacency_graph

    fa = facial_adjacency_graph(g, l)
    if g.n != 3 * l + 1 or not fa.is_complete():
        raise EmbeddingError("tight construction lost pairwise facial adjacency")
    return g


def random_plane_graph(n: int, seed: int = 0, keep_prob: float = 1.0) -> PlaneGraph:
    """Random connected plane graph on ``n`` vertices.

    Grows a triangulation by inserting each new vertex into a uniformly
    chosen face, then drops each edge with probability ``1 - keep_prob``
    unless that would disconnect the graph.
    """
    if n < 3:
        raise ValueError("n must be >= 3")
    if not 0.0 <= keep_prob <= 1.0:
        raise ValueError("keep_prob must lie in [0, 1]")
    rng = random.Random(seed)
    rot: dict[int, list[int]] = {1: [2, 3], 2: [3, 1], 3: [1, 2]}
    faces = [(1, 2, 3), (1, 3, 2)]
    for x in range(4, n + 1):
        a, b, c = faces.pop(rng.randrange(len(faces)))
        # walk a->b->c: at b, c follows a; insert x right after the predecessor
        for v, before in ((b, a), (c, b), (a, c)):
            lst = rot[v]
            lst.insert(lst.index(before) + 1, x)
        rot[x] = [a, c, b]
        faces += [(a, b, x), (b, c, x), (c, a, x)]
    if keep_prob < 1.0:
        edges = sorted((u, w) for u in rot for w in rot[u] if u < w)
        for u, w in edges:
            if rng.random() < keep_prob:
                continue
            iu, iw = rot[u].index(w), rot[w].index(u)
            del rot[u][iu]
            del rot[w][iw]
            if not _connected(rot):
                rot[u].insert(iu, w)
                rot[w].insert(iw, u)
    return build_from_rotation(rot)


def _connected(rot: dict[int, list[int]]) -> bool:
    seen = {1}
    stack = [1]
    while stack:
        v = stack.pop()
        for w in rot[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(rot)
