"""l-facial adjacency on plane graphs.

Two distinct vertices are l-facially adjacent when some face boundary walk
joins them in at most ``l`` steps. Walks are taken literally along the
boundary sequence, so a vertex met twice on one face is never adjacent to
itself.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .embedding import PlaneGraph, incident_faces


@dataclass(frozen=True)
class FacialAdjacency:
    l: int
    n: int
    neighbors: dict[int, frozenset[int]]

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def adjacent(self, u: int, v: int) -> bool:
        return v in self.neighbors[u]

    def edges(self) -> list[tuple[int, int]]:
        return sorted((u, w) for u, nb in self.neighbors.items() for w in nb if u < w)

    def is_complete(self) -> bool:
        return all(len(nb) == self.n - 1 for nb in self.neighbors.values())

    def matrix(self) -> np.ndarray:
        """Dense 0/1 adjacency matrix, row ``i`` is vertex ``i + 1``."""
        a = np.zeros((self.n, self.n), dtype=np.uint8)
        for u, nb in self.neighbors.items():
            for w in nb:
                a[u - 1, w - 1] = 1
        return a

    def induced(self, vertices) -> dict[int, set[int]]:
        keep = set(vertices)
        return {u: set(self.neighbors[u]) & keep for u in vertices}


def _check(g: PlaneGraph, v: int | None, l: int) -> None:
    if l < 0:
        raise ValueError("l must be >= 0")
    if v is not None and not 1 <= v <= g.n:
        raise ValueError(f"invalid vertex {v}")


def l_facial_neighbors(g: PlaneGraph, v: int, l: int) -> set[int]:
    """Vertices joined to ``v`` by a facial segment of length at most ``l``."""
    _check(g, v, l)
    out: set[int] = set()
    if l == 0:
        return out
    for d in g.rotation(v):
        verts = g.face_of(d).vertices
        s = len(verts)
        # position of this corner inside the face walk
        i = g.face_of(d).darts.index(d)
        reach = min(l, s - 1)
        for j in range(1, reach + 1):
            out.add(verts[(i + j) % s])
            out.add(verts[(i - j) % s])
    out.discard(v)
    return out


def facial_degree(g: PlaneGraph, v: int, l: int) -> int:
    return len(l_facial_neighbors(g, v, l))


def facial_adjacency_graph(g: PlaneGraph, l: int) -> FacialAdjacency:
    _check(g, None, l)
    nb: dict[int, set[int]] = {v: set() for v in g.vertices}
    for face in g.faces:
        verts = face.vertices
        s = len(verts)
        reach = min(l, s - 1)
        for i, a in enumerate(verts):
            for j in range(1, reach + 1):
                b = verts[(i + j) % s]
                if a != b:
                    nb[a].add(b)
                    nb[b].add(a)
    return FacialAdjacency(l, g.n, {v: frozenset(s) for v, s in nb.items()})


def facial_adjacency_matrix(g: PlaneGraph, l: int) -> np.ndarray:
    """Same relation as :func:`facial_adjacency_graph`, computed by the kernel."""
    _check(g, None, l)
    ptr = np.zeros(len(g.faces) + 1, dtype=np.int64)
    for i, f in enumerate(g.faces):
        ptr[i + 1] = ptr[i] + f.size
    flat = np.fromiter((v - 1 for f in g.faces for v in f.vertices),
                       dtype=np.int64, count=int(ptr[-1]))
    return _kernels.facial_matrix(ptr, flat, g.n, l)


def lemma1_bound(g: PlaneGraph, v: int) -> int:
    """Upper bound on the 3-facial degree: sum of min(|f|, 7) minus 2d."""
    sizes = [f.size for f in incident_faces(g, v)]
    return sum(min(s, 7) for s in sizes) - 2 * len(sizes)
