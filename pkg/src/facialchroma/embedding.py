"""Combinatorial maps for connected plane multigraphs.

A graph is stored as darts (half-edges). Every dart has an origin vertex and
a twin, and each vertex owns the clockwise cyclic order of its outgoing
darts. Faces are the orbits of the face-successor permutation

    next(d) = rotation successor of twin(d) at the head of d,

so a face boundary is a closed walk of darts. Vertices are numbered 1..n.
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence


class EmbeddingError(ValueError):
    """Raised when a rotation system does not describe a connected plane map."""


@dataclass(frozen=True)
class Face:
    id: int
    darts: tuple[int, ...]
    vertices: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.darts)

    def __len__(self) -> int:
        return len(self.darts)


class PlaneGraph:
    """Immutable connected plane multigraph.

    Parameters
    ----------
    origin : sequence of int
        ``origin[d]`` is the tail vertex of dart ``d``.
    twin : sequence of int
        ``twin[d]`` is the reversed dart of the same edge.
    rotation : mapping vertex -> sequence of darts
        Clockwise cyclic order of the darts leaving each vertex.

    Use :func:`build_from_rotation` to construct a graph from neighbour lists.
    """

    __slots__ = (
        "n", "_origin", "_twin", "_rotation", "_pos", "_faces",
        "_face_of", "_cache",
    )

    def __init__(
        self,
        origin: Sequence[int],
        twin: Sequence[int],
        rotation: Mapping[int, Sequence[int]],
    ):
        n = len(rotation)
        if n < 1:
            raise EmbeddingError("empty graph")
        if sorted(rotation) != list(range(1, n + 1)):
            raise EmbeddingError("vertex ids must be 1..n")
        self.n = n
        self._origin = tuple(int(o) for o in origin)
        self._twin = tuple(int(t) for t in twin)
        self._rotation = {v: tuple(rotation[v]) for v in range(1, n + 1)}
        self._cache: dict = {}
        self._validate()
        pos = [0] * len(self._origin)
        for v, darts in self._rotation.items():
            for i, d in enumerate(darts):
                pos[d] = i
        self._pos = tuple(pos)
        self._trace_faces()
        chi = self.n - self.edge_count + len(self._faces)
        if chi != 2:
            raise EmbeddingError(
                f"rotation system has Euler characteristic {chi}, not 2 "
                "(not a plane embedding)")

    def _validate(self) -> None:
        m = len(self._origin)
        if len(self._twin) != m:
            raise EmbeddingError("origin/twin length mismatch")
        if m % 2:
            raise EmbeddingError("odd number of darts")
        for d, t in enumerate(self._twin):
            if not 0 <= t < m or t == d or self._twin[t] != d:
                raise EmbeddingError(f"twin is not a fixed-point-free involution at dart {d}")
            if self._origin[d] == self._origin[t]:
                raise EmbeddingError(f"loop at vertex {self._origin[d]}")
        seen = [False] * m
        for v, darts in self._rotation.items():
            for d in darts:
                if not 0 <= d < m or seen[d]:
                    raise EmbeddingError(f"dart {d} listed twice or out of range")
                if self._origin[d] != v:
                    raise EmbeddingError(f"dart {d} listed at {v} but leaves {self._origin[d]}")
                seen[d] = True
        if not all(seen):
            raise EmbeddingError("some dart missing from the rotation system")
        # connectivity
        reached = {1}
        queue = deque([1])
        while queue:
            v = queue.popleft()
            for d in self._rotation[v]:
                w = self._origin[self._twin[d]]
                if w not in reached:
                    reached.add(w)
                    queue.append(w)
        if len(reached) != self.n:
            raise EmbeddingError("graph is disconnected")

    def _trace_faces(self) -> None:
        m = len(self._origin)
        face_of = [-1] * m
        faces = []
        for start in range(m):
            if face_of[start] >= 0:
                continue
            darts = []
            d = start
            while face_of[d] < 0:
                face_of[d] = len(faces)
                darts.append(d)
                d = self.next_dart(d)
            faces.append(Face(len(faces), tuple(darts),
                              tuple(self._origin[x] for x in darts)))
        if m == 0:
            # a lone vertex bounds a single face with an empty walk
            faces.append(Face(0, (), ()))
        self._faces = tuple(faces)
        self._face_of = tuple(face_of)

    # -- darts -------------------------------------------------------------

    @property
    def dart_count(self) -> int:
        return len(self._origin)

    @property
    def edge_count(self) -> int:
        return len(self._origin) // 2

    def origin(self, d: int) -> int:
        return self._origin[d]

    def head(self, d: int) -> int:
        return self._origin[self._twin[d]]

    def twin(self, d: int) -> int:
        return self._twin[d]

    def rotation(self, v: int) -> tuple[int, ...]:
        return self._rotation[v]

    def succ(self, d: int) -> int:
        """Next dart clockwise around the origin of ``d``."""
        rot = self._rotation[self._origin[d]]
        return rot[(self._pos[d] + 1) % len(rot)]

    def pred(self, d: int) -> int:
        rot = self._rotation[self._origin[d]]
        return rot[(self._pos[d] - 1) % len(rot)]

    def next_dart(self, d: int) -> int:
        return self.succ(self._twin[d])

    # -- vertices ----------------------------------------------------------

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def degree(self, v: int) -> int:
        return len(self._rotation[v])

    def neighbors(self, v: int) -> list[int]:
        """Neighbours of ``v`` in clockwise order, with edge multiplicity."""
        return [self.head(d) for d in self._rotation[v]]

    def edges(self) -> list[tuple[int, int]]:
        """One ``(dart, twin)`` pair per edge, smaller dart first."""
        return [(d, t) for d, t in enumerate(self._twin) if d < t]

    def is_simple(self) -> bool:
        seen = set()
        for d, t in self.edges():
            key = frozenset((self._origin[d], self._origin[t]))
            if key in seen:
                return False
            seen.add(key)
        return True

    # -- faces -------------------------------------------------------------

    @property
    def faces(self) -> tuple[Face, ...]:
        return self._faces

    def face_of(self, d: int) -> Face:
        return self._faces[self._face_of[d]]

    def face_sizes(self) -> list[int]:
        return [f.size for f in self._faces]

    def rotation_lists(self) -> dict[int, list[int]]:
        return {v: self.neighbors(v) for v in self.vertices}

    def __repr__(self) -> str:
        return f"PlaneGraph(V={self.n}, E={self.edge_count}, F={len(self._faces)})"


def build_from_rotation(adjacency: Mapping[int, Sequence[int]] | Sequence[Sequence[int]]) -> PlaneGraph:
    """Build a plane graph from clockwise neighbour lists.

    ``adjacency`` maps each vertex 1..n to its neighbours in clockwise order
    (a sequence is read as vertices 1..n). For parallel edges the k-th
    occurrence of ``v`` in the list of ``u`` is paired with the k-th
    occurrence of ``u`` in the list of ``v``.
    """
    if not isinstance(adjacency, Mapping):
        adjacency = {i + 1: list(nbrs) for i, nbrs in enumerate(adjacency)}
    if not adjacency:
        raise EmbeddingError("empty graph")
    n = len(adjacency)
    if sorted(adjacency) != list(range(1, n + 1)):
        raise EmbeddingError("vertex ids must be dense 1..n")
    origin: list[int] = []
    rotation: dict[int, list[int]] = {}
    occurrence: dict[tuple[int, int], list[int]] = defaultdict(list)
    for v in range(1, n + 1):
        rotation[v] = []
        for w in adjacency[v]:
            w = int(w)
            if w == v:
                raise EmbeddingError(f"loop at vertex {v}")
            if w not in adjacency:
                raise EmbeddingError(f"vertex {v} lists unknown neighbour {w}")
            d = len(origin)
            origin.append(v)
            rotation[v].append(d)
            occurrence[(v, w)].append(d)
    twin = [-1] * len(origin)
    for (v, w), darts in occurrence.items():
        back = occurrence.get((w, v), [])
        if len(back) != len(darts):
            raise EmbeddingError(
                f"unmatched neighbour occurrence: {w} appears {len(darts)} times "
                f"at {v} but {v} appears {len(back)} times at {w}")
        for d, t in zip(darts, back):
            twin[d] = t
    return PlaneGraph(origin, twin, rotation)


def euler_characteristic(g: PlaneGraph) -> int:
    return g.n - g.edge_count + len(g.faces)


def incident_faces(g: PlaneGraph, v: int) -> list[Face]:
    """Faces around ``v`` in rotation order, one per corner (with multiplicity)."""
    return [g.face_of(d) for d in g.rotation(v)]


def face_adjacency(g: PlaneGraph) -> set[tuple[int, int]]:
    """Unordered pairs ``(f, f')`` of distinct face ids sharing an edge."""
    pairs = set()
    for d, t in g.edges():
        a, b = g.face_of(d).id, g.face_of(t).id
        if a != b:
            pairs.add((min(a, b), max(a, b)))
    return pairs


def adjacent_faces(g: PlaneGraph, f: Face | int) -> list[Face]:
    """Distinct faces sharing at least one edge with ``f``, in boundary order."""
    fid = f if isinstance(f, int) else f.id
    out: dict[int, Face] = {}
    for d in g.faces[fid].darts:
        other = g.face_of(g.twin(d))
        if other.id != fid:
            out.setdefault(other.id, other)
    return list(out.values())


def from_darts(origin: Sequence[int], twin: Sequence[int],
               rotation: Mapping[int, Iterable[int]]) -> PlaneGraph:
    """Relabel vertices and darts densely and build a :class:`PlaneGraph`.

    Vertex ids are renumbered in increasing order of their old ids; darts
    keep their relative order. Darts absent from ``rotation`` are dropped
    together with their twins.
    """
    old_vertices = sorted(rotation)
    vmap = {old: i + 1 for i, old in enumerate(old_vertices)}
    live = sorted(d for v in old_vertices for d in rotation[v])
    dmap = {d: i for i, d in enumerate(live)}
    new_origin = [vmap[origin[d]] for d in live]
    new_twin = [dmap[twin[d]] for d in live]
    new_rot = {vmap[v]: [dmap[d] for d in rotation[v]] for v in old_vertices}
    return PlaneGraph(new_origin, new_twin, new_rot)
