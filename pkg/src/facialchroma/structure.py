"""Vertex/face classification and scanners for forbidden local structure.

Every witness returned here certifies that the graph cannot be a smallest
plane graph without a 3-facial 11-colouring. An empty scan only means the
graph is consistent with those properties.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator

import networkx as nx

from .embedding import Face, PlaneGraph, adjacent_faces, face_adjacency, incident_faces
from .facial import facial_degree

MAX_SEPARATING = 7


class VertexClass(str, Enum):
    DANGEROUS = "dangerous"
    SAFE = "safe"
    PLAIN = "plain"


class FaceClass(str, Enum):
    VERY_BAD = "veryBad"
    BAD = "bad"
    OTHER = "other"


@dataclass
class BoundaryStats:
    face: int
    size: int
    dgs: int = 0
    sfe: int = 0
    fce: int = 0
    bad: int = 0
    vbd: int = 0
    alpha: int | None = None
    beta: int | None = None
    gamma: int | None = None
    delta: int | None = None
    eps0: int | None = None
    eps1: int | None = None
    paths: list[str] = field(default_factory=list)

    @property
    def applicable(self) -> bool:
        return self.alpha is not None

    @property
    def eps(self) -> int | None:
        return None if self.eps0 is None else self.eps0 + self.eps1

    def claim1(self) -> bool:
        return self.alpha + self.beta + self.gamma + self.delta + self.eps == self.dgs

    def claim4(self) -> bool:
        return self.alpha - self.beta + self.eps0 == self.delta + self.eps1


@dataclass
class Classification:
    vertices: dict[int, VertexClass]
    faces: dict[int, FaceClass]
    stats: dict[int, BoundaryStats]

    def dangerous(self, v: int) -> bool:
        return self.vertices[v] is VertexClass.DANGEROUS

    def safe(self, v: int) -> bool:
        return self.vertices[v] is VertexClass.SAFE

    def bad(self, f: int) -> bool:
        return self.faces[f] in (FaceClass.BAD, FaceClass.VERY_BAD)

    def very_bad(self, f: int) -> bool:
        return self.faces[f] is FaceClass.VERY_BAD


@dataclass
class Witness:
    property_id: str
    vertices: tuple[int, ...] = ()
    faces: tuple[int, ...] = ()
    edges: tuple[tuple[int, int], ...] = ()
    description: str = ""
    darts: tuple[int, ...] = ()

    def to_dict(self) -> dict:
        return {"propertyId": self.property_id, "vertices": list(self.vertices),
                "faces": list(self.faces), "edges": [list(e) for e in self.edges],
                "description": self.description}


def vertex_class(g: PlaneGraph, v: int) -> VertexClass:
    if g.degree(v) != 3:
        return VertexClass.PLAIN
    if any(f.size <= 4 for f in incident_faces(g, v)):
        return VertexClass.DANGEROUS
    return VertexClass.SAFE


def face_class(g: PlaneGraph, f: Face) -> FaceClass:
    if f.size != 5:
        return FaceClass.OTHER
    threes = sum(1 for v in f.vertices if g.degree(v) == 3)
    if threes == 5:
        return FaceClass.VERY_BAD
    if threes >= 4:
        return FaceClass.BAD
    return FaceClass.OTHER


def classify(g: PlaneGraph) -> Classification:
    vc = {v: vertex_class(g, v) for v in g.vertices}
    fc = {f.id: face_class(g, f) for f in g.faces}
    cls = Classification(vc, fc, {})
    for f in g.faces:
        cls.stats[f.id] = _counts(g, f, cls)
    return cls


def _counts(g: PlaneGraph, f: Face, cls: Classification) -> BoundaryStats:
    adj = adjacent_faces(g, f)
    return BoundaryStats(
        face=f.id, size=f.size,
        dgs=sum(1 for v in f.vertices if cls.dangerous(v)),
        sfe=sum(1 for v in f.vertices if cls.safe(v)),
        fce=sum(1 for h in adj if h.size == 3),
        bad=sum(1 for h in adj if cls.bad(h.id)),
        vbd=sum(1 for h in adj if cls.very_bad(h.id)),
    )


# -- boundary path types ----------------------------------------------------

def associated_small_face(g: PlaneGraph, f: Face, index: int) -> Face | None:
    """The (<=4)-face met first clockwise from ``f`` at the corner ``f.darts[index]``."""
    d = f.darts[index]
    x = g.succ(d)
    while x != d:
        h = g.face_of(x)
        if h.size <= 4 and h.id != f.id:
            return h
        x = g.succ(x)
    return None


def boundary_path_stats(g: PlaneGraph, f: Face | int,
                        cls: Classification | None = None) -> BoundaryStats:
    """Counts around ``f`` plus the path types between consecutive dangerous vertices.

    Types are only defined for faces of size >= 9 with at least one dangerous
    vertex; otherwise the path fields stay ``None``.
    """
    f = g.faces[f] if isinstance(f, int) else f
    cls = classify(g) if cls is None else cls
    st = _counts(g, f, cls)
    if f.size < 9 or st.dgs == 0:
        return st
    s = f.size
    dpos = [i for i, v in enumerate(f.vertices) if cls.dangerous(v)]
    assoc = {i: associated_small_face(g, f, i) for i in dpos}
    st.alpha = st.beta = st.gamma = st.delta = st.eps0 = st.eps1 = 0
    for k, i in enumerate(dpos):
        nxt = dpos[(k + 1) % len(dpos)]
        j = (nxt - i - 1) % s if len(dpos) > 1 else s - 1
        fi, fn = assoc[i], assoc[nxt]
        if j >= 1:
            w1 = f.vertices[(i + 1) % s]
            wj = f.vertices[(nxt - 1) % s]
            first = fi is not None and w1 in fi.vertices
            last = fn is not None and wj in fn.vertices
            if not first and not last:
                kind = "a"
            elif first and last:
                kind = "b"
            else:
                kind = "c"
        elif fi is not None and fn is not None and fi.id == fn.id and fi.size == 3:
            kind = "d"
        else:
            across = g.face_of(g.twin(f.darts[i]))
            kind = "e1" if across.size == 4 else "e0"
        st.paths.append(kind)
    st.alpha = st.paths.count("a")
    st.beta = st.paths.count("b")
    st.gamma = st.paths.count("c")
    st.delta = st.paths.count("d")
    st.eps0 = st.paths.count("e0")
    st.eps1 = st.paths.count("e1")
    return st


# -- cycles -----------------------------------------------------------------

def short_cycles(g: PlaneGraph, max_len: int = MAX_SEPARATING) -> Iterator[tuple[int, ...]]:
    """Simple cycles of length 2..max_len as dart tuples, each reported once.

    A cycle starts at its smallest vertex; of its two directions the one
    whose first dart id is smaller than the twin of its last dart is kept.
    Two parallel edges form a cycle of length 2.
    """
    for s in g.vertices:
        path: list[int] = []
        on_path = {s}

        def extend(v: int) -> Iterator[tuple[int, ...]]:
            for d in g.rotation(v):
                w = g.head(d)
                if w == s and len(path) >= 1 and d != g.twin(path[0]):
                    cyc = tuple(path) + (d,)
                    if len(cyc) >= 2 and cyc[0] < g.twin(cyc[-1]):
                        yield cyc
                elif w > s and w not in on_path and len(path) + 1 < max_len:
                    path.append(d)
                    on_path.add(w)
                    yield from extend(w)
                    path.pop()
                    on_path.discard(w)

        yield from extend(s)


def cycle_sides(g: PlaneGraph, cycle: tuple[int, ...]) -> tuple[set[int], set[int]]:
    """Off-cycle vertices reached by darts leaving the cycle on each side.

    At every cycle vertex the darts strictly between the reversed incoming
    dart and the outgoing dart (clockwise) lie on one side, the rest on the
    other. Because the graph is connected, a side holds a vertex off the
    cycle exactly when one of its darts leads to such a vertex.
    """
    on_cycle = {g.origin(d) for d in cycle}
    sides: tuple[set[int], set[int]] = (set(), set())
    for i, out in enumerate(cycle):
        back = g.twin(cycle[i - 1])
        x = g.succ(back)
        side = 0
        while x != back:
            if x == out:
                side = 1
            else:
                w = g.head(x)
                if w not in on_cycle:
                    sides[side].add(w)
            x = g.succ(x)
    return sides


def is_separating(g: PlaneGraph, cycle: tuple[int, ...]) -> bool:
    a, b = cycle_sides(g, cycle)
    return bool(a) and bool(b)


def separating_cycles(g: PlaneGraph, max_len: int = MAX_SEPARATING) -> list[tuple[int, ...]]:
    return [c for c in short_cycles(g, max_len) if is_separating(g, c)]


# -- lemma-level witnesses ---------------------------------------------------

def _simple_graph(g: PlaneGraph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(g.vertices)
    G.add_edges_from((g.origin(d), g.origin(t)) for d, t in g.edges())
    return G


def _edge_faces(g: PlaneGraph):
    for d, t in g.edges():
        yield d, g.origin(d), g.origin(t), g.face_of(d), g.face_of(t)


def minimality_witnesses(g: PlaneGraph, deg3: dict[int, int] | None = None) -> list[Witness]:
    """Violations of the five local properties every minimal counterexample has."""
    out: list[Witness] = []
    if deg3 is None:
        deg3 = {v: facial_degree(g, v, 3) for v in g.vertices}
    if g.n >= 3:
        for v in sorted(nx.articulation_points(_simple_graph(g))):
            out.append(Witness("lemma2.i", vertices=(v,), description=f"cut vertex {v}"))
    for cyc in separating_cycles(g):
        verts = tuple(g.origin(d) for d in cyc)
        out.append(Witness("lemma2.ii", vertices=verts,
                           edges=tuple((g.origin(d), g.head(d)) for d in cyc), darts=cyc,
                           description=f"separating cycle of length {len(cyc)}"))
    faces = g.faces
    for a, b in sorted(face_adjacency(g)):
        if faces[a].size + faces[b].size <= 9:
            out.append(Witness("lemma2.iii", faces=(a, b),
                               description=f"adjacent {faces[a].size}-face and {faces[b].size}-face"))
    for v in g.vertices:
        if deg3[v] < 11:
            out.append(Witness("lemma2.iv", vertices=(v,),
                               description=f"3-facial degree {deg3[v]} < 11"))
    for d, u, w, f1, f2 in _edge_faces(g):
        if f1.id == f2.id or f1.size < 4 or f2.size < 4:
            continue
        for x, y in ((u, w), (w, u)):
            if deg3[x] <= 11 and deg3[y] <= 12:
                out.append(Witness("lemma2.v", vertices=(x, y), faces=(f1.id, f2.id),
                                   edges=((u, w),),
                                   description=f"edge {u}-{w} between {f1.size}- and {f2.size}-face "
                                               f"with 3-facial degrees {deg3[x]}, {deg3[y]}"))
                break
    return out


def lemma3_witnesses(g: PlaneGraph) -> list[Witness]:
    """Adjacent 3-vertices on a common 5-face and 6-face whose third face is small."""
    out = []
    for d, u, w, f1, f2 in _edge_faces(g):
        if g.degree(u) != 3 or g.degree(w) != 3 or {f1.size, f2.size} != {5, 6}:
            continue
        for x in (u, w):
            third = [h for h in incident_faces(g, x) if h.id not in (f1.id, f2.id)]
            if third and third[0].size <= 6:
                out.append(Witness("lemma3", vertices=(u, w), faces=(f1.id, f2.id, third[0].id),
                                   description=f"third face at {x} has size {third[0].size}"))
    return out


# -- corollary-level witnesses ----------------------------------------------

def corollary_witnesses(g: PlaneGraph, cls: Classification | None = None) -> list[Witness]:
    cls = classify(g) if cls is None else cls
    out: list[Witness] = []
    faces = g.faces
    # (i) edge shared by two 5-faces with both ends of degree 3
    for d, x, y, f1, f2 in _edge_faces(g):
        if f1.id != f2.id and f1.size == 5 and f2.size == 5 and g.degree(x) == 3 and g.degree(y) == 3:
            out.append(Witness("cor1.i", vertices=(x, y), faces=(f1.id, f2.id), edges=((x, y),),
                               description="3-vertices on an edge between two 5-faces"))
    # (ii) all-3-vertex 7-face next to a 3-face and another (<=6)-face
    for f in faces:
        if f.size != 7 or any(g.degree(v) != 3 for v in f.vertices):
            continue
        adj = adjacent_faces(g, f)
        for t in (h for h in adj if h.size == 3):
            small = [h for h in adj if h.id != t.id and h.size < 7]
            if small:
                out.append(Witness("cor1.ii", faces=(f.id, t.id, small[0].id),
                                   description=f"7-face next to a 3-face and a {small[0].size}-face"))
                break
    # (iii) adjacent dangerous vertices with no common (<=4)-face, one on a 3-face
    for d, x, y, f1, f2 in _edge_faces(g):
        if not (cls.dangerous(x) and cls.dangerous(y)):
            continue
        small_x = {h.id for h in incident_faces(g, x) if h.size <= 4}
        small_y = {h.id for h in incident_faces(g, y) if h.size <= 4}
        if small_x & small_y:
            continue
        if any(faces[h].size == 3 for h in small_x | small_y):
            out.append(Witness("cor1.iii", vertices=(x, y), edges=((x, y),),
                               description="adjacent dangerous vertices apart from a common "
                                           "small face, one on a 3-face"))
    # (iv) adjacent dangerous vertices on a common 6-face
    for f in faces:
        if f.size != 6:
            continue
        on = sorted({v for v in f.vertices if cls.dangerous(v)})
        for i, x in enumerate(on):
            for y in on[i + 1:]:
                if y in g.neighbors(x):
                    out.append(Witness("cor1.iv", vertices=(x, y), faces=(f.id,), edges=((x, y),),
                                       description="adjacent dangerous vertices on a 6-face"))
    # (v) four consecutive dangerous vertices on a (>=6)-face
    for f in faces:
        s = f.size
        if s < 6:
            continue
        for i in range(s):
            run = tuple(f.vertices[(i + j) % s] for j in range(4))
            if all(cls.dangerous(v) for v in run):
                out.append(Witness("cor1.v", vertices=run, faces=(f.id,),
                                   description=f"four consecutive dangerous vertices on a {s}-face"))
    # (vi) / (vii) bad faces need enough (>=7)-neighbours
    for f in faces:
        if not cls.bad(f.id):
            continue
        big = sum(1 for h in adjacent_faces(g, f) if h.size >= 7)
        if cls.very_bad(f.id) and big < 3:
            out.append(Witness("cor1.vi", faces=(f.id,),
                               description=f"very-bad face with {big} adjacent (>=7)-faces"))
        if big < 2:
            out.append(Witness("cor1.vii", faces=(f.id,),
                               description=f"bad face with {big} adjacent (>=7)-faces"))
    return out


# -- re-validation -----------------------------------------------------------

def separating_by_dual(g: PlaneGraph, cycle: tuple[int, ...]) -> bool:
    """Decide separation from the dual graph with the cycle's edges removed.

    The faces split into the two regions bounded by the cycle; an off-cycle
    vertex lies in the region of any of its incident faces.
    """
    cut = {min(d, g.twin(d)) for d in cycle}
    D = nx.Graph()
    D.add_nodes_from(f.id for f in g.faces)
    for d, t in g.edges():
        if d not in cut:
            D.add_edge(g.face_of(d).id, g.face_of(t).id)
    region = {}
    for k, comp in enumerate(nx.connected_components(D)):
        for fid in comp:
            region[fid] = k
    on_cycle = {g.origin(d) for d in cycle}
    seen = {region[g.face_of(g.rotation(v)[0]).id] for v in g.vertices if v not in on_cycle}
    return len(seen) >= 2


def _is_cycle(g: PlaneGraph, darts: tuple[int, ...]) -> bool:
    if not darts or len(darts) > MAX_SEPARATING:
        return False
    verts = [g.origin(d) for d in darts]
    if len(set(verts)) != len(verts):
        return False
    return all(g.head(darts[i]) == g.origin(darts[(i + 1) % len(darts)]) for i in range(len(darts)))


def _edge_between(g: PlaneGraph, x: int, y: int) -> list[int]:
    return [d for d in g.rotation(x) if g.head(d) == y]


def revalidate(g: PlaneGraph, w: Witness) -> bool:
    """Re-check a witness directly at its location."""
    cls = classify(g)
    faces = g.faces
    pid = w.property_id
    if pid == "lemma2.i":
        G = _simple_graph(g)
        G.remove_node(w.vertices[0])
        return not nx.is_connected(G)
    if pid == "lemma2.ii":
        return _is_cycle(g, w.darts) and separating_by_dual(g, w.darts)
    if pid == "lemma2.iii":
        a, b = w.faces
        return (min(a, b), max(a, b)) in face_adjacency(g) and faces[a].size + faces[b].size <= 9
    if pid == "lemma2.iv":
        return facial_degree(g, w.vertices[0], 3) < 11
    if pid == "lemma2.v":
        x, y = w.vertices
        f1, f2 = faces[w.faces[0]], faces[w.faces[1]]
        shared = any({g.face_of(d).id, g.face_of(g.twin(d)).id} == {f1.id, f2.id}
                     for d in _edge_between(g, x, y))
        return (shared and f1.id != f2.id and f1.size >= 4 and f2.size >= 4
                and facial_degree(g, x, 3) <= 11 and facial_degree(g, y, 3) <= 12)
    if pid == "lemma3":
        u, v = w.vertices
        f1, f2, f3 = (faces[i] for i in w.faces)
        sides = [{g.face_of(d).id, g.face_of(g.twin(d)).id} for d in _edge_between(g, u, v)]
        return ({f1.id, f2.id} in sides and {f1.size, f2.size} == {5, 6}
                and g.degree(u) == 3 and g.degree(v) == 3 and f3.size <= 6
                and any(f3.id in {h.id for h in incident_faces(g, x)} for x in (u, v)))
    if pid == "cor1.i":
        x, y = w.vertices
        f1, f2 = (faces[i] for i in w.faces)
        sides = [{g.face_of(d).id, g.face_of(g.twin(d)).id} for d in _edge_between(g, x, y)]
        return ({f1.id, f2.id} in sides and f1.id != f2.id and f1.size == f2.size == 5
                and g.degree(x) == g.degree(y) == 3)
    if pid == "cor1.ii":
        f, t, h = (faces[i] for i in w.faces)
        near = {a.id for a in adjacent_faces(g, f)}
        return (f.size == 7 and all(g.degree(v) == 3 for v in f.vertices)
                and t.size == 3 and h.size < 7 and t.id != h.id and {t.id, h.id} <= near)
    if pid == "cor1.iii":
        x, y = w.vertices
        small_x = {h.id for h in incident_faces(g, x) if h.size <= 4}
        small_y = {h.id for h in incident_faces(g, y) if h.size <= 4}
        return (bool(_edge_between(g, x, y)) and cls.dangerous(x) and cls.dangerous(y)
                and not small_x & small_y
                and any(faces[h].size == 3 for h in small_x | small_y))
    if pid == "cor1.iv":
        x, y = w.vertices
        f = faces[w.faces[0]]
        return (f.size == 6 and x in f.vertices and y in f.vertices and bool(_edge_between(g, x, y))
                and cls.dangerous(x) and cls.dangerous(y))
    if pid == "cor1.v":
        f = faces[w.faces[0]]
        s = f.size
        runs = {tuple(f.vertices[(i + j) % s] for j in range(4)) for i in range(s)}
        return s >= 6 and w.vertices in runs and all(cls.dangerous(v) for v in w.vertices)
    if pid in ("cor1.vi", "cor1.vii"):
        f = faces[w.faces[0]]
        big = sum(1 for h in adjacent_faces(g, f) if h.size >= 7)
        if pid == "cor1.vi":
            return cls.very_bad(f.id) and big < 3
        return cls.bad(f.id) and big < 2
    return False
