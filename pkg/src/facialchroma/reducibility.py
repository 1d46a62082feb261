"""Contract-and-lift reductions.

A reduction contracts disjoint connected vertex sets ("parts") of a plane
graph, colours the resulting minor, copies the minor colours back, gives a
chosen subset of each part (its representatives) the colour of the
contracted vertex, and finally extends the colouring to the remaining
uncoloured vertices from their residual lists.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .coloring import Coloring, facial_k_coloring, list_color_brute, verify
from .embedding import EmbeddingError, PlaneGraph, euler_characteristic, from_darts
from .facial import facial_adjacency_graph


class ScriptError(ValueError):
    pass


@dataclass
class ReductionScript:
    parts: list[list[int]]
    representatives: list[list[int]]
    uncolored: list[int] = field(default_factory=list)
    k: int = 11

    @classmethod
    def from_dict(cls, data: Mapping) -> "ReductionScript":
        parts = [list(map(int, p)) for p in data.get("parts", [])]
        reps = data.get("representatives")
        reps = [list(map(int, r)) for r in reps] if reps is not None else [p[:1] for p in parts]
        return cls(parts, reps, list(map(int, data.get("uncolored", []))), int(data.get("k", 11)))

    def to_dict(self) -> dict:
        return {"parts": self.parts, "representatives": self.representatives,
                "uncolored": self.uncolored, "k": self.k}

    def validate(self, g: PlaneGraph) -> None:
        if len(self.representatives) != len(self.parts):
            raise ScriptError("one representative set per part is required")
        seen: set[int] = set()
        for part, reps in zip(self.parts, self.representatives):
            if not part:
                raise ScriptError("empty part")
            for v in part:
                if not 1 <= v <= g.n:
                    raise ScriptError(f"unknown vertex {v}")
                if v in seen:
                    raise ScriptError(f"vertex {v} lies in two parts")
                seen.add(v)
            if not set(reps) <= set(part):
                raise ScriptError(f"representatives {reps} not inside part {part}")
        reps_all = {v for r in self.representatives for v in r}
        if len(set(self.uncolored)) != len(self.uncolored):
            raise ScriptError("uncolored vertices repeat")
        for v in self.uncolored:
            if not 1 <= v <= g.n:
                raise ScriptError(f"unknown vertex {v}")
            if v in reps_all:
                raise ScriptError(f"representative {v} cannot be uncoloured")
        if self.k < 1:
            raise ScriptError("k must be >= 1")

    def extension_order(self) -> list[int]:
        """Uncoloured vertices followed by non-representative part vertices."""
        reps_all = {v for r in self.representatives for v in r}
        order = list(self.uncolored)
        listed = set(order)
        for part in self.parts:
            for v in sorted(part):
                if v not in reps_all and v not in listed:
                    order.append(v)
                    listed.add(v)
        return order


@dataclass
class ReductionReport:
    minor: PlaneGraph | None
    vertex_map: dict[int, int]
    minor_coloring: Coloring | None
    lift_conflicts: list[tuple[int, int]]
    extension_order: list[int]
    list_sizes: list[int]
    coloring: Coloring | None
    success: bool
    reason: str = ""
    method: str = ""
    violations: list[tuple[int, int]] = field(default_factory=list)


def _induced_connected(g: PlaneGraph, part: Sequence[int]) -> bool:
    members = set(part)
    start = part[0]
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in g.neighbors(v):
            if w in members and w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == members


def contract(g: PlaneGraph, parts: Sequence[Sequence[int]]) -> tuple[PlaneGraph, dict[int, int]]:
    """Contract each connected part to a single vertex, keeping the embedding.

    Edges are contracted one at a time along a spanning tree of each part
    (parts in input order, tree grown from the first listed vertex). The
    rotation of the merged vertex splices the two cyclic orders at the
    contracted dart. Loops produced on the way are deleted, parallel edges
    kept. Returns the minor and the map old vertex -> minor vertex.
    """
    covered = [v for p in parts for v in p]
    if len(set(covered)) != len(covered):
        raise ScriptError("parts overlap")
    for p in parts:
        if not p:
            raise ScriptError("empty part")
        if not _induced_connected(g, list(p)):
            raise ScriptError(f"part {list(p)} does not induce a connected subgraph")
        if len(set(p)) == g.n:
            raise ScriptError("a part cannot be the whole graph")

    origin = [g.origin(d) for d in range(g.dart_count)]
    twin = [g.twin(d) for d in range(g.dart_count)]
    rot: dict[int, list[int]] = {v: list(g.rotation(v)) for v in g.vertices}
    alive = [True] * g.dart_count
    rep = {v: v for v in g.vertices}

    def find(v: int) -> int:
        while rep[v] != v:
            rep[v] = rep[rep[v]]
            v = rep[v]
        return v

    for part in parts:
        members = set(part)
        tree_edges = []
        seen = {part[0]}
        queue = [part[0]]
        while queue:
            v = queue.pop(0)
            for d in g.rotation(v):
                w = g.head(d)
                if w in members and w not in seen:
                    seen.add(w)
                    queue.append(w)
                    tree_edges.append(d)
        for d in tree_edges:
            u, w = find(origin[d]), find(origin[twin[d]])
            if u == w or not alive[d]:
                continue
            t = twin[d]
            ru, rw = rot[u], rot[w]
            iu, iw = ru.index(d), rw.index(t)
            merged = ru[iu + 1:] + ru[:iu] + rw[iw + 1:] + rw[:iw]
            alive[d] = alive[t] = False
            for x in rw:
                origin[x] = u
            rep[w] = u
            del rot[w]
            # drop loops created by parallel edges between u and w
            loops = {x for x in merged if origin[twin[x]] == u}
            for x in loops:
                alive[x] = False
            rot[u] = [x for x in merged if x not in loops]

    minor = from_darts(origin, twin, rot)
    survivors = sorted(rot)
    new_id = {old: i + 1 for i, old in enumerate(survivors)}
    vmap = {v: new_id[find(v)] for v in g.vertices}
    if euler_characteristic(minor) != 2:  # pragma: no cover - PlaneGraph checks this
        raise EmbeddingError("contraction broke the embedding")
    return minor, vmap


def lift(g: PlaneGraph, script: ReductionScript, minor_coloring: Coloring | Mapping[int, int],
         vertex_map: Mapping[int, int] | None = None, l: int = 3) -> tuple[Coloring, list[tuple[int, int]]]:
    """Copy a minor colouring back to ``g``.

    Vertices outside the parts keep the colour of their image, except those
    listed as uncoloured. Representatives take the colour of their
    contracted vertex. Conflicts are representative pairs with equal lifted
    colour that are l-facially adjacent in ``g``.
    """
    if vertex_map is None:
        _, vertex_map = contract(g, script.parts)
    mc = minor_coloring.assignments if isinstance(minor_coloring, Coloring) else minor_coloring
    in_part = {v for p in script.parts for v in p}
    skip = set(script.uncolored)
    colors: dict[int, int] = {}
    for v in g.vertices:
        if v not in in_part and v not in skip:
            colors[v] = mc[vertex_map[v]]
    reps = [v for r in script.representatives for v in r]
    for v in reps:
        colors[v] = mc[vertex_map[v]]
    fa = facial_adjacency_graph(g, l)
    conflicts = []
    for i, a in enumerate(reps):
        for b in reps[i + 1:]:
            if colors[a] == colors[b] and fa.adjacent(a, b):
                conflicts.append((min(a, b), max(a, b)))
    k = max(script.k, max(colors.values(), default=1))
    return Coloring(colors, k), sorted(set(conflicts))


def residual_lists(g: PlaneGraph, l: int, partial: Coloring | Mapping[int, int],
                   uncolored: Sequence[int], k: int) -> dict[int, set[int]]:
    """Colours 1..k not used on the coloured l-facial neighbours outside ``uncolored``."""
    pc = partial.assignments if isinstance(partial, Coloring) else partial
    fa = facial_adjacency_graph(g, l)
    U = set(uncolored)
    out = {}
    for u in uncolored:
        taken = {pc[w] for w in fa.neighbors[u] if w not in U and w in pc}
        out[u] = set(range(1, k + 1)) - taken
    return out


def run_reduction(g: PlaneGraph, l: int, script: ReductionScript,
                  k: int | None = None) -> ReductionReport:
    """Contract, colour the minor with ``k`` colours, lift, and extend greedily.

    The extension visits the uncoloured vertices in order and picks the
    least colour of each residual list not used by earlier ones; if that
    gets stuck the whole set is list-coloured exhaustively.
    """
    k = script.k if k is None else k
    script.validate(g)
    order = script.extension_order()
    if script.parts:
        minor, vmap = contract(g, script.parts)
    else:
        minor, vmap = g, {v: v for v in g.vertices}
    mcol = facial_k_coloring(minor, l, k)
    if mcol is None:
        return ReductionReport(minor, vmap, None, [], order, [], None, False,
                               reason=f"minor is not {l}-facially {k}-colourable")
    lift_script = ReductionScript(script.parts, script.representatives, order, k)
    partial, conflicts = lift(g, lift_script, mcol, vmap, l)
    lists = residual_lists(g, l, partial, order, k)
    sizes = [len(lists[u]) for u in order]
    if conflicts:
        return ReductionReport(minor, vmap, mcol, conflicts, order, sizes, None, False,
                               reason="lifted representatives are facially adjacent")
    fa = facial_adjacency_graph(g, l)
    colors = dict(partial.assignments)
    method = "greedy"
    for u in order:
        used = {colors[w] for w in fa.neighbors[u] if w in colors}
        free = sorted(lists[u] - used)
        if not free:
            break
        colors[u] = free[0]
    if len(colors) < g.n:
        method = "exhaustive"
        colors = dict(partial.assignments)
        found = list_color_brute(fa.induced(order), lists)
        if found is None:
            return ReductionReport(minor, vmap, mcol, conflicts, order, sizes, None, False,
                                   reason="uncoloured vertices are not list-colourable",
                                   method=method)
        colors.update(found)
    final = Coloring(colors, k)
    violations = verify(g, l, final)
    return ReductionReport(minor, vmap, mcol, conflicts, order, sizes, final,
                           not violations, reason="" if not violations else "final colouring invalid",
                           method=method, violations=violations)
