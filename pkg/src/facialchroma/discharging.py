"""Exact discharging: initial charges, rules R1-R5, conservation audit.

Charges are integers counting twelfths, so every transfer is exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .embedding import PlaneGraph, adjacent_faces, incident_faces
from .structure import Classification, classify

UNIT = 12
EULER_TOTAL = -8 * UNIT

# rule id -> amount in twelfths
RULES = {"R1safe": 4, "R1dangerous": 6, "R2": 4, "R3": 2, "R4": 1, "R5": 8}


def vertex_key(v: int) -> str:
    return f"v{v}"


def face_key(f: int) -> str:
    return f"f{f}"


def as_fraction(twelfths: int) -> Fraction:
    return Fraction(twelfths, UNIT)


def render(twelfths: int) -> str:
    """Exact rational string: ``-8``, ``-2/3``, ``1/12``."""
    return str(as_fraction(twelfths))


@dataclass(frozen=True)
class Transfer:
    source: str
    target: str
    amount: int
    rule: str


@dataclass
class ChargeLedger:
    per_vertex: dict[int, int]
    per_face: dict[int, int]
    transfers: list[Transfer] = field(default_factory=list)
    initial_vertex: dict[int, int] = field(default_factory=dict)
    initial_face: dict[int, int] = field(default_factory=dict)

    def total(self) -> int:
        return sum(self.per_vertex.values()) + sum(self.per_face.values())

    def _move(self, source: str, target: str, amount: int, rule: str) -> None:
        for key, sign in ((source, -1), (target, 1)):
            kind, idx = key[0], int(key[1:])
            book = self.per_vertex if kind == "v" else self.per_face
            book[idx] += sign * amount
        self.transfers.append(Transfer(source, target, amount, rule))


def initial_charges(g: PlaneGraph) -> ChargeLedger:
    """Vertices get deg - 4, faces get size - 4 (in twelfths)."""
    pv = {v: UNIT * (g.degree(v) - 4) for v in g.vertices}
    pf = {f.id: UNIT * (f.size - 4) for f in g.faces}
    return ChargeLedger(pv, pf, [], dict(pv), dict(pf))


def apply_rules(g: PlaneGraph, ledger: ChargeLedger | None = None,
                cls: Classification | None = None) -> ChargeLedger:
    """Run R1-R5 on a fresh ledger.

    R1 pays once per boundary occurrence of a vertex; R2-R4 pay once per
    adjacent face however many edges are shared; R5 pays once per
    (vertex, face) pair and never to a 3-face, since a triangle flanked by
    two triangles at a vertex is not the long face the rule is aimed at.
    """
    ledger = initial_charges(g) if ledger is None else ledger
    if ledger.transfers:
        raise ValueError("ledger already has transfers")
    cls = classify(g) if cls is None else cls
    for f in g.faces:
        src = face_key(f.id)
        if f.size >= 5:
            for v in f.vertices:
                if cls.safe(v):
                    ledger._move(src, vertex_key(v), RULES["R1safe"], "R1")
                elif cls.dangerous(v):
                    ledger._move(src, vertex_key(v), RULES["R1dangerous"], "R1")
        near = adjacent_faces(g, f)
        if f.size >= 7:
            for h in near:
                if h.size == 3:
                    ledger._move(src, face_key(h.id), RULES["R2"], "R2")
            for h in near:
                if cls.bad(h.id):
                    ledger._move(src, face_key(h.id), RULES["R3"], "R3")
        elif f.size == 6:
            for h in near:
                if cls.very_bad(h.id):
                    ledger._move(src, face_key(h.id), RULES["R4"], "R4")
    for v in g.vertices:
        if g.degree(v) < 5:
            continue
        around = incident_faces(g, v)
        triangles = {h.id: h for h in around if h.size == 3}
        paid: set[int] = set()
        for f in around:
            if f.size == 3 or f.id in paid:
                continue
            near = {h.id for h in adjacent_faces(g, f)}
            if sum(1 for t in triangles if t in near and t != f.id) >= 2:
                ledger._move(vertex_key(v), face_key(f.id), RULES["R5"], "R5")
                paid.add(f.id)
    return ledger


@dataclass
class AuditReport:
    total: int
    conserved: bool
    negative_vertices: dict[int, int]
    negative_faces: dict[int, int]
    small_r5_targets: list[tuple[int, int, int]]
    bad_amounts: list[Transfer]

    @property
    def clean(self) -> bool:
        return (self.conserved and not self.negative_vertices and not self.negative_faces
                and not self.bad_amounts)


_RULE_AMOUNTS = {"R1": {4, 6}, "R2": {4}, "R3": {2}, "R4": {1}, "R5": {8}}


def audit(g: PlaneGraph, ledger: ChargeLedger) -> AuditReport:
    """Check conservation and rule constants, list negative final charges.

    R5 payments to faces of size below 7 are listed separately; they cannot
    occur in a minimal counterexample but the rule text allows them.
    """
    bad_amounts = [t for t in ledger.transfers if t.amount not in _RULE_AMOUNTS.get(t.rule, ())]
    small = []
    for t in ledger.transfers:
        if t.rule == "R5":
            fid = int(t.target[1:])
            if g.faces[fid].size < 7:
                small.append((int(t.source[1:]), fid, g.faces[fid].size))
    total = ledger.total()
    return AuditReport(
        total=total,
        conserved=total == EULER_TOTAL,
        negative_vertices={v: c for v, c in ledger.per_vertex.items() if c < 0},
        negative_faces={f: c for f, c in ledger.per_face.items() if c < 0},
        small_r5_targets=small,
        bad_amounts=bad_amounts,
    )


def discharge(g: PlaneGraph) -> tuple[ChargeLedger, AuditReport]:
    ledger = apply_rules(g)
    return ledger, audit(g, ledger)
