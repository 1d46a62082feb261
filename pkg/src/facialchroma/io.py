"""Rotation-system text, plantri planar_code streams and JSON reports."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Iterable

from .embedding import PlaneGraph, build_from_rotation

PLANAR_CODE_HEADER = b">>planar_code<<"
SCHEMA = "facialchroma.report/1"


class FormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


# -- rotation text -----------------------------------------------------------

def parse_rotation_text(text: str) -> dict[int, list[int]]:
    adj: dict[int, list[int]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, sep, rest = line.partition(":")
        if not sep:
            raise FormatError("expected 'v: n1 n2 ...'", lineno)
        try:
            v = int(head)
            nbrs = [int(x) for x in rest.split()]
        except ValueError:
            raise FormatError("vertex ids must be integers", lineno) from None
        if v in adj:
            raise FormatError(f"vertex {v} listed twice", lineno)
        if not nbrs:
            raise FormatError(f"vertex {v} has no neighbours", lineno)
        adj[v] = nbrs
    if not adj:
        raise FormatError("no vertices")
    return adj


def read_rotation_text(text: str) -> PlaneGraph:
    """Parse ``v: n1 n2 ...`` lines (clockwise neighbours).

    ``#`` starts a comment; blank lines are ignored. A single line ``1:``
    is not accepted, so the one-vertex graph has no text form.
    """
    return build_from_rotation(parse_rotation_text(text))


def write_rotation_text(g: PlaneGraph) -> str:
    return "".join(f"{v}: {' '.join(map(str, g.neighbors(v)))}\n" for v in g.vertices)


def normalize_rotation_text(text: str) -> str:
    adj = parse_rotation_text(text)
    return "".join(f"{v}: {' '.join(map(str, adj[v]))}\n" for v in sorted(adj))


# -- planar_code -------------------------------------------------------------

def read_planar_code(data: bytes) -> list[PlaneGraph]:
    """Decode a plantri planar_code stream (one-byte entries, n < 256)."""
    if data.startswith(PLANAR_CODE_HEADER):
        data = data[len(PLANAR_CODE_HEADER):]
    graphs = []
    i, size = 0, len(data)
    while i < size:
        n = data[i]
        i += 1
        if n == 0:
            raise FormatError(f"byte {i - 1}: zero vertex count (two-byte format unsupported)")
        adj: dict[int, list[int]] = {}
        for v in range(1, n + 1):
            nbrs = []
            while True:
                if i >= size:
                    raise FormatError(f"truncated stream in graph {len(graphs) + 1}, vertex {v}")
                b = data[i]
                i += 1
                if b == 0:
                    break
                if b > n:
                    raise FormatError(f"neighbour {b} out of range 1..{n}")
                nbrs.append(b)
            adj[v] = nbrs
        graphs.append(build_from_rotation(adj))
    return graphs


def write_planar_code(graphs: Iterable[PlaneGraph], header: bool = True) -> bytes:
    out = bytearray(PLANAR_CODE_HEADER if header else b"")
    for g in graphs:
        if g.n >= 256:
            raise FormatError("planar_code with n >= 256 is not supported")
        out.append(g.n)
        for v in g.vertices:
            out.extend(g.neighbors(v))
            out.append(0)
    return bytes(out)


# -- reports -----------------------------------------------------------------

def _plain(obj: Any) -> Any:
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(x) for x in obj]
    if hasattr(obj, "to_dict"):
        return _plain(obj.to_dict())
    if hasattr(obj, "item"):  # numpy scalars
        return obj.item()
    return obj


def write_report(results: dict, command: str | None = None) -> str:
    """Serialise a report dict as JSON, schema tag first, keys in insertion order."""
    doc = {"schema": SCHEMA}
    if command:
        doc["command"] = command
    doc.update(_plain(results))
    return json.dumps(doc, indent=2) + "\n"


def coloring_report(coloring, k: int | None = None) -> dict:
    colors = coloring.assignments if hasattr(coloring, "assignments") else coloring
    return {str(v): int(c) for v, c in sorted(colors.items())}


def ledger_report(g: PlaneGraph, ledger, audit) -> dict:
    from .discharging import render

    return {
        "totalCharge": render(ledger.total()),
        "initialTotal": render(sum(ledger.initial_vertex.values()) + sum(ledger.initial_face.values())),
        "conserved": audit.conserved,
        "vertices": [{"id": v, "degree": g.degree(v), "initial": render(ledger.initial_vertex[v]),
                      "final": render(c)} for v, c in sorted(ledger.per_vertex.items())],
        "faces": [{"id": f, "size": g.faces[f].size, "initial": render(ledger.initial_face[f]),
                   "final": render(c)} for f, c in sorted(ledger.per_face.items())],
        "transfers": [{"source": t.source, "target": t.target, "amount": render(t.amount),
                       "rule": t.rule} for t in ledger.transfers],
        "negative": {"vertices": sorted(audit.negative_vertices),
                     "faces": sorted(audit.negative_faces)},
        "r5SmallFaces": [{"vertex": v, "face": f, "size": s} for v, f, s in audit.small_r5_targets],
    }


def read_coloring(text: str) -> dict[int, int]:
    """Colouring from JSON (a report with ``coloring`` or a flat map) or ``v: c`` lines."""
    text = text.strip()
    if text.startswith("{"):
        doc = json.loads(text)
        if "coloring" in doc:
            doc = doc["coloring"]
        return {int(v): int(c) for v, c in doc.items()}
    out = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.replace(":", " ").split()
        try:
            v, c = fields
            out[int(v)] = int(c)
        except (ValueError, IndexError):
            raise FormatError("expected 'v: colour'", lineno) from None
    return out


def write_coloring(colors: dict[int, int]) -> str:
    return "".join(f"{v}: {c}\n" for v, c in sorted(colors.items()))


def graph_summary(g: PlaneGraph) -> dict:
    return {"vertices": g.n, "edges": g.edge_count, "faces": len(g.faces)}


def face_census(g: PlaneGraph) -> dict:
    sizes: dict[int, int] = {}
    for f in g.faces:
        sizes[f.size] = sizes.get(f.size, 0) + 1
    return {
        **graph_summary(g),
        "euler": g.n - g.edge_count + len(g.faces),
        "sizeHistogram": {str(s): c for s, c in sorted(sizes.items())},
        "faceList": [{"id": f.id, "size": f.size, "vertices": list(f.vertices)} for f in g.faces],
    }
