"""``facialchroma`` command line.

Graphs are read as rotation text (``v: n1 n2 ...``, clockwise) or, when the
input starts with the planar_code header, as the first graph of a
planar_code stream. ``-`` reads standard input. Exit status is 0 for a
clean run, 1 when a checking command finds violations and 2 for usage,
input or parse errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import __version__
from .coloring import (SearchBudgetExceeded, exact_chromatic, facial_k_coloring, greedy_color,
                       verify)
from .discharging import discharge
from .embedding import EmbeddingError, PlaneGraph
from .generators import named, random_plane_graph, tight_example
from .io import (PLANAR_CODE_HEADER, FormatError, coloring_report, face_census, graph_summary,
                 ledger_report, read_coloring, read_planar_code, read_rotation_text,
                 write_report, write_rotation_text)
from .reducibility import ReductionScript, ScriptError, run_reduction
from .structure import boundary_path_stats, classify, corollary_witnesses, minimality_witnesses

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read_bytes(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def load_graph(path: str) -> PlaneGraph:
    data = _read_bytes(path)
    if data.startswith(PLANAR_CODE_HEADER):
        graphs = read_planar_code(data)
        if not graphs:
            raise FormatError("empty planar_code stream")
        return graphs[0]
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError:
        raise FormatError("input is neither rotation text nor planar_code") from None
    return read_rotation_text(text)


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _report(args, payload: dict, summary: list[str]) -> None:
    if args.json:
        _emit(args, write_report(payload, command=args.command))
    else:
        _emit(args, "".join(line + "\n" for line in summary))


# -- commands ----------------------------------------------------------------

def cmd_faces(args) -> int:
    g = load_graph(args.file)
    census = face_census(g)
    hist = ", ".join(f"{c}x{s}" for s, c in census["sizeHistogram"].items())
    _report(args, census, [f"V={g.n} E={g.edge_count} F={len(g.faces)} euler={census['euler']}",
                           f"face sizes: {hist}"])
    return EXIT_OK


def cmd_color(args) -> int:
    g = load_graph(args.file)
    l, k = args.l, args.k
    payload = {"graph": graph_summary(g), "l": l, "k": k}
    if args.greedy:
        res = greedy_color(g, l, k)
        payload.update(method="greedy", success=res.ok, stuckAt=res.stuck_at)
        coloring = res.coloring if res.ok else None
    elif args.exact:
        chi, coloring = exact_chromatic(g, l, budget=args.budget)
        payload.update(method="exact", chromaticNumber=chi, success=chi <= k)
        if chi > k:
            coloring = None
    else:
        coloring = facial_k_coloring(g, l, k, budget=args.budget)
        payload.update(method="decision", success=coloring is not None)
    if coloring is not None:
        payload["colorsUsed"] = coloring.colors_used()
        payload["coloring"] = coloring_report(coloring)
    lines = [f"{payload['method']}: {'success' if payload['success'] else 'failure'}"
             f" (l={l}, k={k})"]
    if "chromaticNumber" in payload:
        lines.append(f"chromatic number: {payload['chromaticNumber']}")
    if coloring is not None:
        lines.append(f"colours used: {payload['colorsUsed']}")
        lines.extend(f"{v}: {c}" for v, c in sorted(coloring.assignments.items()))
    elif payload.get("stuckAt") is not None:
        lines.append(f"stuck at vertex {payload['stuckAt']}")
    _report(args, payload, lines)
    return EXIT_OK if payload["success"] else EXIT_VIOLATION


def cmd_verify(args) -> int:
    g = load_graph(args.file)
    colors = read_coloring(_read_bytes(args.coloring).decode("utf-8"))
    try:
        violations = verify(g, args.l, colors)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    payload = {"l": args.l, "valid": not violations, "violations": [list(p) for p in violations]}
    lines = ["valid" if not violations else f"{len(violations)} violations"]
    lines.extend(f"{u} {w} share colour {colors[u]}" for u, w in violations)
    _report(args, payload, lines)
    return EXIT_VIOLATION if violations else EXIT_OK


def cmd_discharge(args) -> int:
    g = load_graph(args.file)
    ledger, rep = discharge(g)
    payload = ledger_report(g, ledger, rep)
    lines = [f"total charge: {payload['totalCharge']} (conserved: {rep.conserved})",
             f"negative vertices: {len(rep.negative_vertices)}, negative faces: {len(rep.negative_faces)}",
             f"R5 payments to faces below size 7: {len(rep.small_r5_targets)}"]
    lines.extend(f"v{v['id']} {v['final']}" for v in payload["vertices"])
    lines.extend(f"f{f['id']} (size {f['size']}) {f['final']}" for f in payload["faces"])
    _report(args, payload, lines)
    return EXIT_OK if rep.conserved and not rep.bad_amounts else EXIT_VIOLATION


def cmd_check(args) -> int:
    g = load_graph(args.file)
    witnesses = minimality_witnesses(g) + corollary_witnesses(g)
    payload = {"graph": graph_summary(g), "witnessCount": len(witnesses),
               "witnesses": [w.to_dict() for w in witnesses]}
    lines = [f"{len(witnesses)} witnesses"]
    lines.extend(f"{w.property_id}: {w.description}" for w in witnesses)
    _report(args, payload, lines)
    return EXIT_VIOLATION if witnesses else EXIT_OK


def cmd_stats(args) -> int:
    g = load_graph(args.file)
    cls = classify(g)
    faces, failures = [], 0
    for f in g.faces:
        st = boundary_path_stats(g, f, cls)
        entry = {"face": f.id, "size": f.size, "dgs": st.dgs, "sfe": st.sfe, "fce": st.fce,
                 "bad": st.bad, "vbd": st.vbd}
        if st.applicable:
            c1, c4 = st.claim1(), st.claim4()
            failures += (not c1) + (not c4)
            entry.update(alpha=st.alpha, beta=st.beta, gamma=st.gamma, delta=st.delta,
                         eps0=st.eps0, eps1=st.eps1, paths=st.paths, claim1=c1, claim4=c4)
        faces.append(entry)
    payload = {"graph": graph_summary(g), "claimFailures": failures, "faces": faces}
    lines = [f"claim failures: {failures}"]
    for e in faces:
        line = f"f{e['face']} size {e['size']} dgs {e['dgs']} sfe {e['sfe']} fce {e['fce']}"
        if "claim1" in e:
            line += f" paths {' '.join(e['paths'])} claim1 {e['claim1']} claim4 {e['claim4']}"
        lines.append(line)
    _report(args, payload, lines)
    return EXIT_VIOLATION if failures else EXIT_OK


def cmd_gen(args) -> int:
    try:
        if args.kind == "tight":
            g = tight_example(args.l)
        elif args.kind == "random":
            g = random_plane_graph(args.n, seed=args.seed, keep_prob=args.keep)
        else:
            if not args.name:
                raise UsageError("gen named needs a graph name")
            g = named(args.name)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(args, write_rotation_text(g))
    return EXIT_OK


def cmd_reduce(args) -> int:
    g = load_graph(args.file)
    try:
        script = ReductionScript.from_dict(json.loads(_read_bytes(args.script)))
    except (json.JSONDecodeError, TypeError, ValueError) as exc:
        raise UsageError(f"bad script: {exc}") from None
    k = args.k if args.k is not None else script.k
    rep = run_reduction(g, args.l, script, k=k)
    payload = {
        "success": rep.success, "reason": rep.reason, "method": rep.method,
        "minor": graph_summary(rep.minor) if rep.minor is not None else None,
        "vertexMap": {str(v): m for v, m in sorted(rep.vertex_map.items())},
        "liftConflicts": [list(p) for p in rep.lift_conflicts],
        "extensionOrder": rep.extension_order, "listSizes": rep.list_sizes,
        "violations": [list(p) for p in rep.violations],
        "coloring": coloring_report(rep.coloring) if rep.coloring else None,
    }
    lines = [f"reduction {'succeeded' if rep.success else 'failed'}"
             + (f": {rep.reason}" if rep.reason else "")]
    lines.append(f"extension order {rep.extension_order} list sizes {rep.list_sizes}")
    _report(args, payload, lines)
    return EXIT_OK if rep.success else EXIT_VIOLATION


def _hunt_one(seed: int, n: int, l: int, k: int, keep: float, budget: int) -> dict:
    g = random_plane_graph(n, seed=seed, keep_prob=keep)
    chi, _ = exact_chromatic(g, l, budget=budget)
    entry = {"seed": seed, "vertices": g.n, "edges": g.edge_count, "chi": chi}
    if chi > k:
        entry["graph"] = write_rotation_text(g)
    return entry


def hunt_workers() -> int:
    raw = os.environ.get("FACIAL_CHROMA_THREADS")
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            raise UsageError("FACIAL_CHROMA_THREADS must be an integer") from None
    return os.cpu_count() or 1


def cmd_hunt(args) -> int:
    seeds = range(args.seed, args.seed + args.count)
    work = lambda s: _hunt_one(s, args.n, args.l, args.k, args.keep, args.budget)  # noqa: E731
    workers = hunt_workers()
    if workers == 1:
        results = [work(s) for s in seeds]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(work, seeds))
    results.sort(key=lambda e: e["seed"])
    hits = [e for e in results if e["chi"] > args.k]
    spread: dict[int, int] = {}
    for e in results:
        spread[e["chi"]] = spread.get(e["chi"], 0) + 1
    payload = {"count": args.count, "n": args.n, "l": args.l, "k": args.k, "seed": args.seed,
               "maxChi": max(spread, default=0),
               "chiHistogram": {str(c): m for c, m in sorted(spread.items())},
               "counterexamples": hits}
    lines = [f"{args.count} graphs, max chi {payload['maxChi']}, "
             f"{len(hits)} counterexamples for k={args.k}"]
    lines.extend(f"seed {e['seed']}: chi {e['chi']}" for e in hits)
    _report(args, payload, lines)
    return EXIT_VIOLATION if hits else EXIT_OK


# -- parser ------------------------------------------------------------------

def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="facialchroma", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--out", help="write output to this path instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, file_arg=True):
        p = sub.add_parser(name, parents=[common], help=help_text)
        if file_arg:
            p.add_argument("file", help="graph file, or - for stdin")
        p.set_defaults(func=func)
        return p

    add("faces", cmd_faces, "face census")
    p = add("color", cmd_color, "find an l-facial k-colouring")
    p.add_argument("--l", type=_positive, default=3)
    p.add_argument("--k", type=_positive, default=11)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", help="compute the exact chromatic number")
    mode.add_argument("--greedy", action="store_true", help="greedy in vertex order")
    p.add_argument("--budget", type=_positive, default=20_000_000, help="search node budget")
    p = add("verify", cmd_verify, "check a colouring")
    p.add_argument("--coloring", required=True, help="colouring file (JSON or 'v: c' lines)")
    p.add_argument("--l", type=_positive, default=3)
    add("discharge", cmd_discharge, "discharging ledger and audit")
    add("check", cmd_check, "minimality and corollary witnesses")
    add("stats", cmd_stats, "boundary statistics and counting identities")
    p = add("gen", cmd_gen, "emit a graph as rotation text", file_arg=False)
    p.add_argument("kind", choices=["tight", "random", "named"])
    p.add_argument("name", nargs="?", help="graph name for 'named'")
    p.add_argument("--l", type=_positive, default=3)
    p.add_argument("--n", type=_positive, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--keep", type=float, default=1.0, help="edge keep probability")
    p = add("reduce", cmd_reduce, "run a contract-and-lift reduction")
    p.add_argument("--script", required=True, help="reduction script (JSON)")
    p.add_argument("--l", type=_positive, default=3)
    p.add_argument("--k", type=_positive, default=None)
    p = add("hunt", cmd_hunt, "search random graphs for large facial chromatic number",
            file_arg=False)
    p.add_argument("--count", type=_positive, default=100)
    p.add_argument("--n", type=_positive, default=12)
    p.add_argument("--l", type=_positive, default=3)
    p.add_argument("--k", type=_positive, default=11)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--keep", type=float, default=0.5,
                   help="edge keep probability (1.0 gives triangulations)")
    p.add_argument("--budget", type=_positive, default=20_000_000)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, FormatError, EmbeddingError, ScriptError) as exc:
        print(f"facialchroma {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SearchBudgetExceeded as exc:
        print(f"facialchroma {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
