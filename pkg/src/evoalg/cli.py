"""evoalg command line.

    evoalg classify|decide|aut|survey|paper-examples [--json] [--jobs N] [--seed S]
           [--evidence-restarts N] [--tol X] [--unsafe-size] [FILE|-]

Exit codes: 0 success, 1 usage or parse error, 2 size bound exceeded,
3 regression failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from collections import Counter
from multiprocessing import Pool

from . import __version__
from .algebra import from_graph
from .errors import EvoAlgError, GraphError, SingularStructureMatrix, SizeBoundExceeded
from .graph import Graph, classify, parse_edge_list, parse_graph6, to_graph6
from .iso import aut_group, cycle_notation, decide_iso
from .linalg import det, rank
from .regression import FAIL, FLAGGED, PASS, run_paper_examples

log = logging.getLogger("evoalg")

EXIT_OK, EXIT_USAGE, EXIT_SIZE, EXIT_REGRESSION = 0, 1, 2, 3
COUNTEREXAMPLE_FLAG = "CONJECTURE-COUNTEREXAMPLE-CANDIDATE"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _content_lines(text: str) -> list[str]:
    return [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]


def looks_like_graph6(text: str) -> bool:
    """graph6 bytes are 63..126, so they never contain digits or blanks."""
    lines = _content_lines(text)
    if not lines:
        return False
    first = lines[0]
    return not any(ch.isspace() or ch.isdigit() for ch in first)


def load_graphs(text: str, name: str = "") -> list[Graph]:
    if looks_like_graph6(text):
        return [parse_graph6(ln) for ln in _content_lines(text) if not ln.startswith(">>graph6<<") or ln[10:]]
    return [parse_edge_list(text, name=name)]


def _bounds(args) -> tuple[int | None, int | None]:
    return (None, None) if args.unsafe_size else (-1, -1)


# ------------------------------------------------------------------ classify


def classify_report(g: Graph) -> dict:
    d = det(g.adjacency)
    cls = classify(g)
    return {
        "graph_id": to_graph6(g),
        "n": g.n,
        "edges": g.edge_count,
        "degrees": list(g.degrees),
        "class": cls.to_json(),
        "class_summary": cls.summary(),
        "det": str(d),
        "rank": rank(g.adjacency),
        "singular": d == 0,
    }


def cmd_classify(args, graphs: list[Graph]) -> int:
    for g in graphs:
        rep = classify_report(g)
        if args.json:
            print(json.dumps(rep))
        else:
            print(f"graph {rep['graph_id']}: n={rep['n']} edges={rep['edges']}")
            print(f"  degrees: {' '.join(map(str, rep['degrees']))}")
            print(f"  class:   {rep['class_summary']}")
            print(f"  det(A) = {rep['det']}  rank(A) = {rep['rank']}  {'singular' if rep['singular'] else 'non-singular'}")
    return EXIT_OK


# -------------------------------------------------------------------- decide


def cmd_decide(args, graphs: list[Graph]) -> int:
    exact, numeric = _bounds(args)
    for g in graphs:
        v = decide_iso(g, restarts=args.evidence_restarts, seed=args.seed, tol=args.tol, bound=exact, numeric_bound=numeric)
        if args.json:
            print(json.dumps(v.to_json(to_graph6(g))))
            continue
        print(f"graph {to_graph6(g)}: n={g.n} det(A)={v.det} class={v.cls.summary()}")
        print(f"  verdict: {v.summary()}")
        if v.witness is not None:
            print(f"  witness {v.witness.source.label} -> {v.witness.target.label}:")
            for line in str(v.witness).splitlines():
                print(f"    {line}")
        if v.evidence is not None:
            ev = v.evidence
            print(
                f"  evidence: {ev['restarts']} restarts, seed {ev['seed']}, tol {ev['tol']}: "
                f"{ev['converged_runs']} converged, {ev['nonzero_candidates']} nonzero candidate(s); {ev['conclusion']}"
            )
    return EXIT_OK


# ----------------------------------------------------------------------- aut


def cmd_aut(args, graphs: list[Graph]) -> int:
    exact, _ = _bounds(args)
    status = EXIT_OK
    for g in graphs:
        alg = from_graph(g)
        try:
            elems = aut_group(alg, bound=exact)
        except SingularStructureMatrix as exc:
            print(f"evoalg: {exc}; the monomial description of Aut needs det(C) != 0", file=sys.stderr)
            status = EXIT_USAGE
            continue
        if args.json:
            print(json.dumps({
                "graph_id": to_graph6(g),
                "aut_size": len(elems),
                "elements": [{"pi": [p + 1 for p in pi], "alphas": [a.to_json() for a in al]} for pi, al in elems],
            }))  # fmt: skip
            continue
        print(f"Aut {alg.label}: order {len(elems)}")
        for pi, al in elems:
            print(f"  {cycle_notation(pi):<24} alpha = [{', '.join(map(str, al))}]")
    return status


# -------------------------------------------------------------------- survey


def survey_record(line: str, restarts: int, seed: int, tol: float, bounds, timing: bool) -> dict:
    """One SurveyRecord, or ``{"skipped": reason}`` for an unusable line."""
    t0 = time.perf_counter()
    try:
        g = parse_graph6(line)
        v = decide_iso(g, restarts=restarts, seed=seed, tol=tol, bound=bounds[0], numeric_bound=bounds[1])
    except (GraphError, SizeBoundExceeded) as exc:
        return {"skipped": f"{line!r}: {exc}"}
    cls = v.cls
    regular_like = cls.is_regular or cls.is_biregular
    assert not (regular_like and v.kind != "isomorphic"), "regular/biregular graph without isomorphism"
    assert not (not v.singular and not regular_like and v.kind != "only_null"), "non-singular Neither graph not null-only"
    rec = {
        "graph_id": to_graph6(g),
        "n": g.n,
        "edge_count": g.edge_count,
        "det": str(v.det),
        "class": cls.to_json(),
        "verdict": v.summary(),
    }
    if v.evidence is not None:
        rec["nonzero_candidates"] = v.evidence["nonzero_candidates"]
        if v.evidence["nonzero_candidates"]:
            rec["flag"] = COUNTEREXAMPLE_FLAG
    if timing:
        rec["timing_ms"] = round(1000 * (time.perf_counter() - t0), 3)
    return rec


def _survey_worker(job):
    return survey_record(*job)


def cmd_survey(args, text: str) -> int:
    lines = [ln for ln in _content_lines(text) if ln != ">>graph6<<"]
    jobs = [(ln, args.evidence_restarts, args.seed, args.tol, _bounds(args), args.timing) for ln in lines]
    cells: Counter[str] = Counter()
    flagged: list[str] = []
    skipped = 0

    def emit(rec: dict) -> None:
        nonlocal skipped
        if "skipped" in rec:
            skipped += 1
            log.warning("skipping %s", rec["skipped"])
            return
        cells[f"singular={rec['det'] == '0'} class={rec['class']['kind']} verdict={rec['verdict']}"] += 1
        if rec.get("flag"):
            flagged.append(rec["graph_id"])
        print(json.dumps(rec), flush=True)

    if args.jobs > 1 and len(jobs) > 1:
        with Pool(args.jobs) as pool:
            # imap yields in submission order, which is the reorder buffer
            for rec in pool.imap(_survey_worker, jobs, chunksize=8):
                emit(rec)
    else:
        for job in jobs:
            emit(_survey_worker(job))
    footer = {
        "summary": {
            "graphs": sum(cells.values()),
            "skipped": skipped,
            "cells": dict(sorted(cells.items())),
            "counterexample_candidates": len(flagged),
            "flagged": flagged,
        }
    }
    print(json.dumps(footer))
    return EXIT_OK


# ------------------------------------------------------------ paper-examples


def cmd_paper_examples(args) -> int:
    checks = run_paper_examples()
    counts = Counter(c.status for c in checks)
    if args.json:
        print(json.dumps({"checks": [c.to_json() for c in checks], "counts": dict(counts)}))
    else:
        for c in checks:
            print(c.line())
        print(f"{counts[PASS]} passed, {counts[FLAGGED]} flagged, {counts[FAIL]} failed")
    return EXIT_REGRESSION if counts[FAIL] else EXIT_OK


# ---------------------------------------------------------------------- main


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--jobs", type=int, default=1, metavar="N", help="worker processes (survey)")
    common.add_argument("--seed", type=int, default=0, metavar="S", help="seed for the numeric search")
    common.add_argument("--evidence-restarts", type=int, default=50, metavar="N", help="numeric restarts for undecided graphs")
    common.add_argument("--tol", type=float, default=1e-9, metavar="X", help="residual threshold for a numeric candidate")
    common.add_argument("--unsafe-size", action="store_true", help="disable the size bounds")
    common.add_argument("-v", "--verbose", action="store_true")

    p = _Parser(prog="evoalg", description="Evolution algebras of graphs: A(G) versus A_RW(G).")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, help_ in (
        ("classify", "degrees, regularity class, det and rank of A"),
        ("decide", "decide A_RW(G) ~ A(G), with witness or evidence"),
        ("aut", "monomial automorphisms of A(G)"),
        ("survey", "JSON-lines survey over graph6 input"),
    ):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.add_argument("input", nargs="?", default="-", metavar="FILE|-")
        if name == "survey":
            sp.add_argument("--timing", action="store_true", help="add per-record wall time (breaks byte reproducibility)")
    sub.add_parser("paper-examples", parents=[common], help="regression run over the published examples")
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="evoalg: %(message)s")
    if args.jobs < 1 or args.evidence_restarts < 1:
        print("evoalg: --jobs and --evidence-restarts must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.command == "paper-examples":
            return cmd_paper_examples(args)
        text = _read(args.input)
        if args.command == "survey":
            return cmd_survey(args, text)
        graphs = load_graphs(text, name="" if args.input == "-" else args.input)
        if not graphs:
            print("evoalg: no graph in input", file=sys.stderr)
            return EXIT_USAGE
        return {"classify": cmd_classify, "decide": cmd_decide, "aut": cmd_aut}[args.command](args, graphs)
    except SizeBoundExceeded as exc:
        print(f"evoalg: {exc} (use --unsafe-size or EVOALG_SIZE_BOUND)", file=sys.stderr)
        return EXIT_SIZE
    except (GraphError, EvoAlgError, OSError, ValueError) as exc:
        print(f"evoalg: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
