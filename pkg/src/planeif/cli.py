"""Batch front end: ``planeif <command> [options]``.

Every command writes one JSON report.  Exit status is 0 when every verdict
in the report passes, 1 when some verdict fails or the library rejects the
input, and 2 for usage errors or unreadable input.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from collections import Counter
from pathlib import Path

from . import corpus
from .configurations import MinDegreeWitness, find_any_config
from .cover import partition_IF, validate_partition
from .cycles import DEFAULT_SPEC, in_class
from .discharging import audit, check_lemma_rule, check_lemma_s
from .errors import PlaneIFError, SizeBound
from .io import load_graphs
from .plane_graph import PlaneGraph
from .weak_degeneracy import EliminationCertificate, certify_weakly_2_degenerate, degeneracy, weak_degeneracy

SCHEMA = "planeif.report/1"
COMMANDS = ("check-class", "faces", "find-config", "partition", "wd-certify", "wd-exact",
            "discharge-audit", "lemma-check", "corpus-run")


def _error(exc: Exception) -> dict:
    out = {"passed": False, "error": type(exc).__name__, "message": str(exc)}
    witness = getattr(exc, "witness", None)
    if witness is not None:
        out["witness"] = witness
    return out


def cmd_check_class(G: PlaneGraph, args) -> dict:
    v = in_class(G, DEFAULT_SPEC)
    return {"passed": v.in_class, "in_class": v.in_class, "witness": v.witness}


def cmd_faces(G: PlaneGraph, args) -> dict:
    faces = [{"id": f.id, "size": f.size, "vertices": list(f.vertices), "simple": f.is_simple_cycle()}
             for f in G.faces]
    return {"passed": True, "n": G.n, "m": G.m, "num_faces": len(faces), "faces": faces}


def cmd_find_config(G: PlaneGraph, args) -> dict:
    v = min(range(G.n), key=lambda x: (G.degree(x), x)) if G.n else None
    low = None if v is None or G.degree(v) > 2 else MinDegreeWitness(v, G.degree(v))
    match = find_any_config(G, mode=args.config_mode)
    out = {"passed": low is not None or match is not None,
           "in_class": in_class(G).in_class,
           "low_vertex": None if low is None else {"vertex": low.vertex, "degree": low.degree},
           "configuration": None if match is None else match.to_dict()}
    return out


def cmd_partition(G: PlaneGraph, args) -> dict:
    stats: dict = {}
    P = partition_IF(G, stats=stats)
    ok = validate_partition(G, P)
    return {"passed": ok, "partition": P.to_dict(), "strategies": dict(sorted(stats.items()))}


def cmd_wd_certify(G: PlaneGraph, args) -> dict:
    cert = certify_weakly_2_degenerate(G)
    payload = cert.to_dict(G)
    replayed = EliminationCertificate.from_dict(payload, G).replay(G)
    return {"passed": replayed, "replayed": replayed, "saves": cert.saves,
            "strategies": dict(sorted(cert.meta["strategies"].items())), "certificate": payload}


def cmd_wd_exact(G: PlaneGraph, args) -> dict:
    wd = weak_degeneracy(G)
    return {"passed": True, "weak_degeneracy": wd, "degeneracy": degeneracy(G)}


def cmd_discharge_audit(G: PlaneGraph, args) -> dict:
    rep = audit(G, strict=not args.lenient)
    ledger = rep.pop("ledger")
    total_ok = rep["totals"]["mu"] == rep["expected_total"]
    contradiction_ok = rep["has_configuration"] or bool(rep["negatives"])
    # without the regime the rules are only bookkept, so only conservation is judged
    passed = rep["conserved"] and total_ok and (args.lenient or contradiction_ok)
    return {"passed": passed, **rep, "violations": rep["negatives"], "ledger": ledger.to_dict()}


def cmd_lemma_check(G: PlaneGraph, args) -> dict:
    items = check_lemma_s(G)
    rules = check_lemma_rule(G)
    out_items = {k: {"passed": r.passed, "witnesses": list(r.witnesses)} for k, r in items.items()}
    out_rules = [{"bad_face": r.record.face, "good_face": r.record.good_face,
                  "apex_degrees": list(r.apex_degrees), "transfer": str(r.transfer),
                  "required": str(r.required), "passed": r.ok} for r in rules]
    passed = all(r.passed for r in items.values()) and all(r.ok for r in rules)
    return {"passed": passed, "items": out_items, "bad_faces": out_rules}


def _sweep_item(item: corpus.CorpusItem) -> dict:
    G = item.graph
    row = {"id": item.id, "n": G.n, "digest": G.digest, "in_class": item.in_class, "ok": True}
    rep = audit(G, strict=False)
    row["charges_conserved"] = rep["conserved"] and rep["totals"]["mu"] == rep["expected_total"]
    row["ok"] &= row["charges_conserved"]
    if not item.in_class:
        return row
    low = G.n == 0 or G.min_degree <= 2
    row["local_structure"] = low or rep["has_configuration"]
    row["ok"] &= row["local_structure"]
    if G.n <= 16:
        try:
            row["partition"] = validate_partition(G, partition_IF(G, check_class=False))
        except PlaneIFError:
            row["partition"] = False
        try:
            row["certificate"] = certify_weakly_2_degenerate(G, check_class=False).replay(G)
        except PlaneIFError:
            row["certificate"] = False
        row["ok"] &= row["partition"] and row["certificate"]
    return row


def cmd_corpus_run(args) -> dict:
    items = corpus.build_corpus(seed=args.seed, max_n=args.max_n, random_count=args.count)
    rows = [_sweep_item(it) for it in items]
    summary = Counter()
    for r in rows:
        summary["graphs"] += 1
        summary["class_members"] += r["in_class"]
        for key in ("charges_conserved", "local_structure", "partition", "certificate"):
            if key in r:
                summary[f"{key}_checked"] += 1
                summary[f"{key}_failed"] += not r[key]
    return {"passed": all(r["ok"] for r in rows), "summary": dict(sorted(summary.items())),
            "failures": [r for r in rows if not r["ok"]],
            "items": rows if args.verbose else []}


GRAPH_COMMANDS = {
    "check-class": cmd_check_class,
    "faces": cmd_faces,
    "find-config": cmd_find_config,
    "partition": cmd_partition,
    "wd-certify": cmd_wd_certify,
    "wd-exact": cmd_wd_exact,
    "discharge-audit": cmd_discharge_audit,
    "lemma-check": cmd_lemma_check,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="planeif", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--input", help="graph file (required except for corpus-run)")
    p.add_argument("--format", choices=("json", "planar_code"), default="json")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-n", type=int, default=24)
    p.add_argument("--count", type=int, default=700, help="random graphs in corpus-run")
    p.add_argument("--config-mode", choices=("operational", "literal"), default="operational")
    p.add_argument("--lenient", action="store_true", help="audit charges outside the rule regime")
    p.add_argument("--timings", action="store_true", help="add wall-clock timings to the report")
    p.add_argument("--verbose", action="store_true", help="keep per-item rows in corpus-run")
    p.add_argument("--out", help="write the report here instead of stdout")
    return p


def run(argv: list[str] | None = None) -> tuple[dict, int]:
    """Parse ``argv``, execute, and return ``(report, exit_code)``."""
    parser = build_parser()
    return execute(parser.parse_args(argv), parser)


def execute(args: argparse.Namespace, parser: argparse.ArgumentParser) -> tuple[dict, int]:
    report: dict = {"schema": SCHEMA, "command": args.command}
    start = time.perf_counter()
    if args.command == "corpus-run":
        report["input"] = {"seed": args.seed, "max_n": args.max_n, "count": args.count}
        report["results"] = [cmd_corpus_run(args)]
    else:
        if not args.input:
            parser.error(f"{args.command} needs --input")
        try:
            graphs = load_graphs(args.input, args.format)
        except (OSError, ValueError, KeyError, PlaneIFError) as exc:
            print(f"planeif: cannot read {args.input}: {exc}", file=sys.stderr)
            return {**report, "error": str(exc)}, 2
        report["input"] = {"file": Path(args.input).name, "format": args.format}
        results = []
        for i, G in enumerate(graphs):
            try:
                res = GRAPH_COMMANDS[args.command](G, args)
            except (PlaneIFError, SizeBound) as exc:
                res = _error(exc)
            results.append({"offset": i, "digest": G.digest, "n": G.n, **res})
        report["results"] = results
    report["passed"] = all(r["passed"] for r in report["results"])
    if args.timings:
        report["timings"] = {"total_seconds": round(time.perf_counter() - start, 6)}
    return report, 0 if report["passed"] else 1


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        report, code = execute(args, parser)
    except SystemExit as exc:  # argparse usage errors
        return int(exc.code or 0)
    text = json.dumps(report, indent=2, sort_keys=True, default=str) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return code

if __name__ == "__main__":
    sys.exit(main())
