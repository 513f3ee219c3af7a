"""Command-line entry point.

Exit codes: 0 success (class OK, colourable, reducible, found, audit clean),
1 negative outcome (contains C4/C5, uncolourable, counterexample, negative
charge), 2 budget exceeded or inconclusive, 3 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import catalog, discharging, io, reducibility, sampler
from .coloring import degree_criterion_colorable, is_colorable, validate_coloring
from .errors import HypothesisViolated, InputError
from .graph import find_cycle

OK, NEGATIVE, INCONCLUSIVE, BAD_INPUT = 0, 1, 2, 3


def _emit(report: dict, args) -> None:
    report = {"command": args.command, "seed": args.seed, **report}
    if args.format == "json":
        print(json.dumps(report, sort_keys=True, indent=2))
    else:
        for key in sorted(report):
            value = report[key]
            if isinstance(value, (dict, list)):
                value = json.dumps(value, sort_keys=True)
            print(f"{key}: {value}")


def _need(args, name: str) -> str:
    value = getattr(args, name)
    if not value:
        raise InputError(f"--{name} is required for {args.command}")
    return value


def _limits(args) -> reducibility.Limits:
    lim = reducibility.Limits(seed=args.seed)
    if args.limit_size is not None:
        lim.max_vertices = args.limit_size
    if args.limit_enum is not None:
        lim.max_systems = args.limit_enum
    return lim


def cmd_check_class(args) -> int:
    doc = io.load(_need(args, "input"))
    g = doc.graph()
    c4, c5 = find_cycle(g, 4), find_cycle(g, 5)
    report = {"vertices": g.n, "edges": g.m, "c4": c4, "c5": c5}
    ok = c4 is None and c5 is None
    if doc.rotation:
        planar = doc.plane().is_planar()
        report["plane"] = planar
        ok = ok and planar
    report["class_ok"] = ok
    report["verdict"] = "class OK" if ok else ("contains C4" if c4 else "contains C5" if c5 else "rotation is not plane")
    _emit(report, args)
    return OK if ok else NEGATIVE


def cmd_color(args) -> int:
    doc = io.load(_need(args, "input"), *([args.lists] if args.lists else []))
    g = doc.graph()
    lists = doc.list_assignment()
    crit = degree_criterion_colorable(g, lists)
    phi = is_colorable(g, lists)
    if phi is not None and not validate_coloring(g, lists, phi):
        raise RuntimeError("solver returned an invalid colouring")
    _emit(
        {
            "colorable": phi is not None,
            "coloring": list(phi) if phi is not None else None,
            "degree_criterion": {"applicable": crit.applicable, "reason": crit.reason},
        },
        args,
    )
    return OK if phi is not None else NEGATIVE


def _config(args) -> reducibility.EmbeddedConfig:
    if args.entry:
        return catalog.get_entry(args.entry).build()
    doc = io.load(_need(args, "input"))
    return reducibility.EmbeddedConfig(doc.graph(), tuple(doc.ambient_degrees()), doc.k or 4)


def cmd_certify(args) -> int:
    cfg = _config(args)
    mode = args.mode or "exhaustive"
    if mode not in ("exhaustive", "strategy"):
        raise InputError("certify takes --mode exhaustive or strategy")
    cert = reducibility.check_reducible(cfg, mode, _limits(args))
    _emit({"certificate": cert.to_dict()}, args)
    if cert.status == reducibility.HOLDS:
        return OK
    if cert.status == reducibility.FAILS:
        return NEGATIVE
    return INCONCLUSIVE


def cmd_find_reducible(args) -> int:
    doc = io.load(_need(args, "input"))
    g = doc.graph()
    k = doc.k or 4
    try:
        y, cert, source = sampler.find_reducible(
            g,
            list(range(g.n)),
            k,
            mode=args.mode or "auto",
            generic_limit=args.limit_size or sampler.GENERIC_LIMIT,
            limits=reducibility.Limits(falsify_samples=0, seed=args.seed),
        )
    except HypothesisViolated as exc:
        _emit({"found": False, "message": str(exc), "budget": exc.budget}, args)
        return INCONCLUSIVE
    _emit({"found": True, "vertices": list(y), "source": source, "certificate": cert.to_dict()}, args)
    return OK


def _sampling_inputs(args):
    doc = io.load(_need(args, "input"), *([args.lists] if args.lists else []))
    g = doc.graph()
    lists = doc.list_assignment()
    k = doc.k or 4
    trace = sampler.peel(g, k)
    return doc, g, lists, trace


def cmd_sample(args) -> int:
    _, g, lists, trace = _sampling_inputs(args)
    col, _ = sampler.sample_flexible(g, lists, seed=args.seed, trace=trace)
    report = sampler.estimate_marginals(g, lists, samples=args.samples, seed=args.seed, confidence=args.confidence, trace=trace)
    _emit({"coloring": list(col), "marginals": report.to_dict()}, args)
    return OK


def cmd_satisfy(args) -> int:
    doc, g, lists, trace = _sampling_inputs(args)
    if args.request:
        doc.requests.update(io.load(args.request).requests)
    res = sampler.satisfy_weighted_request(g, lists, None, doc.requests, samples=args.samples, seed=args.seed, trace=trace)
    _emit({"request": res.to_dict(), "trace": trace.summary()}, args)
    return OK if res.clears else NEGATIVE


def cmd_discharge(args) -> int:
    doc = io.load(_need(args, "input"))
    pg = doc.plane()
    if not pg.is_planar():
        raise InputError("rotation system is not a plane embedding")
    ledger = discharging.apply_rules(pg)
    report = discharging.audit(pg, ledger)
    if args.report:
        full = {"seed": args.seed, "audit": report.to_dict(), "ledger": ledger.to_dict(), "taxonomy": {
            "vertices": [c.to_dict() for c in ledger.taxonomy.vertices],
            "faces": [c.to_dict() for c in ledger.taxonomy.faces],
        }}
        Path(args.report).write_text(json.dumps(full, sort_keys=True, indent=2) + "\n", encoding="utf-8")
    _emit({"audit": report.to_dict()}, args)
    if not report.conserved:
        raise RuntimeError("charge not conserved")
    return OK if report.all_nonnegative else NEGATIVE


COMMANDS = {
    "check-class": cmd_check_class,
    "color": cmd_color,
    "certify": cmd_certify,
    "find-reducible": cmd_find_reducible,
    "sample": cmd_sample,
    "satisfy": cmd_satisfy,
    "discharge": cmd_discharge,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="flexcolor", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--input", help="graph / configuration / plane graph file")
        p.add_argument("--lists", help="list assignment file (L records)")
        p.add_argument("--request", help="request file (REQ records)")
        p.add_argument("--entry", help="catalogue entry id, e.g. lemma3.8")
        p.add_argument("--mode", help="exhaustive | strategy (find-reducible also takes auto)")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--samples", type=int, default=1000)
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--limit-size", type=int, help="largest exhaustive config / generic search size")
        p.add_argument("--limit-enum", type=int, help="cap on enumerated list systems")
        p.add_argument("--confidence", type=float, default=sampler.DEFAULT_CONFIDENCE)
        p.add_argument("--report", help="write the full JSON report here")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.samples < 1:
            raise InputError("--samples must be at least 1")
        if not 0 < args.confidence < 1:
            raise InputError("--confidence must lie in (0, 1)")
        return COMMANDS[args.command](args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
