"""Command-line front end.

Four commands: ``chi`` runs the full pipeline and reports homology,
``from-word`` converts a braid word into a diagram, ``check`` prints
admissibility diagnostics, and ``complex`` dumps the cell complex.

Exit codes: 0 success, 2 invalid input, 3 improper class, 4 gap
separation violation, 5 undecided class grouping in exhaustive mode.
JSON output is deterministic: keys are sorted and cells canonically
ordered, so identical inputs give byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import cubecomplex as cx
from . import diagrams, words
from .homology import HomologyResult, euler_characteristic

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_IMPROPER = 3
EXIT_GAP = 4
EXIT_UNDECIDED = 5

FORCED = "χ ≠ 0: closed integral curves are forced in this class"
NOT_FORCED = "χ = 0: no forcing conclusion for this class"


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


@dataclass
class PipelineRun:
    report: dict
    result: HomologyResult | None
    pairs: list
    exit_code: int


def _load_diagram(args) -> tuple[diagrams.DiscreteRelativeBraid, dict, int]:
    """Diagram from a JSON path or from word flags; returns (diagram, echo, twists)."""
    if args.word is not None:
        if args.strands is None:
            raise CliError("--word needs --strands", EXIT_INVALID)
        free = _parse_free(args.free)
        try:
            w = words.parse_word(args.word, args.strands, free)
            twists, positive = words.minimal_positive_twists(w)
            dia = diagrams.word_to_diagram(positive)
        except (ValueError,) as exc:
            raise CliError(str(exc), EXIT_INVALID) from exc
        echo = {"word": args.word, "strands": args.strands, "free": sorted(free)}
        return dia, echo, twists
    if args.input is None:
        raise CliError("provide a diagram JSON path or --word/--strands/--free", EXIT_INVALID)
    try:
        with open(args.input, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        dia = diagrams.diagram_from_json_dict(data)
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        raise CliError(f"invalid diagram input: {exc}", EXIT_INVALID) from exc
    return dia, {"path": args.input}, 0


def _parse_free(text: str | None) -> frozenset[int]:
    if not text:
        return frozenset()
    try:
        return frozenset(int(tok) for tok in text.split(",") if tok.strip() != "")
    except ValueError:
        raise CliError(f"malformed --free list {text!r}", EXIT_INVALID) from None


def _prepare(args):
    dia, echo, twists = _load_diagram(args)
    if getattr(args, "refine", None):
        try:
            dia = diagrams.refine(dia, args.refine)
        except ValueError as exc:
            raise CliError(str(exc), EXIT_INVALID) from exc
    augmented = diagrams.augment(dia)
    try:
        report = diagrams.crossing_report(augmented)
    except diagrams.SingularDiagramError as exc:
        raise CliError(f"singular diagram: {exc}", EXIT_INVALID) from exc
    try:
        sk, cell = cx.normalize(augmented)
    except cx.GapSeparationError as exc:
        raise CliError(str(exc), EXIT_GAP) from exc
    except ValueError as exc:
        raise CliError(str(exc), EXIT_INVALID) from exc
    fcl = augmented.free_closure()
    if cx.is_singular(cell, sk, fcl) is not cx.Classification.INTERIOR:
        raise CliError("the input diagram is tangent (singular braid)", EXIT_INVALID)
    pipeline = {
        "twists": twists,
        "d": augmented.d,
        "crossing_total": report.total,
        "connectivity_bound_ok": augmented.d > report.total,
        "augmented": True,
        "mode": getattr(args, "mode", "component"),
        "refine": getattr(args, "refine", None) or 1,
    }
    return augmented, echo, pipeline, sk, cell, fcl


def run_pipeline(args) -> PipelineRun:
    augmented, echo, pipeline, sk, cell, fcl = _prepare(args)
    exit_code = EXIT_OK
    if pipeline["mode"] == "component":
        try:
            component = cx.enumerate_component(cell, sk, fcl)
            pair = cx.exit_set(cx.close(component, sk, fcl))
        except cx.GapSeparationError as exc:
            raise CliError(str(exc), EXIT_GAP) from exc
        prop = cx.properness_check(pair)
        pipeline["proper"] = prop.proper
        if not prop.proper:
            pipeline["improper_reason"] = prop.reason
            raise CliError(f"improper class: {prop.reason}", EXIT_IMPROPER)
        pairs = [pair]
        result = euler_characteristic(pairs)
    else:
        try:
            all_pairs = cx.enumerate_all(sk, len(augmented.free), fcl)
        except cx.GapSeparationError as exc:
            raise CliError(str(exc), EXIT_GAP) from exc
        start = next(p for p in all_pairs if cell in set(p.interior) or cell in set(p.cells))
        certificates = {p.component: cx.component_certificate(p) for p in all_pairs}
        proper_flags = {p.component: cx.properness_check(p).proper for p in all_pairs}
        token = certificates[start.component]
        group = [p for p in all_pairs if certificates[p.component] == token]
        pipeline["proper"] = proper_flags[start.component]
        pipeline["components_total"] = len(all_pairs)
        pipeline["components_proper"] = sum(1 for v in proper_flags.values() if v)
        pipeline["fiber_candidates"] = [p.component for p in group]
        if not proper_flags[start.component]:
            raise CliError("improper class (exhaustive mode)", EXIT_IMPROPER)
        if len(group) > 1:
            pipeline["undecided"] = True
            exit_code = EXIT_UNDECIDED
        pairs = group
        result = euler_characteristic(pairs)
    report = {
        "input": echo,
        "pipeline": pipeline,
        "result": result.to_json_dict(),
        "interpretation": FORCED if result.euler != 0 else NOT_FORCED,
    }
    return PipelineRun(report=report, result=result, pairs=pairs, exit_code=exit_code)


def _cell_dump(pairs) -> list[dict]:
    out = []
    for p in pairs:
        out.append({
            "component": p.component,
            "cells": [
                {
                    "codes": [list(row) for row in c.codes],
                    "dim": c.dim,
                    "in_exit": c in p.exit_cells,
                }
                for c in p.cells
            ],
            "crossing_number": p.crossing_number,
        })
    return out


def cmd_chi(args) -> int:
    run = run_pipeline(args)
    if args.emit_cells:
        with open(args.emit_cells, "w", encoding="utf-8") as fh:
            json.dump(_cell_dump(run.pairs), fh, sort_keys=True)
    if args.json:
        print(json.dumps(run.report, sort_keys=True))
    else:
        p = run.report["pipeline"]
        print(f"twists applied: {p['twists']}")
        print(f"period d: {p['d']}, crossings: {p['crossing_total']}, "
              f"connectivity bound {'ok' if p['connectivity_bound_ok'] else 'not met (warning)'}")
        print(f"proper: {p['proper']}")
        r = run.report["result"]
        print(f"betti_gf2: {r['betti_gf2']}")
        print(f"euler characteristic: {r['euler']} (cell count check: {r['cell_euler']})")
        print(run.report["interpretation"])
    return run.exit_code


def cmd_from_word(args) -> int:
    if args.word is None or args.strands is None:
        raise CliError("from-word needs --word and --strands", EXIT_INVALID)
    free = _parse_free(args.free)
    if not free:
        raise CliError("from-word needs a nonempty --free list", EXIT_INVALID)
    try:
        w = words.parse_word(args.word, args.strands, free)
        twists, positive = words.minimal_positive_twists(w)
        dia = diagrams.word_to_diagram(positive)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_INVALID) from exc
    print(f"twists applied: {twists}, d: {dia.d}", file=sys.stderr)
    print(dia.to_json())
    return EXIT_OK


def cmd_check(args) -> int:
    dia, echo, twists = _load_diagram(args)
    diag: dict = {"input": echo, "twists": twists}
    augmented = diagrams.augment(dia)
    diag["augmentation_applied"] = augmented is not dia
    code = EXIT_OK
    try:
        diagrams.validate_nonsingular(augmented)
        diag["non_singular"] = True
    except diagrams.SingularDiagramError as exc:
        diag["non_singular"] = False
        diag["singular_witnesses"] = [
            {"pair": [list(t) for t in w[0]], "slice": w[1], "kind": w[2]}
            for w in exc.witnesses
        ]
        code = EXIT_INVALID
    if diag["non_singular"]:
        report = diagrams.crossing_report(augmented)
        diag["crossing_total"] = report.total
        diag["connectivity_bound_ok"] = diagrams.connectivity_bound_ok(augmented)
        try:
            sk, cell = cx.normalize(augmented)
            fcl = augmented.free_closure()
            diag["gap_separation_ok"] = True
            if cx.is_singular(cell, sk, fcl) is cx.Classification.INTERIOR:
                pair = cx.exit_set(cx.close(cx.enumerate_component(cell, sk, fcl), sk, fcl))
                prop = cx.properness_check(pair)
                diag["proper"] = prop.proper
                if not prop.proper:
                    diag["improper_reason"] = prop.reason
                    code = EXIT_IMPROPER
            else:
                diag["proper"] = None
                diag["non_singular"] = False
                code = EXIT_INVALID
        except cx.GapSeparationError as exc:
            diag["gap_separation_ok"] = False
            diag["gap_separation_error"] = str(exc)
            code = EXIT_GAP
    print(json.dumps(diag, sort_keys=True))
    return code


def cmd_complex(args) -> int:
    augmented, echo, pipeline, sk, cell, fcl = _prepare(args)
    if pipeline["mode"] == "component":
        pairs = [cx.exit_set(cx.close(cx.enumerate_component(cell, sk, fcl), sk, fcl))]
    else:
        pairs = cx.enumerate_all(sk, len(augmented.free), fcl)
    dump = _cell_dump(pairs)
    if args.emit_cells:
        with open(args.emit_cells, "w", encoding="utf-8") as fh:
            json.dump(dump, fh, sort_keys=True)
    print(json.dumps(dump, sort_keys=True))
    return EXIT_OK


def _add_input_flags(sub):
    sub.add_argument("input", nargs="?", help="diagram JSON path")
    sub.add_argument("--word", help="whitespace-separated signed generator word")
    sub.add_argument("--strands", type=int, help="strand count for --word")
    sub.add_argument("--free", help="comma-separated free strand labels, e.g. 0,2")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="braidchi")
    subs = parser.add_subparsers(dest="command", required=True)

    chi = subs.add_parser("chi", help="run the full pipeline and report homology")
    _add_input_flags(chi)
    chi.add_argument("--mode", choices=("component", "exhaustive"), default="component")
    chi.add_argument("--refine", type=int, default=None)
    chi.add_argument("--json", action="store_true")
    chi.add_argument("--emit-cells", dest="emit_cells", default=None)
    chi.set_defaults(fn=cmd_chi)

    fw = subs.add_parser("from-word", help="convert a word into a diagram JSON")
    fw.add_argument("--word", required=True)
    fw.add_argument("--strands", type=int, required=True)
    fw.add_argument("--free", required=True)
    fw.set_defaults(fn=cmd_from_word)

    ck = subs.add_parser("check", help="admissibility diagnostics")
    _add_input_flags(ck)
    ck.set_defaults(fn=cmd_check)

    cp = subs.add_parser("complex", help="dump the cell complex")
    _add_input_flags(cp)
    cp.add_argument("--mode", choices=("component", "exhaustive"), default="component")
    cp.add_argument("--refine", type=int, default=None)
    cp.add_argument("--emit-cells", dest="emit_cells", default=None)
    cp.set_defaults(fn=cmd_complex)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    raise SystemExit(main())
