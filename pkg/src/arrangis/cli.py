"""Command-line interface: ``arrangis <subcommand> ...``."""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .combinatorics import (Cycle, EnumerationCapExceeded, check_inner_cyclic, enumerate_inner_cyclic_characters,
                            validate_combinatorics)
from .depth import build_A_xi
from .geometry import GenericityExhausted
from .invariant import (combinatorics_from_wiring, default_infinity, infer_infinity, invariant,
                        invariant_from_wiring, wiring_for)
from .io import InputError, dumps, load_arrangement, load_character, load_wiring
from .wiring import print_wiring

EXIT_OK, EXIT_INPUT, EXIT_GENERICITY, EXIT_CAP = 0, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _parser() -> argparse.ArgumentParser:
    p = _Parser(prog="arrangis", description="Invariants and depth of complex line arrangements.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("--format", choices=("json", "text"), default="json")
        sp.add_argument("--output", metavar="PATH", help="write here instead of stdout")
        sp.add_argument("--seed", type=int, default=0, help="projection seed (default 0)")

    sp = sub.add_parser("combinatorics", help="points of an arrangement")
    sp.add_argument("--arrangement", required=True, metavar="PATH")
    common(sp)

    sp = sub.add_parser("inner-cyclic", help="enumerate inner-cyclic characters of bounded order")
    sp.add_argument("--arrangement", required=True, metavar="PATH")
    sp.add_argument("--order", type=int, default=6, metavar="N", help="character values in the N-th roots of unity")
    common(sp)

    sp = sub.add_parser("wiring", help="braided wiring diagram of an arrangement")
    sp.add_argument("--arrangement", required=True, metavar="PATH")
    sp.add_argument("--infinity", metavar="LABEL", help="line sent to infinity (default: the first line)")
    common(sp)

    sp = sub.add_parser("invariant", help="the invariant I(A, xi, gamma)")
    src = sp.add_mutually_exclusive_group(required=True)
    src.add_argument("--arrangement", metavar="PATH")
    src.add_argument("--wiring", metavar="PATH")
    sp.add_argument("--character", required=True, metavar="PATH")
    sp.add_argument("--cycle", required=True, metavar="L0,P:...,L1,...")
    sp.add_argument("--infinity", metavar="LABEL", help="support line of the cycle sent to infinity")
    common(sp)

    sp = sub.add_parser("depth", help="quasi-projective depth of a character")
    sp.add_argument("--arrangement", required=True, metavar="PATH")
    sp.add_argument("--character", required=True, metavar="PATH")
    common(sp)
    return p


def _text_combinatorics(data: dict) -> str:
    out = [f"lines: {' '.join(data['lines'])}"]
    out += [f"  {' '.join(p)}" for p in data["points"]]
    return "\n".join(out) + "\n"


def _text_matrix(report) -> str:
    rows = [[str(x) for x in row] for row in report.matrix.entries]
    width = max((len(s) for r in rows for s in r), default=1)
    lines = [f"depth {report.depth}", f"components: {' '.join(report.components)}"]
    lines += ["  " + " ".join(s.rjust(width) for s in r) for r in rows]
    for ev in report.edge_values:
        lines.append(f"edge {ev.edge[0]}-{ev.edge[1]}: {ev.cycle} -> {ev.value}")
    return "\n".join(lines) + "\n"


def run(args: argparse.Namespace) -> tuple[object, str]:
    """(json document, text rendering) for a parsed command line."""
    if args.command == "combinatorics":
        arr = load_arrangement(args.arrangement)
        comb = arr.combinatorics
        validate_combinatorics(comb)
        data = {**comb.to_json(), "valid": True}
        return data, _text_combinatorics(data)

    if args.command == "inner-cyclic":
        arr = load_arrangement(args.arrangement)
        if args.order < 1:
            raise InputError("--order must be positive")
        found = enumerate_inner_cyclic_characters(arr.combinatorics, args.order)
        data = {"order": args.order,
                "characters": [{"character": xi.to_json(), "cycle": str(c)} for xi, c in found]}
        text = "".join(f"{' '.join(str(v) for v in xi.values)}  via  {c}\n" for xi, c in found)
        return data, text or "none\n"

    if args.command == "wiring":
        arr = load_arrangement(args.arrangement)
        infinity = args.infinity or arr.labels[0]
        if infinity not in arr.labels:
            raise InputError(f"unknown line {infinity}")
        frame, w = wiring_for(arr, infinity, args.seed)
        data = {"infinity": infinity, "seed": args.seed, "attempt": frame.attempt, **w.to_json()}
        return data, print_wiring(w)

    if args.command == "invariant":
        if args.wiring:
            w = load_wiring(args.wiring)
            xi = load_character(args.character)
            infinity = args.infinity or infer_infinity(w, xi)
            cycle = Cycle.parse(args.cycle, combinatorics_from_wiring(w, infinity))
            result = invariant_from_wiring(w, xi, cycle, infinity)
        else:
            arr = load_arrangement(args.arrangement)
            xi = load_character(args.character, arr.labels)
            comb = arr.combinatorics
            cycle = Cycle.parse(args.cycle, comb)
            check_inner_cyclic(comb, xi, cycle)
            infinity = args.infinity or default_infinity(cycle, comb)
            result = invariant(arr, xi, cycle, seed=args.seed, infinity=infinity)
        data = result.to_json()
        return data, f"{result.value}  (witness {result.witness}, modulo ker xi)\n"

    if args.command == "depth":
        arr = load_arrangement(args.arrangement)
        xi = load_character(args.character, arr.labels)
        report = build_A_xi(arr, xi, seed=args.seed)
        return report.to_json(), _text_matrix(report)

    raise InputError(f"unknown command {args.command}")   # pragma: no cover


def main(argv: Sequence[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        data, text = run(args)
    except EnumerationCapExceeded as exc:
        print(f"arrangis: {exc}", file=sys.stderr)
        return EXIT_CAP
    except GenericityExhausted as exc:
        print(f"arrangis: {exc}", file=sys.stderr)
        return EXIT_GENERICITY
    except (ValueError, KeyError) as exc:
        print(f"arrangis: {exc}", file=sys.stderr)
        return EXIT_INPUT
    out = dumps(data) if args.format == "json" else text
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
