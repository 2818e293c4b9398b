"""Command-line front end.

Exit codes are fixed for scripting: 0 success, 2 malformed input,
3 violated precondition (for example asking to explain a function
outside the requested class), 4 internal defect. ``--format structured``
switches every command from human-readable text to JSON.
"""

from __future__ import annotations

import argparse
import json
import sys

from .census import run_census, verify_fixtures
from .classify import classify
from .errors import InternalDefectError, ParseError, PreconditionError
from .explain import EXPLAIN_TARGETS, explain, welfare_report
from .fileformat import (
    parse_choice_file,
    parse_model_file,
    print_choice_file,
    print_model_file,
)
from .forward import simulate
from .relations import RevealedKind, reveal

RELATION_KINDS = {kind.value: kind for kind in RevealedKind}


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror or exc}") from None


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _emit_json(payload) -> None:
    sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def cmd_classify(args) -> int:
    c = parse_choice_file(_read(args.file))
    membership = classify(c)
    if args.format == "structured":
        _emit_json(membership.to_dict())
        return 0
    lines = []
    for name, value in membership.flags().items():
        lines.append(f"{name}: {str(value).lower()}")
    for name in ("cla", "cola", "csla", "ccla", "pilc"):
        witness = membership.witnesses[name]
        if witness.cycle is not None:
            lines.append(f"witness {name}: {witness.render()}")
    if membership.rat_witness is not None:
        g = c.ground
        lines.append(
            f"witness rat: switch ({g.format_menu(membership.rat_witness.inner)}, "
            f"{g.format_menu(membership.rat_witness.outer)})"
        )
    _emit("\n".join(lines))
    return 0


def cmd_relations(args) -> int:
    c = parse_choice_file(_read(args.file))
    relation = reveal(c, RELATION_KINDS[args.kind])
    pairs = relation.label_pairs()
    if args.format == "structured":
        _emit_json({"kind": args.kind, "edges": [list(p) for p in pairs]})
        return 0
    if not pairs:
        _emit("(empty relation)")
        return 0
    _emit("\n".join(f"{a} -> {b}" for a, b in pairs))
    return 0


def cmd_explain(args) -> int:
    c = parse_choice_file(_read(args.file))
    explanation = explain(c, args.target)
    model_text = print_model_file(explanation.to_model())
    if args.format == "structured":
        _emit_json({"class": explanation.kind, "model": model_text})
        return 0
    _emit(model_text)
    return 0


def cmd_welfare(args) -> int:
    c = parse_choice_file(_read(args.file))
    facts = welfare_report(c, args.target)
    if args.format == "structured":
        _emit_json({"class": args.target, "facts": [f.to_dict() for f in facts]})
        return 0
    if not facts:
        _emit("(no violations of contraction consistency: nothing to infer)")
        return 0
    _emit("\n".join(fact.render() for fact in facts))
    return 0


def cmd_simulate(args) -> int:
    model = parse_model_file(_read(args.file))
    c = simulate(model)
    if args.format == "structured":
        _emit_json(
            {
                "ground": list(c.ground.labels),
                "choices": {
                    c.ground.format_menu(mask): c.ground.labels[c.choices[mask]]
                    for mask in c.menus(min_size=2)
                },
            }
        )
        return 0
    _emit(print_choice_file(c))
    return 0


def cmd_census(args) -> int:
    report = run_census(args.n, workers=args.workers)
    if args.format == "structured":
        _emit_json(report.to_dict())
    else:
        _emit(report.to_text())
    return 0


def cmd_verify_paper(args) -> int:
    report = verify_fixtures()
    if args.format == "structured":
        _emit_json(report.to_dict())
    else:
        _emit(report.to_text())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="limattn",
        description="Analyze finite choice functions through limited attention.",
    )
    parser.add_argument(
        "--format",
        choices=("human", "structured"),
        default="human",
        help="output style: readable text or JSON",
    )
    # Accepted after the subcommand too; SUPPRESS keeps the subparser
    # from overwriting a value parsed at the top level.
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("human", "structured"),
        default=argparse.SUPPRESS,
        help="output style: readable text or JSON",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="class membership of a choice table")
    p.add_argument("file")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("relations", parents=[common], help="a revealed relation as an edge list")
    p.add_argument("file")
    p.add_argument("--kind", required=True, choices=sorted(RELATION_KINDS))
    p.set_defaults(func=cmd_relations)

    p = sub.add_parser("explain", parents=[common], help="construct a certifying model")
    p.add_argument("file")
    p.add_argument("--class", dest="target", required=True, choices=EXPLAIN_TARGETS)
    p.set_defaults(func=cmd_explain)

    p = sub.add_parser("welfare", parents=[common], help="facts every representation must satisfy")
    p.add_argument("file")
    p.add_argument("--class", dest="target", required=True, choices=("cola", "csla", "ccla"))
    p.set_defaults(func=cmd_welfare)

    p = sub.add_parser("simulate", parents=[common], help="run a model file on every menu")
    p.add_argument("file")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("census", parents=[common], help="classify the whole universe for small n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("verify-paper", parents=[common], help="check the bundled benchmark catalog")
    p.set_defaults(func=cmd_verify_paper)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except InternalDefectError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
