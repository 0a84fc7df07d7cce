"""
Command line: `python workbench.py <command> ...`

    group info|classes [--group NAME]
    chartab [--group NAME]
    decompose "<expr>" [--style ascii|paper]
    branch [--sub H|K]
    idempotents
    dirac
    hypercube
    suite <name> [--format json|md] [--out PATH]

Exit codes: 0 on success, 1 when a verification fails, 2 on usage or parse errors.
"""
import argparse
import json
import logging
import sys
from pathlib import Path

from . import algebra
from .catalog import GROUP_NAMES, group_by_name, named_table
from .chartab import paper_label, table_json, table_markdown
from .expr import eval_expression, parse_expression, render_expression
from .group import classes_json, verify_relations
from .report import render_report
from .reps import hypercube_closures
from .suites import SUITES, run_suite
from .utils import ExprParseError, WorkbenchError, configure, settings, setup_logging

logger = logging.getLogger(__name__)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _emit(payload, fmt: str, markdown=None) -> None:
    if fmt == "json" or markdown is None:
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        print(markdown)


# commands


def cmd_group(args) -> int:
    g = group_by_name(args.group)
    if args.view == "classes":
        payload = classes_json(g, [g.classes[c] for c in named_table(args.group).columns]
                               if args.group in ("G", "H", "K") else None)
        rows = ["| class | order | size |", "|---|---|---|"]
        rows += [f"| {c['rep_word']} | {c['element_order']} | {c['size']} |" for c in payload["classes"]]
        _emit(payload, args.format, "\n".join(rows))
        return 0
    relations = verify_relations(g)
    payload = {
        "group": g.name,
        "order": g.order,
        "generators": list(g.generator_names),
        "classes": len(g.classes),
        "exponent": g.exponent,
        "relations": [{"relation": c.relation, "pass": c.passed} for c in relations.checks],
    }
    lines = [f"{g.name}: order {g.order}, {len(g.classes)} classes, generated by {', '.join(g.generator_names)}"]
    lines += [f"  {c.relation}: {'holds' if c.passed else 'FAILS'}" for c in relations.checks]
    _emit(payload, args.format, "\n".join(lines))
    return 0 if relations.all_passed else 1


def cmd_chartab(args) -> int:
    table = named_table(args.group)
    _emit(table_json(table), args.format, table_markdown(table))
    return 0


def cmd_decompose(args) -> int:
    e = parse_expression(args.expression)
    result = eval_expression(e)
    payload = {"expression": render_expression(e), "group": result.group, "terms": result.as_dict()}
    _emit(payload, args.format, f"{render_expression(e)} = {result.render(args.style)}")
    return 0


def cmd_branch(args) -> int:
    big, small = named_table("G"), named_table(args.sub)
    rows = {chi.label: eval_expression(f"Res[{args.sub}]({chi.label})") for chi in big}
    payload = {
        "group": "G",
        "subgroup": args.sub,
        "columns": list(small.labels),
        "rows": {label: [d[s] for s in small.labels] for label, d in rows.items()},
    }
    lines = ["| | " + " | ".join(small.labels) + " |", "|---" * (len(small) + 1) + "|"]
    for label, counts in payload["rows"].items():
        lines.append(f"| {paper_label(label)} | " + " | ".join(str(n) for n in counts) + " |")
    _emit(payload, args.format, "\n".join(lines))
    return 0


def cmd_idempotents(args) -> int:
    leptons = algebra.lepton_idempotents()
    iso = algebra.lepton_m2_isomorphism()
    projectors = algebra.projector_report()
    structures = [algebra.complex_structure_check(sign) for sign in (1, -1)]
    payload = {
        "leptons": {
            "elements": {name: getattr(leptons, name).terms_json() for name in ("p", "q", "r")},
            "checks": [{"property": c.name, "pass": c.passed} for c in leptons.checks + iso.checks],
        },
        "projectors": [p.to_json() for p in projectors],
        "complex_structures": [s.to_json() for s in structures],
    }
    _emit(payload, "json")
    passed = leptons.all_passed and iso.all_passed and all(s.squares_to_minus_e for s in structures)
    return 0 if passed else 1


def cmd_dirac(args) -> int:
    table = algebra.dirac_relation_table()
    lines = ["| pair | relation | Dirac matrices | agrees |", "|---|---|---|---|"]
    for (x, y), e in table.pairs.items():
        if algebra.QUINTUPLE.index(x) < algebra.QUINTUPLE.index(y):
            lines.append(f"| {x}, {y} | {e.witness} | {e.gamma} | {'yes' if e.agrees else 'no'} |")
    _emit(table.to_json(), args.format, "\n".join(lines))
    return 0


def cmd_hypercube(args) -> int:
    payload = [
        {"generators": name, "order": result.order, "signed_permutations": result.signed_permutations}
        for name, result in hypercube_closures()
    ]
    lines = [f"{p['generators']}: {p['order']}" for p in payload]
    _emit(payload, args.format, "\n".join(lines))
    return 0


def cmd_suite(args) -> int:
    report, code = run_suite(args.name)
    if code == 2:
        print(f"unknown suite {args.name}; known: {', '.join(list(SUITES) + ['all'])}", file=sys.stderr)
        return 2
    text = render_report(report, args.format)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return code


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="workbench", description="Exact binary octahedral group workbench")
    parser.add_argument("--prime", type=int, help="prime for Dixon's method (default from settings)")
    parser.add_argument("--closure-cap", type=int, help="maximum closure size")
    parser.add_argument("--log-level", help="logging level (default WARNING)")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    fmt = dict(choices=("json", "md"), default=None, help="output format")

    p = sub.add_parser("group", help="group order, relations and classes")
    p.add_argument("view", choices=("info", "classes"))
    p.add_argument("--group", default="G", choices=GROUP_NAMES)
    p.add_argument("--format", **fmt)
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("chartab", help="character table")
    p.add_argument("--group", default="G", choices=GROUP_NAMES)
    p.add_argument("--format", **fmt)
    p.set_defaults(func=cmd_chartab)

    p = sub.add_parser("decompose", help="decompose a representation expression")
    p.add_argument("expression")
    p.add_argument("--style", default="ascii", choices=("ascii", "paper"))
    p.add_argument("--format", **fmt)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("branch", help="restriction table from G")
    p.add_argument("--sub", default="H", choices=("H", "K"))
    p.add_argument("--format", **fmt)
    p.set_defaults(func=cmd_branch)

    p = sub.add_parser("idempotents", help="idempotents, projectors and complex structures")
    p.set_defaults(func=cmd_idempotents)

    p = sub.add_parser("dirac", help="relations of i, j, k, d, id")
    p.add_argument("--format", **fmt)
    p.set_defaults(func=cmd_dirac)

    p = sub.add_parser("hypercube", help="closure orders of the hypercube generators")
    p.add_argument("--format", **fmt)
    p.set_defaults(func=cmd_hypercube)

    p = sub.add_parser("suite", help="run a verification suite")
    p.add_argument("name")
    p.add_argument("--format", **fmt)
    p.add_argument("--out", help="write the report here instead of stdout")
    p.set_defaults(func=cmd_suite)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 2
    try:
        configure(prime=args.prime, closure_cap=args.closure_cap, log_level=args.log_level)
    except ValueError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 2
    setup_logging()
    if getattr(args, "format", None) is None:
        args.format = settings.report_format
    try:
        return args.func(args)
    except ExprParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        if e.text:
            print(f"  {e.text}\n  {' ' * e.position}^", file=sys.stderr)
        return 2
    except WorkbenchError as e:
        logger.error("%s", e)
        print(f"error: {e}", file=sys.stderr)
        return 2
