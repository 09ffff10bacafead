from __future__ import annotations

import argparse
import itertools
import json
import logging
import sys

from src.census.models import NumericCensus, degree_label
from src.census.routes import numeric_payload, symbolic_payload
from src.census.services import assemble, check_q, predicted_class_count
from src.chevalley.services import dump_table, table_for
from src.cli.report import build_report
from src.coregraph.services import arm_leg, build_graph, graph_dump
from src.coresolver.services import CoreSolver, extract_equation, family_counts_numeric
from src.errors import CensusError, PreconditionError
from src.logconf import setup_logging
from src.oracle.services import abelianization_order, class_count_of_core, conjugacy_class_count, group_for
from src.patterns.services import representable_sets
from src.reduction.services import core_form, inventory

logger = logging.getLogger(__name__)


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True, default=str))
    else:
        print(text)


def _group(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("type_tag", choices=list("ABCDEFG"))
    parser.add_argument("rank", type=int)


def _core(args):
    inv = inventory(table_for(args.type_tag, args.rank, args.p), classify=False, threads=args.threads)
    cores = inv.nonabelian
    if not 1 <= args.core_id <= len(cores):
        raise PreconditionError(f"core id {args.core_id} outside 1..{len(cores)}")
    return cores[args.core_id - 1]


def cmd_repsets(args) -> int:
    sets = representable_sets(table_for(args.type_tag, args.rank, args.p))
    payload = {"type_tag": args.type_tag, "rank": args.rank, "p": args.p, "count": len(sets),
               "sets": [r.as_dict() for r in sets]}
    _emit(args, payload, str(len(sets)))
    return 0


def cmd_cores(args) -> int:
    tab = table_for(args.type_tag, args.rank, args.p)
    inv = inventory(tab, classify=args.p == 2, threads=args.threads)
    payload = {
        "forms": {str(form): n for form, n in inv.forms.items()},
        "classes": inv.classes,
        "total": inv.total_nonabelian,
        "cores": [{"id": cid, "form": str(core_form(tab, c)), **c.as_dict()}
                  for cid, c in enumerate(inv.nonabelian, start=1)],
    }
    lines = [f"{form}  {n}" for form, n in inv.forms.items()]
    lines.append(f"{inv.total_nonabelian} nonabelian cores in {len(inv.forms)} forms")
    lines += [f"{label}  {len(ids)}" for label, ids in inv.classes.items()]
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_graph(args) -> int:
    tab = table_for(args.type_tag, args.rank, args.p)
    core = _core(args)
    graph = build_graph(tab, core)
    armleg = arm_leg(graph, core)
    payload = graph_dump(graph, armleg)
    text = [f"edges {graph.edge_list()}", f"I {sorted(armleg.I)}", f"J {sorted(armleg.J)}"]
    if not graph.heart and args.p == 2:
        payload["equation"] = extract_equation(tab, core, armleg).render()
        text.append(payload["equation"])
    _emit(args, payload, "\n".join(text))
    return 0


def cmd_solve_core(args) -> int:
    tab = table_for(args.type_tag, args.rank, 2)
    ctx = check_q(args.q, args.expensive)
    core = _core(args)
    hist = family_counts_numeric(tab, core, ctx)
    payload = {"q": args.q, "histogram": {degree_label(d): n for d, n in sorted(hist.counts.items())},
               "values": hist.evaluate()}
    if args.diagnostics:
        solver = CoreSolver(tab, core, ctx)
        rows = []
        for a in itertools.product(ctx.units(), repeat=len(solver.Z)):
            stab = solver.stabilizers(a)
            rows.append({"a": list(a), "x": len(stab.xprime), "y": len(stab.yprime),
                         "x_is_subgroup": stab.x_is_subgroup})
        payload["per_a"] = rows
    text = "\n".join(f"{degree_label(d):>8}  {n}" for d, n in sorted(hist.counts.items()))
    _emit(args, payload, text)
    return 0


def cmd_census(args) -> int:
    census = assemble(args.type_tag, args.rank, args.p, None if args.symbolic else args.q,
                      threads=args.threads, expensive=args.expensive)
    if isinstance(census, NumericCensus):
        payload = numeric_payload(census)
        lines = [f"{d:>12}  {n}" for d, n in sorted(census.counts.items())]
        lines.append(f"{'total':>12}  {census.total}")
    else:
        payload = symbolic_payload(census)
        lines = [f"{degree_label(d):>8}  {c.in_v()}" for d, c in census.sorted_entries()]
        lines.append(f"{'total':>8}  {census.total.even.as_expr()}")
    lines += [f"{k}: {v}" for k, v in sorted(census.provenance.items())]
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_oracle(args) -> int:
    ctx = check_q(args.q, args.expensive)
    if args.oracle_command == "core-classes":
        tab = table_for(args.type_tag, args.rank, 2)
        core = _core(args)
        brute = class_count_of_core(tab, core, ctx, args.expensive)
        predicted = predicted_class_count(tab, core.quattern, ctx)
        _emit(args, {"classes": brute, "predicted": predicted}, f"{brute} classes, predicted {predicted}")
        return 0 if brute == predicted else 1
    grp = group_for(args.type_tag, args.rank, ctx)
    if args.oracle_command == "classes":
        value = conjugacy_class_count(grp, args.expensive)
    else:
        value = abelianization_order(grp, args.expensive)
    _emit(args, {args.oracle_command: value, "order_log2": grp.log2_order}, str(value))
    return 0


def cmd_table(args) -> int:
    text = dump_table(table_for(args.type_tag, args.rank, args.p), reduced=args.reduced)
    _emit(args, {"table": text}, text.rstrip("\n"))
    return 0


def cmd_report(args) -> int:
    numeric_q = tuple(qv for qv in (2, 4, 8) if qv <= args.q_max)
    report = build_report(threads=args.threads, numeric_q=numeric_q, max_f=args.max_f)
    _emit(args, report.as_dict(), report.render())
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print JSON instead of a table")
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--verbose", action="store_true")
    common.add_argument("--p", type=int, default=2)
    common.add_argument("--q", type=int, default=2)
    common.add_argument("--expensive", action="store_true", help="allow q = 16 and the larger oracle budget")

    parser = argparse.ArgumentParser(prog="unipotent-census",
                                     description="Character census of Sylow p-subgroups of Chevalley groups")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("repsets", parents=[common])
    _group(p)
    p.set_defaults(handler=cmd_repsets)

    p = sub.add_parser("cores", parents=[common])
    _group(p)
    p.set_defaults(handler=cmd_cores)

    p = sub.add_parser("graph", parents=[common])
    _group(p)
    p.add_argument("core_id", type=int)
    p.set_defaults(handler=cmd_graph)

    p = sub.add_parser("solve-core", parents=[common])
    _group(p)
    p.add_argument("core_id", type=int)
    p.add_argument("--diagnostics", action="store_true", help="stabilizer sizes for every parameter tuple")
    p.set_defaults(handler=cmd_solve_core)

    p = sub.add_parser("census", parents=[common])
    _group(p)
    p.add_argument("--symbolic", action="store_true")
    p.set_defaults(handler=cmd_census)

    p = sub.add_parser("oracle")
    oracle = p.add_subparsers(dest="oracle_command", required=True)
    for name in ("classes", "abelianization"):
        o = oracle.add_parser(name, parents=[common])
        _group(o)
        o.set_defaults(handler=cmd_oracle)
    o = oracle.add_parser("core-classes", parents=[common])
    _group(o)
    o.add_argument("core_id", type=int)
    o.set_defaults(handler=cmd_oracle)

    p = sub.add_parser("table", parents=[common])
    _group(p)
    p.add_argument("--reduced", action="store_true")
    p.set_defaults(handler=cmd_table)

    p = sub.add_parser("report", parents=[common])
    p.add_argument("--paper-tables", action="store_true", help="reproduce the published tables (default)")
    p.add_argument("--q-max", type=int, default=4)
    p.add_argument("--max-f", type=int, default=6)
    p.set_defaults(handler=cmd_report)
    return parser


def run(argv: list[str] | None = None) -> int:
    """
    The run function parses argv and dispatches to the subcommand.

    :param argv: list[str] | None: Arguments without the program name
    :return: 0 on success, 1 when a comparison does not match, 2 on error
    """
    args = build_parser().parse_args(argv)
    setup_logging(verbose=args.verbose)
    try:
        return args.handler(args)
    except CensusError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
