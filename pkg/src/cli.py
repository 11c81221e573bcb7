"""
Command-line front end.

    python -m src.cli check fixtures/wet_floor.scn "B[mary] wetFloor"
    python -m src.cli explain fixtures/wet_floor.scn --explainer mary --explainee bob --explanandum wetFloor
    python -m src.cli discrepancies fixtures/wet_floor.scn --between mary,bob --perspective mary
    python -m src.cli adequacy fixtures/wet_floor_inadequate_1.scn --explainer mary --explainee bob --explanandum wetFloor
    python -m src.cli postulates --operator dalal --vocab p,q
    python -m src.cli verify-theorems

Exit status: 0 affirmative, 1 negative verdict, 2 error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

import numpy as np
import pandas as pd
from rich.console import Console
from rich.table import Table

from config import OPERATOR_NAMES, get_config
from src.epistemic.postulates import check_agm_postulates
from src.epistemic.semantics import holds
from src.errors import EngineError, describe_error
from src.explain.adequacy import is_adequate
from src.explain.discrepancy import find_discrepancies
from src.explain.pool import FormulaPool
from src.explain.ranking import PreferenceOrder, results_frame, synthesize
from src.logic.parser import render
from src.oracle.theorems import bundled_scenarios, reports_frame, verify_all
from src.scenario.loader import build_vector, load
from src.scenario.parsing_utils import parse_csv
from src.scenario.queries import evaluate_queries
from src.utils.logger import setup_logger

logger = setup_logger(__name__)

EXIT_OK, EXIT_NEGATIVE, EXIT_ERROR = 0, 1, 2


def build_parser() -> argparse.ArgumentParser:
    config = get_config()

    parser = argparse.ArgumentParser(
        prog="epistemic",
        description="Evaluate, synthesize and verify belief-based explanations",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=__doc__,
    )
    parser.add_argument(
        "--format",
        choices=("table", "records"),
        default="table",
        help="Output as a text table or as JSON records (default: table)"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    check = commands.add_parser("check", help="Evaluate an agent formula, or the scenario's own queries")
    check.add_argument("scenario", help="Scenario file")
    check.add_argument("formula", nargs="?", help="Agent formula; omitted runs the bundled queries")

    explain = commands.add_parser("explain", help="Rank explanations from one agent's perspective")
    explain.add_argument("scenario", help="Scenario file")
    explain.add_argument("--explainer", required=True)
    explain.add_argument("--explainee", required=True)
    explain.add_argument("--explanandum", required=True, help="Formula to explain")
    _pool_flags(explain, config)
    explain.add_argument(
        "--order",
        default=config.search.order,
        help=f"Comma list of criteria (default: {config.search.order})"
    )
    explain.add_argument("--top", type=int, default=None, help="Show only the first N results")

    discrepancies = commands.add_parser("discrepancies", help="List belief discrepancies between two agents")
    discrepancies.add_argument("scenario", help="Scenario file")
    discrepancies.add_argument("--between", required=True, help="Two agents, e.g. mary,bob")
    discrepancies.add_argument("--perspective", default=None, help="Agent whose beliefs are consulted")
    discrepancies.add_argument(
        "--pool-literals",
        type=int,
        default=config.search.pool_literals,
        help="Longest conjunction considered (default: from config)"
    )

    adequacy = commands.add_parser("adequacy", help="Check an agent's model of another agent")
    adequacy.add_argument("scenario", help="Scenario file")
    adequacy.add_argument("--explainer", required=True)
    adequacy.add_argument("--explainee", required=True)
    adequacy.add_argument("--explanandum", required=True, help="Formula to explain")
    _pool_flags(adequacy, config)

    postulates = commands.add_parser("postulates", help="Run the AGM postulate harness")
    postulates.add_argument("--operator", choices=OPERATOR_NAMES, default=config.engine.default_operator)
    postulates.add_argument("--vocab", default=",".join(config.oracle.postulate_vocab), help="e.g. p,q")
    postulates.add_argument("--max-literals", type=int, default=2)

    theorems = commands.add_parser("verify-theorems", help="Run the five theorem harnesses")
    theorems.add_argument(
        "--scenario",
        action="append",
        default=None,
        help="Scenario file (repeatable; default: every bundled fixture)"
    )
    theorems.add_argument("--progress", action="store_true", help="Show progress bars")

    return parser


def _pool_flags(parser: argparse.ArgumentParser, config) -> None:
    parser.add_argument(
        "--pool-literals",
        type=int,
        default=config.search.pool_literals,
        help="Longest conjunction among candidates (default: from config)"
    )
    parser.add_argument(
        "--modal-depth",
        type=int,
        choices=(0, 1),
        default=config.search.modal_depth,
        help="1 adds belief literals B[j] l and ~B[j] l (default: from config)"
    )
    parser.add_argument(
        "--abducibles",
        default=None,
        help="Symbols candidates may use (default: every symbol the explanandum does not mention)"
    )


def _emit(frame: pd.DataFrame, fmt: str, title: Optional[str] = None) -> None:
    if fmt == "records":
        sys.stdout.write(frame.to_json(orient="records", force_ascii=False) + "\n")
        return
    table = Table(title=title)
    for column in frame.columns:
        table.add_column(str(column))
    for row in frame.itertuples(index=False):
        table.add_row(*(_cell(v) for v in row))
    Console(file=sys.stdout, highlight=False).print(table)


def _cell(value) -> str:
    if value is None or value is pd.NA:
        return "-"
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    return str(value)


def _pool(args, scenario, explanandum) -> FormulaPool:
    return FormulaPool.for_explanandum(
        scenario.vocabulary,
        explanandum,
        scenario.agents,
        args.pool_literals,
        args.modal_depth,
        parse_csv(args.abducibles),
    )


def cmd_check(args) -> int:
    scenario = load(args.scenario)
    vector = build_vector(scenario)

    if args.formula:
        value = holds(vector, scenario.parse(args.formula))
        sys.stdout.write(("true" if value else "false") + "\n")
        return EXIT_OK if value else EXIT_NEGATIVE

    frame = evaluate_queries(scenario, vector)
    _emit(frame, args.format, title=str(scenario.source))
    return EXIT_OK if frame["ok"].all() else EXIT_NEGATIVE


def cmd_explain(args) -> int:
    scenario = load(args.scenario)
    vector = build_vector(scenario)
    beta = scenario.parse(args.explanandum)
    order = PreferenceOrder.parse(args.order)

    results = synthesize(vector, args.explainer, args.explainee, beta, _pool(args, scenario, beta), order)
    if args.top is not None:
        results = results[: args.top]

    title = f"{args.explainer} explains {render(beta, scenario.vocabulary)} to {args.explainee}"
    _emit(results_frame(results, scenario.vocabulary), args.format, title=title)
    return EXIT_OK if results else EXIT_NEGATIVE


def cmd_discrepancies(args) -> int:
    scenario = load(args.scenario)
    vector = build_vector(scenario)
    pair = parse_csv(args.between) or []
    if len(pair) != 2:
        raise ValueError(f"--between takes two agents, got {args.between!r}")

    pool = FormulaPool(scenario.vocabulary, args.pool_literals).propositional
    found = find_discrepancies(vector, pair[0], pair[1], pool, args.perspective)
    frame = pd.DataFrame({"discrepancy": [render(f, scenario.vocabulary) for f in found]})
    _emit(frame, args.format, title=f"{pair[0]} / {pair[1]}")
    return EXIT_OK if found else EXIT_NEGATIVE


def cmd_adequacy(args) -> int:
    scenario = load(args.scenario)
    vector = build_vector(scenario)
    beta = scenario.parse(args.explanandum)

    verdict = is_adequate(vector, args.explainer, args.explainee, beta, _pool(args, scenario, beta))

    def names(formulas):
        return [render(f, scenario.vocabulary) for f in formulas]

    if args.format == "records":
        record = {
            "adequate": verdict.adequate,
            "witnesses": names(verdict.witnesses),
            "spurious": names(verdict.spurious),
            "missed": names(verdict.missed),
        }
        sys.stdout.write(json.dumps(record, ensure_ascii=False) + "\n")
    else:
        sys.stdout.write(("adequate" if verdict.adequate else "inadequate") + "\n")
        rows = [{"witness": w, "kind": "spurious"} for w in names(verdict.spurious)]
        rows += [{"witness": w, "kind": "missed"} for w in names(verdict.missed)]
        if rows:
            _emit(pd.DataFrame(rows, columns=["witness", "kind"]), args.format)
    return EXIT_OK if verdict.adequate else EXIT_NEGATIVE


def cmd_postulates(args) -> int:
    vocabulary = parse_csv(args.vocab)
    if not vocabulary:
        raise ValueError("--vocab needs at least one symbol")
    report = check_agm_postulates(args.operator, vocabulary, args.max_literals)
    _emit(report.to_frame(), args.format, title=f"AGM postulates: {args.operator} over {','.join(vocabulary)}")
    return EXIT_OK if report.core_passed else EXIT_NEGATIVE


def cmd_verify_theorems(args) -> int:
    scenarios = [load(path) for path in args.scenario] if args.scenario else bundled_scenarios()
    reports = verify_all(scenarios, show_progress=args.progress or None)
    _emit(reports_frame(reports), args.format, title="Theorem verification")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_NEGATIVE


COMMANDS = {
    "check": cmd_check,
    "explain": cmd_explain,
    "discrepancies": cmd_discrepancies,
    "adequacy": cmd_adequacy,
    "postulates": cmd_postulates,
    "verify-theorems": cmd_verify_theorems,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_ERROR

    try:
        return COMMANDS[args.command](args)
    except EngineError as e:
        message = describe_error(e)
    except ValueError as e:
        message = f"ValueError: {e}"
    logger.debug(message)
    sys.stderr.write(f"error: {message}\n")
    return EXIT_ERROR


def main() -> int:
    return run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
