# SPDX-License-Identifier: GPL-3.0-or-later
#
# Grundy Kit: maximizing colorings and self-stabilizing frequency assignment.
# Copyright (C) 2025 Grundy Kit contributors

"""
Command-line entry point for Grundy Kit.

Payloads (graphs, JSON, CSV) go to standard output; logs and error
messages go to standard error. Exit codes: 0 success, 1 invalid input,
2 size limit exceeded, 3 property does not hold or no convergence.
"""

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from typing import Any, List, Optional

from pydantic import ValidationError

from config_loader import AppConfig, ConfigLoader, parse_limit
from grundy_kit.adhoc import Scenario, get_supported_rules, random_scenario, run, trace_to_csv
from grundy_kit.chordal import NotChordal, chordal_color, perfect_elimination_order
from grundy_kit.coloring import (
    ColoringKind,
    coloring_to_json,
    coloring_to_lines,
    exact_parameter,
    exhaustive_assignment_oracle,
    binomial_tree,
    grundy_permutation_oracle,
    parameter_bounds,
    parameter_table,
    parse_coloring,
    verify,
)
from grundy_kit.errors import InvalidInputError, LimitExceededError, NotChordalError
from grundy_kit.formats import FormatFactory, parse_graph, serialize_graph
from grundy_kit.graph import (
    FamilySpec,
    Graph,
    build_family,
    get_operator,
    interval_graph,
    power_graph,
    random_graph,
)
from grundy_kit.graph.families import FAMILY_PARAMETERS

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID_INPUT = 1
EXIT_LIMIT_EXCEEDED = 2
EXIT_PROPERTY_FAILED = 3

KINDS = [kind.value for kind in ColoringKind]


class CliArgumentParser(argparse.ArgumentParser):
    """Usage errors exit with the invalid-input code"""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID_INPUT, f"{self.prog}: error: {message}\n")


@dataclass
class CliContext:
    config: AppConfig
    graph_format: str
    limit: Optional[int]
    seed: int

    def limit_for(self, kind: ColoringKind) -> int:
        return self.limit if self.limit is not None else self.config.solver.limit_for(kind)

    def oracle_limit(self) -> int:
        return self.limit if self.limit is not None else self.config.solver.oracle_limit

    def witness_limit(self) -> int:
        return self.limit if self.limit is not None else self.config.solver.witness_limit


def configure_logging(log_level_str: str):
    """Configure the root logger once, on standard error"""
    if log_level_str == "DISABLED":
        log_level = logging.CRITICAL + 1
    else:
        log_level = getattr(logging, log_level_str, logging.WARNING)

    root_logger = logging.getLogger()
    if not root_logger.handlers:
        logging.basicConfig(
            level=log_level,
            stream=sys.stderr,
            format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
            datefmt='%Y-%m-%d %H:%M:%S'
        )
    else:
        root_logger.setLevel(log_level)


def read_text(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, 'r', encoding='utf-8') as f:
            return f.read()
    except UnicodeDecodeError as e:
        source = "standard input" if path == "-" else f"'{path}'"
        raise InvalidInputError(f"cannot decode {source} as UTF-8: invalid byte at offset {e.start}")
    except OSError as e:
        raise InvalidInputError(f"cannot read '{path}': {e.strerror or e}")


def read_graph(path: str, ctx: CliContext) -> Graph:
    return parse_graph(ctx.graph_format, read_text(path))


def emit_json(payload: Any):
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")


def emit_graph(g: Graph, ctx: CliContext, colors: Optional[List[int]] = None):
    sys.stdout.write(serialize_graph(ctx.graph_format, g, colors))


def parse_number(token: str, what: str, kind: type = int):
    try:
        return kind(token)
    except ValueError:
        raise InvalidInputError(f"{what} must be a number, got '{token}'")


def single_stdin(paths: List[str]):
    if sum(1 for p in paths if p == "-") > 1:
        raise InvalidInputError("at most one input can come from standard input")


# Subcommand handlers; each returns an exit code


def cmd_gen(args, ctx: CliContext) -> int:
    name, params = args.family, args.params
    if name == "random":
        if len(params) != 2:
            raise InvalidInputError("random takes parameters n p")
        g = random_graph(parse_number(params[0], "n"), parse_number(params[1], "p", float), ctx.seed)
    elif name == "interval":
        if len(params) != 1:
            raise InvalidInputError("interval takes parameter n")
        g = interval_graph(parse_number(params[0], "n"), ctx.seed)
    else:
        values = [parse_number(p, f"{name} parameter") for p in params]
        g = build_family(FamilySpec.from_params(name, values))
    logger.info(f"✅ Generated {name} with {g.vertex_count} vertices and {g.edge_count} edges")
    emit_graph(g, ctx)
    return EXIT_OK


def cmd_op(args, ctx: CliContext) -> int:
    if args.operator == "power":
        if len(args.graphs) > 1:
            raise InvalidInputError("power takes a single graph")
        g = read_graph(args.graphs[0] if args.graphs else "-", ctx)
        emit_graph(power_graph(g, args.k), ctx)
        return EXIT_OK

    if len(args.graphs) != 2:
        raise InvalidInputError(f"{args.operator} takes two graphs")
    single_stdin(args.graphs)
    left, right = (read_graph(path, ctx) for path in args.graphs)
    emit_graph(get_operator(args.operator)(left, right), ctx)
    return EXIT_OK


def cmd_exact(args, ctx: CliContext) -> int:
    kind = ColoringKind.parse(args.kind)
    g = read_graph(args.graph, ctx)
    k, certificate = exact_parameter(g, kind, limit=ctx.limit_for(kind))
    if args.lines:
        sys.stdout.write(coloring_to_lines(certificate))
        return EXIT_OK
    emit_json({"kind": kind.value, "k": k, "certificate": list(certificate.colors)})
    return EXIT_OK


def cmd_oracle(args, ctx: CliContext) -> int:
    kind = ColoringKind.parse(args.kind)
    g = read_graph(args.graph, ctx)
    if kind is ColoringKind.GRUNDY:
        k = grundy_permutation_oracle(g, limit=ctx.oracle_limit())
    else:
        k = exhaustive_assignment_oracle(g, kind, limit=ctx.oracle_limit())
    emit_json({"kind": kind.value, "k": k, "vertices": g.vertex_count})
    return EXIT_OK


def cmd_verify(args, ctx: CliContext) -> int:
    kind = ColoringKind.parse(args.kind)
    single_stdin([args.graph, args.coloring])
    g = read_graph(args.graph, ctx)
    coloring = parse_coloring(read_text(args.coloring))
    report = verify(g, coloring, kind)
    emit_json(report.to_dict())
    return EXIT_OK if report.valid else EXIT_PROPERTY_FAILED


def cmd_witness(args, ctx: CliContext) -> int:
    g, coloring = binomial_tree(args.k, limit=ctx.witness_limit())
    if args.graph_only:
        emit_graph(g, ctx, list(coloring.colors))
        return EXIT_OK
    payload = coloring_to_json(coloring, ColoringKind.GRUNDY, verify(g, coloring, ColoringKind.GRUNDY))
    payload["vertices"] = g.vertex_count
    payload["edges"] = [list(edge) for edge in g.edges()]
    emit_json(payload)
    return EXIT_OK


def cmd_chordal(args, ctx: CliContext) -> int:
    g = read_graph(args.graph, ctx)
    if args.action == "peo":
        result = perfect_elimination_order(g)
        emit_json(result.to_dict())
        return EXIT_PROPERTY_FAILED if isinstance(result, NotChordal) else EXIT_OK
    try:
        colored = chordal_color(g)
    except NotChordalError as e:
        emit_json(e.certificate.to_dict())
        return EXIT_PROPERTY_FAILED
    emit_json(colored.to_dict())
    return EXIT_OK


def cmd_sim(args, ctx: CliContext) -> int:
    scenario = Scenario.model_validate_json(read_text(args.scenario))
    result = run(scenario)
    if args.trace:
        csv_text = trace_to_csv(result.trace)
        if args.trace == "-":
            sys.stdout.write(csv_text)
        else:
            try:
                with open(args.trace, 'w', encoding='utf-8') as f:
                    f.write(csv_text)
            except OSError as e:
                raise InvalidInputError(f"cannot write '{args.trace}': {e.strerror or e}")
    if args.trace != "-":
        emit_json(result.to_dict())
    return EXIT_OK if result.converged else EXIT_PROPERTY_FAILED


def cmd_bounds(args, ctx: CliContext) -> int:
    emit_json(parameter_bounds(read_graph(args.graph, ctx)).to_dict())
    return EXIT_OK


def cmd_table(args, ctx: CliContext) -> int:
    kind = ColoringKind.parse(args.kind)
    entries = parameter_table(args.operator, args.left, args.right, args.sizes, kind=kind, limit=ctx.limit_for(kind))
    emit_json({
        "operator": args.operator,
        "left": args.left,
        "right": args.right,
        "kind": kind.value,
        "entries": [entry.to_dict() for entry in entries],
    })
    return EXIT_OK


def cmd_scenario(args, ctx: CliContext) -> int:
    simulator = ctx.config.simulator
    scenario = random_scenario(
        args.n,
        seed=ctx.seed,
        avg_degree=simulator.default_avg_degree if args.avg_degree is None else args.avg_degree,
        side=simulator.area_side if args.side is None else args.side,
        rule=args.rule,
        max_rounds=simulator.default_max_rounds if args.max_rounds is None else args.max_rounds,
    )
    emit_json(scenario.to_json_dict())
    return EXIT_OK


def global_flags(argument_default: Any = None) -> argparse.ArgumentParser:
    flags = argparse.ArgumentParser(add_help=False, argument_default=argument_default)
    flags.add_argument("--format", dest="graph_format", choices=FormatFactory.get_supported_formats(), help="Graph format of inputs and outputs")
    flags.add_argument("--limit", help="Size limit of exact, oracle and witness computations (overrides GRUNDY_KIT_LIMIT)")
    flags.add_argument("--seed", type=int, help="Seed for random generators (default 0)")
    flags.add_argument("--config", help="YAML configuration file (default config.yaml)")
    flags.add_argument("--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL", "DISABLED"])
    return flags


def build_parser() -> CliArgumentParser:
    parser = CliArgumentParser(
        prog="grundy-kit",
        description="Grundy, partial Grundy and b-chromatic colorings; ad hoc frequency assignment simulation.",
        parents=[global_flags()],
    )
    # Flags repeated after the subcommand only override when given
    sub_common = global_flags(argparse.SUPPRESS)

    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=CliArgumentParser)

    def add(name: str, handler, help_text: str) -> CliArgumentParser:
        sub = subparsers.add_parser(name, parents=[sub_common], help=help_text)
        sub.set_defaults(handler=handler)
        return sub

    gen = add("gen", cmd_gen, "Generate a family member or a seeded random graph")
    gen.add_argument("family", choices=list(FAMILY_PARAMETERS) + ["random", "interval"])
    gen.add_argument("params", nargs="*")

    op = add("op", cmd_op, "Apply a graph operator")
    op.add_argument("operator", choices=["power", "product", "conormal"])
    op.add_argument("graphs", nargs="*", help="Input graphs ('-' for standard input)")
    op.add_argument("--k", type=int, default=2, help="Exponent of power")

    exact = add("exact", cmd_exact, "Exact parameter with certificate")
    exact.add_argument("kind", choices=KINDS)
    exact.add_argument("graph", nargs="?", default="-")
    exact.add_argument("--lines", action="store_true", help="Emit the certificate as 'vertex color' lines")

    oracle = add("oracle", cmd_oracle, "Brute-force parameter value, for cross-checking exact")
    oracle.add_argument("kind", choices=KINDS)
    oracle.add_argument("graph", nargs="?", default="-")

    verify_cmd = add("verify", cmd_verify, "Verify a coloring against a kind")
    verify_cmd.add_argument("kind", choices=KINDS)
    verify_cmd.add_argument("graph")
    verify_cmd.add_argument("coloring")

    witness = add("witness", cmd_witness, "Binomial tree with its canonical Grundy coloring")
    witness.add_argument("kind", choices=["grundy"])
    witness.add_argument("k", type=int)
    witness.add_argument("--graph-only", action="store_true", help="Emit only the graph, in --format")

    chordal = add("chordal", cmd_chordal, "Chordal recognition and coloring")
    chordal.add_argument("action", choices=["peo", "color"])
    chordal.add_argument("graph", nargs="?", default="-")

    sim = add("sim", cmd_sim, "Run an ad hoc network scenario")
    sim.add_argument("scenario", nargs="?", default="-")
    sim.add_argument("--trace", help="Write the per-round CSV here ('-' for standard output instead of JSON)")

    bounds = add("bounds", cmd_bounds, "Cheap parameter bounds")
    bounds.add_argument("graph", nargs="?", default="-")

    table = add("table", cmd_table, "Parameter table of family products")
    table.add_argument("operator", choices=["product", "conormal"])
    table.add_argument("left")
    table.add_argument("right")
    table.add_argument("--sizes", type=int, nargs="+", default=[1, 2, 3, 4])
    table.add_argument("--kind", choices=KINDS, default="grundy")

    scenario = add("scenario", cmd_scenario, "Emit a seeded random scenario")
    scenario.add_argument("n", type=int)
    scenario.add_argument("--avg-degree", type=float)
    scenario.add_argument("--side", type=float)
    scenario.add_argument("--rule", choices=get_supported_rules(), default="strict_mex")
    scenario.add_argument("--max-rounds", type=int)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, load configuration and run one subcommand."""
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        config = ConfigLoader(args.config or "config.yaml").load_config()
        configure_logging(args.log_level or config.features.log_level)
        ctx = CliContext(
            config=config,
            graph_format=args.graph_format or config.features.default_format,
            limit=parse_limit(args.limit, "--limit") if args.limit is not None else None,
            seed=args.seed if args.seed is not None else 0,
        )
        return args.handler(args, ctx)
    except LimitExceededError as e:
        logger.debug(f"❌ {e}")
        sys.stderr.write(f"error: {e}\n")
        return EXIT_LIMIT_EXCEEDED
    except (InvalidInputError, ValidationError, json.JSONDecodeError) as e:
        logger.debug(f"❌ {type(e).__name__}: {e}")
        sys.stderr.write(f"error: {e}\n")
        return EXIT_INVALID_INPUT


if __name__ == "__main__":
    sys.exit(main())
