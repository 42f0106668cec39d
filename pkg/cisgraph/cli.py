"""
Command line frontend.

Every subcommand writes machine readable output to stdout; errors go to stderr
as ``error[CODE]: message`` and map to exit codes: 0 success, 1 failed
verification or catalog check, 2 malformed flags or graph text, 3 values out of
range.
"""
import argparse
import asyncio
import logging
import sys
from typing import Any, List, NoReturn, Optional, Sequence, TextIO

import pydantic

from cisgraph.atlas import GraphClass, check_catalog, generate
from cisgraph.counting import (
    count_containing,
    count_containing_pair,
    count_profile,
    enumerate_cis,
    naive_count_profile,
)
from cisgraph.counting.query import AnchorQuery
from cisgraph.exceptions import ArgumentsError, CisGraphException
from cisgraph.formulas import BoundId, BoundSpec, Objective, bound_value, closed_form_total
from cisgraph.graphs import (
    FAMILY_PARAMETERS,
    Family,
    FamilySpec,
    Graph,
    construct,
    emit_graph6,
    parse_edge_list,
    parse_graph,
    read_graphs,
)
from cisgraph.scan import Caps, ScanPool, Scanner, run_claims
from cisgraph.scan.reports import ClaimResult, ScanReport
from cisgraph.serialization import (
    dumps,
    formula_payload,
    profile_payload,
    scan_csv,
    scan_payload,
    verification_csv,
    verification_payload,
)
from cisgraph.settings import LOG_LEVELS, get_settings
from cisgraph.signals import on_claim_checked, on_scan_finished

logger = logging.getLogger(__name__)


class CisArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:
        raise ArgumentsError(message)


def _add_graph_inputs(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--graph6", help="graph6 string")
    group.add_argument("--file", help="file with one graph6 or edge list per line")
    group.add_argument(
        "--family", choices=[family.value for family in Family], help="named family"
    )
    group.add_argument("--edges", help='edge list text, e.g. "4; 0-1, 1-2, 2-3"')
    parser.add_argument(
        "--complement", action="store_true", help="use the complement of each graph"
    )
    _add_family_params(parser)


def _add_family_params(parser: argparse.ArgumentParser) -> None:
    for name in ("n", "p", "q", "l"):
        parser.add_argument(f"--{name}", type=int, help=f"family parameter {name}")


def _add_class_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--class", dest="graph_class", required=True)
    parser.add_argument("--n", type=int, required=True, help="order")
    parser.add_argument("--r", type=int, help="components of r_components")
    parser.add_argument("--d", type=int, help="cyclomatic number of cyclomatic")


def build_parser() -> CisArgumentParser:
    """
    Builds the parser with one subparser per subcommand.

    :return: configured parser
    :rtype: CisArgumentParser
    """
    parser = CisArgumentParser(
        prog="cisgraph",
        description="Count connected induced subgraphs and verify extremal bounds.",
    )
    parser.add_argument("--log-level", choices=LOG_LEVELS)
    commands = parser.add_subparsers(
        dest="command", parser_class=CisArgumentParser, required=True
    )

    construct_parser = commands.add_parser("construct", help="print graph6")
    _add_graph_inputs(construct_parser)

    count_parser = commands.add_parser("count", help="count connected subgraphs")
    _add_graph_inputs(count_parser)
    anchors = count_parser.add_mutually_exclusive_group()
    anchors.add_argument("--containing", type=int, metavar="U")
    anchors.add_argument("--pair", type=int, nargs=2, metavar=("U", "V"))
    count_parser.add_argument(
        "--naive", action="store_true", help="cross check with the subset oracle"
    )

    enumerate_parser = commands.add_parser("enumerate", help="list vertex sets")
    _add_graph_inputs(enumerate_parser)
    enumerate_parser.add_argument("--k", type=int, help="only sets of order k")
    enumerate_anchors = enumerate_parser.add_mutually_exclusive_group()
    enumerate_anchors.add_argument("--containing", type=int, metavar="U")
    enumerate_anchors.add_argument("--pair", type=int, nargs=2, metavar=("U", "V"))

    formula_parser = commands.add_parser("formula", help="closed forms and bounds")
    formula_source = formula_parser.add_mutually_exclusive_group(required=True)
    formula_source.add_argument("--family", choices=[family.value for family in Family])
    formula_source.add_argument("--bound", choices=[bound.value for bound in BoundId])
    _add_family_params(formula_parser)
    formula_parser.add_argument("--k", type=int)
    formula_parser.add_argument("--r", type=int)

    scan_parser = commands.add_parser("scan", help="extremal scan of a catalog")
    _add_class_args(scan_parser)
    scan_parser.add_argument("--objective", default="total")
    scan_parser.add_argument("--jobs", type=int)
    scan_parser.add_argument("--csv", action="store_true")

    verify_parser = commands.add_parser("verify", help="verify all claims")
    defaults = Caps()
    verify_parser.add_argument("--all", dest="all_graphs", type=int, default=defaults.all_graphs)
    verify_parser.add_argument("--connected", type=int, default=defaults.connected)
    verify_parser.add_argument("--trees", type=int, default=defaults.trees)
    verify_parser.add_argument("--rooted", type=int, default=defaults.rooted)
    verify_parser.add_argument("--unicyclic", type=int, default=defaults.unicyclic)
    verify_parser.add_argument(
        "--r-order", dest="r_components_order", type=int,
        default=defaults.r_components_order,
    )
    verify_parser.add_argument(
        "--r-max", dest="r_components_max_r", type=int,
        default=defaults.r_components_max_r,
    )
    verify_parser.add_argument(
        "--closed-forms", dest="closed_forms", type=int, default=defaults.closed_forms
    )
    verify_parser.add_argument(
        "--claim", dest="claims", action="append", help="run only the given claim"
    )
    verify_parser.add_argument("--jobs", type=int)
    verify_parser.add_argument("--csv", action="store_true")

    generate_parser = commands.add_parser("generate", help="print a catalog")
    _add_class_args(generate_parser)
    generate_parser.add_argument("--check", metavar="FILE", help="cross check a file")
    return parser


def _family_spec(args: argparse.Namespace) -> FamilySpec:
    names, _ = FAMILY_PARAMETERS[Family(args.family)]
    missing = [name for name in names if getattr(args, name) is None]
    if missing:
        raise ArgumentsError(
            f"--family {args.family} needs {', '.join('--' + m for m in missing)}"
        )
    return FamilySpec.of(args.family, *(getattr(args, name) for name in names))


def _input_graphs(args: argparse.Namespace) -> List[Graph]:
    graphs = _read_input_graphs(args)
    if args.complement:
        return [graph.complement() for graph in graphs]
    return graphs


def _read_input_graphs(args: argparse.Namespace) -> List[Graph]:
    if args.graph6 is not None:
        return [parse_graph(args.graph6)]
    if args.edges is not None:
        return [parse_edge_list(args.edges)]
    if args.family is not None:
        return [construct(_family_spec(args))]
    return read_graphs(args.file)


def _graph_class(args: argparse.Namespace) -> GraphClass:
    return GraphClass.of(args.graph_class, r=args.r, d=args.d)


class Runner:
    """
    Executes parsed commands, writing results to ``out``.
    """

    def __init__(self, args: argparse.Namespace, out: TextIO) -> None:
        self.args = args
        self.out = out
        self.settings = get_settings()

    def write(self, text: str) -> None:
        self.out.write(text if text.endswith("\n") else text + "\n")

    def dumps(self, payload: Any) -> str:
        return dumps(payload, indent=self.settings.json_indent)

    @property
    def jobs(self) -> int:
        jobs = self.args.jobs if self.args.jobs is not None else self.settings.jobs
        if jobs < 1:
            raise ArgumentsError(f"--jobs has to be >= 1, got {jobs}")
        return jobs

    def run(self) -> int:
        return getattr(self, f"run_{self.args.command}")()

    def run_construct(self) -> int:
        for graph in _input_graphs(self.args):
            self.write(emit_graph6(graph))
        return 0

    def run_count(self) -> int:
        for graph in _input_graphs(self.args):
            profile = count_profile(graph)
            anchored = None
            if self.args.containing is not None:
                anchored = {
                    "containing": self.args.containing,
                    "count": str(count_containing(graph, self.args.containing)),
                }
            elif self.args.pair is not None:
                u, v = self.args.pair
                anchored = {
                    "pair": [u, v],
                    "count": str(count_containing_pair(graph, u, v)),
                }
            payload = profile_payload(profile, anchored)
            if self.args.naive:
                naive = naive_count_profile(graph)
                payload["naive_agrees"] = naive.per_order == profile.per_order
            self.write(self.dumps(payload))
        return 0

    def run_enumerate(self) -> int:
        graphs = _input_graphs(self.args)
        if len(graphs) != 1:
            raise ArgumentsError(f"enumerate needs exactly one graph, got {len(graphs)}")
        if self.args.containing is not None:
            query = AnchorQuery.containing(self.args.containing, k=self.args.k)
        elif self.args.pair is not None:
            query = AnchorQuery.containing_pair(*self.args.pair, k=self.args.k)
        else:
            query = AnchorQuery.any(k=self.args.k)
        for vertex_set in enumerate_cis(graphs[0], query):
            self.out.write(f"{vertex_set}\n")
        return 0

    def run_formula(self) -> int:
        if self.args.family is not None:
            spec = _family_spec(self.args)
            payload = formula_payload(
                "family", spec.family.value, spec.params, closed_form_total(spec)
            )
        else:
            if self.args.n is None:
                raise ArgumentsError("--bound needs --n")
            bound = BoundSpec.of(self.args.bound, self.args.n, k=self.args.k, r=self.args.r)
            payload = formula_payload(
                "bound", bound.bound.value, bound.params, bound_value(bound)
            )
        self.write(self.dumps(payload))
        return 0

    def run_scan(self) -> int:
        graph_class = _graph_class(self.args)
        objective = Objective.parse(self.args.objective)
        report = asyncio.run(self._scan(graph_class, objective))
        if self.args.csv:
            self.out.write(scan_csv([report]))
        else:
            self.write(self.dumps(scan_payload(report)))
        return 0

    async def _scan(self, graph_class: GraphClass, objective: Objective) -> ScanReport:
        async with ScanPool(jobs=self.jobs) as pool:
            scanner = _logging_scanner(pool)
            return await scanner.scan(graph_class, self.args.n, objective)

    def run_verify(self) -> int:
        caps = Caps(
            all_graphs=self.args.all_graphs,
            connected=self.args.connected,
            trees=self.args.trees,
            rooted=self.args.rooted,
            unicyclic=self.args.unicyclic,
            r_components_order=self.args.r_components_order,
            r_components_max_r=self.args.r_components_max_r,
            closed_forms=self.args.closed_forms,
        )
        report = asyncio.run(self._verify(caps))
        if self.args.csv:
            self.out.write(verification_csv(report))
        else:
            self.write(self.dumps(verification_payload(report)))
        return 0 if report.passed else 1

    async def _verify(self, caps: Caps) -> Any:
        async with ScanPool(jobs=self.jobs) as pool:
            return await run_claims(_logging_scanner(pool), caps, self.args.claims)

    def run_generate(self) -> int:
        graph_class = _graph_class(self.args)
        if self.args.check:
            check = check_catalog(self.args.check, graph_class, self.args.n)
            self.write(self.dumps(check.dict()))
            return 0 if check.passed else 1
        for graph in generate(graph_class, self.args.n):
            self.write(emit_graph6(graph))
        return 0


def _logging_scanner(pool: ScanPool) -> Scanner:
    scanner = Scanner(pool)

    @on_scan_finished(scanner)
    async def log_scan(sender: Scanner, report: ScanReport, **kwargs: Any) -> None:
        logger.info(
            "%s n=%d %s: %d graphs in %.2fs",
            report.graph_class,
            report.order,
            report.objective,
            report.graphs_scanned,
            report.elapsed,
        )

    @on_claim_checked(scanner)
    async def log_claim(sender: Scanner, result: ClaimResult, **kwargs: Any) -> None:
        logger.info("claim %s: %s", result.claim, result.status.value)

    return scanner


def configure_logging(level: Optional[str]) -> None:
    logging.basicConfig(
        level=level or get_settings().log_level,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )


def run(
    argv: Sequence[str], out: Optional[TextIO] = None, err: Optional[TextIO] = None
) -> int:
    """
    Runs the command line on argv.

    :param argv: arguments without the program name
    :type argv: Sequence[str]
    :param out: stream for results, defaults to stdout
    :type out: Optional[TextIO]
    :param err: stream for error lines, defaults to stderr
    :type err: Optional[TextIO]
    :return: exit code
    :rtype: int
    """
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(list(argv))
        configure_logging(args.log_level)
        return Runner(args, out).run()
    except CisGraphException as exc:
        err.write(f"error[{exc.code}]: {exc}\n")
        return exc.exit_code
    except pydantic.ValidationError as exc:
        message = "; ".join(
            f"{'.'.join(str(loc) for loc in error['loc'])}: {error['msg']}"
            for error in exc.errors()
        )
        err.write(f"error[{ArgumentsError.code}]: {message}\n")
        return ArgumentsError.exit_code
    except OSError as exc:
        err.write(f"error[{ArgumentsError.code}]: {exc}\n")
        return ArgumentsError.exit_code


def main() -> int:
    return run(sys.argv[1:])
