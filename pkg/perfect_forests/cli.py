"""The perfect-forests command line: one subcommand per operation, JSON on stdout."""

import argparse
import logging
import sys
from collections.abc import Callable, Sequence
from typing import NoReturn

from perfect_forests import __version__
from perfect_forests.avoid_edge import decide_avoid_edge
from perfect_forests.certify import certify
from perfect_forests.config import AppConfig, configure_logging
from perfect_forests.exceptions import (
    AlgorithmInvariantError,
    InfeasibleInputError,
    PerfectForestError,
    UsageError,
)
from perfect_forests.forest import (
    Infeasible,
    ParityForest,
    ParityTarget,
    exists_f_parity_forest_per_component,
)
from perfect_forests.formats import (
    parse_dimacs,
    parse_edge,
    parse_forest_json,
    parse_graph,
    parse_target_spec,
    parse_weighted_graph,
    read_text,
)
from perfect_forests.graph import Graph
from perfect_forests.min_forest import min_f_parity_forest
from perfect_forests.one_forest import is_class_B, one_perfect_forest, proper_one_perfect_forest
from perfect_forests.oracle import (
    OracleLimits,
    bf_exists_avoiding,
    bf_exists_containing,
    bf_induced_cycle_through,
    bf_max_forest,
    bf_max_independent_set,
    bf_min_forest,
    bf_min_perfect_matching,
    bf_nae_satisfiable,
    bf_proper_one_forest,
    bf_satisfiable,
)
from perfect_forests.reductions import (
    GadgetInstance,
    containing_edge_instance,
    indset_gadget,
    induced_cycle_gadget,
    nae_gadget,
)
from perfect_forests.schemas import (
    ClassBReport,
    Document,
    ForestReport,
    GadgetReport,
    InfeasibleReport,
    OracleReport,
    VerifyReport,
)

log: logging.Logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NO = 2


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that reports usage errors as exceptions instead of exiting with 2."""

    def error(self, message: str) -> NoReturn:
        """Raise UsageError with the parser's message."""
        raise UsageError(f"{self.prog}: {message}")


class Run:
    """One invocation: parsed arguments, settings and the output sink."""

    def __init__(self, args: argparse.Namespace) -> None:
        """
        Create a Run.

        Args:
        ----
            args (argparse.Namespace): Parsed command line

        """
        self.log: logging.Logger = logging.getLogger(
            f"{__name__}.{self.__class__.__name__}"
        )
        self.args = args
        self.config = AppConfig(args.settings)
        if args.jobs is not None:
            if args.jobs < 1:
                raise UsageError(f"--jobs must be positive, got {args.jobs}")
            self.config.settings.oracle.jobs = args.jobs
        if args.seed is not None:
            self.config.settings.certify.seed = args.seed

    @property
    def limits(self) -> OracleLimits:
        """Oracle caps from the settings, with --jobs applied."""
        return self.config.settings.oracle.limits()

    def emit(self, document: Document) -> None:
        """Write a document to --out, or stdout."""
        text = document.dump()
        if self.args.out:
            with open(self.args.out, "w", encoding="utf-8") as f:
                f.write(text + "\n")
        else:
            sys.stdout.write(text + "\n")

    def graph(self) -> tuple[Graph, ParityTarget | None]:
        """Read --graph."""
        return parse_graph(read_text(self.args.graph))

    def graph_and_target(self) -> tuple[Graph, ParityTarget]:
        """Read --graph and resolve --f, the file's f: line, or all-ones, in that order."""
        g, from_file = self.graph()
        if getattr(self.args, "f", None):
            return g, parse_target_spec(" ".join(self.args.f), g.n)
        return g, from_file if from_file is not None else ParityTarget.all_ones(g.n)

    def forest(self, forest: ParityForest | Infeasible) -> int:
        """Emit a forest answer and return the exit code."""
        if isinstance(forest, Infeasible):
            self.emit(InfeasibleReport(reason=forest.reason))
            return EXIT_NO
        report = ForestReport.of(forest, verify=self.args.verify)
        if report.verified is False:
            raise AlgorithmInvariantError(f"emitted forest fails verification: {forest.violation}")
        self.emit(report)
        return EXIT_OK

    def oracle(self, problem: str, result: object, witness: object = None, found: bool | None = None) -> int:
        """Emit an oracle answer; without `found`, a None result means no."""
        self.emit(OracleReport(problem=problem, result=result, witness=witness))
        if found is None:
            found = result is not None
        return EXIT_OK if found else EXIT_NO


def _gadget_report(gadget: GadgetInstance) -> GadgetReport:
    return GadgetReport(
        kind=gadget.kind,
        n=gadget.graph.n,
        edges=list(gadget.graph.edges),
        roles=gadget.roles,
        params=gadget.params,
        marked_edges=gadget.marked_edges,
    )


def _cmd_min_forest(run: Run) -> int:
    g, f = run.graph_and_target()
    return run.forest(min_f_parity_forest(g, f))


def _cmd_forest_exists(run: Run) -> int:
    g, f = run.graph_and_target()
    return run.forest(exists_f_parity_forest_per_component(g, f))


def _cmd_avoid_edge(run: Run) -> int:
    g, f = run.graph_and_target()
    return run.forest(decide_avoid_edge(g, parse_edge(run.args.edge), f))


def _cmd_one_forest(run: Run) -> int:
    g, _ = run.graph()
    return run.forest(one_perfect_forest(g, run.args.even_vertex))


def _cmd_proper_one_forest(run: Run) -> int:
    g, _ = run.graph()
    return run.forest(proper_one_perfect_forest(g))


def _cmd_class_b(run: Run) -> int:
    g, _ = run.graph()
    run.emit(ClassBReport(class_b=is_class_B(g)))
    return EXIT_OK


def _cmd_verify(run: Run) -> int:
    g, f = run.graph_and_target()
    forest = parse_forest_json(read_text(run.args.forest), g, f)
    report = VerifyReport.of(forest.violation)
    run.emit(report)
    return EXIT_OK if report.ok else EXIT_NO


def _cmd_gadget(run: Run) -> int:
    args = run.args
    text = read_text(args.input)
    match args.kind:
        case "nae3sat":
            gadget = nae_gadget(parse_dimacs(text)).gadget
        case "induced-cycle":
            gadget = induced_cycle_gadget(parse_dimacs(text)).gadget
        case "indset":
            if args.k is None:
                raise UsageError("gadget indset needs --k")
            gadget = indset_gadget(parse_graph(text)[0], args.k).gadget
        case "containing-edge":
            if args.e1 is None or args.e2 is None:
                raise UsageError("gadget containing-edge needs --e1 and --e2")
            g = parse_graph(text)[0]
            gadget = containing_edge_instance(g, parse_edge(args.e1), parse_edge(args.e2)).gadget
        case _:
            raise UsageError(f"unknown gadget {args.kind!r}")
    run.emit(_gadget_report(gadget))
    return EXIT_OK


def _forest_witness(forest: ParityForest | None) -> tuple[int | None, list[tuple[int, int]] | None]:
    if forest is None:
        return None, None
    return forest.size, list(forest.edges)


def _cmd_oracle(run: Run) -> int:
    args, limits = run.args, run.limits
    match args.problem:
        case "min-forest" | "max-forest":
            g, f = run.graph_and_target()
            search = bf_min_forest if args.problem == "min-forest" else bf_max_forest
            return run.oracle(args.problem, *_forest_witness(search(g, f, limits)))
        case "avoid" | "contain":
            g, f = run.graph_and_target()
            search = bf_exists_avoiding if args.problem == "avoid" else bf_exists_containing
            found = search(g, parse_edge(args.edge), f, limits)
            return run.oracle(args.problem, *_forest_witness(found))
        case "proper-one-forest":
            g, _ = run.graph()
            return run.oracle(args.problem, *_forest_witness(bf_proper_one_forest(g, limits)))
        case "induced-cycle":
            g, _ = run.graph()
            cycle = bf_induced_cycle_through(g, parse_edge(args.e1), parse_edge(args.e2), limits)
            return run.oracle(args.problem, None if cycle is None else len(cycle), cycle)
        case "nae" | "sat":
            cnf = parse_dimacs(read_text(args.input))
            search = bf_nae_satisfiable if args.problem == "nae" else bf_satisfiable
            assignment = search(cnf.num_vars, cnf.clauses, limits)
            return run.oracle(
                args.problem,
                assignment is not None,
                None if assignment is None else list(assignment),
                found=assignment is not None,
            )
        case "indset":
            g, _ = run.graph()
            best = bf_max_independent_set(g, limits)
            return run.oracle(args.problem, len(best), list(best))
        case "matching":
            wg = parse_weighted_graph(read_text(args.graph))
            found = bf_min_perfect_matching(wg)
            if found is None:
                return run.oracle(args.problem, None)
            return run.oracle(args.problem, found[0], list(found[1]))
        case "certify":
            report = certify(run.config.settings.certify, limits)
            run.emit(report)
            return EXIT_OK if report.ok else EXIT_ERROR
        case _:
            raise UsageError(f"unknown oracle problem {args.problem!r}")


def _add_graph(p: argparse.ArgumentParser, target: bool = False) -> None:
    p.add_argument("--graph", required=True, help="graph file")
    if target:
        p.add_argument(
            "--f",
            nargs="+",
            help="all-ones | all-ones-except V | zeros | bits; defaults to the file's f: line, then all-ones",
        )


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser with every subcommand."""
    parser = _Parser(prog="perfect-forests", description=__doc__)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--settings", help="YAML settings file (overrides PF_SETTINGS_FILE)")
    parser.add_argument(
        "--log-level", choices=["debug", "info", "warning", "error", "critical"], help="overrides PF_LOG_LEVEL"
    )
    parser.add_argument("--verify", action="store_true", help="re-check every emitted forest")
    parser.add_argument("--out", help="write JSON here instead of stdout")
    parser.add_argument("--seed", type=int, help="seed for randomized runs")
    parser.add_argument("--jobs", type=int, help="worker processes for oracle enumeration")
    sub = parser.add_subparsers(dest="command", required=True)

    commands: dict[str, tuple[Callable[[Run], int], str]] = {
        "min-forest": (_cmd_min_forest, "minimum f-parity perfect forest"),
        "forest-exists": (_cmd_forest_exists, "some f-parity perfect forest"),
        "avoid-edge": (_cmd_avoid_edge, "f-parity perfect forest avoiding an edge"),
        "one-forest": (_cmd_one_forest, "1-perfect forest with a chosen even vertex"),
        "proper-one-forest": (_cmd_proper_one_forest, "proper 1-perfect forest, or class-B"),
        "class-b": (_cmd_class_b, "is every block an odd complete graph"),
        "verify": (_cmd_verify, "check a forest file"),
    }
    for name, (handler, help_text) in commands.items():
        p = sub.add_parser(name, help=help_text)
        _add_graph(p, target=name in ("min-forest", "forest-exists", "avoid-edge", "verify"))
        p.set_defaults(handler=handler)
        if name == "avoid-edge":
            p.add_argument("--edge", required=True, help="edge u,v")
        elif name == "one-forest":
            p.add_argument("--even-vertex", type=int, required=True)
        elif name == "verify":
            p.add_argument("--forest", required=True, help="forest JSON file")

    gadget = sub.add_parser("gadget", help="build a reduction graph")
    gadget.add_argument("kind", choices=["nae3sat", "indset", "induced-cycle", "containing-edge"])
    gadget.add_argument("--in", dest="input", required=True, help="DIMACS CNF or graph file")
    gadget.add_argument("--k", type=int)
    gadget.add_argument("--e1")
    gadget.add_argument("--e2")
    gadget.set_defaults(handler=_cmd_gadget)

    oracle = sub.add_parser("oracle", help="brute-force reference answers")
    oracle.add_argument(
        "problem",
        choices=[
            "min-forest",
            "max-forest",
            "avoid",
            "contain",
            "proper-one-forest",
            "induced-cycle",
            "nae",
            "sat",
            "indset",
            "matching",
            "certify",
        ],
    )
    oracle.add_argument("--graph")
    oracle.add_argument("--f", nargs="+")
    oracle.add_argument("--edge")
    oracle.add_argument("--e1")
    oracle.add_argument("--e2")
    oracle.add_argument("--in", dest="input")
    oracle.set_defaults(handler=_cmd_oracle)
    return parser


def _require_oracle_inputs(args: argparse.Namespace) -> None:
    needs = {
        "min-forest": ("graph",),
        "max-forest": ("graph",),
        "avoid": ("graph", "edge"),
        "contain": ("graph", "edge"),
        "proper-one-forest": ("graph",),
        "induced-cycle": ("graph", "e1", "e2"),
        "nae": ("input",),
        "sat": ("input",),
        "indset": ("graph",),
        "matching": ("graph",),
        "certify": (),
    }
    missing = [name for name in needs[args.problem] if getattr(args, name) is None]
    if missing:
        flags = ", ".join("--in" if m == "input" else f"--{m}" for m in missing)
        raise UsageError(f"oracle {args.problem} needs {flags}")


def main(argv: Sequence[str] | None = None) -> int:
    """
    Run the command line.

    Returns:
    -------
        int: 0 on success, 2 for a well-formed question answered no, 1 on errors

    """
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        sys.stderr.write(f"{e}\n")
        return EXIT_ERROR

    configure_logging(args.log_level)
    try:
        if args.command == "oracle":
            _require_oracle_inputs(args)
        run = Run(args)
    except PerfectForestError as e:
        log.error("%s", e)
        sys.stderr.write(f"error: {e}\n")
        return EXIT_ERROR

    try:
        return args.handler(run)
    except InfeasibleInputError as e:
        log.info("Infeasible input: %s", e)
        run.emit(InfeasibleReport(reason=str(e)))
        return EXIT_NO
    except AlgorithmInvariantError as e:
        log.exception("Internal invariant failed: %s", e)
        sys.stderr.write(f"error: {e}\n")
        return EXIT_ERROR
    except (PerfectForestError, ValueError) as e:
        log.error("%s", e)
        sys.stderr.write(f"error: {e}\n")
        return EXIT_ERROR
