"""
Concyclic max-min angle triangulation
Command-line front end: check, triangulate, enumerate, oracle, gen, bench
"""
import argparse
import json
import logging
import sys
from typing import Any, Callable, Dict, List, Optional

from dotenv import load_dotenv
from pydantic import ValidationError

# ────────────────────────────────────────────────────────────────────────────────
# 1) Environment first: settings read CONCYCLIC_* variables
# ────────────────────────────────────────────────────────────────────────────────
load_dotenv()

from models.circle import CirclePointSet, DegeneracyKind, classify_degeneracy, key_length
from models.errors import ConcyclicError, SolverInconsistency
from models.triangulation import Triangulation
from schemas.documents import ErrorDocument, OutputDocument, load_point_set, parse_document
from solvers.degenerate import enumerate_optimal, solve_canonical
from solvers.fast import solve_extended, solve_simplified
from solvers.oracle import optimal_set
from utils.bench import MAX_OPS_RATIO, ops_ratio, render_table, run_bench
from utils.formatters import (
    degeneracy_fields,
    input_document,
    label_pairs,
    round_sensibly,
    save_json,
    triangulation_fields,
)
from utils.generators import (
    equal_ears_point_set,
    equal_pair_point_set,
    random_point_set,
    regular_document,
    square_document,
)
from utils.settings import get_settings
from utils.svg import write_svg

logger = logging.getLogger("concyclic")

SOLVERS: Dict[str, Callable[[CirclePointSet], Triangulation]] = {
    "simplified": solve_simplified,
    "extended": solve_extended,
    "canonical": solve_canonical,
}

AUTO_MODE = {
    DegeneracyKind.DISTINCT_DIAGONALS: "simplified",
    DegeneracyKind.NO_SYMMETRIC_QUADRUPLE: "extended",
    DegeneracyKind.DEGENERATE: "canonical",
}


# ────────────────────────────────────────────────────────────────────────────────
# 2) Input / output helpers
# ────────────────────────────────────────────────────────────────────────────────
def read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as f:
        return f.read()


def load(args: argparse.Namespace) -> CirclePointSet:
    doc = parse_document(read_input(args.input))
    return load_point_set(doc, exact=getattr(args, "exact", False) or None)


def emit(data: Dict[str, Any], out: Optional[str] = None) -> None:
    print(json.dumps(data, indent=2))
    if out:
        save_json(out, data)


def emit_error(code: str, message: str) -> None:
    print(json.dumps(ErrorDocument(error=code, message=message).model_dump(), indent=2))


# ────────────────────────────────────────────────────────────────────────────────
# 3) Subcommands
# ────────────────────────────────────────────────────────────────────────────────
def cmd_check(args: argparse.Namespace) -> int:
    P = load(args)
    found = classify_degeneracy(P)
    doc = OutputDocument(command="check", n=P.n, mode=P.mode, **degeneracy_fields(found, P))
    emit(doc.dump(), args.out)
    return 0


def cmd_triangulate(args: argparse.Namespace) -> int:
    P = load(args)
    mode = args.mode
    degeneracy = None
    if mode == "auto":
        if P.n > get_settings().precondition_check_max_n:
            # Too large to classify; the sweep still reports ties it meets.
            mode = "extended"
        else:
            degeneracy = classify_degeneracy(P).kind.value
            mode = AUTO_MODE[DegeneracyKind(degeneracy)]
        logger.info("auto mode: n=%d class=%s -> %s", P.n, degeneracy, mode)
    if mode == "canonical" and P.points is None:
        logger.info("No Cartesian input; canonical order uses the angle frame")

    T = SOLVERS[mode](P)
    doc = OutputDocument(command="triangulate", n=P.n, mode=P.mode, solver=mode,
                         degeneracy=degeneracy, **triangulation_fields(T, P))
    if args.svg:
        doc.svg = write_svg(args.svg, P, T)
    emit(doc.dump(), args.out)
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    P = load(args)
    result = enumerate_optimal(P, args.limit)
    doc = OutputDocument(
        command="enumerate", n=P.n, mode=P.mode,
        count=result.count, truncated=result.truncated,
        winners=[label_pairs(T.diagonals, P) for T in result.triangulations],
        sorted_diagonal_lengths=[round_sensibly(key_length(k, P.radius)) for k in result.score.entries],
    )
    emit(doc.dump(), args.out)
    return 0


def cmd_oracle(args: argparse.Namespace) -> int:
    P = load(args)
    found = optimal_set(P)
    doc = OutputDocument(
        command="oracle", n=P.n, mode=P.mode, count=len(found.winners),
        winners=[label_pairs(T.diagonals, P) for T in found.winners],
        sorted_diagonal_lengths=[round_sensibly(key_length(k, P.radius)) for k in found.score.entries],
    )
    if found.unique:
        doc.diagonals = label_pairs(found.winners[0].diagonals, P)
    emit(doc.dump(), args.out)
    return 0


def cmd_gen(args: argparse.Namespace) -> int:
    if args.regular is not None:
        data = regular_document(args.regular)
    elif args.random is not None:
        data = input_document(random_point_set(args.random, args.seed))
    elif args.equal_ears is not None:
        data = input_document(equal_ears_point_set(args.equal_ears, args.seed))
    elif args.equal_pair is not None:
        data = input_document(equal_pair_point_set(args.equal_pair, args.seed))
    else:
        data = square_document()
    emit(data, args.out)
    return 0


def cmd_bench(args: argparse.Namespace) -> int:
    table = run_bench(args.sizes, args.seed)
    ratio = ops_ratio(table)
    if args.format == "json":
        emit({"rows": table.to_dict(orient="records"), "ops_ratio": ratio}, args.out)
    else:
        print(render_table(table))
        print(f"ops/n max/min ratio: {ratio:.3f}")
    if ratio > MAX_OPS_RATIO:
        logger.error("ops/n ratio %.3f exceeds %.1f", ratio, MAX_OPS_RATIO)
        return 2
    return 0


# ────────────────────────────────────────────────────────────────────────────────
# 4) Parser
# ────────────────────────────────────────────────────────────────────────────────
def _sizes(text: str) -> List[int]:
    return [int(s) for s in text.replace(" ", "").split(",") if s]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="concyclic", description=__doc__.strip().splitlines()[0])
    parser.add_argument("--log-level", default=None, help="Override CONCYCLIC_LOG_LEVEL")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_input(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("input", help="Input JSON document, or - for stdin")
        p.add_argument("--exact", action="store_true", help="Exact turn arithmetic for angle input")
        p.add_argument("--out", default=None, help="Also write the output JSON to this path")
        return p

    p = with_input("check", "Classify the degeneracy of the input")
    p.set_defaults(handler=cmd_check)

    p = with_input("triangulate", "Compute one optimal triangulation")
    p.add_argument("--mode", choices=["auto", *SOLVERS], default="auto")
    p.add_argument("--svg", default=None, help="Write an SVG drawing to this path")
    p.set_defaults(handler=cmd_triangulate)

    p = with_input("enumerate", "List all optimal triangulations")
    p.add_argument("--limit", type=int, default=None)
    p.set_defaults(handler=cmd_enumerate)

    p = with_input("oracle", "Exhaustive ground truth (n <= 16)")
    p.set_defaults(handler=cmd_oracle)

    p = sub.add_parser("gen", help="Generate an input document")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--regular", type=int, metavar="N")
    group.add_argument("--random", type=int, metavar="N")
    group.add_argument("--equal-ears", type=int, metavar="N")
    group.add_argument("--equal-pair", type=int, metavar="N")
    group.add_argument("--square", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    p.set_defaults(handler=cmd_gen)

    p = sub.add_parser("bench", help="Operation counts of the simplified solver")
    p.add_argument("--sizes", type=_sizes, default=None, help="Comma separated sizes")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.add_argument("--out", default=None)
    p.set_defaults(handler=cmd_bench)
    return parser


# ────────────────────────────────────────────────────────────────────────────────
# 5) Entry point
# ────────────────────────────────────────────────────────────────────────────────
def main(argv: Optional[List[str]] = None) -> int:
    """Run one subcommand; returns the process exit code."""
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=(args.log_level or get_settings().log_level).upper(),
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.handler(args)
    except ValidationError as exc:
        emit_error("parse", str(exc))
        return 1
    except ConcyclicError as exc:
        emit_error(exc.code, str(exc))
        return exc.exit_code
    except ValueError as exc:
        emit_error("input", str(exc))
        return 1
    except SolverInconsistency as exc:
        logger.error("Internal check failed: %s", exc)
        emit_error(exc.code, str(exc))
        return exc.exit_code
    except OSError as exc:
        emit_error("io", str(exc))
        return 1


if __name__ == "__main__":
    sys.exit(main())
