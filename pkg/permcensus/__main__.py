# coding=utf-8
"""
PermCensus Command Line

Usage: python -m permcensus <command> [options]

Standard output carries only the final result (text, json or csv); logs and
the progress bar go to standard error. Exit status: 0 success or positive
verdict, 1 negative verdict or empty result, 2 usage or input error,
3 resource cap reached, 4 internal defect.
"""

import argparse
import json
import logging
import re
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

import yaml

from permcensus import CERTIFICATE_FORMAT_VERSION, __version__
from permcensus.canon import canonical_representative, find_isometry
from permcensus.context import RunContext
from permcensus.core.code import read_code_file, write_code_file
from permcensus.core.config import ALGORITHMS, ORBIT_MODES, OUTPUT_FORMATS, RunConfig
from permcensus.core.loader import load_config
from permcensus.core.permutation import Permutation
from permcensus.group.oracle import are_isometric_bruteforce, stabilizer_bruteforce
from permcensus.invariants import (
    cycle_index,
    distance_enumerator,
    invariant_efficiency,
    is_balanced,
    occurrence_matrix,
    quotient_pair,
)
from permcensus.report import format_census, format_mapping, format_table
from permcensus.search import (
    EnumerationResult,
    canonical_augmentation,
    enumerate_balanced,
    genbylist,
    kloeve65,
    max_code,
    orbit_clique_search,
    slice_census,
)
from permcensus.storage import CensusWriter, load_census
from permcensus.utils.errors import (
    CanonConsistencyError,
    InvalidParameterError,
    PermCensusError,
    ResourceCapExceeded,
)

logger = logging.getLogger("permcensus")

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_DEFECT = 4

_GENERATOR_SPLIT_RE = re.compile(r"\)\s*\(|;")


# === Argument Parsing ===

def _common_options() -> argparse.ArgumentParser:
    """Options accepted by every command (defaults None so config values apply)"""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="output_format", choices=OUTPUT_FORMATS, help="Output format")
    common.add_argument("--out", dest="out_dir", help="Census / code output directory")
    common.add_argument("--jobs", type=int, help="Worker processes (1 = in-process)")
    common.add_argument("--max-nodes", type=int, help="Search node cap (0 = unlimited)")
    common.add_argument("--max-seconds", type=float, help="Wall time cap in seconds (0 = unlimited)")
    common.add_argument("--no-inversion", dest="inversion", action="store_false", default=None,
                        help="Exclude the inversion from the isometry group")
    common.add_argument("--config", help="Config file (default: PERMCENSUS_CONFIG or config/config.yaml)")
    verbosity = common.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="Debug logging")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="Warnings only, no progress bar")
    return common


def _degree_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("-n", type=int, required=True, help="Degree")
    parser.add_argument("-d", type=int, required=True, help="Minimum distance")


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="permcensus",
        description="Enumerate and classify permutation codes up to isometry",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("enumerate", parents=[common], help="All classes of (n,d)-codes")
    _degree_options(p)
    p.add_argument("--alg", dest="algorithm", choices=ALGORITHMS, help="list or canaug (default canaug)")
    emit = p.add_mutually_exclusive_group()
    emit.add_argument("--maximal-only", action="store_true", default=None, help="Emit maximal classes only")
    emit.add_argument("--all", dest="include_all", action="store_true", default=None, help="Emit every class")
    p.add_argument("--max-size", type=int, help="Do not extend codes of this size")

    p = commands.add_parser("balanced", parents=[common], help="Classes of r-balanced (n,d)-codes")
    _degree_options(p)
    p.add_argument("-r", type=int, required=True, help="Occurrence count of every (i, j)")

    p = commands.add_parser("isometric", parents=[common], help="Decide whether two codes are isometric")
    p.add_argument("inputs", nargs=2, metavar="FILE", help="Code files")
    p.add_argument("--oracle", action="store_true", default=None, help="Cross-check by brute force (n <= 5)")

    p = commands.add_parser("invariants", parents=[common], help="Invariants of a code")
    p.add_argument("inputs", nargs=1, metavar="FILE", help="Code file")

    p = commands.add_parser("canon", parents=[common], help="Canonical certificate of a code")
    p.add_argument("inputs", nargs=1, metavar="FILE", help="Code file")
    p.add_argument("--oracle", action="store_true", default=None, help="Cross-check the stabilizer order by brute force (n <= 4)")

    p = commands.add_parser("mu", parents=[common], help="Largest size of an (n,d)-code")
    _degree_options(p)

    p = commands.add_parser("orbit-search", parents=[common], help="Largest union of subgroup orbits")
    _degree_options(p)
    p.add_argument("--gens", action="append", required=True,
                   help='Generator in image notation, e.g. "2 3 4 5 1"; repeat or separate by ";"')
    p.add_argument("--mode", choices=ORBIT_MODES, help="left (φ ↦ βφ) or conjugation (φ ↦ βφβ⁻¹)")

    commands.add_parser("kloeve65", parents=[common], help="Classes of (6,5)-codes of size 18")

    p = commands.add_parser("slice", parents=[common], help="Classes of (n,d)-codes of one size")
    _degree_options(p)
    p.add_argument("-s", dest="size", type=int, required=True, help="Code size")

    p = commands.add_parser("efficiency", parents=[common], help="How well each invariant separates classes")
    p.add_argument("-n", type=int, help="Degree (fresh census)")
    p.add_argument("-d", type=int, help="Minimum distance (fresh census)")
    p.add_argument("--census", help="Census directory written by enumerate --all --out")
    return parser


def parse_generators(texts: List[str], n: int) -> List[Permutation]:
    """
    Generators in 1-based image notation

    Examples:
        >>> [str(g) for g in parse_generators(["(2 3 4 5 1)"], 5)]
        ['2 3 4 5 1']
    """
    generators = []
    for text in texts:
        for part in _GENERATOR_SPLIT_RE.split(text):
            part = part.strip().strip("()").strip()
            if not part:
                continue
            try:
                images = [int(token) for token in part.replace(",", " ").split()]
            except ValueError:
                raise InvalidParameterError(f"Invalid generator '{part}'", suggestion='Example: --gens "2 3 4 5 1"')
            if len(images) != n:
                raise InvalidParameterError(f"Generator '{part}' has {len(images)} images, expected {n}")
            generators.append(Permutation.from_images(images))
    if not generators:
        raise InvalidParameterError("At least one generator is required")
    return generators


def _run_config(args: argparse.Namespace, config: Dict[str, Any]) -> RunConfig:
    overrides = {
        name: getattr(args, name, None)
        for name in ("n", "d", "r", "size", "max_size", "algorithm", "mode", "inputs", "out_dir", "jobs",
                     "max_nodes", "max_seconds", "output_format", "maximal_only", "include_all",
                     "inversion", "oracle")
    }
    return RunConfig.from_config(args.command, config, **overrides)


# === Commands ===

def _emit(text: str) -> None:
    sys.stdout.write(text)
    sys.stdout.flush()


def _census_output(ctx: RunContext, result: EnumerationResult) -> int:
    writer = ctx.writer()
    if writer is not None:
        writer.write(result, command=ctx.run.command)
    _emit(format_census(result, ctx.run.output_format))
    return EXIT_OK


def cmd_enumerate(ctx: RunContext) -> int:
    run = ctx.run.validate(require=("n", "d"))
    if run.algorithm == "list":
        result = genbylist(run.n, run.d, run.inversion, run.max_size, run.stabilizer_child_pruning,
                           ctx.budget(), ctx.mapper())
    else:
        result = canonical_augmentation(
            run.n, run.d, run.inversion, run.max_size,
            include_all=run.include_all and not run.maximal_only,
            budget=ctx.budget(), mapper=ctx.mapper(), split_depth=run.split_depth,
        )
    if run.maximal_only:
        result = result.maximal_only()
    return _census_output(ctx, result)


def cmd_balanced(ctx: RunContext) -> int:
    run = ctx.run.validate(require=("n", "d", "r"))
    result = enumerate_balanced(run.n, run.d, run.r, run.inversion, ctx.budget(), ctx.mapper(), run.split_depth)
    return _census_output(ctx, result)


def cmd_isometric(ctx: RunContext) -> int:
    run = ctx.run.validate()
    c1, c2 = (read_code_file(path) for path in run.inputs)
    witness = find_isometry(c1, c2, run.inversion)
    record: Dict[str, Any] = {"isometric": witness is not None}
    if witness is not None:
        record["witness"] = str(witness)
    if run.oracle:
        if not run.inversion:
            raise InvalidParameterError("--oracle checks the full isometry group and cannot be combined with --no-inversion")
        oracle = are_isometric_bruteforce(c1, c2, ctx.oracle_limits["isometry"])
        if (oracle is None) != (witness is None):
            raise CanonConsistencyError(
                "Certificate verdict disagrees with the brute-force oracle",
                details=[("certificate", witness is not None), ("oracle", oracle is not None)],
            )
        record["oracle_agrees"] = True
    _emit(format_mapping(record, run.output_format))
    return EXIT_OK if witness is not None else EXIT_NEGATIVE


def cmd_invariants(ctx: RunContext) -> int:
    run = ctx.run.validate()
    code = read_code_file(run.inputs[0])
    occurrence = occurrence_matrix(code)
    pair = quotient_pair(code)
    balance_range = range(1, code.size // code.degree + 1)
    record = {
        "n": code.degree,
        "d": code.min_distance,
        "size": code.size,
        "distance_enumerator": distance_enumerator(code),
        "cycle_index": cycle_index(code).as_dict(),
        "occurrence_multiset": list(occurrence.multiset()),
        "occurrence_set": sorted(occurrence.value_set()),
        "balanced": {str(r): is_balanced(code, r) for r in balance_range},
        "quotient_sizes": [len(pair.delta), len(pair.sigma)],
    }
    _emit(format_mapping(record, run.output_format))
    return EXIT_OK


def cmd_canon(ctx: RunContext) -> int:
    run = ctx.run.validate()
    code = read_code_file(run.inputs[0])
    form, representative = canonical_representative(code, run.inversion)
    record = {
        "certificate": form.hex,
        "stabilizer_order": form.group_size,
        "certificate_format_version": CERTIFICATE_FORMAT_VERSION,
        "tool_version": __version__,
        "canonical_code": [str(phi) for phi in representative.elements],
    }
    if run.oracle:
        if not run.inversion:
            raise InvalidParameterError("--oracle scans the full isometry group and cannot be combined with --no-inversion")
        brute = len(stabilizer_bruteforce(code, ctx.oracle_limits["stabilizer"]))
        if brute != form.group_size:
            raise CanonConsistencyError(
                "Automorphism group order disagrees with the brute-force stabilizer",
                details=[("certificate", form.group_size), ("oracle", brute)],
            )
        record["oracle_agrees"] = True
    if run.out_dir:
        write_code_file(Path(run.out_dir) / "canonical.code", representative,
                        comments=[f"certificate {form.hex}", f"stabilizer order {form.group_size}"])
    _emit(format_mapping(record, run.output_format))
    return EXIT_OK


def cmd_mu(ctx: RunContext) -> int:
    run = ctx.run.validate(require=("n", "d"))
    code = max_code(run.n, run.d, ctx.budget())
    if run.out_dir:
        write_code_file(Path(run.out_dir) / f"mu_{run.n}_{run.d}.code", code)
    _emit(format_mapping({"n": run.n, "d": run.d, "mu": code.size}, run.output_format))
    return EXIT_OK


def cmd_orbit_search(ctx: RunContext, generators: List[str]) -> int:
    run = ctx.run.validate(require=("n", "d"))
    perms = parse_generators(generators, run.n)
    run.generators = [g.one_based() for g in perms]
    code = orbit_clique_search(run.n, run.d, perms, run.mode, ctx.budget())
    if run.out_dir:
        write_code_file(Path(run.out_dir) / f"orbit_{run.n}_{run.d}_{run.mode}.code", code)
    record = {
        "n": run.n,
        "d": run.d,
        "mode": run.mode,
        "generators": [str(g) for g in perms],
        "size": code.size,
        "code": [str(phi) for phi in code.elements],
    }
    _emit(format_mapping(record, run.output_format))
    return EXIT_OK


def cmd_kloeve65(ctx: RunContext) -> int:
    run = ctx.run.validate()
    return _census_output(ctx, kloeve65(run.inversion, ctx.budget()))


def cmd_slice(ctx: RunContext) -> int:
    run = ctx.run.validate(require=("n", "d", "size"))
    return _census_output(ctx, slice_census(run.n, run.d, run.size, run.inversion, ctx.budget()))


def cmd_efficiency(ctx: RunContext, census_dir: Optional[str]) -> int:
    run = ctx.run
    if census_dir:
        run.validate()
        _, codes = load_census(census_dir)
    else:
        run.validate(require=("n", "d"))
        codes = genbylist(run.n, run.d, run.inversion, budget=ctx.budget(), mapper=ctx.mapper()).codes
    stats = invariant_efficiency(codes)
    header = ["invariant", "classes", "distinct_values", "colliding_groups", "largest_collision"]
    rows = [[s.to_dict()[key] for key in header] for s in stats]
    _emit(format_table(header, rows, run.output_format))
    return EXIT_OK


COMMANDS: Dict[str, Callable[..., int]] = {
    "enumerate": cmd_enumerate,
    "balanced": cmd_balanced,
    "isometric": cmd_isometric,
    "invariants": cmd_invariants,
    "canon": cmd_canon,
    "mu": cmd_mu,
    "kloeve65": cmd_kloeve65,
    "slice": cmd_slice,
}


# === Entry Point ===

def _configure_logging(args: argparse.Namespace) -> None:
    level = logging.DEBUG if args.verbose else logging.WARNING if args.quiet else logging.INFO
    logging.basicConfig(level=level, stream=sys.stderr, format="%(asctime)s - %(levelname)s - %(message)s")


def _report_error(error: PermCensusError, output_format: str) -> None:
    logger.error("%s", error.message)
    if error.suggestion:
        logger.error("Suggestion: %s", error.suggestion)
    if output_format == "json":
        _emit(json.dumps({"error": error.to_dict()}, indent=2, sort_keys=True, default=str) + "\n")


def main(argv: Optional[List[str]] = None) -> int:
    """Main program entry point"""
    args = build_parser().parse_args(argv)
    _configure_logging(args)
    output_format = args.output_format or "text"

    try:
        config = load_config(args.config)
    except (OSError, yaml.YAMLError) as e:
        logger.error("Config Error: %s", e)
        return EXIT_USAGE

    run: Optional[RunConfig] = None
    try:
        run = _run_config(args, config)
        output_format = run.output_format
        with RunContext(run, config, show_progress=not args.quiet) as ctx:
            if args.command == "orbit-search":
                return cmd_orbit_search(ctx, args.gens)
            if args.command == "efficiency":
                return cmd_efficiency(ctx, args.census)
            return COMMANDS[args.command](ctx)
    except ResourceCapExceeded as e:
        if run is not None and run.out_dir:
            CensusWriter(run.out_dir, run.timezone).write_aborted(run.parameters(), e, run.command)
        _report_error(e, output_format)
        for key, value in sorted(e.diagnostics.items()):
            logger.error("  %s: %s", key, value)
        return e.exit_status
    except PermCensusError as e:
        _report_error(e, output_format)
        return e.exit_status
    except Exception:
        logger.exception("Internal error")
        return EXIT_DEFECT


if __name__ == "__main__":
    sys.exit(main())
