"""Command-line front end.

Subcommands: analyze, solve, census, check, catalog, export-mesh.  Exit
codes: 0 success, 1 domain error (degenerate geometry, no convergence,
parse failures), 2 usage error.
"""

from __future__ import annotations

import argparse
import os
import sys

import numpy as np

from . import catalog as cat
from . import census as census_mod
from . import io as cio
from .errors import CylknotError, NoConvergence
from .invariants import det_exact, invariant, invariant_n, invariant_report
from .matrices import SeidelMatrix
from .solver import SolveProblem, solve, validate
from .topomatrix import chirality_matrix, ring_matrix, spirality_matrix


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cylknot",
        description="Analyze, classify, and construct configurations of "
                    "mutually touching infinite cylinders.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pa = sub.add_parser("analyze", help="matrices, invariants, and the "
                                        "knottability verdict of a configuration file")
    pa.add_argument("config", help="configuration document (JSON)")
    pa.add_argument("--out-dir", default=None,
                    help="directory for the matrix text files (default: alongside the input)")

    ps = sub.add_parser("solve", help="construct a mutually touching configuration")
    ps.add_argument("--n", type=int, required=True)
    ps.add_argument("--profile", required=True,
                    choices=["equal_round", "free_round", "equal_elliptic", "free_elliptic"])
    ps.add_argument("--target", default=None, help="chirality matrix file to realize")
    ps.add_argument("--aspect-ratio", type=float, default=None)
    ps.add_argument("--seed", type=int, default=0)
    ps.add_argument("--restarts", type=int, default=100)
    ps.add_argument("--tolerance", type=float, default=1e-10)
    ps.add_argument("--warm-start", default=None, help="configuration file to start from")
    ps.add_argument("--out", required=True, help="where to write the solved configuration")
    ps.add_argument("--report", default=None, help="where to write the invariant report")

    pc = sub.add_parser("census", help="random six-cross census by determinant class")
    pc.add_argument("--trials", type=int, default=1000)
    pc.add_argument("--seed", type=int, default=0)
    pc.add_argument("--det-target", type=int, default=-125)
    pc.add_argument("--n", type=int, default=6)
    pc.add_argument("--box-half-side", type=float, default=1.0)
    pc.add_argument("--out", default=None, help="write the class table here (TSV)")

    pk = sub.add_parser("check", help="search a matrix file for a forbidden or named pattern")
    pk.add_argument("matrix", help="matrix file (text format)")
    group = pk.add_mutually_exclusive_group(required=True)
    group.add_argument("--target", default=None,
                       help="catalog name of the pattern to search for")
    group.add_argument("--k5-rank19", action="store_true",
                       help="run the guaranteed five-clique search (order >= 19)")

    pg = sub.add_parser("catalog", help="list or emit the built-in named matrices")
    pg.add_argument("name", nargs="?", default=None)
    pg.add_argument("--out", default=None, help="write the matrix to this file")

    pm = sub.add_parser("export-mesh", help="write a mesh of the cylinders")
    pm.add_argument("config")
    pm.add_argument("--length", type=float, default=10.0)
    pm.add_argument("--segments", type=int, default=32)
    pm.add_argument("--out", required=True)
    return parser


def _cmd_analyze(args) -> int:
    config = cio.read_configuration(args.config)
    P = chirality_matrix(config)
    R = ring_matrix(config)
    S = spirality_matrix(config)
    report = invariant_report(P, R)
    verdict = cat.knottability_filter(config)
    print(f"configuration: {config.label or args.config} (n={config.n})")
    print("chirality matrix P:")
    print(cio.matrix_text(P), end="")
    print("ring matrix R:")
    print(cio.matrix_text(R), end="")
    print("spirality matrix S:")
    print(cio.matrix_text(S), end="")
    print(f"det P = {report.det_P}")
    print(f"invariant = {report.invariant:.10f}   mirror = {report.invariant_mirror:.10f}")
    print(f"invariant_n = {report.invariant_n:.10f}   mirror = {report.invariant_n_mirror:.10f}")
    print(f"rings per line: {list(report.ring_count_per_line)}")
    if verdict.possible:
        print("knottability: possible")
    else:
        detail = verdict.matrix_name or ""
        print(f"knottability: {verdict.kind} {verdict.subset or ''} {detail}".rstrip())
    out_dir = args.out_dir or os.path.dirname(os.path.abspath(args.config))
    stem = os.path.splitext(os.path.basename(args.config))[0]
    for suffix, M in (("P", P), ("R", R), ("S", S)):
        cio.write_matrix(M, os.path.join(out_dir, f"{stem}.{suffix}.txt"))
    return 0


def _cmd_solve(args) -> int:
    target = None
    if args.target is not None:
        target = SeidelMatrix(cio.read_matrix(args.target))
    warm = cio.read_configuration(args.warm_start) if args.warm_start else None
    problem = SolveProblem(
        n=args.n, profile=args.profile, target_P=target,
        aspect_ratio=args.aspect_ratio, seed=args.seed,
        max_restarts=args.restarts, tolerance=args.tolerance, warm_start=warm,
    )
    try:
        result = solve(problem)
    except NoConvergence as exc:
        print(f"no convergence: {exc}", file=sys.stderr)
        return 1
    validate(result, target_P=target)
    cio.write_configuration(result.config, args.out)
    print(f"solved n={args.n} {args.profile}: residual {result.residual_norm:.3e}")
    print(f"det P = {result.report.det_P}, invariant = {result.report.invariant:.10f}")
    if args.report:
        with open(args.report, "w") as f:
            f.write(cio.report_text(result.report))
    return 0


def _cmd_census(args) -> int:
    records = census_mod.census_run(
        n=args.n, trials=args.trials, det_target=args.det_target,
        seed=args.seed, box_half_side=args.box_half_side,
    )
    table = cio.census_table_text(records)
    print(table, end="")
    if args.out:
        with open(args.out, "w") as f:
            f.write(table)
    return 0


def _cmd_check(args) -> int:
    A = cio.read_matrix(args.matrix)
    M = SeidelMatrix(A)
    if args.k5_rank19:
        witness = cat.find_k5(M)
        kind = "all-plus" if witness.polarity == 1 else "all-minus"
        print(f"five-clique found ({kind}): subset {witness.subset}")
        return 0
    name = args.target
    if name not in cat.NAMED_MATRICES:
        print(f"unknown catalog name {name!r}; see `cylknot catalog`", file=sys.stderr)
        return 1
    target = cat.NAMED_MATRICES[name].matrix
    if not isinstance(target, SeidelMatrix):
        print(f"{name} is not a chirality matrix", file=sys.stderr)
        return 1
    witness = cat.contains_submatrix(M, target)
    if witness is None:
        print(f"{name}: not contained")
    else:
        print(f"{name}: contained at subset {witness.subset} "
              f"(signs {witness.switch_signs}, permutation {witness.permutation})")
    return 0


def _cmd_catalog(args) -> int:
    if args.name is None:
        for name, nm in cat.NAMED_MATRICES.items():
            order = nm.matrix.n if hasattr(nm.matrix, "n") else nm.matrix.shape[0]
            print(f"{name:10s} order {order:2d}  {nm.source}")
        return 0
    if args.name not in cat.NAMED_MATRICES:
        print(f"unknown catalog name {args.name!r}", file=sys.stderr)
        return 1
    M = cat.NAMED_MATRICES[args.name].matrix
    text = cio.matrix_text(M)
    print(text, end="")
    if args.out:
        with open(args.out, "w") as f:
            f.write(text)
    return 0


def _cmd_export_mesh(args) -> int:
    config = cio.read_configuration(args.config)
    cio.write_mesh(config, args.length, args.segments, args.out)
    print(f"wrote {args.out}: {config.n} cylinders, {args.segments} segments")
    return 0


_COMMANDS = {
    "analyze": _cmd_analyze,
    "solve": _cmd_solve,
    "census": _cmd_census,
    "check": _cmd_check,
    "catalog": _cmd_catalog,
    "export-mesh": _cmd_export_mesh,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "export-mesh" and args.segments < 3:
        parser.error("--segments must be at least 3")
    try:
        return _COMMANDS[args.command](args)
    except CylknotError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
