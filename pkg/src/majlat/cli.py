"""majlat command line: vector files in, JSON results and SVG plots out.

Commands: compare, meet, join, inf, sup, polytope, ball, ocr, lorenz.
Inputs are JSON ({"d": ..., "vectors": [["0.6", ...], ...]}) or CSV (one
vector per row); entries travel as decimal or ratio strings so exact mode
stays exact. Exit codes: 0 success, 1 validation error, 2 I/O or parse
error, 3 unsupported (dimension above the enumeration cap).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass
from typing import Sequence

from .core import OrderedProbVector, compare, make_vector, partial_sums
from .errors import (
    DimensionTooLargeError,
    InputArityError,
    MajlatError,
    ParseError,
)
from .lattice import FiniteFamily, family_inf, family_sup, join, meet
from .numeric import DEFAULT_FLOAT_TOL, scalar_str
from .polytope import Ball, Polytope, ball_vertices, polytope_inf, polytope_sup
from .resource_theory import ResourceTheory, optimal_common_resource
from .svg import emit_lorenz_svg


@dataclass(frozen=True)
class JobSpec:
    """One CLI invocation, fully resolved."""

    command: str
    mode: str = "exact"
    tol: float | None = None
    inputs: tuple[str, ...] = ()
    out: str | None = None
    svg: str | None = None
    sort: bool = False
    normalize: bool = False
    theory: str | None = None
    which: str | None = None
    center: str | None = None
    eps: str | None = None
    max_dim: int = 10

    @property
    def effective_tol(self) -> float:
        if self.mode == "exact":
            return 0.0  # forces exact parsing; stray JSON floats are rejected
        return self.tol if self.tol is not None else DEFAULT_FLOAT_TOL


_COMMANDS = {
    "compare": "majorization comparison of exactly two vectors",
    "meet": "greatest lower bound of exactly two vectors",
    "join": "least upper bound of exactly two vectors",
    "inf": "family infimum of one or more vectors",
    "sup": "family supremum of one or more vectors",
    "polytope": "infimum or supremum of the hull of the given vertices",
    "ball": "l1-ball vertices, or their infimum/supremum",
    "ocr": "optimal common resource of the given targets",
    "lorenz": "plot Lorenz curves of the given vectors",
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="majlat", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--in", "-i", dest="inputs", action="append", default=[],
                        metavar="PATH", help="input file (JSON or CSV); repeatable")
    common.add_argument("--out", "-o", dest="out", metavar="PATH",
                        help="write the result document here instead of stdout")
    common.add_argument("--mode", choices=("exact", "float"), default="exact")
    common.add_argument("--tol", type=float, default=None,
                        help="absolute tolerance (float mode only; default 1e-12)")
    common.add_argument("--svg", metavar="PATH", help="also write a Lorenz-curve plot")
    common.add_argument("--sort", action="store_true",
                        help="sort input entries non-increasing instead of rejecting")
    common.add_argument("--normalize", action="store_true",
                        help="rescale input entries to unit sum instead of rejecting")

    sub = parser.add_subparsers(dest="command", required=True)
    parsers = {}
    for name, blurb in _COMMANDS.items():
        parsers[name] = sub.add_parser(name, parents=[common], help=blurb)

    group = parsers["polytope"].add_mutually_exclusive_group(required=True)
    group.add_argument("--inf", dest="which", action="store_const", const="inf")
    group.add_argument("--sup", dest="which", action="store_const", const="sup")

    ball = parsers["ball"]
    ball.add_argument("--center", metavar="V", help="comma-separated center entries")
    ball.add_argument("--eps", metavar="E", required=True, help="l1 radius")
    ball.add_argument("--max-dim", type=int, default=10,
                      help="vertex enumeration dimension cap (default 10)")
    ball_group = ball.add_mutually_exclusive_group()
    ball_group.add_argument("--vertices", dest="which", action="store_const", const="vertices")
    ball_group.add_argument("--inf", dest="which", action="store_const", const="inf")
    ball_group.add_argument("--sup", dest="which", action="store_const", const="sup")

    parsers["ocr"].add_argument("--theory", required=True,
                                choices=("entanglement", "coherence", "purity"))
    return parser


def _job_from_args(args: argparse.Namespace, parser: argparse.ArgumentParser) -> JobSpec:
    if args.tol is not None and args.mode == "exact":
        parser.error("--tol is only valid with --mode float")
    if args.command == "lorenz" and not args.svg:
        parser.error("lorenz requires --svg PATH")
    return JobSpec(
        command=args.command,
        mode=args.mode,
        tol=args.tol,
        inputs=tuple(args.inputs),
        out=args.out,
        svg=args.svg,
        sort=args.sort,
        normalize=args.normalize,
        theory=getattr(args, "theory", None),
        which=getattr(args, "which", None) or ("vertices" if args.command == "ball" else None),
        center=getattr(args, "center", None),
        eps=getattr(args, "eps", None),
        max_dim=getattr(args, "max_dim", 10),
    )


def _rows_from_file(path: str) -> list[list[object]]:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            if path.lower().endswith(".csv"):
                return [[cell.strip() for cell in row] for row in csv.reader(handle) if row]
            data = json.load(handle)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON: {exc}") from exc
    except csv.Error as exc:
        raise ParseError(f"{path}: invalid CSV: {exc}") from exc
    if not isinstance(data, dict) or "vectors" not in data:
        raise ParseError(f'{path}: expected an object with a "vectors" field')
    vectors = data["vectors"]
    if not isinstance(vectors, list) or not all(isinstance(v, list) for v in vectors):
        raise ParseError(f'{path}: "vectors" must be a list of entry lists')
    declared = data.get("d")
    if declared is not None and any(len(v) != declared for v in vectors):
        raise ParseError(f'{path}: vector length disagrees with "d" = {declared}')
    return vectors


def _load_vectors(job: JobSpec) -> list[OrderedProbVector]:
    rows: list[list[object]] = []
    for path in job.inputs:
        rows.extend(_rows_from_file(path))
    if job.command == "ball" and job.center is not None:
        rows.append([cell.strip() for cell in job.center.split(",")])
    return [
        make_vector(row, normalize=job.normalize, sort=job.sort, tol=job.effective_tol)
        for row in rows
    ]


def _expect(job: JobSpec, vectors: list, low: int, high: int | None = None):
    n = len(vectors)
    if n < low or (high is not None and n > high):
        expected = str(low) if high == low else (f"at least {low}" if high is None else f"{low}..{high}")
        raise InputArityError(f"{job.command} expects {expected} vector(s), got {n}")


def _vector_strings(vectors: Sequence[OrderedProbVector]) -> list[list[str]]:
    return [[scalar_str(e) for e in v.entries] for v in vectors]


def _result_block(vectors: Sequence[OrderedProbVector], exact: bool) -> dict:
    block = {"d": vectors[0].d, "vectors": _vector_strings(vectors)}
    if exact:
        block["rationals"] = [[str(e) for e in v.entries] for v in vectors]
    return block


def run(job: JobSpec) -> int:
    vectors = _load_vectors(job)
    exact = job.mode == "exact"
    ordering = None
    results: list[OrderedProbVector] = []

    if job.command == "compare":
        _expect(job, vectors, 2, 2)
        ordering = compare(vectors[0], vectors[1]).value
    elif job.command in ("meet", "join"):
        _expect(job, vectors, 2, 2)
        op = meet if job.command == "meet" else join
        results = [op(vectors[0], vectors[1])]
    elif job.command in ("inf", "sup"):
        _expect(job, vectors, 1)
        op = family_inf if job.command == "inf" else family_sup
        results = [op(FiniteFamily(tuple(vectors)))]
    elif job.command == "polytope":
        _expect(job, vectors, 1)
        hull = Polytope(tuple(vectors))
        results = [polytope_inf(hull) if job.which == "inf" else polytope_sup(hull)]
    elif job.command == "ball":
        _expect(job, vectors, 1, 1)
        ball = Ball(vectors[0], job.eps)  # Ball parses the string in the center's mode
        hull = ball_vertices(ball, max_dimension=job.max_dim)
        if job.which == "inf":
            results = [polytope_inf(hull)]
        elif job.which == "sup":
            results = [polytope_sup(hull)]
        else:
            results = list(hull.vertices)
    elif job.command == "ocr":
        _expect(job, vectors, 1)
        theory = ResourceTheory(job.theory)
        results = [optimal_common_resource(FiniteFamily(tuple(vectors)), theory)]
    elif job.command == "lorenz":
        _expect(job, vectors, 1)
    else:  # pragma: no cover - argparse restricts the choices
        raise ParseError(f"unknown command {job.command!r}")

    doc = {
        "command": job.command,
        "mode": job.mode,
        "tolerance": None if exact else repr(job.effective_tol),
        "inputs": {
            "paths": list(job.inputs),
            "d": vectors[0].d,
            "vectors": _vector_strings(vectors),
        },
    }
    if job.command == "ball":
        doc["inputs"]["eps"] = job.eps
    doc["result"] = _result_block(results, exact) if results else None
    if ordering is not None:
        doc["ordering"] = ordering

    if job.svg:
        curves = [(f"x{i + 1}", partial_sums(v)) for i, v in enumerate(vectors)]
        if len(results) == 1:
            curves.append((job.command, partial_sums(results[0])))
        else:
            curves.extend((f"{job.command} v{i + 1}", partial_sums(v)) for i, v in enumerate(results))
        with open(job.svg, "w", encoding="utf-8") as handle:
            handle.write(emit_lorenz_svg(curves))
        doc["svg"] = job.svg

    text = json.dumps(doc, indent=2) + "\n"
    if job.out:
        with open(job.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        job = _job_from_args(args, parser)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return run(job)
    except DimensionTooLargeError as exc:
        print(f"majlat: unsupported: {exc}", file=sys.stderr)
        return 3
    except (ParseError, OSError) as exc:
        print(f"majlat: {exc}", file=sys.stderr)
        return 2
    except MajlatError as exc:
        print(f"majlat: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
