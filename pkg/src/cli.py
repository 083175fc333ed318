"""Command-line entry point: report, verify, trace and centers.

Exit codes: 0 ok, 1 verification failure, 2 invalid triangle or argument,
3 invalid point, 4 I/O error. Logs go to stderr; stdout carries only the
deterministic result.
"""

import argparse
import asyncio
import json
import logging
import sys
from typing import Any, List, Optional, Sequence

import aiofiles
from aws_lambda_powertools import Logger
from aws_lambda_powertools.logging.utils import copy_config_to_registered_loggers

from .config import config
from .core import barycentric_from_vertices, from_cartesian, placement
from .locus import default_bbox, trace_async
from .models import (
    BaryPoint,
    GeometryError,
    InvalidPoint,
    InvalidTriangle,
    TriangleShape,
    parse_rational,
)
from .orchestrator import VerificationOrchestrator
from .render import curve_to_csv, curve_to_svg
from .report import build_center_table, build_point_report, format_center_table_text, format_report_text

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INVALID_ARGUMENT = 2
EXIT_INVALID_POINT = 3
EXIT_IO = 4

logger = logging.getLogger(__name__)


def setup_logging() -> Logger:
    """Structured stderr logging shared by every module logger under ``src``."""
    cli_logger = Logger(
        service=config.service_name,
        level=config.log_level,
        logger_handler=logging.StreamHandler(sys.stderr),
    )
    copy_config_to_registered_loggers(source_logger=cli_logger, include={"src"})
    return cli_logger


def _parse_numbers(values: Sequence[str], error_cls) -> List[Any]:
    try:
        return [parse_rational(v) for v in values]
    except ValueError as e:
        raise error_cls(str(e)) from e


def parse_triangle(args: argparse.Namespace) -> TriangleShape:
    if args.sides is not None:
        return TriangleShape.from_sides(*_parse_numbers(args.sides, InvalidTriangle))
    x1, y1, x2, y2, x3, y3 = _parse_numbers(args.vertices, InvalidTriangle)
    return TriangleShape.from_vertices((x1, y1), (x2, y2), (x3, y3))


def parse_point(args: argparse.Namespace, triangle: TriangleShape) -> BaryPoint:
    if args.bary is not None:
        return BaryPoint(*_parse_numbers(args.bary, InvalidPoint))
    x, y = _parse_numbers(args.cart, InvalidPoint)
    if args.vertices is not None:
        x1, y1, x2, y2, x3, y3 = _parse_numbers(args.vertices, InvalidTriangle)
        return barycentric_from_vertices((x1, y1), (x2, y2), (x3, y3), (x, y))
    return from_cartesian(placement(triangle), (x, y))


def _emit(payload: Any):
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")


def cmd_report(args: argparse.Namespace) -> int:
    triangle = parse_triangle(args)
    point = parse_point(args, triangle)
    report = build_point_report(triangle, point)
    if args.text:
        sys.stdout.write(format_report_text(report))
    else:
        _emit(report.to_dict())
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    triangle = parse_triangle(args)
    if args.samples < 1:
        raise ValueError("samples must be at least 1")
    summary = VerificationOrchestrator(triangle, args.samples, args.seed).run()
    _emit(summary)
    return EXIT_OK if summary["success"] else EXIT_VERIFY_FAILED


async def write_text(path: str, content: str):
    async with aiofiles.open(path, "w", encoding="utf-8", newline="\n") as f:
        await f.write(content)
    logger.info(f"Wrote {len(content)} characters to {path}")


async def run_trace(args: argparse.Namespace) -> int:
    triangle = parse_triangle(args)
    resolution = args.res if args.res is not None else config.trace_resolution
    if not config.min_resolution <= resolution <= config.max_resolution:
        raise ValueError("resolution out of range")
    bbox = tuple(float(v) for v in args.bbox) if args.bbox is not None else default_bbox(triangle)

    curve = await trace_async(triangle, bbox, resolution)
    writes = []
    if args.svg:
        writes.append(write_text(args.svg, curve_to_svg(curve)))
    if args.csv:
        writes.append(write_text(args.csv, curve_to_csv(curve)))
    await asyncio.gather(*writes)

    _emit({
        "triangle": triangle.describe(),
        "bbox": [round(v, 12) for v in curve.bbox],
        "resolution": curve.resolution,
        "polylines": len(curve.polylines),
        "vertices": curve.vertex_count,
        "svg": args.svg,
        "csv": args.csv,
    })
    return EXIT_OK


def cmd_trace(args: argparse.Namespace) -> int:
    return asyncio.run(run_trace(args))


def cmd_centers(args: argparse.Namespace) -> int:
    table = build_center_table(parse_triangle(args))
    if args.text:
        sys.stdout.write(format_center_table_text(table))
    else:
        _emit(table)
    return EXIT_OK


def _add_triangle_args(parser: argparse.ArgumentParser):
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--sides", nargs=3, metavar=("A", "B", "C"), help="exact side lengths")
    group.add_argument("--vertices", nargs=6, metavar=("X1", "Y1", "X2", "Y2", "X3", "Y3"),
                       help="vertex coordinates of A, B, C")


def _add_format_args(parser: argparse.ArgumentParser):
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--json", action="store_true", help="JSON output (default)")
    group.add_argument("--text", action="store_true", help="plain text output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="orthohomology",
                                     description="Pedal triangles perspective with their reference triangle")
    subparsers = parser.add_subparsers(dest="command", required=True)

    report = subparsers.add_parser("report", help="everything known about one point")
    _add_triangle_args(report)
    point = report.add_mutually_exclusive_group(required=True)
    point.add_argument("--bary", nargs=3, metavar=("ALPHA", "BETA", "GAMMA"))
    point.add_argument("--cart", nargs=2, metavar=("X", "Y"))
    _add_format_args(report)
    report.set_defaults(handler=cmd_report)

    verify = subparsers.add_parser("verify", help="run the verification suites")
    _add_triangle_args(verify)
    verify.add_argument("--samples", type=int, default=config.verify_samples)
    verify.add_argument("--seed", type=int, default=config.verify_seed)
    verify.set_defaults(handler=cmd_verify)

    trace = subparsers.add_parser("trace", help="trace the locus as polylines")
    _add_triangle_args(trace)
    box = trace.add_mutually_exclusive_group()
    box.add_argument("--bbox", nargs=4, type=float, metavar=("X0", "Y0", "X1", "Y1"))
    box.add_argument("--auto", action="store_true", help="triangle box scaled about its center (default)")
    trace.add_argument("--res", type=int, default=None, help="samples per axis")
    trace.add_argument("--svg", metavar="PATH")
    trace.add_argument("--csv", metavar="PATH")
    trace.set_defaults(handler=cmd_trace)

    centers = subparsers.add_parser("centers", help="catalog centers and their locus values")
    _add_triangle_args(centers)
    _add_format_args(centers)
    centers.set_defaults(handler=cmd_centers)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    cli_logger = setup_logging()
    cli_logger.debug("Starting command", extra={"command": args.command, "config": config.as_dict()})

    try:
        return args.handler(args)
    except InvalidPoint as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_INVALID_POINT
    except (InvalidTriangle, ValueError) as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_INVALID_ARGUMENT
    except OSError as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_IO
    except GeometryError as e:
        cli_logger.exception("Geometry error")
        sys.stderr.write(f"error: {e.code}: {e}\n")
        return EXIT_INVALID_ARGUMENT


if __name__ == "__main__":
    sys.exit(main())
