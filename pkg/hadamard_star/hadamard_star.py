"""Main module."""
import argparse
import logging
import sys
from typing import List, Optional

from hadamard_star.api.documents import dump_document, error_document, load_document
from hadamard_star.api.job_service import JobService
from hadamard_star.exceptions import HadamardStarError, SchemaError
from hadamard_star.field import field_from_name
from hadamard_star.settings import Settings, load_settings

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_SCHEMA = 2


def build_parser(settings: Settings) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hadamard-star",
        description="Exact computations with Hadamard star configurations.",
    )
    parser.add_argument("command", choices=JobService.COMMANDS)
    parser.add_argument("--input", help="JSON input document (default: stdin)")
    parser.add_argument("--output", help="output path (default: stdout)")
    parser.add_argument(
        "--seed", type=int, default=None, help=f"search seed (default {settings.seed})"
    )
    parser.add_argument(
        "--attempts", type=int, default=None, help=f"search budget (default {settings.attempts})"
    )
    parser.add_argument("--field", default=None, help="rational or quadext:<m>")
    parser.add_argument(
        "--table", action="store_true", help="write a text table instead of JSON"
    )
    parser.add_argument("--log-level", default=settings.log_level)
    return parser


def _read_input(path: Optional[str], command: str) -> str:
    if path is not None:
        with open(path, encoding="utf-8") as handle:
            return handle.read()
    if command in JobService.FIXTURE_COMMANDS or sys.stdin.isatty():
        return ""
    return sys.stdin.read()


def _write_output(path: Optional[str], text: str) -> None:
    if path is None:
        sys.stdout.write(text + "\n")
        return
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(text + "\n")


def main(argv: Optional[List[str]] = None, settings: Optional[Settings] = None) -> int:
    """
    Command line entry point.

    Returns
    -------
    int
        0 on success, 1 on a domain failure (including a failing fixture),
        2 on a schema error.
    """
    settings = settings or load_settings()
    args = build_parser(settings).parse_args(argv)
    logging.basicConfig(level=args.log_level.upper(), stream=sys.stderr)
    try:
        field = field_from_name(args.field) if args.field else None
    except ValueError as exc:
        _write_output(args.output, dump_document(error_document(exc, settings.format_version)))
        return EXIT_SCHEMA
    service = JobService(field=field, seed=args.seed, attempts=args.attempts, settings=settings)
    try:
        document = load_document(_read_input(args.input, args.command), settings.format_version)
        result = service.run(args.command, document)
    except SchemaError as exc:
        logger.error("schema error: %s", exc)
        _write_output(args.output, dump_document(error_document(exc, settings.format_version)))
        return EXIT_SCHEMA
    except (HadamardStarError, ZeroDivisionError) as exc:
        logger.error("%s: %s", type(exc).__name__, exc)
        _write_output(args.output, dump_document(error_document(exc, settings.format_version)))
        return EXIT_DOMAIN
    if args.table:
        _write_output(args.output, JobService.to_frame(result).to_string(index=False))
    else:
        _write_output(args.output, dump_document(result))
    return EXIT_OK if result.get("passed", True) else EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
