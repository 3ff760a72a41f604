"""Analyze fake weighted projective spaces from the command line.

Input is a JSON object read from ``--input`` or stdin; output is JSON on
stdout (or a text table with ``--table``). Exit codes: 0 success, 2 domain
error, 3 unreadable or malformed input.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from collections.abc import Mapping
from functools import lru_cache
from pathlib import Path
from typing import Any, NoReturn

import pandas as pd
from jsonschema import Draft202012Validator

from . import service
from .config import get_settings
from .errors import EXIT_OK, FwpsError, InputParseError
from .utils.canonical import dumps

SCHEMA_DIR = Path(__file__).resolve().parent / "schemas"

__all__ = [
    "build_parser",
    "cmd_analyze",
    "cmd_enumerate",
    "cmd_from_weights",
    "cmd_normalize_action",
    "main",
]


@lru_cache(maxsize=4)
def _load_schema(name: str) -> Draft202012Validator:
    with (SCHEMA_DIR / name).open("r", encoding="utf-8") as handle:
        return Draft202012Validator(json.load(handle))


def _reject_float(literal: str) -> NoReturn:
    raise InputParseError(f"expected an integer, found {literal}")


def parse_payload(text: str) -> Any:
    try:
        return json.loads(text, parse_float=_reject_float)
    except json.JSONDecodeError as error:
        raise InputParseError(f"invalid JSON input: {error}") from error


def _read_payload(path: str | None) -> Any:
    if path is None or path == "-":
        return parse_payload(sys.stdin.read())
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as error:
        raise InputParseError(f"cannot read {path}: {error}") from error
    return parse_payload(text)


def _validated(payload: Any, schema_name: str) -> Mapping[str, Any]:
    validator = _load_schema(schema_name)
    violations = [
        f"{error.json_path}: {error.message}"
        for error in sorted(validator.iter_errors(payload), key=lambda item: item.json_path)
    ]
    if violations:
        raise InputParseError(
            f"input does not match {schema_name}: {violations[0]}", {"violations": violations}
        )
    return payload


def cmd_analyze(payload: Any) -> dict[str, Any]:
    data = _validated(payload, "analyze-input.schema.json")
    return service.analyze_rays(data["rays"]).model_dump(mode="json")


def cmd_from_weights(payload: Any) -> dict[str, Any]:
    data = _validated(payload, "weights-input.schema.json")
    return service.from_weights(data["weights"]).model_dump(mode="json")


def cmd_normalize_action(payload: Any) -> dict[str, Any]:
    data = _validated(payload, "action-input.schema.json")
    return service.normalize_action(data["r"], data["exponents"]).model_dump(mode="json")


def cmd_enumerate(max_r: int) -> list[dict[str, Any]]:
    return [record.model_dump(mode="json") for record in service.enumerate_p2_quotients(max_r)]


def render_table(result: Any) -> str:
    if isinstance(result, list):
        frame = pd.DataFrame(result, columns=["r", "a", "rays", "index"])
        return frame.to_string(index=False) + "\n"
    frame = pd.json_normalize(result, sep=".").T.reset_index()
    frame.columns = ["field", "value"]
    return frame.to_string(index=False) + "\n"


def _run_analyze(args: argparse.Namespace) -> Any:
    return cmd_analyze(_read_payload(args.input))


def _run_from_weights(args: argparse.Namespace) -> Any:
    return cmd_from_weights(_read_payload(args.input))


def _run_normalize_action(args: argparse.Namespace) -> Any:
    return cmd_normalize_action(_read_payload(args.input))


def _run_enumerate(args: argparse.Namespace) -> Any:
    return cmd_enumerate(args.max_r)


class _ArgumentParser(argparse.ArgumentParser):
    """Reports usage errors as :class:`InputParseError` instead of exiting."""

    def error(self, message: str) -> NoReturn:
        raise InputParseError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--table", action="store_true", help="Render the result as a text table instead of JSON."
    )
    common.add_argument(
        "--verbose", action="store_true", help="Log computation steps to stderr."
    )

    parser = _ArgumentParser(prog="fwps", description=__doc__.splitlines()[0])
    subparsers = parser.add_subparsers(dest="command", required=True)

    analyze = subparsers.add_parser(
        "analyze", parents=[common], help='Analyze a fan given as {"rays": [...]}.'
    )
    analyze.add_argument("--input", help="JSON input file (default: stdin).")
    analyze.set_defaults(func=_run_analyze)

    weights = subparsers.add_parser(
        "from-weights",
        parents=[common],
        help='Build the standard fan for {"weights": [...]} and analyze it.',
    )
    weights.add_argument("--input", help="JSON input file (default: stdin).")
    weights.set_defaults(func=_run_from_weights)

    action = subparsers.add_parser(
        "normalize-action",
        parents=[common],
        help='Normal form of {"r": r, "exponents": [e0, e1, e2]} acting on P^2.',
    )
    action.add_argument("--input", help="JSON input file (default: stdin).")
    action.set_defaults(func=_run_normalize_action)

    enumerate_parser = subparsers.add_parser(
        "enumerate", parents=[common], help="List every P^2 quotient normal form up to --max-r."
    )
    enumerate_parser.add_argument("--max-r", type=int, required=True, help="Largest group order.")
    enumerate_parser.set_defaults(func=_run_enumerate)

    return parser


def main(argv: list[str] | None = None) -> int:
    indent = get_settings().json_indent
    try:
        args = build_parser().parse_args(argv)
        if args.verbose:
            logging.basicConfig(
                level=logging.DEBUG,
                stream=sys.stderr,
                format="[%(levelname)s] %(name)s: %(message)s",
            )
        result = args.func(args)
    except FwpsError as failure:
        sys.stdout.write(dumps(failure.to_payload(), indent=indent))
        print(failure.message, file=sys.stderr)
        return failure.exit_code
    sys.stdout.write(render_table(result) if args.table else dumps(result, indent=indent))
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
