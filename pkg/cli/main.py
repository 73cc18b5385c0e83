"""
Main CLI application
"""

import argparse
import logging
import os
import sys
from typing import List, Optional, Sequence

from pydantic import ValidationError

from cli import algebra_cli, eval_cli, genfun_cli, mtv_guess_cli, relations_cli, tables_cli
from cli.schemas import CommandConfig
from cli.shared import configure_logging
from models.errors import EvaluationError, ZcError
from services.eval_cache_service import CACHE_ENV

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

# flags whose value may be a negative rational such as -1/2
_SIGNED_VALUE_FLAGS = ("--c", "--c-samples")

_CONFIG_FIELDS = ("c", "digits", "cut", "weight", "max_weight", "order", "terms", "c_samples")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="Machine-readable output")
    common.add_argument("--jobs", type=int, default=os.cpu_count() or 1, help="Worker processes")
    common.add_argument("--cache", dest="cache_path", default=None,
                        help=f"Evaluation cache file (default: ${CACHE_ENV})")
    common.add_argument("--no-cache", action="store_true", help="Do not read or write the cache file")
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v info, -vv debug")

    parser = argparse.ArgumentParser(
        prog="zc",
        description="Deformed multiple zeta values: evaluation, shuffle algebra and relation search",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    for module in (eval_cli, algebra_cli, relations_cli, genfun_cli, mtv_guess_cli, tables_cli):
        module.register(subparsers, common)
    return parser


def normalize_argv(argv: Sequence[str]) -> List[str]:
    """Join "--c -1/2" into "--c=-1/2" so argparse does not read -1/2 as a flag"""
    out: List[str] = []
    items = list(argv)
    i = 0
    while i < len(items):
        item = items[i]
        if item in _SIGNED_VALUE_FLAGS and i + 1 < len(items) and items[i + 1].startswith("-"):
            out.append(f"{item}={items[i + 1]}")
            i += 2
            continue
        out.append(item)
        i += 1
    return out


def build_config(args: argparse.Namespace) -> CommandConfig:
    values = {name: getattr(args, name) for name in _CONFIG_FIELDS if getattr(args, name, None) is not None}
    if getattr(args, "verify_samples", None) is not None:
        values["verify_samples"] = args.verify_samples
        values["verify"] = args.verify
    return CommandConfig(
        command=args.command,
        output="json" if args.json else "text",
        cache_path=args.cache_path,
        no_cache=args.no_cache,
        jobs=args.jobs,
        **values,
    )


def emit(output, text: str, as_json: bool) -> None:
    if as_json:
        sys.stdout.write(output.model_dump_json(indent=2) + "\n")
    else:
        sys.stdout.write(text + "\n")


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run one command.

    Returns:
        0 on success, 1 when a computation fails, 2 on invalid input
    """
    argv = normalize_argv(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE

    configure_logging(args.verbose)
    try:
        config = build_config(args)
        output, text = args.handler(args, config)
    except ValidationError as e:
        for error in e.errors():
            field = ".".join(str(part) for part in error["loc"]) or "input"
            sys.stderr.write(f"error: {field}: {error['msg']}\n")
        return EXIT_USAGE
    except EvaluationError as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_FAILURE
    except (ValueError, KeyError, ZcError) as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_USAGE
    except Exception as e:
        logger.exception("Unexpected failure in %s", args.command)
        sys.stderr.write(f"error: {e}\n")
        return EXIT_FAILURE

    emit(output, text, config.as_json)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
