# main.py
# python main.py <pc|check|gstar|bounds|verify|search|gen> [flags]
import argparse
import logging
import sys

from pydantic import ValidationError

from commands import bounds, check, gen, gstar, pc, search, verify
from commands.common import EXIT_ERROR
from config import settings
from services.errors import PropConnError

COMMANDS = [pc, check, gstar, bounds, verify, search, gen]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="propconn",
        description="Proper connection number: exact solver, bounds and theorem verification",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v info, -vv debug (stderr)")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        command.register(subparsers)
    return parser


def configure_logging(verbose: int) -> None:
    level = {0: settings.log_level.upper(), 1: "INFO"}.get(verbose, "DEBUG")
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s %(message)s",
        force=True,
    )


def run(argv: list = None, stdout=None, stdin=None) -> int:
    stdout = stdout or sys.stdout
    stdin = stdin or sys.stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else 0

    configure_logging(args.verbose)
    try:
        return args.handler(args, stdout, stdin)
    except PropConnError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except ValidationError as exc:
        details = "; ".join(f"{'.'.join(map(str, e['loc']))}: {e['msg']}" for e in exc.errors())
        print(f"error: {details}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(run())
