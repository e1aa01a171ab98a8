# commands/common.py
# Shared flags and I/O for the subcommands.

import argparse
from typing import TextIO

from pydantic import BaseModel

from graphs.graph import Graph
from graphs.io import parse_graph
from services.errors import SourceError

# Exit codes: 0 success / verdict true, 1 verdict false, 2 usage or input error
EXIT_OK    = 0
EXIT_FALSE = 1
EXIT_ERROR = 2


def add_input_args(parser: argparse.ArgumentParser) -> None:
    source = parser.add_mutually_exclusive_group()
    source.add_argument("--graph6", help="inline graph6 string")
    source.add_argument("--file", help="graph6 or edge-list file ('-' for stdin)")


def add_format_arg(parser: argparse.ArgumentParser, *extra: str) -> None:
    parser.add_argument("--format", choices=["human", "json", *extra], default="human")


def read_text(path: str, stdin: TextIO) -> str:
    if path == "-":
        return stdin.read()
    try:
        with open(path, encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise SourceError(f"cannot read {path}: {exc}") from exc


def read_graph(args: argparse.Namespace, stdin: TextIO) -> Graph:
    if args.graph6 is not None:
        return parse_graph(args.graph6)
    return parse_graph(read_text(args.file or "-", stdin))


def emit(out: TextIO, fmt: str, model: BaseModel, human: str) -> None:
    if fmt == "json":
        out.write(model.model_dump_json() + "\n")
    else:
        out.write(human if human.endswith("\n") else human + "\n")
