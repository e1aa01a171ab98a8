# commands/check.py
from graphs.io import parse_coloring
from schemas.cli import CheckOutput
from services.coloring import unreachable_pair
from services.errors import SourceError
from commands.common import (
    EXIT_FALSE, EXIT_OK, add_format_arg, add_input_args, emit, read_graph, read_text,
)


def register(subparsers) -> None:
    parser = subparsers.add_parser("check", help="is a colored graph properly connected?")
    add_input_args(parser)
    parser.add_argument("--coloring", required=True, help="coloring file: 'k K' then 'u v c' lines")
    add_format_arg(parser)
    parser.set_defaults(handler=handle)


def handle(args, out, stdin) -> int:
    graph_from_stdin = args.graph6 is None and args.file in (None, "-")
    if graph_from_stdin and args.coloring == "-":
        raise SourceError("the graph and the coloring cannot both come from stdin")
    g = read_graph(args, stdin)
    coloring = parse_coloring(read_text(args.coloring, stdin), g)

    pair = unreachable_pair(g, coloring)
    output = CheckOutput(
        properly_connected=pair is None,
        unreachable_pair=list(pair) if pair else None,
        colors_used=coloring.used(),
    )
    if pair is None:
        human = "properly connected"
    else:
        human = f"not properly connected: no proper path between {pair[0]} and {pair[1]}"
    emit(out, args.format, output, human)
    return EXIT_OK if pair is None else EXIT_FALSE
