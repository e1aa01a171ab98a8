# commands/pc.py
from graphs.io import emit_coloring, emit_graph6
from schemas.cli import PcOutput
from services.coloring import pc_exact
from commands.common import EXIT_OK, add_format_arg, add_input_args, emit, read_graph


def register(subparsers) -> None:
    parser = subparsers.add_parser("pc", help="exact proper connection number with a witness coloring")
    add_input_args(parser)
    add_format_arg(parser)
    parser.set_defaults(handler=handle)


def handle(args, out, stdin) -> int:
    g = read_graph(args, stdin)
    result = pc_exact(g)
    output = PcOutput(
        graph6=emit_graph6(g),
        n=g.n,
        m=g.m,
        pc=result.pc,
        method=result.method,
        lower_bound=result.lower_bound,
        upper_bound=result.upper_bound,
        coloring=result.witness.as_triples(g),
    )
    emit(out, args.format, output, f"{result.pc}\n{emit_coloring(g, result.witness)}")
    return EXIT_OK
