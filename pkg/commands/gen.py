# commands/gen.py
from typing import get_args

from graphs.families import build_family
from graphs.io import GRAPH6_MAX_N, emit_edge_list, emit_graph6
from schemas.cli import GenOutput
from schemas.family import FamilyTag, GraphFamily
from commands.common import EXIT_OK, add_format_arg, emit

ALIASES = {"g1": "g-1", "gstar1": "g-star-1", "gstar2": "g-star-2", "gn": "g-n", "gk": "g-k"}


def register(subparsers) -> None:
    parser = subparsers.add_parser("gen", help="emit a named family member")
    parser.add_argument("--family", required=True, choices=[*get_args(FamilyTag), *ALIASES])
    parser.add_argument("--n", type=int)
    parser.add_argument("--k", type=int)
    parser.add_argument("--delta", type=int)
    parser.add_argument("--expr", help="join/union expression, e.g. 'K1 v (2K1 + K2)'")
    parser.add_argument("--as", dest="encoding", choices=["graph6", "edge-list"], default="graph6")
    add_format_arg(parser)
    parser.set_defaults(handler=handle)


def handle(args, out, stdin) -> int:
    tag = ALIASES.get(args.family, args.family)
    g = build_family(GraphFamily(tag=tag, n=args.n, k=args.k, delta=args.delta, expr=args.expr))
    if args.encoding == "graph6":
        graph6 = emit_graph6(g)
        human = graph6
    else:
        # edge lists are how orders above the graph6 short form get out
        graph6 = emit_graph6(g) if g.n <= GRAPH6_MAX_N else None
        human = emit_edge_list(g)
    emit(out, args.format, GenOutput(family=tag, graph6=graph6, n=g.n, m=g.m), human)
    return EXIT_OK
