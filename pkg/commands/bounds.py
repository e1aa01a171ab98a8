# commands/bounds.py
from typing import get_args

from schemas.bounds import BoundQuery, BoundVariant
from schemas.cli import BoundsOutput
from services.bounds import evaluate
from commands.common import EXIT_OK, add_format_arg, emit


def register(subparsers) -> None:
    parser = subparsers.add_parser("bounds", help="evaluate an edge-count threshold")
    parser.add_argument("--variant", required=True, choices=get_args(BoundVariant))
    parser.add_argument("--n", type=int, required=True)
    parser.add_argument("--k", type=int)
    parser.add_argument("--t", type=int)
    parser.add_argument("--delta", type=int)
    parser.add_argument("--c", type=int, help="circumference bound (erdos-gallai)")
    parser.add_argument("--m-param", type=int, dest="m_param", help="block size (woodall)")
    parser.add_argument("--reading", choices=["theorem", "abstract"], default="theorem")
    add_format_arg(parser)
    parser.set_defaults(handler=handle)


def handle(args, out, stdin) -> int:
    query = BoundQuery(
        variant=args.variant, n=args.n, k=args.k, t=args.t, delta=args.delta,
        c=args.c, m_param=args.m_param, reading=args.reading,
    )
    result = evaluate(query)
    emit(out, args.format, BoundsOutput(query=query, result=result), f"{result.value}\n{result.formula}")
    return EXIT_OK
