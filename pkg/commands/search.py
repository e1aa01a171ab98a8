# commands/search.py
from services.harness import search_counterexamples
from commands.common import EXIT_FALSE, EXIT_OK, add_format_arg
from commands.verify import add_jobs_arg, write_report


def register(subparsers) -> None:
    parser = subparsers.add_parser("search", help="hunt for counterexamples to the k=2 size conjecture")
    parser.add_argument("--n", type=int, required=True)
    parser.add_argument("--delta", type=int, default=3)
    parser.add_argument("--source", default="builtin", help="'builtin', a graph6 file, or '-' for stdin")
    add_jobs_arg(parser)
    add_format_arg(parser, "csv")
    parser.set_defaults(handler=handle)


def handle(args, out, stdin) -> int:
    report = search_counterexamples(args.n, args.delta, args.source, args.jobs, stdin)
    write_report(report, args.format, out, label="counterexamples")
    return EXIT_FALSE if report.summary.violations else EXIT_OK
