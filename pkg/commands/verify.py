# commands/verify.py
from typing import get_args

from config import settings
from schemas.report import TheoremTag, VerifyReport, VerifyTask
from services.harness import run_verification, write_csv, write_jsonl
from services.errors import ContractError
from commands.common import EXIT_FALSE, EXIT_OK, add_format_arg


def register(subparsers) -> None:
    parser = subparsers.add_parser("verify", help="replay a theorem over a corpus")
    parser.add_argument("--theorem", required=True, choices=get_args(TheoremTag))
    parser.add_argument("--n", type=int, help="order of the corpus (not needed for lemma-monotonicity)")
    parser.add_argument("--source", default="builtin", help="'builtin', a graph6 file, or '-' for stdin")
    parser.add_argument("--k", type=int)
    parser.add_argument("--reading", choices=["theorem", "abstract"], default="theorem")
    parser.add_argument("--min-degree", type=int, dest="min_degree")
    parser.add_argument("--min-size", type=int, dest="min_size")
    parser.add_argument("--bridges", type=int, help="keep graphs with exactly this many bridges")
    parser.add_argument("--widen-delta", action="store_true", dest="widen_delta")
    parser.add_argument("--exact-pc", action="store_true", dest="exact_pc")
    parser.add_argument("--stream-completeness", dest="stream_completeness",
                        help="how the graph6 stream was produced, e.g. 'geng -c 9'")
    parser.add_argument("--samples", type=int, default=1000)
    parser.add_argument("--seed", type=int, default=42)
    add_jobs_arg(parser)
    add_format_arg(parser, "csv")
    parser.set_defaults(handler=handle)


def add_jobs_arg(parser) -> None:
    parser.add_argument("--jobs", type=int, default=settings.default_jobs)


def render_summary(report: VerifyReport, label: str = "violators") -> str:
    s = report.summary
    lines = [
        f"theorem {s.theorem} n={s.n} source={s.source}",
        f"scanned: {s.scanned}  in class: {s.in_class}  filtered: {s.filtered}",
    ]
    verdict = f"{label}: {s.violations}"
    if s.exceptions_match is True:
        verdict += " (matches expected exception set)"
    elif s.exceptions_match is False:
        verdict += f" (does not match expected exception set of {len(s.expected_exceptions)})"
    lines.append(verdict)
    lines.extend(f"  {r.graph6} {r.observed} {r.note}".rstrip() for r in report.violators)
    lines.append(f"undecided: {s.undecided}  exhaustive: {'yes' if s.exhaustive else 'no'}")
    if s.stream_completeness:
        lines.append(f"stream: {s.stream_completeness}")
    lines.append(f"wall time: {s.wall_time:.3f}s")
    return "\n".join(lines) + "\n"


def write_report(report: VerifyReport, fmt: str, out, label: str = "violators") -> None:
    if fmt == "json":
        write_jsonl(report, out)
    elif fmt == "csv":
        write_csv(report, out)
    else:
        out.write(render_summary(report, label))


def handle(args, out, stdin) -> int:
    n = args.n
    if n is None:
        if args.theorem != "lemma-monotonicity":
            raise ContractError(f"--n is required for {args.theorem}")
        n = settings.monotonicity_max_n
    task = VerifyTask(
        theorem=args.theorem, n=n, source=args.source, k=args.k, reading=args.reading,
        min_degree=args.min_degree, min_size=args.min_size, bridges=args.bridges,
        widen_delta=args.widen_delta, exact_pc=args.exact_pc, jobs=args.jobs,
        stream_completeness=args.stream_completeness, samples=args.samples, seed=args.seed,
    )
    report = run_verification(task, stdin)
    write_report(report, args.format, out)
    return EXIT_OK if report.passed else EXIT_FALSE
