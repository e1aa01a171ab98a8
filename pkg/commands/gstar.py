# commands/gstar.py
from graphs.io import emit_graph6
from schemas.cli import GstarOutput
from services.structure import bridge_degree, build_bridge_tree
from commands.common import EXIT_OK, add_format_arg, add_input_args, emit, read_graph


def register(subparsers) -> None:
    parser = subparsers.add_parser("gstar", help="bridges, 2-edge-connected components and the bridge tree")
    add_input_args(parser)
    add_format_arg(parser)
    parser.set_defaults(handler=handle)


def handle(args, out, stdin) -> int:
    g = read_graph(args, stdin)
    tree = build_bridge_tree(g)
    bridges = [list(g.edges[e]) for e in tree.bridges]
    output = GstarOutput(
        graph6=emit_graph6(g),
        bridges=bridges,
        components=[list(part) for part in tree.nodes],
        singletons=tree.singletons(),
        tree_edges=[[a, b] for _, a, b in tree.tree_edges],
        delta_star=tree.max_degree,
        bridge_degree=bridge_degree(g),
    )
    parts = " ".join("{" + ",".join(map(str, part)) + "}" for part in tree.nodes)
    human = "\n".join([
        "bridges: " + (" ".join(f"{u}-{v}" for u, v in bridges) or "none"),
        f"components: {parts}",
        f"delta*: {tree.max_degree}",
    ])
    emit(out, args.format, output, human)
    return EXIT_OK
