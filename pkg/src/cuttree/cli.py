"""Command-line interface.

Data goes to stdout (or the output file); diagnostics such as timings and
instrumentation counters go to stderr, so pipelines can consume results
directly.  Exit codes: 0 success, 1 verification mismatch, 2 input error,
3 guard refusal.
"""

from __future__ import annotations

import argparse
import random
import sys
import time

from . import gen
from .analytics import connectivity_dendrogram, connectivity_distribution
from .fileio import (
    InputFormatError,
    read_cut_tree,
    read_edge_list,
    write_cut_tree,
    write_edge_list,
)
from .flow import max_flow_unidir
from .graph import normalize
from .pipeline import BuildConfig, BuildStats, construct
from .tree import query

VERIFY_GUARD = 2000


def _parse_beta(text: str) -> int | None:
    if text.lower() in ("inf", "infinity", "none"):
        return None
    return int(text)


def _add_config_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--variant", default="A5", choices=["A0", "A1", "A2", "A3", "A4", "A5"])
    p.add_argument("--alpha", type=int, default=1, help="number of tree packings")
    p.add_argument("--beta", type=_parse_beta, default=None,
                   help="packing breadth limit (integer or 'inf')")
    p.add_argument("--gamma", type=int, default=2, help="detour budget of the goal search")
    p.add_argument("--k", type=int, default=10, help="high-degree pair count")


def _config_from(args) -> BuildConfig:
    return BuildConfig(
        variant=args.variant,
        alpha=args.alpha,
        beta=args.beta,
        gamma=args.gamma,
        k=args.k,
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cuttree",
        description="Construct and query Gomory-Hu cut trees of undirected graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="construct a cut tree from an edge list")
    p.add_argument("input", help="edge-list file ('u v' per line, '#' comments)")
    p.add_argument("output", help="cut-tree file to write")
    _add_config_flags(p)

    p = sub.add_parser("query", help="answer connectivity queries from a cut tree")
    p.add_argument("tree", help="cut-tree file")
    p.add_argument("--pairs", help="file of 'u v' query pairs")
    p.add_argument("--random", type=int, metavar="N", help="generate N random pairs")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--time", action="store_true", help="report mean query latency")

    p = sub.add_parser("verify", help="check a built tree against the max-flow oracle")
    p.add_argument("input", help="edge-list file")
    p.add_argument("--force", action="store_true",
                   help=f"run even with more than {VERIFY_GUARD} vertices")
    _add_config_flags(p)

    p = sub.add_parser("dist", help="connectivity distribution of a cut tree")
    p.add_argument("tree")

    p = sub.add_parser("dendro", help="connectivity dendrogram of a cut tree")
    p.add_argument("tree")

    p = sub.add_parser("gen", help="generate a seeded synthetic graph")
    p.add_argument("output", nargs="?", help="edge-list file (stdout if omitted)")
    p.add_argument("--model", required=True, choices=["er", "pa", "barbell"])
    p.add_argument("--n", type=int, help="vertex count (er, pa)")
    p.add_argument("--p", type=float, default=0.1, help="edge probability (er)")
    p.add_argument("--m", type=int, default=3, help="edges per new vertex (pa)")
    p.add_argument("--clusters", type=int, default=3, help="cluster count (barbell)")
    p.add_argument("--cluster-size", type=int, default=5, help="cluster size (barbell)")
    p.add_argument("--path-len", type=int, default=1,
                   help="length of inter-cluster paths (barbell)")
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("bench", help="build and report instrumentation counters")
    p.add_argument("input")
    _add_config_flags(p)

    return parser


def cmd_build(args) -> int:
    edges = read_edge_list(args.input)
    g, mapping = normalize(edges)
    stats = BuildStats()
    started = time.perf_counter()
    tree = construct(g, _config_from(args), stats)
    elapsed = time.perf_counter() - started
    write_cut_tree(tree, mapping, args.output)
    print(f"build_seconds {elapsed:.3f}", file=sys.stderr)
    for name, seconds in stats.stage_seconds.items():
        print(f"stage_seconds.{name} {seconds:.3f}", file=sys.stderr)
    for line in stats.summary_lines():
        print(line, file=sys.stderr)
    return 0


def cmd_query(args) -> int:
    tree, mapping = read_cut_tree(args.tree)
    if args.pairs is None and args.random is None:
        print("query: need --pairs FILE or --random N", file=sys.stderr)
        return 2
    if args.pairs is not None:
        pairs = read_edge_list(args.pairs)
    else:
        labels = mapping.to_external
        if not labels:
            print("query: tree has no vertices", file=sys.stderr)
            return 2
        rng = random.Random(args.seed)
        pairs = [
            (labels[rng.randrange(len(labels))], labels[rng.randrange(len(labels))])
            for _ in range(args.random)
        ]
    out = sys.stdout
    started = time.perf_counter()
    for a, b in pairs:
        try:
            s = mapping.internal(a)
            t = mapping.internal(b)
        except KeyError as missing:
            print(f"query: unknown vertex label {missing.args[0]}", file=sys.stderr)
            return 2
        value = query(tree, s, t)
        out.write("inf\n" if s == t else f"{value}\n")
    elapsed = time.perf_counter() - started
    if args.time and pairs:
        print(f"mean_query_microseconds {elapsed / len(pairs) * 1e6:.3f}", file=sys.stderr)
    return 0


def cmd_verify(args) -> int:
    edges = read_edge_list(args.input)
    g, mapping = normalize(edges)
    if g.n > VERIFY_GUARD and not args.force:
        print(
            f"verify: {g.n} vertices exceeds the all-pairs guard of {VERIFY_GUARD}"
            " (use --force)",
            file=sys.stderr,
        )
        return 3
    tree = construct(g.copy(), _config_from(args))
    mismatches = 0
    vertices = list(g.vertices())
    for i, s in enumerate(vertices):
        for t in vertices[i + 1 :]:
            tree_value = query(tree, s, t)
            oracle_value, _ = max_flow_unidir(g, s, t)
            if tree_value != oracle_value:
                mismatches += 1
                print(
                    f"{mapping.external(s)} {mapping.external(t)} "
                    f"{tree_value} {oracle_value}"
                )
    checked = len(vertices) * (len(vertices) - 1) // 2
    print(f"verified_pairs {checked} mismatches {mismatches}", file=sys.stderr)
    return 0 if mismatches == 0 else 1


def cmd_dist(args) -> int:
    tree, _mapping = read_cut_tree(args.tree)
    for weight, pairs in connectivity_distribution(tree).items():
        print(f"{weight} {pairs}")
    return 0


def cmd_dendro(args) -> int:
    tree, mapping = read_cut_tree(args.tree)
    dendro = connectivity_dendrogram(tree)
    n = dendro.n_leaves

    def name(node_id: int) -> int:
        return mapping.external(node_id) if node_id < n else node_id

    for i, ((a, b), label) in enumerate(zip(dendro.children, dendro.labels)):
        print(f"{n + i} {name(a)} {name(b)} {label}")
    return 0


def cmd_gen(args) -> int:
    if args.model == "er":
        if args.n is None:
            print("gen: --n is required for --model er", file=sys.stderr)
            return 2
        edges = gen.gnp(args.n, args.p, args.seed)
    elif args.model == "pa":
        if args.n is None:
            print("gen: --n is required for --model pa", file=sys.stderr)
            return 2
        edges = gen.preferential_attachment(args.n, args.m, args.seed)
    else:
        edges = gen.bridged_clusters(
            args.clusters, args.cluster_size, args.seed, args.path_len
        )
    write_edge_list(edges, args.output if args.output else sys.stdout)
    return 0


def cmd_bench(args) -> int:
    edges = read_edge_list(args.input)
    g, _mapping = normalize(edges)
    stats = BuildStats()
    started = time.perf_counter()
    construct(g, _config_from(args), stats)
    elapsed = time.perf_counter() - started
    print(f"build_seconds {elapsed:.3f}")
    for name, seconds in stats.stage_seconds.items():
        print(f"stage_seconds.{name} {seconds:.3f}")
    for line in stats.summary_lines():
        print(line)
    return 0


COMMANDS = {
    "build": cmd_build,
    "query": cmd_query,
    "verify": cmd_verify,
    "dist": cmd_dist,
    "dendro": cmd_dendro,
    "gen": cmd_gen,
    "bench": cmd_bench,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except InputFormatError as exc:
        print(f"cuttree: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"cuttree: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"cuttree: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
