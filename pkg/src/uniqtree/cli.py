"""Command-line entry point: ``uniqtree {check,tree,gen,bench,probe}``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bench, compare, fixtures, gen, oracle, probe, unitree
from .graph import Graph, GraphFormatError, graph_from_edge_list, graph_to_edge_list

EXIT_ISOMORPHIC = 0
EXIT_NON_ISOMORPHIC = 1
EXIT_ERROR = 2

EDGE_LIST_HELP = """\
edge-list format:
  first line "n m" (vertex count, edge count), then m lines "u v" with
  0 <= u, v < n and u != v. Blank lines and lines starting with '#' are
  ignored; repeated or reversed edges collapse into one undirected edge.

exit codes:
  0 isomorphic, 1 non-isomorphic, 2 usage or parse error
"""

TREE_HELP = """\
dump format:
  "height H", then one line per tree level listing entries as
  "vertex:child_count". The profile follows on '#' lines: level widths and
  per-level child-count histograms ("count:entries").
  Roots may be given as an index or as a letter (A = 0).
"""

BENCH_HELP = f"""\
CSV columns:
  {",".join(bench.CSV_HEADER)}
  elapsed_ms is wall-clock milliseconds spent in isomorphism testing for all
  pairs of that size (pair generation excluded).
"""


class CliError(Exception):
    pass


def _load(path: str) -> Graph:
    try:
        return graph_from_edge_list(Path(path).read_text())
    except OSError as exc:
        raise CliError(f"{path}: {exc.strerror}") from None
    except GraphFormatError as exc:
        raise CliError(f"{path}: {exc}") from None


def cmd_check(args, out) -> int:
    g, h = _load(args.g), _load(args.h)
    result = compare.match_graphs(g, h, mode=args.mode)
    print(result.verdict, file=out)
    if result.size_mismatch:
        print(f"# size mismatch: {g.n} vs {h.n} vertices", file=out)
    if args.mapping:
        for v, u in enumerate(result.mapping):
            print(f"{v} -> {'-' if u is None else u}", file=out)
    if args.oracle:
        truth = oracle.brute_force_isomorphic(g, h, budget=args.budget)
        print(f"oracle: {truth.verdict}", file=out)
        if truth.verdict is compare.Verdict.INCONCLUSIVE:
            print(f"# oracle budget of {args.budget} search nodes exhausted", file=out)
        elif truth.verdict is not result.verdict:
            print(f"!!! DISAGREEMENT: algorithm says {result.verdict}, oracle says {truth.verdict}", file=out)
    return EXIT_ISOMORPHIC if result.isomorphic else EXIT_NON_ISOMORPHIC


def cmd_tree(args, out) -> int:
    g = _load(args.g)
    try:
        root = fixtures.parse_vertex(args.root)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    if not 0 <= root < g.n:
        raise CliError(f"root {args.root} out of range for n={g.n}")
    t = unitree.build_uniqueness_tree(g, root, args.height_cap)
    name = fixtures.label if args.letters else str
    print(unitree.format_tree(t, name), file=out)
    return 0


def cmd_gen(args, out) -> int:
    try:
        cfg = gen.GenConfig(args.n, args.p, args.seed)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    comments = [f"generator={gen.GENERATOR_ID} seed={cfg.seed} n={cfg.n} p={cfg.edge_probability} kind={args.kind}"]
    g = gen.random_graph(cfg)
    outputs = [(args.out, g, comments + ["role=first"])]
    if args.kind != "none":
        if args.out2 is None:
            raise CliError(f"--kind {args.kind} needs --out2 for the second graph")
        pair_seed = gen.sub_seed(cfg.seed, 1)
        if args.kind == "iso":
            h, perm = gen.isomorphic_pair(g, pair_seed)
            extra = [f"role=permuted pair_seed={pair_seed}", "permutation=" + " ".join(map(str, perm))]
        else:
            try:
                h = gen.perturbed_pair(g, pair_seed)
            except gen.GenerationError as exc:
                raise CliError(str(exc)) from None
            extra = [f"role=perturbed pair_seed={pair_seed}"]
        outputs.append((args.out2, h, comments + extra))
    for path, graph, notes in outputs:
        text = graph_to_edge_list(graph, notes)
        if path == "-":
            out.write(text)
        else:
            Path(path).write_text(text)
    return 0


def cmd_bench(args, out) -> int:
    def progress(rec):
        print(f"n={rec.n} elapsed_ms={rec.elapsed_ms:.3f} iso={rec.iso_verdicts} non={rec.noniso_verdicts}", file=sys.stderr)

    try:
        records = bench.run_sweep(
            args.kind, args.n_min, args.n_max, args.pairs, args.p, args.seed,
            mode=args.mode, workers=args.workers, progress=None if args.quiet else progress,
        )
    except (ValueError, gen.GenerationError) as exc:
        raise CliError(str(exc)) from None
    if args.out == "-":
        bench.write_csv(records, out)
    else:
        with open(args.out, "w", newline="") as fp:
            bench.write_csv(records, fp)
    if args.workers > 1:
        return 0
    try:
        fit = bench.loglog_fit(records, args.fit_min_n)
    except bench.FitError as exc:
        print(f"# no fit: {exc}", file=sys.stderr)
        return 0
    print(
        f"# fit n in [{fit.n_range[0]}, {fit.n_range[1]}]: slope {fit.slope:.6f}, "
        f"intercept {fit.intercept:.6f}, R^2 {fit.r_squared:.6f}",
        file=sys.stderr,
    )
    return 0


def cmd_probe(args, out) -> int:
    report = probe.run_probe(search_max_n=args.search_max_n, seed=args.seed)
    print(report.format(), file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="uniqtree",
        description="Graph isomorphism testing with uniqueness trees.",
        epilog=EDGE_LIST_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide whether two graphs are isomorphic",
                       epilog=EDGE_LIST_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("g", help="first edge-list file")
    p.add_argument("h", help="second edge-list file")
    p.add_argument("--mode", choices=compare.MODES, default="profile",
                   help="signature compared per vertex (default: profile)")
    p.add_argument("--mapping", action="store_true", help="print the greedy vertex mapping as 'v -> u'")
    p.add_argument("--oracle", action="store_true", help="also run the brute-force oracle and flag disagreement")
    p.add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET, help="oracle search-node budget")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("tree", help="dump the uniqueness tree of one vertex",
                       epilog=TREE_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("g", help="edge-list file")
    p.add_argument("root", help="root vertex: index or letter")
    p.add_argument("--height-cap", type=int, default=None, help="maximum tree height (default: n)")
    p.add_argument("--letters", action="store_true", help="print vertices as letters A, B, ...")
    p.set_defaults(func=cmd_tree)

    p = sub.add_parser("gen", help="generate a random graph and optionally a partner",
                       epilog=EDGE_LIST_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, default=0.5, help="edge probability (default 0.5)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--kind", choices=("none", "iso", "perturbed"), default="none")
    p.add_argument("--out", default="-", help="first graph path ('-' for stdout)")
    p.add_argument("--out2", default=None, help="second graph path ('-' for stdout)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="timed sweep over graph sizes with a log-log fit",
                       epilog=BENCH_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--kind", choices=bench.PAIR_KINDS, default="iso")
    p.add_argument("--n-min", type=int, default=1)
    p.add_argument("--n-max", type=int, default=100)
    p.add_argument("--pairs", type=int, default=100, help="pairs per size (default 100)")
    p.add_argument("--p", type=float, default=0.5, help="edge probability (default 0.5)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mode", choices=compare.MODES, default="profile")
    p.add_argument("--fit-min-n", type=int, default=21, help="smallest n used in the fit (default 21)")
    p.add_argument("--workers", type=int, default=1,
                   help="parallel processes; >1 records verdicts only, no timings")
    p.add_argument("--out", default="-", help="CSV path ('-' for stdout)")
    p.add_argument("--quiet", action="store_true", help="no per-size progress on stderr")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("probe", help="run the algorithm on a known hard non-isomorphic pair")
    p.add_argument("--search-max-n", type=int, default=0,
                   help="also search all graphs up to this size for false positives (max 6)")
    p.add_argument("--seed", type=int, default=0, help="seed for the self-pair relabelling")
    p.set_defaults(func=cmd_probe)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except CliError as exc:
        print(f"uniqtree: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
