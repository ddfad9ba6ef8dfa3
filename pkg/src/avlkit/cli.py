"""Command-line entry point: benchmark, randomized checking, and a deletion demo."""

from __future__ import annotations

import argparse
import sys
from typing import Optional

from .bench import ExperimentConfig, load_corpus, render_report, run_experiment
from .map import AvlMap
from .rng import SplitMix64, derive_seed
from .tree import (
    DEFAULT_STRATEGY_ORDER,
    AvlTree,
    DeletionTrace,
    ReplacementStrategy,
    StructuralError,
    format_tree,
)

_STRATEGY_TOKENS = {
    "rightmost": ReplacementStrategy.RIGHTMOST_OF_LEFT,
    "leftmost": ReplacementStrategy.LEFTMOST_OF_RIGHT,
    "optimum": ReplacementStrategy.OPTIMUM,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="avlkit",
        description="AVL tree deletion strategies and rotation-count benchmarks.")
    sub = parser.add_subparsers(dest="command", required=True)

    bench = sub.add_parser(
        "bench", help="run the shuffle-insert/shuffle-delete rotation benchmark")
    bench.add_argument("--corpus", required=True, help="newline-delimited word file")
    bench.add_argument("--iterations", type=int, default=100)
    bench.add_argument("--seed", type=int, default=1)
    bench.add_argument("--strategy", choices=[*_STRATEGY_TOKENS, "all"], default="all")
    bench.add_argument("--sample-size", type=int, default=None,
                       help="run on a seeded subsample of the corpus")
    bench.add_argument("--format", choices=["table", "csv", "json"], default="table")
    bench.set_defaults(func=cmd_bench)

    check = sub.add_parser(
        "check", help="randomized differential check against a reference model")
    check.add_argument("--ops", type=int, default=10_000)
    check.add_argument("--seed", type=int, default=1)
    check.set_defaults(func=cmd_check)

    demo = sub.add_parser(
        "demo", help="show how a deletion picks its replacement and rebalances")
    demo.add_argument("--keys", default="4,2,5,1,3",
                      help="comma-separated integer insertion order")
    demo.add_argument("--delete", type=str, default=None, metavar="KEY")
    demo.add_argument("--strategy", choices=list(_STRATEGY_TOKENS), default="optimum")
    demo.set_defaults(func=cmd_demo)

    return parser


def cmd_bench(args) -> int:
    if args.strategy == "all":
        strategies = DEFAULT_STRATEGY_ORDER
    else:
        strategies = (_STRATEGY_TOKENS[args.strategy],)
    try:
        corpus = load_corpus(args.corpus)
        config = ExperimentConfig(
            iterations=args.iterations,
            seed=args.seed,
            strategies=strategies,
            sample_size=args.sample_size,
        )
        report = run_experiment(corpus, config)
    except (OSError, ValueError, StructuralError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(render_report(report, args.format))
    return 0


def cmd_check(args) -> int:
    if args.ops < 1:
        print("error: --ops must be positive", file=sys.stderr)
        return 1
    rng = SplitMix64(derive_seed(args.seed, 0xC0DE))
    universe = max(16, args.ops // 10)
    tree_map = AvlMap()
    model: dict = {}
    strategies = list(DEFAULT_STRATEGY_ORDER)
    counts = {"insert": 0, "delete": 0, "search": 0}

    def divergence(index, key, expected, actual) -> int:
        print(f"divergence at op {index}: key={key!r} expected={expected!r} "
              f"actual={actual!r}", file=sys.stderr)
        return 1

    for index in range(args.ops):
        roll = rng.below(100)
        key = rng.below(universe)
        if roll < 45:
            counts["insert"] += 1
            value = rng.below(1 << 30)
            previous = tree_map.insert(key, value)
            expected = model.get(key)
            model[key] = value
            if previous != expected:
                return divergence(index, key, expected, previous)
        elif roll < 80:
            counts["delete"] += 1
            strategy = rng.choice(strategies)
            removed = tree_map.delete(key, strategy)
            expected = model.pop(key, None)
            if removed != expected:
                return divergence(index, key, expected, removed)
        else:
            counts["search"] += 1
            found = key in tree_map
            if found != (key in model):
                return divergence(index, key, key in model, found)
            continue  # searches do not mutate; skip revalidation
        report = tree_map.validate()
        if not report.ok:
            first = report.violations[0]
            print(f"invariant violation at op {index}: {first.kind} at key "
                  f"{first.key!r}: {first.detail}", file=sys.stderr)
            return 1
        if len(tree_map) != len(model):
            return divergence(index, key, len(model), len(tree_map))

    if tree_map.items() != sorted(model.items()):
        print("divergence: final contents do not match the reference model",
              file=sys.stderr)
        return 1
    print(f"ok: {args.ops} ops ({counts['insert']} inserts, {counts['delete']} deletes, "
          f"{counts['search']} searches), {len(tree_map)} keys remain, "
          f"0 divergences (seed {args.seed})")
    return 0


def _parse_keys(text: str) -> list[int]:
    keys = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        keys.append(int(part))
    return keys


def cmd_demo(args) -> int:
    try:
        keys = _parse_keys(args.keys)
        target = None if args.delete is None else int(args.delete)
    except ValueError as exc:
        print(f"error: malformed key argument: {exc}", file=sys.stderr)
        return 1
    strategy = _STRATEGY_TOKENS[args.strategy]
    tree = AvlTree()
    for key in keys:
        tree.insert(key)
    print(f"inserted {keys} -> tree of {len(tree)}:")
    print(format_tree(tree))
    if target is None:
        return 0
    print(f"\ndeleting {target} using strategy {strategy.value}")
    trace = DeletionTrace()
    deleted, events = tree.delete(target, strategy, trace)
    if not deleted:
        print(f"key {target} not present; tree unchanged")
        return 0
    if trace.two_child:
        print(f"two children at balance {trace.node_balance}: replaced from the "
              f"{trace.direction.value} subtree by key {trace.replacement_key}")
    else:
        print("at most one child: unlinked directly, no replacement needed")
    if events:
        print("rotations: " + ", ".join(e.kind.value for e in events))
    else:
        print("rotations: none")
    print("\nafter:")
    print(format_tree(tree))
    return 0


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
