"""Command-line interface: ``nullaug {augment,stats,eval}``."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .attributes import write_attribute_csv
from .augment import augment_dataset
from .config import AugmentationConfig, Strategy
from .dataset import dataset_summary, read_tudataset, write_tudataset
from .errors import DatasetConsistencyError, DatasetFormatError, NullAugError
from .evaluation import SplitSpec, evaluate, graph_features

EXIT_OK, EXIT_INPUT, EXIT_FAILED = 0, 1, 2

_STRATEGY_NAMES = [s.value for s in Strategy]


def _load(args):
    name = args.name or Path(args.data).name
    return read_tudataset(args.data, name)


def cmd_augment(args) -> int:
    ds = _load(args)
    cfg = AugmentationConfig(
        strategy=Strategy.parse(args.strategy),
        alpha=args.alpha,
        iterations=args.iterations,
        seed=args.seed,
        max_attempts_per_swap=args.max_attempts,
    )
    aug, outcomes = augment_dataset(ds, cfg)
    failed = 0
    for i, res in enumerate(outcomes, 1):
        if isinstance(res, NullAugError):
            failed += 1
            print(f"graph {i}: failed, original kept ({res})")
        elif res.skipped:
            print(f"graph {i}: skipped, original kept")
        elif res.warnings:
            print(f"graph {i}: {res.warnings} warning(s), {res.swaps}/{res.target} rewires")
    out_dir = Path(args.out) / aug.name
    write_tudataset(aug, out_dir)
    print(f"wrote {len(aug)} graphs to {out_dir} ({failed} failed)")
    return EXIT_FAILED if failed == len(ds) else EXIT_OK


def cmd_stats(args) -> int:
    ds = _load(args)
    s = dataset_summary(ds)
    print(
        f"graphs={s['graphs']} classes={s['classes']} "
        f"avg_nodes={s['avg_nodes']:.2f} avg_edges={s['avg_edges']:.2f}"
    )
    rows = [(i, graph_features(lg.graph), lg.label) for i, lg in enumerate(ds.graphs, 1)]
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            write_attribute_csv(rows, fh)
    else:
        write_attribute_csv(rows, sys.stdout)
    return EXIT_OK


def cmd_eval(args) -> int:
    ds = _load(args)
    strategies = [Strategy.parse(s) for s in args.strategies.split(",") if s.strip()]
    split = SplitSpec.parse(args.split, seed=args.seed)
    report = evaluate(
        ds,
        strategies,
        alpha=args.alpha,
        iterations=args.iterations,
        split=split,
        seed=args.seed,
        k=args.k,
        repeats=args.repeats,
    )
    n_train, n_val, n_test = report.split_sizes
    print(f"split train={n_train} val={n_val} test={n_test}")
    text = report.to_csv()
    if args.out:
        Path(args.out).parent.mkdir(parents=True, exist_ok=True)
        Path(args.out).write_text(text)
    sys.stdout.write(text)
    for row in report.rows:
        if row.error:
            print(f"strategy {row.strategy} failed: {row.error}", file=sys.stderr)
    completed = [r for r in report.rows[1:] if r.error is None]
    if strategies and not completed:
        return EXIT_FAILED
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nullaug", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true", help="log warnings to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def dataset_args(p):
        p.add_argument("--data", required=True, help="directory holding the TUDataset files")
        p.add_argument("--name", help="dataset name (default: directory name)")

    def aug_args(p):
        p.add_argument("--alpha", type=float, default=0.2, help="augmentation cost coefficient")
        p.add_argument("--iterations", type=int, default=5, help="ADA candidates per graph")
        p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("augment", help="write one augmented graph per input graph")
    dataset_args(p)
    aug_args(p)
    p.add_argument("--strategy", required=True, choices=_STRATEGY_NAMES)
    p.add_argument("--max-attempts", type=int, default=None, help="attempts per rewire (default 100*m)")
    p.add_argument("--out", required=True, help="parent directory for <name>_aug_<strategy>/")
    p.set_defaults(func=cmd_augment)

    p = sub.add_parser("stats", help="dataset summary and per-graph attribute CSV")
    dataset_args(p)
    p.add_argument("--csv", help="write the attribute CSV here instead of stdout")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("eval", help="k-NN accuracy with and without augmentation")
    dataset_args(p)
    aug_args(p)
    p.add_argument("--strategies", default="0k,1k,2k,lna", help="comma-separated strategy list")
    p.add_argument("--split", default="7:1:2", help="train:val:test ratio")
    p.add_argument("--k", type=int, default=3, help="neighbors for the k-NN baseline")
    p.add_argument("--repeats", type=int, default=1, help="splits to average over")
    p.add_argument("--out", help="report CSV path")
    p.set_defaults(func=cmd_eval)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.WARNING if args.verbose else logging.ERROR, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (OSError, DatasetFormatError, DatasetConsistencyError, NullAugError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
