"""Command-line interface: ``pwords {enumerate,graph,gray,fit,check}``.

Exit codes: 0 ok, 1 property failure, 2 usage error, 3 budget exhausted,
4 degenerate data.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from . import analysis, checks, graphs, graycode
from .errors import BudgetExceededError, DegenerateSampleError, InvalidWordError, SearchExhaustedError
from .words import WordSet, enumerate_words, format_words, parse_words

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET, EXIT_DEGENERATE = 0, 1, 2, 3, 4


@dataclass
class RunConfig:
    d: int = 1
    n: int = 1
    include_zero: bool = True
    budget_ms: int = 10_000
    seed: int = 0
    threads: int = 1
    cache_dir: Optional[Path] = None
    out: Optional[Path] = None
    fmt: Optional[str] = None

    @classmethod
    def from_args(cls, args) -> "RunConfig":
        return cls(
            d=args.d,
            n=args.n,
            include_zero=args.include_zero,
            budget_ms=args.budget_ms,
            seed=args.seed,
            threads=args.threads,
            cache_dir=args.cache_dir,
            out=args.out,
            fmt=args.format,
        )

    @property
    def budget(self) -> float:
        return self.budget_ms / 1000.0


def cache_path(cache_dir: Path, d: int, n: int) -> Path:
    return Path(cache_dir) / f"pwords_d{d}_n{n}.txt"


def _partition_count(n: int) -> int:
    return analysis.parts_histogram(n).total


def load_words(cfg: RunConfig) -> WordSet:
    """Enumerate words for ``cfg``, going through the cache when one is set.

    A cached file is trusted only if every line parses as a valid word of
    the right length (and, for d = 1, the count equals p(n)); otherwise it
    is regenerated.
    """
    path = cache_path(cfg.cache_dir, cfg.d, cfg.n) if cfg.cache_dir else None
    if path is not None and path.exists():
        try:
            ws = parse_words(path.read_text(encoding="ascii"), cfg.d)
            if ws.n == cfg.n and (cfg.d != 1 or len(ws) == _partition_count(cfg.n)):
                return ws
        except (ValueError, InvalidWordError):
            pass
    ws = enumerate_words(cfg.d, cfg.n, time_budget=cfg.budget)
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".tmp")
        tmp.write_text(format_words(ws), encoding="ascii")
        tmp.replace(path)
    return ws


def _emit(cfg: RunConfig, text: str) -> None:
    if cfg.out is None:
        sys.stdout.write(text)
    else:
        Path(cfg.out).write_text(text, encoding="ascii")


def cmd_enumerate(args) -> int:
    cfg = RunConfig.from_args(args)
    ws = load_words(cfg)
    if args.count_only:
        _emit(cfg, f"{len(ws)}\n")
    else:
        _emit(cfg, format_words(ws))
    return EXIT_OK


def cmd_graph(args) -> int:
    cfg = RunConfig.from_args(args)
    fmt = "json" if args.report else (cfg.fmt or "dot")
    if fmt not in ("dot", "csv", "json"):
        args.parser.error(f"graph does not support --format {fmt}")
    ws = load_words(cfg)
    g = graphs.build(cfg.d, cfg.n, include_zero=cfg.include_zero, words=ws)
    if fmt == "json":
        text = graphs.structure_report(g, threads=cfg.threads).to_json()
    elif fmt == "csv":
        text = graphs.to_edge_csv(g)
    else:
        text = graphs.to_dot(g)
    _emit(cfg, text)
    return EXIT_OK


def cmd_gray(args) -> int:
    cfg = RunConfig.from_args(args)
    if args.k == 2:
        if cfg.d != 1 or cfg.n < 4:
            args.parser.error("--k 2 needs --d 1 and --n >= 4")
        code = graycode.gray2(cfg.n, budget=cfg.budget, seed=cfg.seed)
        g = graphs.build(1, cfg.n, include_zero=False)
    else:
        if cfg.n < 2:
            args.parser.error("--k 3 needs --n >= 2")
        g = graphs.build(cfg.d, cfg.n, words=load_words(cfg))
        code = graycode.gray3_from_graph(g, cfg.d, cfg.n)
    if not graycode.verify(code, g):
        print("error: constructed code failed verification", file=sys.stderr)
        return EXIT_FAIL
    _emit(cfg, graycode.format_gray(code))
    return EXIT_OK


def cmd_fit(args) -> int:
    cfg = RunConfig.from_args(args)
    if args.source == "parts":
        if cfg.d != 1:
            args.parser.error("--source parts is defined for --d 1 only")
        hist = analysis.parts_histogram(cfg.n)
        samples = hist.samples()
    else:
        g = graphs.build(cfg.d, cfg.n, words=load_words(cfg))
        samples = analysis.degree_samples(g, include_zero_vertex=cfg.include_zero)
        hist = analysis.Histogram.from_values(samples.astype(int))
    csv_text = hist.to_csv()
    try:
        fits = analysis.compare(samples)
        report = analysis.report_json(fits)
    except DegenerateSampleError as exc:
        report = None
        diagnostic = str(exc)
    if cfg.out is None:
        sys.stdout.write(csv_text)
        if report is not None:
            sys.stdout.write(report)
    else:
        out = Path(cfg.out)
        out.write_text(csv_text, encoding="ascii")
        if report is not None:
            out.with_suffix(".json").write_text(report, encoding="ascii")
    if report is None:
        print(f"degenerate sample: {diagnostic}", file=sys.stderr)
        return EXIT_DEGENERATE
    return EXIT_OK


def cmd_check(args) -> int:
    results = checks.run(args.suite, max_n=args.max_n,
                         budget=args.budget_ms / 1000.0, seed=args.seed)
    failed = [r for r in results if not r["passed"]]
    summary = {
        "suite": args.suite,
        "max_n": args.max_n,
        "checks": len(results),
        "failed": len(failed),
        "passed": not failed,
        "failures": failed,
    }
    text = json.dumps(summary, indent=2) + "\n"
    if args.out is None:
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text, encoding="ascii")
    for r in failed:
        print(f"FAIL [{r['suite']}] {r['check']}: {r['detail']}", file=sys.stderr)
    return EXIT_OK if not failed else EXIT_FAIL


def _positive(value):
    v = int(value)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return v


def _dimension(value):
    v = int(value)
    if not 1 <= v <= 9:
        raise argparse.ArgumentTypeError(f"--d must be in 1..9, got {value}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--d", type=_dimension, default=1, help="dimension (1..9)")
    common.add_argument("--n", type=_positive, default=1, help="total being partitioned")
    zero = common.add_mutually_exclusive_group()
    zero.add_argument("--include-zero", dest="include_zero", action="store_true", default=True)
    zero.add_argument("--exclude-zero", dest="include_zero", action="store_false")
    common.add_argument("--format", choices=("words", "dot", "csv", "json"))
    common.add_argument("--out", type=Path, help="write output here instead of stdout")
    common.add_argument("--budget-ms", type=_positive, default=10_000)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--threads", type=_positive, default=1)
    common.add_argument("--cache-dir", type=Path)

    parser = argparse.ArgumentParser(
        prog="pwords",
        description="Partition words, their flip graphs and Gray codes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="list partition words")
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_enumerate, parser=p)

    p = sub.add_parser("graph", parents=[common], help="flip graph export / report")
    p.add_argument("--report", action="store_true", help="structure report as JSON")
    p.set_defaults(func=cmd_graph, parser=p)

    p = sub.add_parser("gray", parents=[common], help="2- or 3-Gray code")
    p.add_argument("--k", type=int, choices=(2, 3), default=3)
    p.set_defaults(func=cmd_gray, parser=p)

    p = sub.add_parser("fit", parents=[common], help="histogram + lognormal/normal fits")
    p.add_argument("--source", choices=("degrees", "parts"), default="degrees")
    p.set_defaults(func=cmd_fit, parser=p)

    p = sub.add_parser("check", parents=[common], help="run a property suite")
    p.add_argument("--suite", choices=tuple(checks.SUITES) + ("all",), default="tables")
    p.add_argument("--max-n", type=int, default=None)
    p.set_defaults(func=cmd_check, parser=p)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (BudgetExceededError, SearchExhaustedError) as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
