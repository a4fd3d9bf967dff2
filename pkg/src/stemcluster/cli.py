"""Command-line front end: preprocess, train, stem, evaluate.

Every stage reads and writes plain UTF-8 files (lexicon: one word per
line; stem table: TSV; cluster report: JSON; gold standard: TSV) so runs
can be chained in shell pipelines and compared byte-for-byte.  All
hyperparameters default to the standard settings (threshold 0.06,
damping 0.5, median preference) and the whole pipeline is deterministic:
identical inputs produce identical artifacts.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import ap as ap_mod
from .errors import ConfigError, StemclusterError
from .evaluation import format_table, load_gold, score_clusters, report_stats
from .clusters import read_cluster_report, write_cluster_report
from .greedy import (
    DEFAULT_THRESHOLD,
    GreedyConfig,
    build_stem_table,
    cluster_greedy,
    read_stem_table,
    stem_table_from_clusters,
    stem_word,
    write_stem_table,
)
from .ngrams import COMBINED, GRAM_ORDERS
from .preprocess import build_lexicon, clean_text, read_lexicon, read_text, tokenize, write_lexicon

BACKENDS = ("greedy", "ap-coeff", "ap-median")


def _preference(value: str):
    if value == "median":
        return "median"
    try:
        return float(value)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"preference must be 'median' or a number, got {value!r}"
        ) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stemcluster",
        description="Cluster related Bangla word forms into stem groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("preprocess", help="clean raw text files into a lexicon")
    p.add_argument("inputs", nargs="+", metavar="TEXTFILE")
    p.add_argument("-o", "--output", required=True, help="lexicon file to write")
    p.add_argument("--stats", action="store_true", help="prepend a #stats header line")
    p.set_defaults(func=cmd_preprocess)

    p = sub.add_parser("train", help="cluster a lexicon and write the stem table")
    p.add_argument("lexicon", metavar="LEXICON")
    p.add_argument("--backend", choices=BACKENDS, default="greedy")
    p.add_argument("--ngram", choices=GRAM_ORDERS, default="2",
                   help="gram order for the greedy backend (default 2)")
    p.add_argument("--threshold", type=float, default=DEFAULT_THRESHOLD,
                   help="greedy similarity threshold (default 0.06)")
    p.add_argument("--damping", type=float, default=0.5,
                   help="message damping factor (default 0.5)")
    p.add_argument("--preference", type=_preference, default="median",
                   help="'median' or a fixed self-similarity (default median)")
    p.add_argument("--max-iter", type=int, default=200)
    p.add_argument("--max-points", type=int, default=20000,
                   help="refuse dense-matrix clustering beyond this many words")
    p.add_argument("--stem-table", default="stem_table.tsv", help="stem table TSV to write")
    p.add_argument("--report", default="cluster_report.json", help="cluster report JSON to write")
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("stem", help="map words to their trained stems")
    p.add_argument("table", metavar="STEMTABLE")
    p.add_argument("words", nargs="*", metavar="WORD",
                   help="words to stem (reads stdin lines when omitted)")
    p.add_argument("--mark-oov", action="store_true",
                   help="tag words missing from the table")
    p.set_defaults(func=cmd_stem)

    p = sub.add_parser("evaluate", help="score a cluster report against gold labels")
    p.add_argument("report", metavar="REPORT")
    p.add_argument("gold", metavar="GOLD")
    p.add_argument("--table", action="store_true", help="print a plain-text table instead of JSON")
    p.add_argument("--strict", action="store_true",
                   help="also require each stem to equal its gold label")
    p.add_argument("--min-accuracy", type=float, default=None,
                   help="exit nonzero when accuracy falls below this value")
    p.set_defaults(func=cmd_evaluate)

    return parser


def cmd_preprocess(args) -> int:
    tokens: list[str] = []
    for path in args.inputs:
        tokens.extend(tokenize(clean_text(read_text(path))))
    lexicon = build_lexicon(tokens)
    if lexicon.unique_tokens == 0:
        print("warning: no tokens survived preprocessing", file=sys.stderr)
    write_lexicon(lexicon, args.output, stats=args.stats)
    print(f"total={lexicon.total_tokens} unique={lexicon.unique_tokens}")
    return 0


def cmd_train(args) -> int:
    lexicon = read_lexicon(args.lexicon)
    if args.backend == "greedy":
        config = GreedyConfig(gram_order=args.ngram, threshold=args.threshold)
        clusters = cluster_greedy(lexicon, config)
        table = build_stem_table(clusters, config)
        write_cluster_report(args.report, clusters)
    else:
        mode = ap_mod.COEFFICIENT if args.backend == "ap-coeff" else ap_mod.MEDIAN
        config = ap_mod.APConfig(
            damping=args.damping,
            preference=args.preference,
            max_iterations=args.max_iter,
            max_points=args.max_points,
        )
        matrix = ap_mod.build_similarity_matrix(lexicon, mode, config)
        result = ap_mod.run_ap(matrix, config)
        clusters = result.clusters
        order = COMBINED if mode == ap_mod.COEFFICIENT else "median"
        table = stem_table_from_clusters(clusters, order=order, threshold=None)
        write_cluster_report(
            args.report,
            clusters,
            exemplars=result.exemplars,
            mode=result.mode,
            converged=result.converged,
            iterations=result.iterations,
        )
        if not result.converged:
            print(f"warning: not converged after {result.iterations} iterations", file=sys.stderr)
        print(f"mode={result.mode} converged={str(result.converged).lower()} "
              f"iterations={result.iterations}")
    write_stem_table(table, args.stem_table)
    stats = report_stats(clusters)
    print(f"clusters={stats['total_clusters']} reduction_ratio={stats['reduction_ratio']:.4f}")
    return 0


def cmd_stem(args) -> int:
    table = read_stem_table(args.table)
    if args.words:
        words = args.words
    else:
        words = (line.strip() for line in sys.stdin)
    for word in words:
        if not word:
            continue
        stem = stem_word(table, word)
        if args.mark_oov and word not in table:
            print(f"{stem}\t[OOV]")
        else:
            print(stem)
    return 0


def cmd_evaluate(args) -> int:
    clusters, _meta = read_cluster_report(args.report)
    gold = load_gold(args.gold)
    report = score_clusters(clusters, gold, strict=args.strict)
    if args.table:
        print(format_table(report))
    else:
        print(json.dumps(report.as_dict(), ensure_ascii=False, indent=2))
    if args.min_accuracy is not None and report.accuracy < args.min_accuracy:
        print(
            f"error: accuracy {report.accuracy:.4f} below required {args.min_accuracy}",
            file=sys.stderr,
        )
        return 1
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {_one_line(exc)}", file=sys.stderr)
        return 2
    except StemclusterError as exc:
        print(f"error: {_one_line(exc)}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {_one_line(exc)}", file=sys.stderr)
        return 1


def _one_line(exc: Exception) -> str:
    return " ".join(str(exc).split())


if __name__ == "__main__":
    raise SystemExit(main())
