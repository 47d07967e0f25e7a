"""Command line entry point."""

import argparse
import sys
from pathlib import Path

from .config import AppConfig, load_config
from .corpus import CorpusIndex, build_index, parse_medline_records, read_index, write_index
from .errors import RelTreeError
from .pipeline import evaluate, load_lexicons, load_qrels, run_search
from .report import eval_table_text, write_eval_report
from .server import serve
from .tree import render_tree_text, serialize_tree


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="reltree",
        description="Rank biomedical documents into relativeness clusters.",
    )
    parser.add_argument("--config", type=Path, metavar="FILE",
                        help="key=value config file (RELTREE_* env vars override)")
    sub = parser.add_subparsers(dest="command", required=True)

    p_index = sub.add_parser("index", help="build a searchable index from a MEDLINE corpus")
    p_index.add_argument("corpus", type=Path, help="MEDLINE tagged text file")
    p_index.add_argument("-o", "--output", type=Path, required=True, metavar="FILE",
                         help="index file to write")
    p_index.set_defaults(func=_cmd_index)

    p_search = sub.add_parser("search", help="search an index and print the rank tree")
    p_search.add_argument("index", type=Path, help="index file")
    p_search.add_argument("query", help="search text")
    p_search.add_argument("--format", choices=("text", "json"), default="text")
    p_search.set_defaults(func=_cmd_search)

    p_serve = sub.add_parser("serve", help="serve the HTTP JSON API")
    p_serve.add_argument("index", type=Path, help="index file")
    p_serve.add_argument("--port", type=int, help="listening port (default from config)")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--ui-dir", type=Path, metavar="DIR",
                         help="also serve static files from DIR")
    p_serve.set_defaults(func=_cmd_serve)

    p_eval = sub.add_parser("eval", help="score retrieval quality against relevance judgments")
    p_eval.add_argument("index", type=Path, help="index file")
    p_eval.add_argument("qrels", type=Path, help="TSV: query-id, query text, relevant ids")
    p_eval.add_argument("--report-dir", type=Path, metavar="DIR",
                        help="write the table and figures into DIR")
    p_eval.set_defaults(func=_cmd_eval)

    return parser


def _load_index(path: Path) -> CorpusIndex:
    with open(path, encoding="utf-8") as handle:
        return read_index(handle)


def _cmd_index(config: AppConfig, args: argparse.Namespace) -> int:
    with open(args.corpus, encoding="utf-8") as handle:
        docs = parse_medline_records(handle)
    index = build_index(docs)
    with open(args.output, "w", encoding="utf-8") as handle:
        write_index(index, handle)
    print(f"indexed {len(index)} documents -> {args.output}")
    return 0


def _cmd_search(config: AppConfig, args: argparse.Namespace) -> int:
    index = _load_index(args.index)
    lexicons = load_lexicons(config)
    tree = run_search(config, index, lexicons, args.query)
    if args.format == "json":
        print(serialize_tree(tree))
    else:
        print(render_tree_text(tree))
    return 0


def _cmd_serve(config: AppConfig, args: argparse.Namespace) -> int:
    index = _load_index(args.index)
    lexicons = load_lexicons(config)
    port = config.port if args.port is None else args.port
    print(f"serving {len(index)} documents on http://{args.host}:{port}", flush=True)
    serve(config, index, lexicons, host=args.host, port=port, ui_dir=args.ui_dir)
    return 0


def _cmd_eval(config: AppConfig, args: argparse.Namespace) -> int:
    index = _load_index(args.index)
    lexicons = load_lexicons(config)
    with open(args.qrels, encoding="utf-8") as handle:
        qrels = load_qrels(handle)
    report = evaluate(config, index, lexicons, qrels)
    sys.stdout.write(eval_table_text(report))
    if args.report_dir is not None:
        for path in write_eval_report(report, args.report_dir):
            print(f"wrote {path}")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 0
    try:
        config = load_config(args.config)
        return args.func(config, args)
    except RelTreeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
