"""Command-line entry point: clean, build, predict, complete, eval, bench, serve.

Standard output carries data only; progress and statistics go to
standard error. Exit codes: 0 success, 1 usage error, 2 data error
(bad corpus, bad map file, corrupt model), 3 I/O failure.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import IoFailure, MissingFile, NextwordError, WriteCollision
from .evaluate import (EvalConfig, benchmark_scaling, evaluate_topk,
                       split_sentences)
from .ngram import LanguageModel
from .normalize import (NormalizationConfig, clean_and_segment_with_stats,
                        decode_utf8, default_codepoint_map,
                        load_codepoint_map, render_sentences)
from .predict import (BackoffConfig, PredictionRequest, complete_prefix,
                      suggest)
from .storage import load_model, save_model

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_IO = 3

_SCRIPT_MODES = {"arabic": "arabic-script", "latin": "latin-script",
                 "mixed": "mixed"}


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage problems; the contract says 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _order_int(text: str) -> int:
    value = _positive_int(text)
    if value > 5:
        raise argparse.ArgumentTypeError("orders above 5 are not supported")
    return value


def _lambda_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not 0 < value <= 1:
        raise argparse.ArgumentTypeError("lambda must be in (0, 1]")
    return value


def _sizes_csv(text: str) -> list[int]:
    try:
        sizes = [int(part) for part in text.split(",") if part]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad size list: {text!r}")
    if not sizes or sizes != sorted(set(sizes)) or sizes[0] < 1:
        raise argparse.ArgumentTypeError(
            "sizes must be positive, ascending, comma-separated")
    return sizes


def _norm_config(args) -> NormalizationConfig:
    script_mode = _SCRIPT_MODES[args.script_mode]
    if args.map is not None:
        entries = load_codepoint_map(Path(args.map))
    elif args.script_mode == "arabic":
        entries = default_codepoint_map()
    else:
        entries = ()
    return NormalizationConfig(script_mode=script_mode,
                               codepoint_map=entries,
                               lowercase_latin=True)


def _read_text(path: str) -> str:
    return decode_utf8(Path(path).read_bytes())


def _clean_file(path: str, config: NormalizationConfig):
    sentences, stats = clean_and_segment_with_stats(_read_text(path), config)
    print(f"{path}: {stats.sentences} sentences, {stats.tokens} tokens, "
          f"{stats.dropped_tokens} tokens dropped", file=sys.stderr)
    return sentences


def cmd_clean(args) -> int:
    sentences = _clean_file(args.input, _norm_config(args))
    rendered = render_sentences(sentences)
    sys.stdout.write(rendered + "\n" if rendered else rendered)
    return EXIT_OK


def _frequency_rows(model: LanguageModel, order: int):
    if order == 1:
        return [((word,), count)
                for word, count in model.unigrams_by_count()]
    table = model.tables[order]
    return sorted(table.counts.items(),
                  key=lambda item: (-item[1], " ".join(item[0])))


def cmd_build(args) -> int:
    config = _norm_config(args)
    sentences = _clean_file(args.corpus, config)
    model = LanguageModel.build(sentences, max_order=args.max_order,
                                norm_config=config,
                                min_count=args.min_count)
    manifest = save_model(model, Path(args.model), lambda_=args.lambda_)
    print(f"saved model {manifest.model_id} to {args.model}",
          file=sys.stderr)

    for order in range(1, model.max_order + 1):
        rows = _frequency_rows(model, order)
        print(f"# {order}-gram top 10")
        for key, count in rows[:10]:
            print(f"{' '.join(key)}\t{count}")
    if args.plot_data:
        lines = ["order\tngram\tcount"]
        for order in range(1, model.max_order + 1):
            lines.extend(f"{order}\t{' '.join(key)}\t{count}"
                         for key, count in _frequency_rows(model, order))
        Path(args.plot_data).write_text("\n".join(lines) + "\n",
                                        encoding="utf-8")
    return EXIT_OK


def _print_suggestions(suggestions) -> None:
    for rank, s in enumerate(suggestions, start=1):
        print(f"{rank}\t{s.word}\t{s.score:.6f}\t{s.matched_order}")


def cmd_predict(args) -> int:
    model, _ = load_model(Path(args.model))
    request = PredictionRequest(context_text=args.context, k=args.k)
    config = BackoffConfig(lambda_=args.lambda_, k_suggestions=args.k)
    _print_suggestions(suggest(model, request, config))
    return EXIT_OK


def cmd_complete(args) -> int:
    model, _ = load_model(Path(args.model))
    _print_suggestions(complete_prefix(model, args.prefix, k=args.k))
    return EXIT_OK


def _eval_config(args, split: str) -> EvalConfig:
    return EvalConfig(k=args.k, max_order=args.max_order,
                      lambda_=args.lambda_, split=split, seed=args.seed,
                      no_backoff=args.no_backoff)


def _print_report(report) -> None:
    sys.stdout.write(report.render_tsv())
    print(f"k={report.k} split={report.mode} train={report.train_label} "
          f"test={report.test_label} latency mean="
          f"{report.latency_mean_ms:.3f}ms p95={report.latency_p95_ms:.3f}ms",
          file=sys.stderr)


def cmd_eval(args) -> int:
    if args.model is not None:
        model, _ = load_model(Path(args.model))
        # clean the test text the way the model was built, not per flags
        test = _clean_file(args.corpus, model.norm_config)
        report = evaluate_topk(model, test, _eval_config(args, "file"),
                               train_label=args.model,
                               test_label=args.corpus)
        _print_report(report)
        return EXIT_OK

    config = _norm_config(args)
    sentences = _clean_file(args.corpus, config)
    if args.split == "file":
        if args.test is None:
            _parser_for(args).error("--split file needs a TEST argument")
        train = sentences
        test = _clean_file(args.test, config)
        test_label = args.test
    else:
        train, test = split_sentences(sentences,
                                      _eval_config(args, args.split))
        test_label = args.corpus
    model = LanguageModel.build(train, max_order=args.max_order,
                                norm_config=config,
                                min_count=args.min_count)
    report = evaluate_topk(model, test, _eval_config(args, args.split),
                           train_label=args.corpus, test_label=test_label)
    _print_report(report)
    return EXIT_OK


def cmd_bench(args) -> int:
    sentences = _clean_file(args.corpus, _norm_config(args))
    rows = benchmark_scaling(sentences, args.sizes,
                             _eval_config(args, "bench"))
    lines = ["size\taccuracy\tlatency_mean_ms"]
    lines.extend(f"{r.size}\t{100 * r.accuracy:.2f}\t{r.latency_mean_ms:.3f}"
                 for r in rows)
    text = "\n".join(lines) + "\n"
    sys.stdout.write(text)
    if args.plot_data:
        Path(args.plot_data).write_text(text, encoding="utf-8")
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(Path(args.model))
    print(f"serving on {args.bind}:{args.port}", file=sys.stderr)
    uvicorn.run(app, host=args.bind, port=args.port, log_level="warning")
    return EXIT_OK


_PARSERS = {}


def _parser_for(args):
    return _PARSERS[args.subcommand]


def _add_norm_flags(parser) -> None:
    parser.add_argument("--script-mode", choices=sorted(_SCRIPT_MODES),
                        default="mixed")
    parser.add_argument("--map", metavar="FILE",
                        help="codepoint map TSV; arabic mode defaults to "
                             "the bundled canonical map")


def _add_model_flags(parser) -> None:
    parser.add_argument("--max-order", type=_order_int, default=5)
    parser.add_argument("--min-count", type=_positive_int, default=1)
    parser.add_argument("--lambda", dest="lambda_", type=_lambda_float,
                        default=0.4)


def build_parser() -> _Parser:
    parser = _Parser(prog="nextword",
                     description="N-gram next-word suggestion toolkit")
    subs = parser.add_subparsers(dest="subcommand", required=True,
                                 parser_class=_Parser)

    p = subs.add_parser("clean",
                        help="normalize a corpus to one sentence per line")
    p.add_argument("input")
    _add_norm_flags(p)
    p.set_defaults(func=cmd_clean)
    _PARSERS["clean"] = p

    p = subs.add_parser("build",
                        help="count n-grams and save a model directory")
    p.add_argument("corpus", help="raw or already-cleaned text; cleaning "
                                  "is idempotent so either works")
    p.add_argument("--model", required=True, metavar="DIR")
    p.add_argument("--plot-data", metavar="FILE",
                   help="also write full per-order frequency tables")
    _add_norm_flags(p)
    _add_model_flags(p)
    p.set_defaults(func=cmd_build)
    _PARSERS["build"] = p

    p = subs.add_parser("predict", help="rank next-word suggestions")
    p.add_argument("context", nargs="?", default="")
    p.add_argument("--model", required=True, metavar="DIR")
    p.add_argument("--k", type=_positive_int, default=5)
    p.add_argument("--lambda", dest="lambda_", type=_lambda_float,
                   default=0.4)
    p.set_defaults(func=cmd_predict)
    _PARSERS["predict"] = p

    p = subs.add_parser("complete", help="complete a word prefix")
    p.add_argument("prefix")
    p.add_argument("--model", required=True, metavar="DIR")
    p.add_argument("--k", type=_positive_int, default=5)
    p.set_defaults(func=cmd_complete)
    _PARSERS["complete"] = p

    p = subs.add_parser("eval", help="top-k accuracy per order")
    p.add_argument("corpus", help="training corpus, or the test set "
                                  "when --model is given")
    p.add_argument("test", nargs="?",
                   help="test corpus for --split file")
    p.add_argument("--model", metavar="DIR",
                   help="evaluate this saved model instead of building")
    p.add_argument("--k", type=_positive_int, default=5)
    p.add_argument("--split", choices=["heldout", "file", "resub"],
                   default="heldout")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--no-backoff", action="store_true")
    _add_norm_flags(p)
    _add_model_flags(p)
    p.set_defaults(func=cmd_eval)
    _PARSERS["eval"] = p

    p = subs.add_parser("bench",
                        help="accuracy and latency versus corpus size")
    p.add_argument("corpus")
    p.add_argument("--sizes", type=_sizes_csv,
                   default=[1000, 2000, 5000, 10000, 20000],
                   help="comma-separated ascending token counts")
    p.add_argument("--k", type=_positive_int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--no-backoff", action="store_true")
    p.add_argument("--plot-data", metavar="FILE",
                   help="also write the table to this file")
    _add_norm_flags(p)
    _add_model_flags(p)
    p.set_defaults(func=cmd_bench)
    _PARSERS["bench"] = p

    p = subs.add_parser("serve", help="run the suggestion HTTP service")
    p.add_argument("--model", required=True, metavar="DIR")
    p.add_argument("--bind", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=cmd_serve)
    _PARSERS["serve"] = p

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except SystemExit as exc:  # argparse help (0) or usage error (1)
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    except (MissingFile, WriteCollision, IoFailure) as exc:
        print(f"nextword: {exc}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"nextword: {exc}", file=sys.stderr)
        return EXIT_IO
    except (NextwordError, ValueError) as exc:
        print(f"nextword: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
