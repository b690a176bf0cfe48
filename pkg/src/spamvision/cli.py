"""Command line interface.

Results go to stdout or to the file given with ``--out``; everything
diagnostic goes to stderr. Exit codes: 0 success, 1 usage error, 2 data
error.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import corpus as corpus_mod
from .cnn import lr_epoch_grid
from .errors import SpamvisionError
from .features import PERCEIVED, RAW_SOURCE, tokenize
from .dom import raw_text
from .harness import parse_config, run_table1, run_table2, table1_csv, table2_csv
from .metrics import split as make_split
from .modelio import load_model_file, save_model_file
from .ocr import dump_cells, ocr_text
from .render import RenderConfig, read_ppm, render_email, write_ppm
from .stacking import EmailFeatureCache, StackedSpamClassifier, explanation_tsv
from .textmodels import TEXT_MODEL_KINDS, TextModel, fit_text_model, predict_tokens
from .eml import parse_email


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        print(f"error: {message}", file=sys.stderr)
        self.print_usage(sys.stderr)
        raise SystemExit(1)


def _info(message):
    print(message, file=sys.stderr)


def _load_corpus(path):
    _info(f"loading corpus from {path}")
    return corpus_mod.load_corpus(path)


def _cmd_gen_corpus(args):
    with open(args.spec, encoding="utf-8") as fh:
        config = parse_config(fh.read())
    mix = {}
    for key, value in config.items():
        if key.startswith("trick_"):
            mix[key[len("trick_"):]] = float(value)
    spec_kwargs = {}
    for key in ("n_ham", "n_spam", "seed"):
        if key in config:
            spec_kwargs[key] = int(config[key])
    if mix:
        spec_kwargs["trick_mix"] = mix
    spec = corpus_mod.CorpusSpec(**spec_kwargs)
    result = corpus_mod.gen_corpus(spec, args.out)
    _info(f"wrote {len(result)} emails to {args.out}")
    return 0


def _cmd_render(args):
    with open(args.infile, "rb") as fh:
        doc = parse_email(fh.read())
    raster, trace = render_email(doc, RenderConfig())
    with open(args.out, "wb") as fh:
        fh.write(write_ppm(raster))
    if args.trace:
        lines = ["x\ty\tw\th\tcodepoint\tdrawn\tbold"]
        for g in trace.glyphs:
            lines.append(f"{g.x}\t{g.y}\t{g.width}\t{g.height}"
                         f"\t{g.codepoint}\t{int(g.drawn)}\t{int(g.bold)}")
        with open(args.trace, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("\n".join(lines) + "\n")
    if trace.truncated:
        _info("warning: content exceeded max height; render truncated")
    return 0


def _cmd_ocr(args):
    if args.infile.endswith(".ppm"):
        with open(args.infile, "rb") as fh:
            raster = read_ppm(fh.read())
    else:
        with open(args.infile, "rb") as fh:
            doc = parse_email(fh.read())
        raster, _ = render_email(doc, RenderConfig())
    result = ocr_text(raster)
    if args.dump_cells:
        print(dump_cells(result))
    else:
        print(result.text)
    return 0


def _cmd_train(args):
    labeled = _load_corpus(args.corpus)
    cache = EmailFeatureCache()
    if args.mode == "raw":
        tokens = [tokenize(raw_text(item.doc.body), RAW_SOURCE)
                  for item in labeled.items]
    else:
        tokens = [cache.perceived(item.doc)[0] for item in labeled.items]
    _info(f"training {args.model} on {len(tokens)} emails ({args.mode} mode)")
    model = fit_text_model(args.model, tokens, labeled.labels,
                           source_mode=args.mode)
    save_model_file(model, args.out)
    _info(f"saved model to {args.out}")
    return 0


def _cmd_train_stack(args):
    labeled = _load_corpus(args.corpus)
    _info(f"training stacked model (meta={args.meta}, folds={args.folds})")
    model = StackedSpamClassifier(meta=args.meta, n_folds=args.folds,
                                  seed=args.seed)
    model.fit(labeled.docs, labeled.labels)
    save_model_file(model, args.out)
    _info(f"saved model to {args.out}")
    return 0


def _cmd_classify(args):
    model = load_model_file(args.model)
    with open(args.infile, "rb") as fh:
        doc = parse_email(fh.read())
    if isinstance(model, StackedSpamClassifier):
        prediction, explanation = model.predict_one(doc)
        print(f"{prediction.label}\t{prediction.score:.4f}")
        print(explanation_tsv(explanation))
        if explanation["truncated_render"]:
            _info("warning: render truncated; classified the visible part")
    elif isinstance(model, TextModel):
        if model.source_mode == "raw":
            tokens = tokenize(raw_text(doc.body), RAW_SOURCE)
        else:
            raster, _ = render_email(doc, RenderConfig())
            tokens = tokenize(ocr_text(raster).text, PERCEIVED)
        prediction = predict_tokens(model, tokens)
        print(f"{prediction.label}\t{prediction.score:.4f}")
    else:
        raise SpamvisionError("model file does not hold a classifier")
    return 0


def _cmd_evaluate(args):
    labeled = _load_corpus(args.corpus)
    split = make_split(labeled.labels, ratio=0.8, stratified=True,
                       seed=args.seed)
    cache = EmailFeatureCache()
    if args.table == 1:
        rows = run_table1(labeled, split, cache=cache, seed=args.seed)
        csv = table1_csv(rows)
    else:
        report = run_table2(labeled, split, seed=args.seed, cache=cache)
        csv = table2_csv(report.table2)
        _info("base test accuracies: " + ", ".join(
            f"{k}={v:.4f}" for k, v in report.base_accuracies.items()))
    with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(csv)
    _info(f"wrote {args.out}")
    return 0


def _cmd_heatmap(args):
    labeled = _load_corpus(args.corpus)
    lrs = [float(v) for v in args.lrs.split(",") if v]
    epochs = [int(v) for v in args.epochs.split(",") if v]
    split = make_split(labeled.labels, ratio=0.8, stratified=True,
                       seed=args.seed)
    cache = EmailFeatureCache()
    _info(f"rendering {len(labeled)} emails")
    tensors = np.stack([cache.perceived(doc)[1] for doc in labeled.docs])
    y = labeled.labels
    _info(f"training {len(lrs) * len(epochs)} grid cells")
    grid = lr_epoch_grid(tensors[split.train_ids], y[split.train_ids],
                         tensors[split.test_ids], y[split.test_ids],
                         lrs, epochs, seed=args.seed)
    with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(grid.to_csv())
    _info(f"wrote {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="spamvision",
                     description="Visual spam filtering pipeline")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen-corpus", help="generate a synthetic corpus")
    p.add_argument("--spec", required=True, help="key = value config file")
    p.add_argument("--out", required=True, help="output directory")
    p.set_defaults(func=_cmd_gen_corpus)

    p = sub.add_parser("render", help="render an email to a PPM image")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", required=True, help="PPM output path")
    p.add_argument("--trace", help="optional glyph trace TSV path")
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("ocr", help="OCR a PPM image or an email")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--dump-cells", action="store_true")
    p.set_defaults(func=_cmd_ocr)

    p = sub.add_parser("train", help="train one text classifier")
    p.add_argument("--corpus", required=True)
    p.add_argument("--model", required=True, choices=TEXT_MODEL_KINDS)
    p.add_argument("--out", required=True)
    p.add_argument("--mode", choices=("raw", "ocr"), default="ocr")
    p.set_defaults(func=_cmd_train)

    p = sub.add_parser("train-stack", help="train the stacked pipeline")
    p.add_argument("--corpus", required=True)
    p.add_argument("--meta", choices=("lr", "rf", "dt"), default="lr")
    p.add_argument("--folds", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_train_stack)

    p = sub.add_parser("classify", help="classify one email")
    p.add_argument("--model", required=True)
    p.add_argument("--in", dest="infile", required=True)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("evaluate", help="run a comparison report")
    p.add_argument("--corpus", required=True)
    p.add_argument("--table", type=int, choices=(1, 2), required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_evaluate)

    p = sub.add_parser("heatmap", help="learning-rate x epochs grid")
    p.add_argument("--corpus", required=True)
    p.add_argument("--lrs", required=True, help="comma-separated rates")
    p.add_argument("--epochs", required=True, help="comma-separated counts")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_heatmap)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (SpamvisionError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
