"""Command-line interface.

Subcommands: gen-corpus, parse, features, train, eval, ablate, plot,
inspect-model. Exit codes: 0 success, 1 usage error, 2 data error,
3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .config import load_config
from .errors import DataError, InternalError, UsageError
from .parsing import ElementKind, parse_screenplay, top_speaking_characters
from .pipeline import (
    block_set_label,
    emit_plot_data,
    load_manifest,
    load_model,
    run_ablation,
    run_eval,
    run_train,
    save_model,
    write_ablation_csv,
    write_features_csv,
)
from .synth import MODES, generate_corpus
from .tfidf import vocabulary_dump


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); our usage errors exit 1
        raise UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="scriptgauge", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen-corpus", help="fabricate a synthetic labeled corpus")
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--n-scripts", type=int, default=200)
    p.add_argument("--tokens", type=int, default=5000, help="approximate tokens per script")
    p.add_argument("--pos-fraction", type=float, default=0.5)
    p.add_argument("--mode", choices=MODES, default="markers")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--id-prefix", default="s", help="document id prefix (avoids id collisions)")

    p = sub.add_parser("parse", help="parse one screenplay and print a summary")
    p.add_argument("--script", required=True)
    p.add_argument("--id", default=None, help="document id (defaults to the file stem)")
    p.add_argument("--out", default=None, help="write the summary JSON here instead of stdout")

    p = sub.add_parser("features", help="export domain features for a manifest as CSV")
    p.add_argument("--manifest", required=True)
    p.add_argument("--config", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--skip-errors", action="store_true")

    p = sub.add_parser("train", help="train the full pipeline on a manifest")
    p.add_argument("--manifest", required=True)
    p.add_argument("--config", required=True)
    p.add_argument("--model-out", required=True)
    p.add_argument("--report-out", default=None, help="validation report JSON path")
    p.add_argument("--skip-errors", action="store_true")

    p = sub.add_parser("eval", help="evaluate a trained model on held-out documents")
    p.add_argument("--model", required=True)
    p.add_argument("--manifest", required=True)
    p.add_argument(
        "--split",
        choices=("all", "test"),
        default="all",
        help="'test' keeps only the manifest entries in the model's recorded test split",
    )
    p.add_argument("--report-out", default=None)
    p.add_argument("--allow-overlap", action="store_true")
    p.add_argument("--skip-errors", action="store_true")

    p = sub.add_parser("ablate", help="train/eval once per feature-block set")
    p.add_argument("--manifest", required=True)
    p.add_argument("--config", required=True)
    p.add_argument(
        "--block-set",
        action="append",
        required=True,
        help="comma-separated block names, or 'none'; repeatable",
    )
    p.add_argument("--out", required=True, help="CSV output path")
    p.add_argument("--figure", default=None, help="also render a bar chart here")
    p.add_argument("--skip-errors", action="store_true")

    p = sub.add_parser("plot", help="per-class mean curve of one feature along the script")
    p.add_argument("--manifest", required=True)
    p.add_argument("--config", required=True)
    p.add_argument("--feature", required=True, help="e.g. vad.arousal, int.fear, emo.role1")
    p.add_argument("--out", required=True, help="CSV output path")
    p.add_argument("--figure", default=None, help="also render a line chart here")
    p.add_argument("--skip-errors", action="store_true")

    p = sub.add_parser("inspect-model", help="summarize a saved model")
    p.add_argument("--model", required=True)
    p.add_argument("--vocab-out", default=None, help="dump the tf-idf vocabulary as TSV here")

    return parser


def _parse_block_set(raw: str) -> tuple[str, ...]:
    raw = raw.strip()
    if raw in ("", "none"):
        return ()
    return tuple(part.strip() for part in raw.split(",") if part.strip())


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        print(text)
    else:
        Path(out_path).write_text(text + "\n", encoding="utf-8")


def _cmd_gen_corpus(args) -> int:
    manifest_path = generate_corpus(
        args.out,
        n_scripts=args.n_scripts,
        tokens_per_script=args.tokens,
        pos_fraction=args.pos_fraction,
        mode=args.mode,
        seed=args.seed,
        id_prefix=args.id_prefix,
    )
    print(f"wrote {manifest_path}")
    return 0


def _cmd_parse(args) -> int:
    path = Path(args.script)
    doc_id = args.id if args.id is not None else path.stem
    screenplay = parse_screenplay(path.read_bytes(), doc_id)
    kinds = {kind.value: 0 for kind in ElementKind}
    for el in screenplay.elements:
        kinds[el.kind.value] += 1
    try:
        speakers = [
            {"name": p.name, "tokens": p.total_tokens}
            for p in top_speaking_characters(screenplay, k=5)
        ]
    except DataError:
        speakers = []
    summary = {
        "id": screenplay.id,
        "n_elements": len(screenplay.elements),
        "n_tokens": len(screenplay.tokens),
        "elements_by_kind": kinds,
        "top_speakers": speakers,
    }
    _emit(json.dumps(summary, indent=2, sort_keys=True), args.out)
    return 0


def _cmd_features(args) -> int:
    manifest = load_manifest(args.manifest)
    config = load_config(args.config)
    names = write_features_csv(manifest, config, args.out, skip_errors=args.skip_errors)
    print(f"wrote {args.out} ({len(names)} feature columns)")
    return 0


def _cmd_train(args) -> int:
    manifest = load_manifest(args.manifest)
    config = load_config(args.config)
    model, report = run_train(manifest, config, skip_errors=args.skip_errors)
    save_model(model, args.model_out)
    text = json.dumps(report.to_dict(), indent=2, sort_keys=True)
    if args.report_out:
        Path(args.report_out).write_text(text + "\n", encoding="utf-8")
    print(f"wrote {args.model_out}")
    print(text)
    return 0


def _cmd_eval(args) -> int:
    model = load_model(args.model)
    manifest = load_manifest(args.manifest)
    if args.split == "test":
        manifest = manifest.subset(model.split.get("test", ()))
    report = run_eval(
        model, manifest, allow_overlap=args.allow_overlap, skip_errors=args.skip_errors
    )
    text = json.dumps(report.to_dict(), indent=2, sort_keys=True)
    if args.report_out:
        Path(args.report_out).write_text(text + "\n", encoding="utf-8")
    print(text)
    return 0


def _cmd_ablate(args) -> int:
    manifest = load_manifest(args.manifest)
    config = load_config(args.config)
    block_sets = [_parse_block_set(raw) for raw in args.block_set]
    rows = run_ablation(manifest, config, block_sets, skip_errors=args.skip_errors)
    write_ablation_csv(rows, args.out)
    if args.figure:
        from .plotting import save_ablation_bars

        save_ablation_bars(
            [row["blocks"] for row in rows],
            [row["val_macro_f1"] for row in rows],
            [row["test_macro_f1"] for row in rows],
            args.figure,
        )
    width = max(len(row["blocks"]) for row in rows)
    for row in rows:
        print(
            f"{row['blocks']:<{width}}  dims={row['dims']:<5d}  "
            f"val={row['val_macro_f1']:.4f}  test={row['test_macro_f1']:.4f}"
        )
    print(f"wrote {args.out}")
    return 0


def _cmd_plot(args) -> int:
    manifest = load_manifest(args.manifest)
    config = load_config(args.config)
    emit_plot_data(
        manifest, config, args.feature, args.out, args.figure, skip_errors=args.skip_errors
    )
    print(f"wrote {args.out}" + (f" and {args.figure}" if args.figure else ""))
    return 0


def _cmd_inspect_model(args) -> int:
    model = load_model(args.model)
    summary = {
        "blocks": block_set_label(model.blocks),
        "feature_dims": model.svm.dim,
        "tfidf_terms_selected": len(model.tfidf.selected),
        "tfidf_vocabulary": len(model.tfidf.vocabulary),
        "cluster_k": model.clusters.k if model.clusters else None,
        "svm_c": model.svm.c,
        "class_weights": list(model.svm.class_weights),
        "split_sizes": {name: len(ids) for name, ids in model.split.items()},
        "config": model.config,
    }
    print(json.dumps(summary, indent=2, sort_keys=True))
    if args.vocab_out:
        with open(args.vocab_out, "w", encoding="utf-8") as fh:
            fh.write("term\tindex\tdf\timportance\n")
            for term, index, df, importance in vocabulary_dump(model.tfidf):
                fh.write(f"{term}\t{index}\t{df}\t{importance!r}\n")
        print(f"wrote {args.vocab_out}")
    return 0


_COMMANDS = {
    "gen-corpus": _cmd_gen_corpus,
    "parse": _cmd_parse,
    "features": _cmd_features,
    "train": _cmd_train,
    "eval": _cmd_eval,
    "ablate": _cmd_ablate,
    "plot": _cmd_plot,
    "inspect-model": _cmd_inspect_model,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except DataError as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return 2
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
