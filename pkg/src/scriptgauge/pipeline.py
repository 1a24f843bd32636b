"""End-to-end orchestration: ingest, segment, featurize, fit, train, report.

Everything here is deterministic: the manifest bytes, the config and the
seed fully determine every emitted artifact, byte for byte. Artifacts carry
no timestamps. Per-document work runs in manifest order (optionally on a
thread pool, which preserves that order), and per-document randomness is
derived from the document id rather than from scheduling.
"""

from __future__ import annotations

import csv
import json
import zlib
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .classifier import (
    EvalReport,
    SvmModel,
    class_weights,
    grid_search,
    macro_f1,
    predict_many,
    split_dataset,
    train_svm,
)
from .clustering import ClusterModel, fit_clusters
from .config import PipelineConfig
from .errors import (
    DataError,
    EmptyEvaluation,
    InsufficientDialogue,
    InternalError,
    OverlappingSplit,
    ParseError,
    StageError,
    UnknownFeature,
    UsageError,
    VersionMismatch,
)
from .features import (
    VAD_DIMS,
    Signal,
    activity_curve,
    assemble_domain_features,
    derive_seed,
    domain_feature_names,
    intensity_profile,
    utterance_category_points,
    vad_profile,
    validate_blocks,
)
from .lexicons import (
    EMOTIONS,
    LexiconSet,
    load_categories,
    load_intensity,
    load_vad,
)
from .parsing import Screenplay, parse_screenplay, top_speaking_characters
from .segmentation import (
    N_BOUNDARIES,
    N_STRUCTURAL_POINTS,
    SegmentPartition,
    context_windows,
    partition_segments,
)
from .tfidf import TfidfModel, fit_tfidf, sp_text, transform

FORMAT_VERSION = 1

# seed-derivation branch tags, so independent stages never share a stream
_SEED_CLUSTER = 1
_SEED_SVM = 2
_SEED_DOC = 3


# -- dataset manifest --------------------------------------------------------

@dataclass
class ManifestEntry:
    id: str
    path: str
    label: int


@dataclass
class DatasetManifest:
    entries: list[ManifestEntry]
    name: str = ""
    seed: int | None = None
    base_dir: Path = field(default_factory=Path)

    def ids(self) -> list[str]:
        return [e.id for e in self.entries]

    def labels(self) -> list[int]:
        return [e.label for e in self.entries]

    def entry_path(self, entry: ManifestEntry) -> Path:
        path = Path(entry.path)
        return path if path.is_absolute() else self.base_dir / path

    def subset(self, ids) -> "DatasetManifest":
        wanted = set(ids)
        return DatasetManifest(
            entries=[e for e in self.entries if e.id in wanted],
            name=self.name,
            seed=self.seed,
            base_dir=self.base_dir,
        )


def load_manifest(path) -> DatasetManifest:
    """Read a JSON-lines manifest; one entry object per line.

    A line holding a "meta" object contributes the manifest name and seed.
    Entry ids must be unique and every script path must resolve to a file.
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise DataError(f"cannot read manifest {path}: {exc}") from exc
    entries: list[ManifestEntry] = []
    seen: set[str] = set()
    name, seed = "", None
    for line_no, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON in manifest: {exc.msg}", line_no=line_no) from exc
        if "meta" in obj:
            meta = obj["meta"]
            name = meta.get("name", name)
            seed = meta.get("seed", seed)
            continue
        missing = {"id", "path", "label"} - set(obj)
        if missing:
            raise ParseError(f"entry missing key(s) {sorted(missing)}", line_no=line_no)
        if obj["label"] not in (0, 1):
            raise ParseError(f"label must be 0 or 1, got {obj['label']!r}", line_no=line_no)
        if obj["id"] in seen:
            raise ParseError(f"duplicate id {obj['id']!r}", line_no=line_no)
        seen.add(obj["id"])
        entries.append(ManifestEntry(id=str(obj["id"]), path=str(obj["path"]), label=int(obj["label"])))
    manifest = DatasetManifest(entries=entries, name=name, seed=seed, base_dir=path.parent)
    for entry in manifest.entries:
        if not manifest.entry_path(entry).is_file():
            raise DataError(f"manifest entry {entry.id!r}: no such file {manifest.entry_path(entry)}")
    return manifest


def save_manifest(manifest: DatasetManifest, path) -> None:
    lines = []
    if manifest.name or manifest.seed is not None:
        lines.append(json.dumps({"meta": {"name": manifest.name, "seed": manifest.seed}}, sort_keys=True))
    for entry in manifest.entries:
        lines.append(json.dumps({"id": entry.id, "path": entry.path, "label": entry.label}, sort_keys=True))
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


# -- lexicon loading ---------------------------------------------------------

def _needed_lexicons(blocks) -> set[str]:
    needs = set()
    if "vad" in blocks:
        needs.add("vad")
    if "int" in blocks:
        needs.add("intensity")
    if "emo" in blocks or "clus" in blocks:
        needs.add("categories")
    return needs


def load_lexicons(config: PipelineConfig, needs) -> LexiconSet:
    lexicons = LexiconSet()
    if "vad" in needs:
        if not config.vad_lexicon:
            raise UsageError("config must set vad_lexicon for the requested features")
        lexicons.vad = load_vad(config.vad_lexicon)
    if "intensity" in needs:
        if not config.intensity_lexicon:
            raise UsageError("config must set intensity_lexicon for the requested features")
        lexicons.intensity = load_intensity(config.intensity_lexicon)
    if "categories" in needs:
        if not config.category_lexicon:
            raise UsageError("config must set category_lexicon for the requested features")
        lexicons.categories = load_categories(config.category_lexicon)
    return lexicons


# -- per-document preparation ------------------------------------------------

@dataclass
class PreparedDoc:
    entry: ManifestEntry
    screenplay: Screenplay
    partition: SegmentPartition
    sp_tokens: list[str]
    category_points: list[np.ndarray] | None


def _prepare_document(
    manifest: DatasetManifest,
    entry: ManifestEntry,
    config: PipelineConfig,
    lexicons: LexiconSet,
) -> PreparedDoc:
    stage = "read"
    try:
        raw = manifest.entry_path(entry).read_bytes()
        stage = "parse"
        screenplay = parse_screenplay(raw, entry.id)
        stage = "character-filter"
        if config.min_character_tokens > 0:
            leads = top_speaking_characters(screenplay, k=2)
            if len(leads) < 2 or any(p.total_tokens < config.min_character_tokens for p in leads):
                counts = ", ".join(f"{p.name}:{p.total_tokens}" for p in leads)
                raise InsufficientDialogue(
                    f"top-2 characters need >= {config.min_character_tokens} tokens each ({counts})"
                )
        stage = "segment"
        partition = partition_segments(len(screenplay.tokens))
        stage = "sp-text"
        sp_tokens = sp_text(screenplay, partition, config.window_pct)
        stage = "categories"
        points = (
            utterance_category_points(screenplay, lexicons.categories)
            if lexicons.categories is not None
            else None
        )
    except Exception as exc:
        raise StageError(stage, entry.id, exc) from exc
    return PreparedDoc(
        entry=entry,
        screenplay=screenplay,
        partition=partition,
        sp_tokens=sp_tokens,
        category_points=points,
    )


def _prepare_all(
    manifest: DatasetManifest,
    config: PipelineConfig,
    lexicons: LexiconSet,
    skip_errors: bool,
) -> tuple[dict[str, PreparedDoc], list[StageError]]:
    def prepare(entry: ManifestEntry):
        try:
            return _prepare_document(manifest, entry, config, lexicons)
        except StageError as exc:
            if skip_errors:
                return exc
            raise

    if config.workers > 1:
        with ThreadPoolExecutor(max_workers=config.workers) as pool:
            results = list(pool.map(prepare, manifest.entries))
    else:
        results = [prepare(entry) for entry in manifest.entries]

    prepared: dict[str, PreparedDoc] = {}
    skipped: list[StageError] = []
    for result in results:
        if isinstance(result, StageError):
            skipped.append(result)
        else:
            prepared[result.entry.id] = result
    return prepared, skipped


def _doc_seed(config_seed: int, doc_id: str) -> int:
    return derive_seed(config_seed, _SEED_DOC, zlib.crc32(doc_id.encode("utf-8")))


def _doc_vector(
    doc: PreparedDoc,
    config: PipelineConfig,
    lexicons: LexiconSet,
    tfidf_model: TfidfModel,
    cluster_model: ClusterModel | None,
    blocks,
) -> np.ndarray:
    text_vec = transform(doc.sp_tokens, tfidf_model)
    domain = assemble_domain_features(
        doc.screenplay,
        doc.partition,
        lexicons,
        cluster_model,
        blocks=blocks,
        n_perm=config.n_perm,
        seed=_doc_seed(config.seed, doc.entry.id),
        window_pct=config.window_pct,
        activity_feature=config.activity_feature,
    )
    return np.concatenate([text_vec, domain.vector()])


def _feature_matrix(docs, config, lexicons, tfidf_model, cluster_model, blocks) -> np.ndarray:
    rows = [_doc_vector(d, config, lexicons, tfidf_model, cluster_model, blocks) for d in docs]
    return np.vstack(rows) if rows else np.zeros((0, 0))


# -- the trained pipeline model ----------------------------------------------

@dataclass
class PipelineModel:
    config: dict
    blocks: tuple[str, ...]
    split: dict[str, list[str]]
    tfidf: TfidfModel
    clusters: ClusterModel | None
    svm: SvmModel
    feature_columns: list[str]

    def pipeline_config(self) -> PipelineConfig:
        return PipelineConfig.from_dict(self.config)


def _check_dimensions(model: PipelineModel) -> None:
    k = model.clusters.k if model.clusters is not None else 0
    expected = len(model.tfidf.selected) + len(domain_feature_names(model.blocks, k))
    if model.svm.dim != expected:
        raise InternalError(
            f"model dimensions inconsistent: svm dim {model.svm.dim}, "
            f"tf-idf {len(model.tfidf.selected)} + domain {expected - len(model.tfidf.selected)}"
        )


def save_model(model: PipelineModel, path) -> None:
    """Write the whole pipeline state as one versioned JSON envelope."""
    envelope = {
        "format_version": FORMAT_VERSION,
        "config": model.config,
        "blocks": list(model.blocks),
        "split": model.split,
        "tfidf": {
            "n_docs": model.tfidf.n_docs,
            "df": model.tfidf.df,
            "importance": model.tfidf.importance,
            "selected": model.tfidf.selected,
            "stopwords": sorted(model.tfidf.stopwords),
        },
        "clusters": None
        if model.clusters is None
        else {
            "k": model.clusters.k,
            "seed": model.clusters.seed,
            "inertia": model.clusters.inertia,
            "n_iter": model.clusters.n_iter,
            "centroids": model.clusters.centroids.tolist(),
        },
        "svm": {
            "weights": model.svm.weights.tolist(),
            "bias": model.svm.bias,
            "c": model.svm.c,
            "class_weights": list(model.svm.class_weights),
            "seed": model.svm.seed,
        },
        "feature_columns": model.feature_columns,
    }
    text = json.dumps(envelope, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    Path(path).write_text(text, encoding="utf-8")


def load_model(path) -> PipelineModel:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise DataError(f"cannot read model file {path}: {exc}") from exc
    try:
        envelope = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"corrupt model file: {exc.msg}", offset=exc.pos) from exc
    version = envelope.get("format_version")
    if version != FORMAT_VERSION:
        raise VersionMismatch(f"model format_version {version!r}, expected {FORMAT_VERSION}")

    tf = envelope["tfidf"]
    tfidf_model = TfidfModel(
        n_docs=tf["n_docs"],
        df={k: int(v) for k, v in tf["df"].items()},
        importance={k: float(v) for k, v in tf["importance"].items()},
        selected=list(tf["selected"]),
        stopwords=frozenset(tf["stopwords"]),
    )
    cl = envelope["clusters"]
    cluster_model = None
    if cl is not None:
        cluster_model = ClusterModel(
            k=int(cl["k"]),
            centroids=np.asarray(cl["centroids"], dtype=float),
            seed=int(cl["seed"]),
            inertia=float(cl["inertia"]),
            n_iter=int(cl["n_iter"]),
        )
    sv = envelope["svm"]
    svm = SvmModel(
        weights=np.asarray(sv["weights"], dtype=float),
        bias=float(sv["bias"]),
        c=float(sv["c"]),
        class_weights=tuple(sv["class_weights"]),
        seed=int(sv["seed"]),
    )
    model = PipelineModel(
        config=envelope["config"],
        blocks=tuple(envelope["blocks"]),
        split={k: list(v) for k, v in envelope["split"].items()},
        tfidf=tfidf_model,
        clusters=cluster_model,
        svm=svm,
        feature_columns=list(envelope["feature_columns"]),
    )
    _check_dimensions(model)
    return model


# -- train / eval / ablate -----------------------------------------------------

def run_train(
    manifest: DatasetManifest,
    config: PipelineConfig,
    *,
    skip_errors: bool = False,
) -> tuple[PipelineModel, EvalReport]:
    """Full training pass; returns the fitted model and the validation report.

    Representation and clustering are fit on the training split only; the
    regularization trade-off comes from a validation grid search.
    """
    blocks = validate_blocks(config.blocks)
    lexicons = load_lexicons(config, _needed_lexicons(blocks))
    split = split_dataset(
        manifest.ids(), config.seed, labels=manifest.labels(), stratified=config.stratified
    )
    prepared, _ = _prepare_all(manifest, config, lexicons, skip_errors)

    def docs_for(ids) -> list[PreparedDoc]:
        return [prepared[i] for i in ids if i in prepared]

    train_docs, val_docs = docs_for(split.train), docs_for(split.val)
    if not train_docs or not val_docs:
        raise EmptyEvaluation("training or validation split is empty after preparation")
    labels_by_id = {e.id: e.label for e in manifest.entries}
    y_train = [labels_by_id[d.entry.id] for d in train_docs]
    y_val = [labels_by_id[d.entry.id] for d in val_docs]

    tfidf_model = fit_tfidf(
        (d.sp_tokens for d in train_docs), config.top_k, stopwords=config.stopwords
    )
    cluster_model = None
    if "clus" in blocks:
        train_points = [p for d in train_docs for p in d.category_points]
        cluster_model = fit_clusters(
            train_points, config.k_clusters, derive_seed(config.seed, _SEED_CLUSTER)
        )

    x_train = _feature_matrix(train_docs, config, lexicons, tfidf_model, cluster_model, blocks)
    x_val = _feature_matrix(val_docs, config, lexicons, tfidf_model, cluster_model, blocks)

    weights = class_weights(y_train)
    svm_seed = derive_seed(config.seed, _SEED_SVM)
    best_c, _ = grid_search(
        x_train,
        y_train,
        x_val,
        y_val,
        c_grid=config.c_grid,
        seed=svm_seed,
        weights=weights,
        epochs=config.svm_epochs,
    )
    svm = train_svm(x_train, y_train, best_c, weights, svm_seed, epochs=config.svm_epochs)
    val_report = macro_f1(y_val, predict_many(x_val, svm))

    k = cluster_model.k if cluster_model is not None else 0
    feature_columns = [f"tfidf.{t}" for t in tfidf_model.selected] + domain_feature_names(blocks, k)
    model = PipelineModel(
        config=config.to_dict(),
        blocks=blocks,
        split={"train": split.train, "val": split.val, "test": split.test},
        tfidf=tfidf_model,
        clusters=cluster_model,
        svm=svm,
        feature_columns=feature_columns,
    )
    _check_dimensions(model)
    return model, val_report


def run_eval(
    model: PipelineModel,
    manifest: DatasetManifest,
    *,
    allow_overlap: bool = False,
    skip_errors: bool = False,
) -> EvalReport:
    """Evaluate a trained model on a manifest of held-out documents.

    Documents the model was fit on (train or validation split) are refused
    unless allow_overlap is set.
    """
    if not manifest.entries:
        raise EmptyEvaluation("manifest has no entries to evaluate")
    fitted_ids = set(model.split.get("train", ())) | set(model.split.get("val", ()))
    overlap = sorted(fitted_ids & set(manifest.ids()))
    if overlap and not allow_overlap:
        raise OverlappingSplit(
            f"{len(overlap)} manifest id(s) were used to fit this model "
            f"(first: {overlap[0]!r}); pass allow_overlap to evaluate anyway"
        )
    config = model.pipeline_config()
    lexicons = load_lexicons(config, _needed_lexicons(model.blocks))
    prepared, _ = _prepare_all(manifest, config, lexicons, skip_errors)
    docs = [prepared[e.id] for e in manifest.entries if e.id in prepared]
    if not docs:
        raise EmptyEvaluation("no document survived preparation")
    y_true = [d.entry.label for d in docs]
    x = _feature_matrix(docs, config, lexicons, model.tfidf, model.clusters, model.blocks)
    return macro_f1(y_true, predict_many(x, model.svm))


def block_set_label(blocks) -> str:
    return "+".join(validate_blocks(blocks)) if blocks else "none"


def run_ablation(
    manifest: DatasetManifest,
    config: PipelineConfig,
    block_sets,
    *,
    skip_errors: bool = False,
) -> list[dict]:
    """One full train/eval per feature-block set, sharing the split and seeds."""
    rows = []
    for blocks in block_sets:
        blocks = validate_blocks(blocks)
        cfg = config.with_blocks(blocks)
        model, val_report = run_train(manifest, cfg, skip_errors=skip_errors)
        test_report = run_eval(
            model, manifest.subset(model.split["test"]), skip_errors=skip_errors
        )
        rows.append(
            {
                "blocks": block_set_label(blocks),
                "dims": model.svm.dim,
                "val_macro_f1": val_report.macro_f1,
                "test_macro_f1": test_report.macro_f1,
            }
        )
    return rows


def write_ablation_csv(rows, path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.DictWriter(
            fh, fieldnames=["blocks", "dims", "val_macro_f1", "test_macro_f1"], lineterminator="\n"
        )
        writer.writeheader()
        writer.writerows(rows)


# -- feature curves for plotting ----------------------------------------------

def _series_positions(n_points: int) -> list[float]:
    if n_points == N_STRUCTURAL_POINTS:
        return [100.0 * i / (N_STRUCTURAL_POINTS - 1) for i in range(N_STRUCTURAL_POINTS)]
    return [100.0 * (b + 1) / (N_BOUNDARIES + 1) for b in range(N_BOUNDARIES)]


def _doc_feature_series(
    doc: PreparedDoc, feature: str, config: PipelineConfig, lexicons: LexiconSet
) -> np.ndarray:
    family, _, detail = feature.partition(".")
    if family == "vad" and detail in VAD_DIMS:
        windows = context_windows(doc.partition, doc.screenplay.token_list(), config.window_pct)
        values = vad_profile(windows, lexicons.vad).reshape(N_STRUCTURAL_POINTS, 3)
        return values[:, VAD_DIMS.index(detail)]
    if family == "int" and detail in EMOTIONS:
        windows = context_windows(doc.partition, doc.screenplay.token_list(), config.window_pct)
        values = intensity_profile(windows, lexicons.intensity).reshape(
            N_STRUCTURAL_POINTS, len(EMOTIONS)
        )
        return values[:, EMOTIONS.index(detail)]
    if family in ("ling", "emo") and detail in ("role1", "role2"):
        role = int(detail[-1]) - 1
        leads = top_speaking_characters(doc.screenplay, k=2)
        if len(leads) < 2:
            raise InsufficientDialogue(f"{doc.entry.id}: needs two speaking characters")
        signal = Signal.LINGUISTIC if family == "ling" else Signal.EMOTIONAL
        slot = ("ling", "emo").index(family) * 2 + role
        curve = activity_curve(
            doc.screenplay,
            leads[role],
            doc.partition,
            signal,
            category_lexicon=lexicons.categories,
            n_perm=config.n_perm,
            seed=derive_seed(_doc_seed(config.seed, doc.entry.id), slot),
        )
        return np.array([d for d, _ in curve.boundaries])
    raise UnknownFeature(
        f"unknown plot feature {feature!r}; expected vad.<dim>, int.<emotion>, "
        f"or ling/emo.<role1|role2>"
    )


def _plot_lexicon_needs(feature: str) -> set[str]:
    family = feature.partition(".")[0]
    return {"vad": {"vad"}, "int": {"intensity"}, "emo": {"categories"}, "ling": set()}.get(
        family, set()
    )


def emit_plot_data(
    manifest: DatasetManifest,
    config: PipelineConfig,
    feature: str,
    out_csv,
    figure_path=None,
    *,
    skip_errors: bool = False,
) -> dict:
    """Per-class mean curves of one feature along the script; CSV plus figure.

    Returns {"positions", "nominated", "non_nominated"} (series are None
    for a class absent from the manifest).
    """
    family = feature.partition(".")[0]
    if family not in ("vad", "int", "ling", "emo"):
        raise UnknownFeature(f"unknown plot feature {feature!r}")
    lexicons = load_lexicons(config, _plot_lexicon_needs(feature))
    prepared, _ = _prepare_all(manifest, config, lexicons, skip_errors)
    by_label: dict[int, list[np.ndarray]] = {0: [], 1: []}
    for entry in manifest.entries:
        if entry.id in prepared:
            series = _doc_feature_series(prepared[entry.id], feature, config, lexicons)
            by_label[entry.label].append(series)
    if not by_label[0] and not by_label[1]:
        raise EmptyEvaluation("no document survived preparation")
    means = {
        label: np.mean(rows, axis=0) if rows else None for label, rows in by_label.items()
    }
    n_points = len(next(m for m in means.values() if m is not None))
    positions = _series_positions(n_points)

    with open(out_csv, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(
            ["script_percentile_position", "mean_value_nominated", "mean_value_non_nominated"]
        )
        for i, pos in enumerate(positions):
            nom = "" if means[1] is None else repr(float(means[1][i]))
            non = "" if means[0] is None else repr(float(means[0][i]))
            writer.writerow([pos, nom, non])

    if figure_path is not None:
        from .plotting import save_feature_curves

        save_feature_curves(
            positions,
            {
                "nominated": None if means[1] is None else means[1].tolist(),
                "non-nominated": None if means[0] is None else means[0].tolist(),
            },
            feature,
            figure_path,
        )
    return {
        "positions": positions,
        "nominated": None if means[1] is None else means[1].tolist(),
        "non_nominated": None if means[0] is None else means[0].tolist(),
    }


# -- standalone domain-feature export ------------------------------------------

def write_features_csv(
    manifest: DatasetManifest,
    config: PipelineConfig,
    out_path,
    *,
    skip_errors: bool = False,
) -> list[str]:
    """All six feature blocks for every document, one CSV row per screenplay.

    A diagnostic export: the cluster model is fit on this manifest's own
    utterances rather than on a training split.
    """
    blocks = validate_blocks(config.blocks) or validate_blocks(
        ("ling", "emo", "tt", "vad", "int", "clus")
    )
    lexicons = load_lexicons(config, _needed_lexicons(blocks))
    prepared, _ = _prepare_all(manifest, config, lexicons, skip_errors)
    docs = [prepared[e.id] for e in manifest.entries if e.id in prepared]
    if not docs:
        raise EmptyEvaluation("no document survived preparation")
    cluster_model = None
    if "clus" in blocks:
        points = [p for d in docs for p in d.category_points]
        cluster_model = fit_clusters(
            points, config.k_clusters, derive_seed(config.seed, _SEED_CLUSTER)
        )
    names = domain_feature_names(blocks, cluster_model.k if cluster_model else 0)
    with open(out_path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["id", "label"] + names)
        for doc in docs:
            domain = assemble_domain_features(
                doc.screenplay,
                doc.partition,
                lexicons,
                cluster_model,
                blocks=blocks,
                n_perm=config.n_perm,
                seed=_doc_seed(config.seed, doc.entry.id),
                window_pct=config.window_pct,
                activity_feature=config.activity_feature,
            )
            writer.writerow(
                [doc.entry.id, doc.entry.label] + [repr(float(v)) for v in domain.vector()]
            )
    return names
