"""Screenplay quality assessment from textual structure.

Parses plaintext screenplays, segments them at nine structural points,
extracts narrative and affect features, and trains a class-weighted linear
max-margin classifier over a window-restricted tf-idf representation to
predict award nomination.
"""

from .classifier import (
    EvalReport,
    SvmModel,
    class_weights,
    grid_search,
    macro_f1,
    predict,
    predict_many,
    split_dataset,
    train_svm,
)
from .clustering import ClusterModel, assign, cluster_histogram, fit_clusters
from .config import PipelineConfig, load_config, save_config
from .features import (
    ActivityCurve,
    Signal,
    activity_curve,
    assemble_domain_features,
    intensity_profile,
    pcar_change_score,
    total_variation,
    type_token_ratio,
    vad_profile,
)
from .lexicons import (
    CategoryLexicon,
    IntensityLexicon,
    LexiconSet,
    VadLexicon,
    category_distribution,
    load_categories,
    load_intensity,
    load_vad,
)
from .parsing import (
    CharacterProfile,
    ElementKind,
    Screenplay,
    ScreenplayElement,
    parse_screenplay,
    tokenize,
    top_speaking_characters,
)
from .pipeline import (
    DatasetManifest,
    ManifestEntry,
    PipelineModel,
    emit_plot_data,
    load_manifest,
    load_model,
    run_ablation,
    run_eval,
    run_train,
    save_manifest,
    save_model,
)
from .segmentation import (
    ContextWindow,
    SegmentPartition,
    context_window,
    context_windows,
    locate_structural_points,
    partition_segments,
)
from .synth import generate_corpus, generate_script
from .tagger import CoarseTagger, tag_distribution
from .tfidf import TfidfModel, fit_tfidf, sp_text, transform

__version__ = "0.1.0"
