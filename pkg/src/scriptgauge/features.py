"""The six screenplay-level feature families.

Character-change features (ling, emo) compare per-utterance distributions
between adjacent development segments with a seeded permutation test;
affect features (vad, int) average lexicon scores over structural-point
windows; tt is per-character lexical diversity; clus is the per-movie
histogram over corpus-level utterance clusters.

Block order is fixed at ling | emo | tt | vad | int | clus, with each block
individually toggleable so ablations stay comparable.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .clustering import ClusterModel, cluster_histogram
from .errors import (
    DimensionMismatch,
    InsufficientDialogue,
    InternalError,
    NoTokens,
    UnknownBlock,
)
from .lexicons import (
    EMOTIONS,
    CategoryLexicon,
    IntensityLexicon,
    LexiconSet,
    VadLexicon,
    category_distribution,
)
from .parsing import CharacterProfile, ElementKind, Screenplay, top_speaking_characters, tokenize
from .segmentation import (
    N_BOUNDARIES,
    N_STRUCTURAL_POINTS,
    ContextWindow,
    SegmentPartition,
    context_windows,
    segment_of,
)
from .tagger import CoarseTagger, Tagger, tag_distribution

BLOCK_NAMES = ("ling", "emo", "tt", "vad", "int", "clus")
N_LEAD_CHARACTERS = 2

VAD_DIMS = ("valence", "arousal", "dominance")


class Signal(Enum):
    LINGUISTIC = "linguistic"
    EMOTIONAL = "emotional"


@dataclass
class ActivityCurve:
    signal: Signal
    character: str
    boundaries: list[tuple[float, float]]  # (distance, p_value) per segment boundary


def derive_seed(seed: int, *branch: int) -> int:
    """Deterministic child seed for one branch of a seeded computation."""
    return int(np.random.SeedSequence([seed, *branch]).generate_state(1)[0])


def total_variation(p, q) -> float:
    """0.5 * sum |p - q|, a distance in [0, 1] between two distributions."""
    return 0.5 * float(np.abs(np.asarray(p, dtype=float) - np.asarray(q, dtype=float)).sum())


def pcar_change_score(units_a, units_b, n_perm: int, seed: int) -> tuple[float, float]:
    """Permutation change score between two groups of distribution units.

    The observed distance is the total variation between the group means.
    Significance comes from reassigning the pooled units uniformly at random
    into groups of the original sizes: p = (1 + exceedances) / (n_perm + 1).
    An empty side carries no evidence of change and yields (0.0, 1.0).
    """
    if n_perm < 1:
        raise ValueError(f"n_perm must be >= 1, got {n_perm}")
    units_a = [np.asarray(u, dtype=float) for u in units_a]
    units_b = [np.asarray(u, dtype=float) for u in units_b]
    shapes = {u.shape for u in units_a} | {u.shape for u in units_b}
    if len(shapes) > 1 or any(len(s) != 1 for s in shapes):
        raise DimensionMismatch(f"units must share one dimension, got shapes {sorted(shapes)}")
    if not units_a or not units_b:
        return 0.0, 1.0

    a = np.stack(units_a)
    b = np.stack(units_b)
    observed = total_variation(a.mean(axis=0), b.mean(axis=0))

    pooled = np.concatenate([a, b])
    n, n_a = len(pooled), len(a)
    rng = np.random.default_rng(seed)
    # one uniform permutation per row, via argsort of iid uniforms
    order = np.argsort(rng.random((n_perm, n)), axis=1)
    mean_a = pooled[order[:, :n_a]].mean(axis=1)
    mean_b = pooled[order[:, n_a:]].mean(axis=1)
    distances = 0.5 * np.abs(mean_a - mean_b).sum(axis=1)
    exceed = int((distances >= observed - 1e-12).sum())
    return observed, (1 + exceed) / (n_perm + 1)


def utterance_units_by_segment(
    screenplay: Screenplay,
    profile: CharacterProfile,
    partition: SegmentPartition,
    signal: Signal,
    category_lexicon: CategoryLexicon | None = None,
    tagger: Tagger | None = None,
) -> list[list[np.ndarray]]:
    """One distribution per utterance, grouped by the segment holding its first token."""
    starts = screenplay.element_token_starts()
    units: list[list[np.ndarray]] = [[] for _ in partition.segments]
    for ordinal, tokens in profile.utterances:
        if not tokens:
            continue  # no first token, so no segment to live in
        seg = segment_of(partition, starts[ordinal])
        if signal is Signal.EMOTIONAL:
            units[seg].append(category_distribution(tokens, category_lexicon))
        else:
            units[seg].append(tag_distribution(tokens, tagger))
    return units


def activity_curve(
    screenplay: Screenplay,
    profile: CharacterProfile,
    partition: SegmentPartition,
    signal: Signal,
    *,
    category_lexicon: CategoryLexicon | None = None,
    tagger: Tagger | None = None,
    n_perm: int = 499,
    seed: int = 0,
) -> ActivityCurve:
    """Change scores for one character and one signal across the 7 boundaries."""
    if signal is Signal.EMOTIONAL and category_lexicon is None:
        raise ValueError("emotional signal needs a category lexicon")
    if signal is Signal.LINGUISTIC and tagger is None:
        tagger = CoarseTagger()
    units = utterance_units_by_segment(
        screenplay, profile, partition, signal, category_lexicon, tagger
    )
    boundaries = []
    for b in range(N_BOUNDARIES):
        distance, p_value = pcar_change_score(
            units[b], units[b + 1], n_perm, derive_seed(seed, b)
        )
        boundaries.append((distance, p_value))
    return ActivityCurve(signal=signal, character=profile.name, boundaries=boundaries)


def type_token_ratio(profile: CharacterProfile) -> float:
    """Distinct spoken tokens divided by total spoken tokens, in (0, 1]."""
    if profile.total_tokens == 0:
        raise NoTokens(f"character {profile.name!r} has no tokens")
    distinct = len({tok for _, tokens in profile.utterances for tok in tokens})
    return distinct / profile.total_tokens


def vad_profile(windows: list[ContextWindow], lex: VadLexicon) -> np.ndarray:
    """Mean valence/arousal/dominance per window, flattened to 27 values.

    Windows with no lexicon hit fall back to the scale midpoint 0.5.
    """
    if len(windows) != N_STRUCTURAL_POINTS:
        raise ValueError(f"expected {N_STRUCTURAL_POINTS} windows, got {len(windows)}")
    out = np.empty((N_STRUCTURAL_POINTS, 3))
    for i, window in enumerate(windows):
        hits = [lex.scores[t] for t in window.tokens if t in lex.scores]
        out[i] = np.mean(hits, axis=0) if hits else 0.5
    return out.reshape(-1)


def intensity_profile(windows: list[ContextWindow], lex: IntensityLexicon) -> np.ndarray:
    """Mean emotion intensity per window and emotion, flattened to 36 values.

    Each mean covers only the tokens carrying that emotion; no carrier means
    zero intensity.
    """
    if len(windows) != N_STRUCTURAL_POINTS:
        raise ValueError(f"expected {N_STRUCTURAL_POINTS} windows, got {len(windows)}")
    out = np.zeros((N_STRUCTURAL_POINTS, len(EMOTIONS)))
    for i, window in enumerate(windows):
        carried: dict[str, list[float]] = {emotion: [] for emotion in EMOTIONS}
        for tok in window.tokens:
            entry = lex.scores.get(tok)
            if entry:
                for emotion, score in entry.items():
                    carried[emotion].append(score)
        for j, emotion in enumerate(EMOTIONS):
            if carried[emotion]:
                out[i, j] = float(np.mean(carried[emotion]))
    return out.reshape(-1)


def utterance_category_points(screenplay: Screenplay, lex: CategoryLexicon) -> list[np.ndarray]:
    """Category distribution of every non-empty dialogue utterance, document order."""
    points = []
    for el in screenplay.elements:
        if el.kind is not ElementKind.DIALOGUE:
            continue
        tokens = tokenize(el.text)
        if tokens:
            points.append(category_distribution(tokens, lex))
    return points


def validate_blocks(blocks) -> tuple[str, ...]:
    """Canonical-order block tuple; rejects unknown names and duplicates."""
    blocks = list(blocks)
    unknown = [b for b in blocks if b not in BLOCK_NAMES]
    if unknown:
        raise UnknownBlock(f"unknown feature block(s): {', '.join(unknown)}")
    if len(set(blocks)) != len(blocks):
        raise UnknownBlock(f"duplicate feature block in {blocks}")
    return tuple(b for b in BLOCK_NAMES if b in blocks)


def domain_feature_names(blocks, k_clusters: int) -> list[str]:
    """Stable column names for the enabled blocks, in block order."""
    names: list[str] = []
    for block in validate_blocks(blocks):
        if block in ("ling", "emo"):
            names += [
                f"{block}.role{r + 1}.b{b + 1}"
                for r in range(N_LEAD_CHARACTERS)
                for b in range(N_BOUNDARIES)
            ]
        elif block == "tt":
            names += [f"tt.role{r + 1}" for r in range(N_LEAD_CHARACTERS)]
        elif block == "vad":
            names += [f"vad.sp{i}.{dim}" for i in range(N_STRUCTURAL_POINTS) for dim in VAD_DIMS]
        elif block == "int":
            names += [f"int.sp{i}.{e}" for i in range(N_STRUCTURAL_POINTS) for e in EMOTIONS]
        elif block == "clus":
            names += [f"clus.c{j}" for j in range(k_clusters)]
    return names


@dataclass
class DomainFeatures:
    blocks: dict[str, np.ndarray]  # enabled blocks in canonical order
    names: list[str]
    curves: list[ActivityCurve]    # diagnostics; p-values live here, not in the vector

    def vector(self) -> np.ndarray:
        if not self.blocks:
            return np.zeros(0)
        return np.concatenate(list(self.blocks.values()))


def assemble_domain_features(
    screenplay: Screenplay,
    partition: SegmentPartition,
    lexicons: LexiconSet,
    cluster_model: ClusterModel | None,
    *,
    blocks,
    tagger: Tagger | None = None,
    n_perm: int = 499,
    seed: int = 0,
    window_pct: float = 1.0,
    activity_feature: str = "raw",
) -> DomainFeatures:
    """Compute the enabled feature blocks for one screenplay.

    The per-boundary feature value is the raw change distance;
    activity_feature="masked" zeroes distances whose p-value exceeds 0.05.
    """
    if activity_feature not in ("raw", "masked"):
        raise ValueError(f"activity_feature must be 'raw' or 'masked', got {activity_feature!r}")
    enabled = validate_blocks(blocks)
    out: dict[str, np.ndarray] = {}
    curves: list[ActivityCurve] = []

    profiles: list[CharacterProfile] = []
    if any(b in enabled for b in ("ling", "emo", "tt")):
        profiles = top_speaking_characters(screenplay, k=N_LEAD_CHARACTERS)
        if len(profiles) < N_LEAD_CHARACTERS:
            raise InsufficientDialogue(
                f"{screenplay.id}: character features need {N_LEAD_CHARACTERS} speaking "
                f"characters, found {len(profiles)}"
            )
    windows = None
    if "vad" in enabled or "int" in enabled:
        windows = context_windows(partition, screenplay.token_list(), window_pct)

    for block in enabled:
        if block in ("ling", "emo"):
            signal = Signal.LINGUISTIC if block == "ling" else Signal.EMOTIONAL
            values = []
            for role, profile in enumerate(profiles):
                slot = ("ling", "emo").index(block) * N_LEAD_CHARACTERS + role
                curve = activity_curve(
                    screenplay,
                    profile,
                    partition,
                    signal,
                    category_lexicon=lexicons.categories,
                    tagger=tagger,
                    n_perm=n_perm,
                    seed=derive_seed(seed, slot),
                )
                curves.append(curve)
                for distance, p_value in curve.boundaries:
                    if activity_feature == "masked" and p_value > 0.05:
                        distance = 0.0
                    values.append(distance)
            out[block] = np.array(values)
        elif block == "tt":
            out[block] = np.array([type_token_ratio(p) for p in profiles])
        elif block == "vad":
            out[block] = vad_profile(windows, lexicons.vad)
        elif block == "int":
            out[block] = intensity_profile(windows, lexicons.intensity)
        elif block == "clus":
            if cluster_model is None:
                raise ValueError("clus block needs a fitted cluster model")
            points = utterance_category_points(screenplay, lexicons.categories)
            out[block] = cluster_histogram(points, cluster_model)

    features = DomainFeatures(
        blocks=out,
        names=domain_feature_names(enabled, cluster_model.k if cluster_model else 0),
        curves=curves,
    )
    vec = features.vector()
    if vec.size and not np.isfinite(vec).all():
        raise InternalError(f"{screenplay.id}: non-finite feature value")
    return features
