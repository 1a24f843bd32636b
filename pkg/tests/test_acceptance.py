"""Acceptance gate: one test per criterion, at its stated tolerance.

Run with `pytest tests/test_acceptance.py -v -s` to see one PASS line per
criterion (a failing criterion shows up as the pytest failure itself).
"""

import itertools
import json
import math
import time
from collections import Counter

import numpy as np
import pytest

from scriptgauge.classifier import class_weights, predict_many, svm_objective, train_svm
from scriptgauge.config import load_config
from scriptgauge.features import pcar_change_score, total_variation
from scriptgauge.pipeline import (
    DatasetManifest,
    ManifestEntry,
    load_manifest,
    load_model,
    run_ablation,
    run_eval,
    run_train,
    save_model,
)
from scriptgauge.segmentation import locate_structural_points, partition_segments
from scriptgauge.synth import generate_corpus
from scriptgauge.tfidf import fit_tfidf, transform


@pytest.fixture(scope="module")
def markers_corpus(tmp_path_factory):
    root = tmp_path_factory.mktemp("acc_markers")
    manifest_path = generate_corpus(
        root, n_scripts=200, tokens_per_script=5000, mode="markers", seed=2027
    )
    return load_manifest(manifest_path), load_config(root / "config.txt")


@pytest.fixture(scope="module")
def arc_corpus(tmp_path_factory):
    root = tmp_path_factory.mktemp("acc_arc")
    manifest_path = generate_corpus(
        root, n_scripts=200, tokens_per_script=5000, mode="arc", seed=4242
    )
    return load_manifest(manifest_path), load_config(root / "config.txt")


@pytest.fixture(scope="module")
def small_corpus(tmp_path_factory):
    root = tmp_path_factory.mktemp("acc_small")
    manifest_path = generate_corpus(
        root, n_scripts=60, tokens_per_script=2000, mode="markers", seed=5
    )
    manifest = load_manifest(manifest_path)
    config = load_config(root / "config.txt")
    config = config.with_blocks(("ling", "emo", "tt", "vad", "int", "clus"))
    return manifest, config


def test_criterion_1_segmenter_exactness():
    start = time.perf_counter()
    rng = np.random.default_rng(1)
    for n in rng.integers(1, 100_001, size=1000):
        n = int(n)
        part = partition_segments(n)
        sp = part.sp_indices
        assert sp[0] == 0 and sp[-1] == n - 1
        assert all(a <= b for a, b in zip(sp, sp[1:]))
        cursor = 0
        for seg_start, seg_end in part.segments:
            assert seg_start == cursor and seg_end >= seg_start
            cursor = seg_end
        assert cursor == n
    assert locate_structural_points(800) == [0, 100, 200, 300, 400, 499, 599, 699, 799]
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0, f"segmenter check took {elapsed:.2f}s"
    print(f"\nACCEPTANCE 1 (segmenter exactness, {elapsed:.2f}s): PASS")


def test_criterion_2_pcar_statistical_soundness():
    start = time.perf_counter()

    # null calibration: both groups drawn from one multinomial
    rng = np.random.default_rng(2024)
    base = np.array([0.35, 0.25, 0.2, 0.12, 0.08])
    hits = 0
    trials = 1000
    for trial in range(trials):
        units_a = rng.multinomial(100, base, size=10) / 100.0
        units_b = rng.multinomial(100, base, size=10) / 100.0
        _, p = pcar_change_score(list(units_a), list(units_b), 499, seed=trial)
        hits += p <= 0.05
    rate = hits / trials
    assert 0.03 <= rate <= 0.07, f"null P(p <= 0.05) = {rate}"

    # the 2+2 disjoint case against the exhaustive reassignment oracle
    units_a = [[1.0, 0.0], [1.0, 0.0]]
    units_b = [[0.0, 1.0], [0.0, 1.0]]
    distance, p = pcar_change_score(units_a, units_b, 10_000, seed=7)
    assert distance == pytest.approx(1.0)
    pooled = np.array(units_a + units_b)
    splits = list(itertools.combinations(range(4), 2))
    exceed = sum(
        total_variation(
            pooled[list(ga)].mean(axis=0),
            pooled[[i for i in range(4) if i not in ga]].mean(axis=0),
        )
        >= distance
        for ga in splits
    )
    assert exceed / len(splits) == pytest.approx(1 / 3)
    assert p == pytest.approx(1 / 3, abs=0.05)

    elapsed = time.perf_counter() - start
    assert elapsed < 30.0, f"PCAR check took {elapsed:.1f}s"
    print(f"\nACCEPTANCE 2 (PCAR soundness: null rate {rate:.3f}, "
          f"2+2 p {p:.3f}, {elapsed:.1f}s): PASS")


def test_criterion_3_tfidf_oracle_equivalence():
    rng = np.random.default_rng(42)
    for _ in range(200):
        vocab = [f"w{i}" for i in range(int(rng.integers(3, 20)))]
        docs = [
            [vocab[j] for j in rng.integers(0, len(vocab), size=rng.integers(1, 51))]
            for _ in range(int(rng.integers(1, 21)))
        ]
        model = fit_tfidf(docs, top_k=int(rng.integers(1, 15)))
        n = len(docs)
        df = Counter()
        for d in docs:
            for term in set(d):
                df[term] += 1
        for doc in docs:
            got = transform(doc, model)
            counts = Counter(doc)
            raw = np.array(
                [counts[t] * (math.log((1 + n) / (1 + df[t])) + 1.0) for t in model.selected]
            )
            norm = np.linalg.norm(raw)
            want = raw / norm if norm > 0 else raw
            assert got == pytest.approx(want, abs=1e-12)
            got_norm = np.linalg.norm(got)
            assert got_norm == 0.0 or got_norm == pytest.approx(1.0, abs=1e-9)
    print("\nACCEPTANCE 3 (tf-idf oracle equivalence, 200 corpora): PASS")


def test_criterion_4_svm_objective_oracle():
    start = time.perf_counter()
    rng = np.random.default_rng(777)
    grid_vals = np.arange(-4.0, 4.0 + 0.05, 0.1)
    w1, w2, b = np.meshgrid(grid_vals, grid_vals, grid_vals, indexing="ij")
    grid = np.stack([w1.ravel(), w2.ravel(), b.ravel()], axis=1)
    worst = 0.0
    for k in range(50):
        n = int(rng.integers(4, 9))
        x = rng.normal(size=(n, 2)) * 1.2
        y = np.zeros(n, dtype=int)
        y[rng.permutation(n)[: int(rng.integers(1, n))]] = 1
        if y.sum() in (0, n):
            y[0] = 1 - y[0]
        weights = class_weights(y)
        c = (0.3, 0.5, 1.0)[k % 3]

        model = train_svm(x, y, c, weights, seed=k, epochs=2500)
        rerun = train_svm(x, y, c, weights, seed=k, epochs=2500)
        assert model.weights.tobytes() == rerun.weights.tobytes()
        assert model.bias == rerun.bias

        got = svm_objective(model, x, y)
        signs = np.where(y == 1, 1.0, -1.0)
        gamma = np.where(y == 1, weights[0], weights[1])
        scores = grid[:, :2] @ x.T + grid[:, 2:3]
        hinge = np.maximum(0.0, 1.0 - signs[None, :] * scores)
        grid_min = float(
            (0.5 * (grid[:, 0] ** 2 + grid[:, 1] ** 2) + c * (gamma[None, :] * hinge).sum(axis=1)).min()
        )
        assert got <= grid_min * 1.05 + 1e-9, f"dataset {k}: {got} vs grid {grid_min}"
        worst = max(worst, got / grid_min)
    elapsed = time.perf_counter() - start
    print(f"\nACCEPTANCE 4 (SVM objective oracle, worst ratio {worst:.4f}, "
          f"{elapsed:.1f}s): PASS")


def test_criterion_5_end_to_end_planted_signal(markers_corpus):
    start = time.perf_counter()
    manifest, config = markers_corpus

    model, _ = run_train(manifest, config)
    test_report = run_eval(model, manifest.subset(model.split["test"]))
    assert test_report.macro_f1 >= 0.90, f"planted-signal test F1 {test_report.macro_f1}"

    rng = np.random.default_rng(99)
    labels = manifest.labels()
    shuffled_labels = [labels[i] for i in rng.permutation(len(labels))]
    shuffled = DatasetManifest(
        entries=[
            ManifestEntry(e.id, e.path, y) for e, y in zip(manifest.entries, shuffled_labels)
        ],
        name=manifest.name,
        seed=manifest.seed,
        base_dir=manifest.base_dir,
    )
    null_model, _ = run_train(shuffled, config)
    null_report = run_eval(null_model, shuffled.subset(null_model.split["test"]))
    assert 0.40 <= null_report.macro_f1 <= 0.60, f"shuffled-label F1 {null_report.macro_f1}"

    elapsed = time.perf_counter() - start
    assert elapsed < 120.0, f"end-to-end check took {elapsed:.0f}s"
    print(f"\nACCEPTANCE 5 (planted signal: test F1 {test_report.macro_f1:.3f}, "
          f"shuffled {null_report.macro_f1:.3f}, {elapsed:.0f}s): PASS")


def test_criterion_6_ablation_emotion_arcs(arc_corpus):
    manifest, config = arc_corpus
    rows = run_ablation(manifest, config, [(), ("ling", "emo")])
    baseline = rows[0]["test_macro_f1"]
    augmented = rows[1]["test_macro_f1"]
    assert augmented - baseline >= 0.15, f"improvement {augmented - baseline:.3f}"
    print(f"\nACCEPTANCE 6 (arc ablation: none {baseline:.3f} -> "
          f"ling+emo {augmented:.3f}): PASS")


def test_criterion_7_determinism_and_persistence(small_corpus, tmp_path):
    manifest, config = small_corpus

    artifacts = []
    for run in (1, 2):
        model, val_report = run_train(manifest, config)
        model_path = tmp_path / f"model{run}.json"
        save_model(model, model_path)
        report_path = tmp_path / f"report{run}.json"
        report_path.write_text(json.dumps(val_report.to_dict(), sort_keys=True, indent=2) + "\n")
        artifacts.append((model_path.read_bytes(), report_path.read_bytes()))
    assert artifacts[0][0] == artifacts[1][0], "model files differ between identical runs"
    assert artifacts[0][1] == artifacts[1][1], "reports differ between identical runs"

    model, _ = run_train(manifest, config)
    save_model(model, tmp_path / "rt.json")
    loaded = load_model(tmp_path / "rt.json")
    rng = np.random.default_rng(0)
    xs = rng.normal(size=(100, model.svm.dim))
    assert predict_many(xs, loaded.svm).tolist() == predict_many(xs, model.svm).tolist()
    print("\nACCEPTANCE 7 (byte-identical artifacts, save/load round-trip): PASS")


def test_criterion_8_class_weighting_formula():
    labels = [1] * 113 + [0] * (868 - 113)
    w_pos, w_neg = class_weights(labels)
    assert w_pos == pytest.approx(868 / 226, abs=1e-9)
    assert w_neg == pytest.approx(868 / 1510, abs=1e-9)
    print(f"\nACCEPTANCE 8 (class weights {w_pos:.6f}/{w_neg:.6f}): PASS")
