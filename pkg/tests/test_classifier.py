import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from scriptgauge.classifier import (
    EvalReport,
    SvmModel,
    class_weights,
    grid_search,
    macro_f1,
    predict,
    predict_many,
    split_dataset,
    svm_objective,
    train_svm,
)
from scriptgauge.errors import (
    DegenerateInput,
    DimensionMismatch,
    LengthMismatch,
    SingleClass,
    TooFewDocuments,
)


class TestSplit:
    def test_ten_documents(self):
        split = split_dataset([str(i) for i in range(10)], seed=0)
        assert (len(split.train), len(split.val), len(split.test)) == (8, 1, 1)

    def test_remainder_goes_to_train(self):
        split = split_dataset([str(i) for i in range(897)], seed=0)
        assert (len(split.train), len(split.val), len(split.test)) == (719, 89, 89)

    def test_deterministic(self):
        ids = [str(i) for i in range(50)]
        a, b = split_dataset(ids, seed=3), split_dataset(ids, seed=3)
        assert (a.train, a.val, a.test) == (b.train, b.val, b.test)

    def test_partition_property(self):
        ids = [str(i) for i in range(137)]
        split = split_dataset(ids, seed=9)
        combined = split.train + split.val + split.test
        assert sorted(combined) == sorted(ids)
        assert len(set(combined)) == len(ids)

    def test_too_few(self):
        with pytest.raises(TooFewDocuments):
            split_dataset(["a"] * 9, seed=0)

    def test_stratified_balances_classes(self):
        ids = [str(i) for i in range(100)]
        labels = [1 if i < 20 else 0 for i in range(100)]
        split = split_dataset(ids, seed=1, labels=labels, stratified=True)
        label_of = dict(zip(ids, labels))
        assert sum(label_of[i] for i in split.val) == 2
        assert sum(label_of[i] for i in split.test) == 2


class TestClassWeights:
    def test_skewed(self):
        w_pos, w_neg = class_weights([1] + [0] * 9)
        assert w_pos == pytest.approx(5.0)
        assert w_neg == pytest.approx(10 / 18)

    def test_balanced(self):
        assert class_weights([1] * 5 + [0] * 5) == (1.0, 1.0)

    def test_single_class(self):
        with pytest.raises(SingleClass):
            class_weights([1, 1, 1])


class TestTrain:
    def test_separable_pair(self):
        x = np.array([[-1.0], [1.0]])
        model = train_svm(x, [0, 1], c=1.0, weights=(1.0, 1.0), seed=0)
        assert predict([-1.0], model) == 0
        assert predict([1.0], model) == 1

    def test_conflicting_duplicates_follow_heavier_class(self):
        # same point with both labels: the heavily weighted class wins,
        # confirmed against a dense 1-D grid scan of the objective
        x = np.array([[1.0], [1.0]])
        y = [1, 0]
        weights = (10.0, 1.0)
        c = 5.0
        model = train_svm(x, y, c, weights, seed=0, epochs=2000)
        assert predict([1.0], model) == 1

        best_obj, best_score = None, None
        for w in np.arange(-5, 5, 0.01):
            for b in np.arange(-5, 5, 0.01):
                score = w + b
                obj = 0.5 * w * w + c * (
                    weights[0] * max(0.0, 1 - score) + weights[1] * max(0.0, 1 + score)
                )
                if best_obj is None or obj < best_obj:
                    best_obj, best_score = obj, score
        assert best_score > 0  # grid argmin also classifies the point positive

    def test_all_zero_features_use_bias(self):
        x = np.zeros((4, 2))
        model = train_svm(x, [1, 1, 1, 0], c=1.0, weights=(1.0, 1.0), seed=0)
        assert model.weights == pytest.approx([0.0, 0.0])
        assert predict([0.0, 0.0], model) == (1 if model.bias >= 0 else 0)
        assert model.bias > 0  # majority-positive data pushes the bias up

    def test_bit_reproducible(self):
        rng = np.random.default_rng(5)
        x = rng.normal(size=(20, 3))
        y = (rng.random(20) < 0.4).astype(int)
        y[0], y[1] = 0, 1
        a = train_svm(x, y, 1.0, (1.0, 1.0), seed=11)
        b = train_svm(x, y, 1.0, (1.0, 1.0), seed=11)
        assert a.weights.tobytes() == b.weights.tobytes()
        assert a.bias == b.bias

    def test_degenerate_inputs(self):
        with pytest.raises(DegenerateInput):
            train_svm(np.zeros((3, 0)), [0, 1, 0], 1.0, (1.0, 1.0), seed=0)
        with pytest.raises(DegenerateInput):
            train_svm(np.zeros((3, 2)), [1, 1, 1], 1.0, (1.0, 1.0), seed=0)

    def test_objective_does_not_increase_on_average(self):
        rng = np.random.default_rng(0)
        deltas = []
        for seed in range(12):
            x = rng.normal(size=(16, 4))
            y = (rng.random(16) < 0.5).astype(int)
            y[0], y[1] = 0, 1
            weights = class_weights(y)
            start = SvmModel(np.zeros(4), 0.0, 1.0, weights, seed)
            trained = train_svm(x, y, 1.0, weights, seed)
            deltas.append(svm_objective(trained, x, y) - svm_objective(start, x, y))
        assert np.mean(deltas) <= 0.0

    def test_objective_near_grid_minimum(self):
        # small companion to the acceptance-gate oracle
        rng = np.random.default_rng(321)
        for k in range(5):
            n = int(rng.integers(4, 9))
            x = rng.normal(size=(n, 2))
            y = np.zeros(n, dtype=int)
            y[: max(1, n // 2)] = 1
            y = y[rng.permutation(n)]
            if y.sum() in (0, n):
                y[0] = 1 - y[0]
            weights = class_weights(y)
            model = train_svm(x, y, 0.5, weights, seed=k, epochs=2500)
            got = svm_objective(model, x, y)

            vals = np.arange(-4.0, 4.0 + 0.05, 0.1)
            w1, w2, b = np.meshgrid(vals, vals, vals, indexing="ij")
            grid = np.stack([w1.ravel(), w2.ravel(), b.ravel()], axis=1)
            signs = np.where(y == 1, 1.0, -1.0)
            gamma = np.where(y == 1, weights[0], weights[1])
            scores = grid[:, :2] @ x.T + grid[:, 2:3]
            hinge = np.maximum(0.0, 1.0 - signs[None, :] * scores)
            objs = 0.5 * (grid[:, 0] ** 2 + grid[:, 1] ** 2) + 0.5 * (gamma[None, :] * hinge).sum(
                axis=1
            )
            assert got <= float(objs.min()) * 1.05 + 1e-9


class TestPredict:
    def _model(self):
        return SvmModel(np.array([1.0]), 0.0, 1.0, (1.0, 1.0), 0)

    def test_signs(self):
        model = self._model()
        assert predict([2.0], model) == 1
        assert predict([-2.0], model) == 0

    def test_tie_is_positive(self):
        assert predict([0.0], self._model()) == 1

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            predict([1.0, 2.0], self._model())

    @given(st.floats(min_value=1e-3, max_value=1e3))
    def test_scale_invariance(self, alpha):
        rng = np.random.default_rng(0)
        base = SvmModel(np.array([0.5, -1.5]), 0.25, 1.0, (1.0, 1.0), 0)
        scaled = SvmModel(base.weights * alpha, base.bias * alpha, 1.0, (1.0, 1.0), 0)
        x = rng.normal(size=(20, 2))
        assert predict_many(x, base).tolist() == predict_many(x, scaled).tolist()


class TestGridSearch:
    def _planted(self):
        rng = np.random.default_rng(2)
        x = rng.normal(size=(60, 2))
        y = (x[:, 0] > 0).astype(int)
        return x[:40], y[:40], x[40:], y[40:]

    def test_single_value_grid(self):
        x_train, y_train, x_val, y_val = self._planted()
        best_c, _ = grid_search(x_train, y_train, x_val, y_val, c_grid=(0.5,), seed=0)
        assert best_c == 0.5

    def test_tie_prefers_smaller_c(self):
        x_train, y_train, x_val, y_val = self._planted()
        best_c, best_f1 = grid_search(
            x_train, y_train, x_val, y_val, c_grid=(1.0, 10.0), seed=0
        )
        # the planted signal is separable, so both c values reach 1.0
        assert best_f1 == pytest.approx(1.0)
        assert best_c == 1.0

    def test_empty_grid(self):
        x_train, y_train, x_val, y_val = self._planted()
        with pytest.raises(ValueError):
            grid_search(x_train, y_train, x_val, y_val, c_grid=(), seed=0)

    def test_argmax_property(self):
        x_train, y_train, x_val, y_val = self._planted()
        grid = (0.01, 0.1, 1.0, 10.0)
        best_c, best_f1 = grid_search(x_train, y_train, x_val, y_val, c_grid=grid, seed=0)
        weights = class_weights(y_train)
        for c in grid:
            model = train_svm(x_train, y_train, c, weights, seed=0)
            report = macro_f1(y_val, predict_many(x_val, model))
            assert report.macro_f1 <= best_f1 + 1e-12


class TestMacroF1:
    def test_hand_confusion(self):
        y_true = [1, 1, 0, 0, 0, 0, 0, 0, 0, 0]
        y_pred = [1, 0, 1, 0, 0, 0, 0, 0, 0, 0]
        report = macro_f1(y_true, y_pred)
        assert (report.tp, report.fp, report.fn, report.tn) == (1, 1, 1, 7)
        assert report.f1_pos == pytest.approx(0.5)
        assert report.f1_neg == pytest.approx(0.875)
        assert report.macro_f1 == pytest.approx(0.6875)

    def test_perfect(self):
        report = macro_f1([1, 0, 1], [1, 0, 1])
        assert report.macro_f1 == 1.0

    def test_all_negative_predictions(self):
        report = macro_f1([1, 0, 0], [0, 0, 0])
        assert report.f1_pos == 0.0

    def test_counts_sum(self):
        report = macro_f1([1, 0, 1, 1], [0, 0, 1, 1])
        assert report.tp + report.fp + report.fn + report.tn == 4

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            macro_f1([1, 0], [1])
        with pytest.raises(LengthMismatch):
            macro_f1([], [])

    def test_label_swap_symmetry(self):
        rng = np.random.default_rng(4)
        for _ in range(25):
            y_true = rng.integers(0, 2, size=12).tolist()
            y_pred = rng.integers(0, 2, size=12).tolist()
            a = macro_f1(y_true, y_pred)
            b = macro_f1([1 - y for y in y_true], [1 - y for y in y_pred])
            assert a.macro_f1 == pytest.approx(b.macro_f1)
            assert (a.f1_pos, a.f1_neg) == pytest.approx((b.f1_neg, b.f1_pos))

    def test_round_trip_dict(self):
        report = macro_f1([1, 0], [1, 1])
        assert EvalReport.from_dict(report.to_dict()) == report
