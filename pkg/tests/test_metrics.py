import numpy as np
import pytest
from sklearn.metrics import average_precision_score, roc_auc_score

from camocodec.core.errors import DimensionError, MetricError
from camocodec.core.messages import CurveKind
from camocodec.metrics.confusion import ConfusionMatrix, accuracy, confusion_matrix, load_confusion_csv, \
    save_confusion_csv
from camocodec.metrics.curves import load_curve_csv, one_vs_rest_curves, pr_curve, roc_curve, save_curve_csv
from camocodec.metrics.report import class_report, f1_score, round_half_up
from camocodec.metrics.summary import ExperimentSummary
from camocodec.metrics.timing import TimingRecord, format_elapsed, load_timing_csv, save_timing_csv, speed_ratio, \
    timing_report, timing_table

NAMES = ['army_base', 'bamboo_forest', 'desert_road']

# 100 samples per class with 3, 4 and 8 misclassifications
COUNTS = np.array([[97, 2, 1], [3, 96, 1], [5, 3, 92]])


def labels_from_counts(counts):
    y_true, y_pred = [], []
    for t, row in enumerate(counts):
        for p, n in enumerate(row):
            y_true += [t] * int(n)
            y_pred += [p] * int(n)
    return np.array(y_true), np.array(y_pred)


def pair_counting_auc(scores, positives):
    pos = scores[positives]
    neg = scores[~positives]
    wins = sum((p > n) + 0.5 * (p == n) for p in pos for n in neg)
    return wins / (pos.size * neg.size)


def test_confusion_matrix_counts():
    y_true, y_pred = labels_from_counts(COUNTS)
    cm = confusion_matrix(y_true, y_pred, 3)
    np.testing.assert_array_equal(cm.counts, COUNTS)
    assert cm.errors_per_class().tolist() == [3, 4, 8]
    assert cm.total == 300 and cm.trace == 285
    assert accuracy(y_true, y_pred) == 0.95


def test_confusion_matrix_errors():
    assert confusion_matrix([], [], 3).total == 0
    with pytest.raises(MetricError):
        confusion_matrix([0, 3], [0, 1], 3)
    with pytest.raises(MetricError):
        confusion_matrix([0, 1], [0, -1], 3)
    with pytest.raises(DimensionError):
        confusion_matrix([0, 1], [0], 3)
    with pytest.raises(MetricError):
        accuracy([], [])


def test_confusion_csv(tmp_path):
    path = str(tmp_path / 'confusion.csv')
    save_confusion_csv(ConfusionMatrix(COUNTS), NAMES, path)
    with open(path) as f:
        assert f.readline().strip() == 'true\\predicted,army_base,bamboo_forest,desert_road'
    names, cm = load_confusion_csv(path)
    assert names == NAMES
    np.testing.assert_array_equal(cm.counts, COUNTS)


@pytest.mark.parametrize('precision,recall,expected', [(0.93, 0.85, '0.89'), (0.86, 0.82, '0.84'), (0.0, 0.0, '0.00')])
def test_f1_rounding(precision, recall, expected):
    assert round_half_up(f1_score(precision, recall)) == expected


def test_round_half_up():
    assert round_half_up(0.125) == '0.13'
    assert round_half_up(0.835) == '0.84'
    assert round_half_up(1.0) == '1.00'
    assert round_half_up(np.mean([0.89, 0.95, 0.92])) == '0.92'


def test_class_report_arithmetic():
    report = class_report(ConfusionMatrix(COUNTS))
    assert report.accuracy == 285 / 300
    assert [m.recall for m in report.per_class] == [0.97, 0.96, 0.92]
    assert report.per_class[0].precision == pytest.approx(97 / 105)
    assert [m.support for m in report.per_class] == [100, 100, 100]
    assert report.macro.recall == pytest.approx(0.95)
    assert report.weighted.as_tuple()[:3] == report.macro.as_tuple()[:3]
    assert report.zero_division == []


def test_class_report_weighted_by_support():
    report = class_report(ConfusionMatrix([[8, 2], [0, 2]]))
    f1 = [m.f1 for m in report.per_class]
    assert report.weighted.f1 == pytest.approx((10 * f1[0] + 2 * f1[1]) / 12)
    assert report.macro.f1 == pytest.approx(np.mean(f1))


def test_class_report_zero_division():
    report = class_report(ConfusionMatrix([[2, 0, 0], [1, 0, 0], [0, 0, 0]]))
    assert (1, 'precision') in report.zero_division
    assert (2, 'recall') in report.zero_division
    assert report.per_class[1].precision == 0.0
    assert report.per_class[2].f1 == 0.0
    with pytest.raises(MetricError):
        class_report(ConfusionMatrix(np.zeros((2, 2))))


def test_report_render_layout():
    text = class_report(ConfusionMatrix(COUNTS)).render(NAMES)
    lines = text.splitlines()
    assert len(lines) == 9
    assert lines[0].split() == ['precision', 'recall', 'f1-score', 'support']
    assert lines[1] == '' and lines[5] == ''
    assert lines[2].split() == ['army_base', '0.92', '0.97', '0.95', '100']
    assert lines[6].split() == ['accuracy', '0.95', '300']
    assert lines[7].split()[:2] == ['macro', 'avg']
    assert lines[8].split()[-1] == '300'
    assert len({len(line) for line in lines if line}) == 1
    with pytest.raises(DimensionError):
        class_report(ConfusionMatrix(COUNTS)).render(NAMES[:2])


def test_roc_perfect_and_inverted():
    positives = np.array([True, True, False, False])
    perfect = roc_curve(np.array([0.9, 0.8, 0.2, 0.1]), positives)
    assert perfect.area == 1.0
    np.testing.assert_array_equal(perfect.points[0], [0.0, 0.0])
    np.testing.assert_array_equal(perfect.points[-1], [1.0, 1.0])
    assert perfect.thresholds[0] == np.inf
    assert roc_curve(np.array([0.1, 0.2, 0.8, 0.9]), positives).area == 0.0


def test_roc_ties_form_one_step():
    curve = roc_curve(np.full(6, 0.3), np.array([True, False, True, False, False, True]))
    np.testing.assert_array_equal(curve.points, [[0.0, 0.0], [1.0, 1.0]])
    assert curve.area == 0.5


def test_roc_matches_pair_counting(rng):
    for _ in range(200):
        n = int(rng.integers(2, 51))
        scores = rng.integers(0, 6, size=n).astype(np.float64)
        positives = rng.random(n) < 0.5
        positives[0], positives[1] = True, False
        curve = roc_curve(scores, positives)
        assert abs(curve.area - pair_counting_auc(scores, positives)) <= 1e-12
        assert np.all(np.diff(curve.x) >= 0) and np.all(np.diff(curve.y) >= 0)


def test_roc_and_ap_match_sklearn(rng):
    for _ in range(50):
        n = int(rng.integers(5, 80))
        scores = np.round(rng.random(n), 1)
        positives = rng.random(n) < 0.4
        positives[0], positives[1] = True, False
        assert roc_curve(scores, positives).area == pytest.approx(roc_auc_score(positives, scores), abs=1e-12)
        assert pr_curve(scores, positives).area == pytest.approx(average_precision_score(positives, scores), abs=1e-12)


def test_roc_is_invariant_to_monotone_transform(rng):
    scores = rng.normal(size=30)
    positives = rng.random(30) < 0.5
    positives[0], positives[1] = True, False
    a = roc_curve(scores, positives)
    b = roc_curve(np.exp(3.0 * scores) + 1.0, positives)
    np.testing.assert_array_equal(a.points, b.points)
    assert a.area == b.area


def test_roc_needs_both_classes():
    with pytest.raises(MetricError):
        roc_curve(np.array([0.1, 0.2]), np.array([True, True]))
    with pytest.raises(DimensionError):
        roc_curve(np.array([0.1, 0.2]), np.array([True]))


def test_average_precision_examples():
    assert pr_curve(np.array([0.9, 0.8, 0.3, 0.1]), np.array([True, True, False, False])).area == 1.0
    n = 7
    last = np.zeros(n, dtype=bool)
    last[-1] = True
    assert pr_curve(np.linspace(1.0, 0.0, n), last).area == pytest.approx(1.0 / n, abs=1e-15)
    curve = pr_curve(np.array([0.5, 0.4, 0.9, 0.2, 0.7]), np.array([True, False, False, True, False]))
    assert curve.points[-1].tolist() == [1.0, 2.0 / 5.0]
    with pytest.raises(MetricError):
        pr_curve(np.array([0.1, 0.2]), np.array([False, False]))


def test_one_vs_rest_perfect_and_uniform():
    labels = np.array([0, 1, 2, 0, 1, 2])
    curves = one_vs_rest_curves(np.eye(3)[labels], labels)
    assert [c.kind for c in curves] == [CurveKind.ROC, CurveKind.PR] * 3
    assert [c.area for c in curves[::2]] == [1.0, 1.0, 1.0]
    uniform = one_vs_rest_curves(np.full((6, 3), 1.0 / 3.0), labels)
    assert [c.area for c in uniform[::2]] == [0.5, 0.5, 0.5]


def test_one_vs_rest_flags_missing_classes(caplog):
    curves = one_vs_rest_curves(np.full((3, 3), 1.0 / 3.0), [0, 0, 0])
    assert [c.defined for c in curves] == [False, True, False, False, False, False]
    assert np.isnan(curves[2].area)
    assert 'undefined' in caplog.text


def test_curve_csv(tmp_path):
    curve = roc_curve(np.array([0.9, 0.5, 0.5, 0.1]), np.array([True, False, True, False]))
    path = str(tmp_path / 'roc.csv')
    save_curve_csv(curve, path)
    with open(path) as f:
        assert f.readline().strip() == 'threshold,x,y'
    thresholds, points = load_curve_csv(path)
    np.testing.assert_array_equal(thresholds, curve.thresholds)
    np.testing.assert_array_equal(points, curve.points)


@pytest.mark.parametrize('seconds,text', [
    (844.589522, '0 : 14 : 04.589522'),
    (77.319555, '0 : 01 : 17.319555'),
    (0.0, '0 : 00 : 00.000000'),
    (3725.5, '1 : 02 : 05.500000'),
    (59.9999996, '0 : 01 : 00.000000'),
])
def test_format_elapsed(seconds, text):
    assert format_elapsed(seconds) == text


def test_timing_errors():
    with pytest.raises(MetricError):
        format_elapsed(-1.0)
    with pytest.raises(MetricError):
        timing_report('audio', -0.5)


def test_speed_ratio():
    slow = TimingRecord('baseline', 'images', 844.589522, 'CPU')
    fast = TimingRecord('audio', 'audio', 77.319555, 'CPU')
    assert round_half_up(speed_ratio(slow, fast)) == '10.92'
    with pytest.raises(MetricError):
        speed_ratio(slow, TimingRecord('audio', 'audio', 0.0, 'CPU'))


def test_timing_table_and_csv(tmp_path):
    records = [timing_report('baseline', 844.589522, 'images', 'CPU (x86_64)'),
               timing_report('audio', 77.319555, 'audio', 'CPU (x86_64)')]
    lines = timing_table(records).splitlines()
    assert lines[0].split() == ['Model', 'Data', 'Platform', 'Time']
    assert set(lines[1].replace(' ', '')) == {'-'}
    assert lines[2].endswith('0 : 14 : 04.589522')

    path = str(tmp_path / 'timing.csv')
    save_timing_csv(records, path)
    loaded = load_timing_csv(path)
    assert [(r.model, r.data, r.platform, r.seconds) for r in loaded] == \
        [(r.model, r.data, r.platform, r.seconds) for r in records]


def test_experiment_summary(tmp_path):
    audio = class_report(ConfusionMatrix(COUNTS))
    baseline = class_report(ConfusionMatrix([[90, 5, 5], [10, 85, 5], [8, 4, 88]]))
    summary = ExperimentSummary(audio, baseline, TimingRecord('audio', 'audio', 77.319555, 'CPU'),
                                TimingRecord('baseline', 'images', 844.589522, 'CPU'), NAMES)
    assert summary.speed_ratio == pytest.approx(844.589522 / 77.319555)
    text = summary.render()
    assert 'Audio model is 10.92 times faster than the baseline' in text
    assert text.index('Baseline image classifier') < text.index('Audio classifier')

    path = str(tmp_path / 'comparison.csv')
    summary.save_csv(path)
    with open(path) as f:
        rows = [line.split(',') for line in f.read().splitlines()]
    assert rows[0] == ['metric', 'audio', 'baseline']
    assert rows[1] == ['accuracy', repr(0.95), repr(263 / 300)]
    assert rows[-1][0] == 'speed_ratio'
