import math

import numpy as np
import pytest

from pachinko.evaluation.roc import (
    auc,
    roc_curve,
    score_auc,
)
from pachinko.exceptions import (
    EvaluationError,
)


def mann_whitney(scores, labels):
    positives = [s for s, label in zip(scores, labels) if label]
    negatives = [s for s, label in zip(scores, labels) if not label]
    total = 0.0
    for p in positives:
        for n in negatives:
            if p > n:
                total += 1.0
            elif p == n:
                total += 0.5
    return total / (len(positives) * len(negatives))


def random_instance(seed):
    rng = np.random.default_rng(seed)
    size = int(rng.integers(2, 60))
    labels = rng.random(size) < 0.4
    labels[0], labels[1] = True, False
    if seed % 2:
        # heavy ties
        scores = rng.integers(0, 4, size=size).astype(float)
    else:
        scores = rng.random(size)
    return scores, labels


def test_three_point_example():
    curve = roc_curve([0.9, 0.8, 0.3], [True, False, True])
    assert curve.points == [(0, 0), (0, 0.5), (1, 0.5), (1, 1)]
    assert curve.thresholds[0] == math.inf
    assert curve.thresholds[1:] == [0.9, 0.8, 0.3]
    assert auc(curve) == 0.5


def test_perfect_separation():
    curve = roc_curve([0.9, 0.8, 0.2, 0.1], [True, True, False, False])
    assert (0.0, 1.0) in curve.points
    assert auc(curve) == 1.0


def test_all_ties_give_diagonal():
    curve = roc_curve([0.3] * 6, [True, False, True, False, False, True])
    assert curve.points == [(0, 0), (1, 1)]
    assert auc(curve) == 0.5


def test_curve_is_monotone():
    scores, labels = random_instance(4)
    curve = roc_curve(scores, labels)
    assert curve.points[0] == (0, 0)
    assert curve.points[-1] == (1, 1)
    assert curve.fpr == sorted(curve.fpr)
    assert curve.tpr == sorted(curve.tpr)


def test_random_scores_near_half():
    rng = np.random.default_rng(1000)
    labels = rng.random(1000) < 0.5
    assert score_auc(rng.random(1000), labels) == pytest.approx(0.5, abs=0.05)


@pytest.mark.parametrize('seed', range(200))
def test_auc_equals_mann_whitney(seed):
    scores, labels = random_instance(seed)
    assert score_auc(scores, labels) == pytest.approx(mann_whitney(scores, labels), abs=1e-12)


@pytest.mark.parametrize(
    'transform',
    [
        lambda s: 3 * s + 1,
        np.exp,
        lambda s: s ** 3,
    ]
)
def test_auc_invariant_under_monotone_transform(transform):
    scores, labels = random_instance(8)
    assert score_auc(transform(scores), labels) == pytest.approx(score_auc(scores, labels))


@pytest.mark.parametrize(
    'labels',
    [
        [True, True, True],
        [False, False],
        [],
    ]
)
def test_single_class_is_rejected(labels):
    with pytest.raises(EvaluationError):
        roc_curve([0.5] * len(labels), labels)


def test_length_mismatch_is_rejected():
    with pytest.raises(EvaluationError):
        roc_curve([0.1, 0.2, 0.3], [True, False])
