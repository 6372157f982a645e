import math
from typing import (  # noqa: F401
    Any,
    Dict,
    List,
    Sequence,
    Tuple,
)

import numpy as np
from sklearn import metrics

from pachinko.exceptions import (
    EvaluationError,
)
from pachinko.utils.records import (
    Record,
)


class RocCurve(Record):
    fields = {
        # From (0, 0) to (1, 1), non-decreasing in both coordinates
        'fpr': ['float'],
        'tpr': ['float'],
        # Score threshold at each point; the (0, 0) point has +inf
        'thresholds': ['float'],
    }

    @property
    def points(self) -> List[Tuple[float, float]]:
        return list(zip(self.fpr, self.tpr))


def check_labels(labels: Sequence[bool]) -> np.ndarray:
    y = np.asarray(labels, dtype=bool)
    if y.size == 0 or y.all() or not y.any():
        raise EvaluationError(
            "ROC analysis needs both positive and negative labels:\n"
            "\tFound: %d positive, %d negative" % (int(y.sum()), int((~y).sum()))
        )
    return y


def roc_curve(scores: Sequence[float], labels: Sequence[bool]) -> RocCurve:
    """
    One point per distinct score, in decreasing order. Tied scores move both
    rates at once, giving a diagonal step.
    """
    y = check_labels(labels)
    s = np.asarray(scores, dtype=float)
    if s.shape != y.shape:
        raise EvaluationError("scores and labels differ in length: %d vs %d" % (s.size, y.size))
    fpr, tpr, thresholds = metrics.roc_curve(y, s, drop_intermediate=False)
    thresholds = thresholds.astype(float)
    thresholds[0] = math.inf
    return RocCurve(
        fpr=[float(v) for v in fpr],
        tpr=[float(v) for v in tpr],
        thresholds=[float(v) for v in thresholds],
    )


def auc(curve: RocCurve) -> float:
    """Trapezoidal area under the curve."""
    return float(metrics.auc(curve.fpr, curve.tpr))


def score_auc(scores: Sequence[float], labels: Sequence[bool]) -> float:
    return auc(roc_curve(scores, labels))
