import json
from pathlib import Path
from typing import (  # noqa: F401
    Any,
    Dict,
    Sequence,
    Union,
)

import numpy as np

from pachinko.exceptions import (
    ParseError,
)
from pachinko.utils.records import (
    Record,
    from_dict,
    to_dict,
)

from .features import (
    vectorize,
)


GAUSSIAN_NB = 'gaussian_nb'
BERNOULLI_NB = 'bernoulli_nb'
SVM_L1 = 'svm_l1'
SVM_L2 = 'svm_l2'

# Tie-break order for model selection, best first
KINDS = (SVM_L2, SVM_L1, BERNOULLI_NB, GAUSSIAN_NB)
SVM_KINDS = (SVM_L1, SVM_L2)

MODEL_FORMAT_VERSION = 1


class TrainedClassifier(Record):
    fields = {
        'format_version': 'int',
        # One of KINDS
        'kind': 'str',
        # n-gram -> column id, fit on training data only
        'vocabulary': 'json',
        # Per-kind weights/statistics as plain lists
        'parameters': 'json',
        # Mean cross-validated F1 of this kind, when selected by CV
        'cv_f1': ('optional', 'float'),
        # Mean cross-validated F1 of every kind tried
        'cv_scores': 'json',
        # Corpus size and class balance
        'metadata': 'json',
    }

    defaults = {
        'format_version': MODEL_FORMAT_VERSION,
        'cv_f1': None,
        'cv_scores': {},
        'metadata': {},
    }  # type: Dict[str, Any]


def decision_function(model: TrainedClassifier, texts: Sequence[str]) -> np.ndarray:
    """
    Positive-class score per text; a text is relevant when its score is > 0.
    SVMs return the margin, Naive Bayes the joint log-likelihood difference.
    """
    X = vectorize(list(texts), model.vocabulary)
    params = model.parameters
    if model.kind in SVM_KINDS:
        coef = np.asarray(params['coef'], dtype=float)
        if X.shape[1] == 0:
            return np.full(X.shape[0], float(params['intercept']))
        return X @ coef + float(params['intercept'])
    elif model.kind == BERNOULLI_NB:
        feature_log_prob = np.asarray(params['feature_log_prob'], dtype=float)
        neg_prob = np.log1p(-np.exp(feature_log_prob))
        jll = np.tile(
            np.asarray(params['class_log_prior'], dtype=float) + neg_prob.sum(axis=1),
            (X.shape[0], 1),
        )
        if X.shape[1]:
            presence = (X > 0).astype(float)
            jll = jll + presence @ (feature_log_prob - neg_prob).T
        return jll[:, 1] - jll[:, 0]
    elif model.kind == GAUSSIAN_NB:
        theta = np.asarray(params['theta'], dtype=float)
        var = np.asarray(params['var'], dtype=float)
        class_log_prior = np.asarray(params['class_log_prior'], dtype=float)
        # sum over features of (x - theta)^2 / var, expanded to stay sparse
        const = class_log_prior - 0.5 * np.log(2.0 * np.pi * var).sum(axis=1) - 0.5 * (theta ** 2 / var).sum(axis=1)
        jll = np.tile(const, (X.shape[0], 1))
        if X.shape[1]:
            jll = jll - 0.5 * (X.multiply(X) @ (1.0 / var).T) + X @ (theta / var).T
        return jll[:, 1] - jll[:, 0]
    raise ValueError("Unknown classifier kind %r" % model.kind)


def predict_texts(model: TrainedClassifier, texts: Sequence[str]) -> np.ndarray:
    return np.asarray(decision_function(model, texts)) > 0


def bias_class(model: TrainedClassifier) -> bool:
    """Prediction for a text with no in-vocabulary n-gram."""
    return bool(predict_texts(model, [''])[0])


def write_model(model: TrainedClassifier, path: Union[str, Path]) -> None:
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    with open(str(path), 'w', encoding='utf-8', newline='\n') as f:
        json.dump(to_dict(model), f, sort_keys=True)
        f.write('\n')


def load_model(path: Union[str, Path]) -> TrainedClassifier:
    with open(str(path), encoding='utf-8') as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as exc:
            raise ParseError("invalid JSON: %s" % exc.msg, path=str(path), line=exc.lineno) from exc
    if data.get('format_version') != MODEL_FORMAT_VERSION:
        raise ParseError(
            "unsupported model format version:\n"
            "\tFound: %r, Expected: %d" % (data.get('format_version'), MODEL_FORMAT_VERSION),
            path=str(path),
        )
    if data.get('kind') not in KINDS:
        raise ParseError("unknown classifier kind %r" % data.get('kind'), path=str(path))
    return from_dict(TrainedClassifier, data)
