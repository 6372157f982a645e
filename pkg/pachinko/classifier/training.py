import logging
import warnings
from pathlib import Path
from typing import (  # noqa: F401
    Any,
    Dict,
    Iterable,
    List,
    Sequence,
    Tuple,
    Union,
)

import numpy as np
from scipy import sparse
from sklearn.exceptions import ConvergenceWarning
from sklearn.linear_model import SGDClassifier
from sklearn.model_selection import StratifiedKFold
from sklearn.naive_bayes import BernoulliNB, GaussianNB

from pachinko.data.config import (
    DEFAULT_CONFIG,
)
from pachinko.data.io import (
    parse_bool,
    read_csv_strings,
)
from pachinko.data.tweet_record import (
    TweetRecord,
)
from pachinko.exceptions import (
    ParseError,
    TrainingError,
)
from pachinko.utils.records import (
    replace,
)

from .features import (
    fit_vocabulary,
    vectorize,
)
from .trained_classifier import (
    BERNOULLI_NB,
    GAUSSIAN_NB,
    KINDS,
    SVM_KINDS,
    SVM_L1,
    TrainedClassifier,
    predict_texts,
)


logger = logging.getLogger(__name__)

CLASSES = np.array([0, 1])
GAUSSIAN_CHUNK_CELLS = 2 ** 24


def f1_score(tp: int, fp: int, fn: int) -> float:
    if tp + fn <= 0:
        raise ValueError("F1 is undefined without positive examples (tp + fn = 0)")
    if tp == 0:
        return 0.0
    precision = tp / (tp + fp)
    recall = tp / (tp + fn)
    return 2 * precision * recall / (precision + recall)


def confusion_counts(truth: Sequence[bool], predicted: Sequence[bool]) -> Tuple[int, int, int]:
    """(tp, fp, fn)"""
    truth_arr = np.asarray(truth, dtype=bool)
    predicted_arr = np.asarray(predicted, dtype=bool)
    tp = int(np.sum(truth_arr & predicted_arr))
    fp = int(np.sum(~truth_arr & predicted_arr))
    fn = int(np.sum(truth_arr & ~predicted_arr))
    return tp, fp, fn


def load_corpus(path: Union[str, Path]) -> Tuple[List[str], List[bool]]:
    frame = read_csv_strings(path, required=('text', 'label'))
    texts = []  # type: List[str]
    labels = []  # type: List[bool]
    for row_index, row in enumerate(frame.to_dict('records')):
        try:
            label = parse_bool(row['label'])
        except ValueError as exc:
            raise ParseError(str(exc), path=str(path), line=row_index + 2) from exc
        texts.append(row['text'])
        labels.append(label)
    return texts, labels


def check_classes(labels: Sequence[bool], minimum: int=1) -> None:
    positives = sum(1 for label in labels if label)
    negatives = len(labels) - positives
    if positives < minimum or negatives < minimum:
        raise TrainingError(
            "Training needs at least %d example(s) of each class:\n"
            "\tFound: %d positive, %d negative" % (minimum, positives, negatives)
        )


def fit_gaussian_nb(X: sparse.csr_matrix, y: np.ndarray) -> GaussianNB:
    """
    GaussianNB fitted over dense row chunks of at most GAUSSIAN_CHUNK_CELLS
    cells. Variances are left unsmoothed; the floor is applied by the caller.
    """
    gaussian = GaussianNB(var_smoothing=0.0)
    rows = max(1, GAUSSIAN_CHUNK_CELLS // X.shape[1])
    for start in range(0, X.shape[0], rows):
        gaussian.partial_fit(X[start:start + rows].toarray(), y[start:start + rows], classes=CLASSES)
    return gaussian


def train(kind: str,
          texts: Sequence[str],
          labels: Sequence[bool],
          seed: int=0,
          config: Dict[str, Any]=DEFAULT_CONFIG) -> TrainedClassifier:
    """
    Fit one classifier. The vocabulary is built from ``texts`` alone, so
    callers doing cross validation pass only the training fold.
    """
    if kind not in KINDS:
        raise TrainingError("Unknown classifier kind %r, expected one of %s" % (kind, KINDS))
    check_classes(labels)
    vocabulary = fit_vocabulary(texts)
    X = vectorize(texts, vocabulary)
    y = np.asarray(labels, dtype=int)
    if X.shape[1] == 0:
        raise TrainingError("Training texts produce an empty vocabulary")

    if kind in SVM_KINDS:
        # hinge loss with C-style regularization, alpha = 1 / (C * n)
        estimator = SGDClassifier(
            loss='hinge',
            penalty='l1' if kind == SVM_L1 else 'l2',
            alpha=1.0 / (config['svm_regularization'] * X.shape[0]),
            max_iter=config['svm_max_epochs'],
            tol=config['svm_tolerance'],
            shuffle=True,
            random_state=seed,
        )
        with warnings.catch_warnings():
            warnings.simplefilter('ignore', category=ConvergenceWarning)
            estimator.fit(X, y)
        parameters = {
            'coef': estimator.coef_[0].tolist(),
            'intercept': float(estimator.intercept_[0]),
        }  # type: Dict[str, Any]
    elif kind == BERNOULLI_NB:
        nb = BernoulliNB(alpha=1.0, binarize=0.0)
        nb.fit(X, y)
        parameters = {
            'feature_log_prob': nb.feature_log_prob_.tolist(),
            'class_log_prior': nb.class_log_prior_.tolist(),
        }
    elif kind == GAUSSIAN_NB:
        gaussian = fit_gaussian_nb(X, y)
        parameters = {
            'theta': gaussian.theta_.tolist(),
            'var': np.maximum(gaussian.var_, config['gaussian_var_floor']).tolist(),
            'class_log_prior': np.log(gaussian.class_prior_).tolist(),
        }

    return TrainedClassifier(
        kind=kind,
        vocabulary=vocabulary,
        parameters=parameters,
        metadata={
            'documents': len(labels),
            'positives': int(y.sum()),
            'negatives': int(len(y) - y.sum()),
            'seed': seed,
        },
    )


def fold_indices(labels: Sequence[bool],
                 folds: int,
                 seed: int) -> List[Tuple[np.ndarray, np.ndarray]]:
    """Stratified, seeded (train, validation) index pairs covering the corpus once."""
    check_classes(labels, minimum=folds)
    splitter = StratifiedKFold(n_splits=folds, shuffle=True, random_state=seed)
    y = np.asarray(labels, dtype=int)
    return list(splitter.split(np.zeros(len(y)), y))


def cross_validate_kind(kind: str,
                        texts: Sequence[str],
                        labels: Sequence[bool],
                        folds: int,
                        seed: int,
                        config: Dict[str, Any]=DEFAULT_CONFIG) -> float:
    """Mean F1 over folds; every fold builds its own vocabulary."""
    scores = []
    for train_index, validation_index in fold_indices(labels, folds, seed):
        model = train(
            kind,
            [texts[i] for i in train_index],
            [labels[i] for i in train_index],
            seed=seed,
            config=config,
        )
        predicted = predict_texts(model, [texts[i] for i in validation_index])
        tp, fp, fn = confusion_counts([labels[i] for i in validation_index], predicted)
        scores.append(f1_score(tp, fp, fn))
    return float(np.mean(scores))


def select_model(texts: Sequence[str],
                 labels: Sequence[bool],
                 kinds: Sequence[str]=KINDS,
                 folds: int=5,
                 seed: int=0,
                 config: Dict[str, Any]=DEFAULT_CONFIG) -> TrainedClassifier:
    """
    Pick the kind with the highest mean cross-validated F1 (ties go to the
    earlier kind in KINDS) and retrain it on the whole corpus.
    """
    texts = list(texts)
    labels = [bool(label) for label in labels]
    check_classes(labels, minimum=folds)
    ordered = [kind for kind in KINDS if kind in kinds]
    if not ordered:
        raise TrainingError("No known classifier kind in %s" % (list(kinds),))

    cv_scores = {}  # type: Dict[str, float]
    for kind in ordered:
        cv_scores[kind] = cross_validate_kind(kind, texts, labels, folds, seed, config)
        logger.info("%s: mean %d-fold F1 %.4f", kind, folds, cv_scores[kind])

    best = ordered[0]
    for kind in ordered[1:]:
        if cv_scores[kind] > cv_scores[best]:
            best = kind
    logger.info("Selected %s (F1 %.4f)", best, cv_scores[best])

    model = train(best, texts, labels, seed=seed, config=config)
    return replace(
        model,
        cv_f1=cv_scores[best],
        cv_scores=cv_scores,
        metadata=dict(model.metadata, folds=folds),
    )


def classify(model: TrainedClassifier, tweets: Iterable[TweetRecord]) -> List[TweetRecord]:
    tweets = list(tweets)
    if not tweets:
        return []
    predicted = predict_texts(model, [tweet.text for tweet in tweets])
    return [
        replace(tweet, relevant=bool(flag))
        for tweet, flag in zip(tweets, predicted)
    ]
