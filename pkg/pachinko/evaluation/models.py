import logging
from collections import OrderedDict
from typing import (  # noqa: F401
    Any,
    Collection,
    Dict,
    List,
    Mapping,
    NamedTuple,
    Optional,
    Sequence,
    Set,
    Tuple,
)

import numpy as np

from pachinko.bayes.engine import (
    baseline_predictions,
    predict_all,
)
from pachinko.bayes.prediction_record import (
    PredictionRecord,
)
from pachinko.bayes.strata import (
    LOCATION,
    LOCATION_MONTH,
    MONTH,
    NONE,
    StrataSpec,
)
from pachinko.data.config import (
    DEFAULT_CONFIG,
)
from pachinko.data.gsr_record import (
    GsrRecord,
)
from pachinko.data.jar import (
    Jar,
)
from pachinko.exceptions import (
    EvaluationError,
)
from pachinko.pachinko_typing.custom import (
    JarKey,
)

from .roc import (
    RocCurve,
    auc,
    roc_curve,
)


logger = logging.getLogger(__name__)

OVERALL = 'overall'
TWEETS_ONLY = 'tweets_only'
LOCATION_TWEETS = 'location_tweets'
MONTH_TWEETS = 'month_tweets'
MONTH_LOCATION_TWEETS = 'month_location_tweets'

# model name -> strata scheme; the overall baseline ignores postings
MODEL_SCHEMES = OrderedDict([
    (OVERALL, None),
    (TWEETS_ONLY, NONE),
    (LOCATION_TWEETS, LOCATION),
    (MONTH_TWEETS, MONTH),
    (MONTH_LOCATION_TWEETS, LOCATION_MONTH),
])  # type: Dict[str, Optional[str]]


class Evaluation(NamedTuple):
    curve: RocCurve
    auc: float
    # city -> (curve, auc); cities with a single class are left out
    per_city: Dict[str, Tuple[RocCurve, float]]


def model_predictions(gsr: Sequence[GsrRecord],
                      jars: Mapping[JarKey, Jar],
                      mode: str,
                      r: float,
                      train_keys: Optional[Collection[JarKey]]=None,
                      models: Sequence[str]=tuple(MODEL_SCHEMES),
                      config: Dict[str, Any]=DEFAULT_CONFIG) -> Dict[str, List[PredictionRecord]]:
    predictions = OrderedDict()  # type: Dict[str, List[PredictionRecord]]
    for name in models:
        if name not in MODEL_SCHEMES:
            raise EvaluationError("Unknown model %r, expected one of %s" % (name, list(MODEL_SCHEMES)))
        scheme = MODEL_SCHEMES[name]
        if scheme is None:
            predictions[name] = baseline_predictions(gsr, jars, train_keys)
        else:
            predictions[name] = predict_all(
                gsr, jars, StrataSpec(scheme=scheme), mode, r, train_keys=train_keys, config=config,
            )
    return predictions


def aligned_labels(gsr: Sequence[GsrRecord],
                   predictions: Sequence[PredictionRecord]) -> Tuple[List[float], List[bool]]:
    truth = {record.key: record.event for record in gsr}
    scores = []
    labels = []
    for prediction in predictions:
        if prediction.key not in truth:
            raise EvaluationError("Prediction for %s %s has no GSR row" % prediction.key)
        scores.append(prediction.posterior_mean)
        labels.append(truth[prediction.key])
    return scores, labels


def evaluate_predictions(gsr: Sequence[GsrRecord],
                         predictions: Sequence[PredictionRecord],
                         keys: Optional[Collection[JarKey]]=None) -> Evaluation:
    """ROC and AUC overall and per city, optionally restricted to ``keys``."""
    selected = [p for p in predictions if keys is None or p.key in keys]
    scores, labels = aligned_labels(gsr, selected)
    curve = roc_curve(scores, labels)

    per_city = OrderedDict()  # type: Dict[str, Tuple[RocCurve, float]]
    for city in sorted({p.city for p in selected}):
        city_scores = [s for s, p in zip(scores, selected) if p.city == city]
        city_labels = [l for l, p in zip(labels, selected) if p.city == city]
        if all(city_labels) or not any(city_labels):
            logger.warning("Skipping ROC for %s: only one class among %d jars", city, len(city_labels))
            continue
        city_curve = roc_curve(city_scores, city_labels)
        per_city[city] = (city_curve, auc(city_curve))
    return Evaluation(curve=curve, auc=auc(curve), per_city=per_city)


def evaluate_models(gsr: Sequence[GsrRecord],
                    predictions_by_model: Mapping[str, Sequence[PredictionRecord]],
                    keys: Optional[Collection[JarKey]]=None) -> Dict[str, Evaluation]:
    evaluations = OrderedDict()  # type: Dict[str, Evaluation]
    for name, predictions in predictions_by_model.items():
        evaluations[name] = evaluate_predictions(gsr, predictions, keys)
        logger.info("%s: AUC %.4f", name, evaluations[name].auc)
    return evaluations


def split_jars(keys: Collection[JarKey],
               train_fraction: float=0.7,
               seed: int=0) -> Tuple[Set[JarKey], Set[JarKey]]:
    """Seeded random (train, test) split of jar keys."""
    if not 0 < train_fraction < 1:
        raise EvaluationError("train fraction must be in (0, 1), found %s" % train_fraction)
    ordered = sorted(keys)
    permutation = np.random.default_rng(seed).permutation(len(ordered))
    cut = int(round(train_fraction * len(ordered)))
    train = {ordered[i] for i in permutation[:cut]}
    test = {ordered[i] for i in permutation[cut:]}
    return train, test


def evaluate_split(gsr: Sequence[GsrRecord],
                   jars: Mapping[JarKey, Jar],
                   mode: str,
                   r: float,
                   train_fraction: float=0.7,
                   seed: int=0,
                   config: Dict[str, Any]=DEFAULT_CONFIG) -> Dict[str, Evaluation]:
    """
    Priors and strata from a random training share of the jars, scored on the
    held-out rest.
    """
    train_keys, test_keys = split_jars(list(jars), train_fraction, seed)
    predictions = model_predictions(gsr, jars, mode, r, train_keys=train_keys, config=config)
    return evaluate_models(gsr, predictions, keys=test_keys)
