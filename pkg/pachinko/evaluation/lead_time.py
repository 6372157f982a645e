import logging
from typing import (  # noqa: F401
    Any,
    Dict,
    Iterable,
    List,
    Sequence,
)

from pachinko.bayes.engine import (
    predict_all,
)
from pachinko.bayes.strata import (
    StrataSpec,
)
from pachinko.data.config import (
    DEFAULT_CONFIG,
)
from pachinko.data.gsr_record import (
    GsrRecord,
)
from pachinko.data.jar_grid import (
    build_jar_grid,
    drop_tweets_into_jars,
)
from pachinko.data.tweet_record import (
    TweetRecord,
)
from pachinko.utils.records import (
    Record,
)

from .models import (
    evaluate_predictions,
)


logger = logging.getLogger(__name__)


class LeadTimeResult(Record):
    fields = {
        # Only postings authored at least n days ahead were used
        'n': 'int',
        'auc': 'float',
        # Posting/date pairs that landed in a jar
        'tweets': 'int',
    }


def pipeline_auc(gsr: Sequence[GsrRecord],
                 tweets: Sequence[TweetRecord],
                 spec: StrataSpec,
                 mode: str,
                 r: float,
                 min_lead_days: int=0,
                 config: Dict[str, Any]=DEFAULT_CONFIG) -> LeadTimeResult:
    """Jar fill, prediction and AUC from scratch using postings at least ``min_lead_days`` ahead."""
    fill = drop_tweets_into_jars(tweets, build_jar_grid(gsr), min_lead_days=min_lead_days)
    predictions = predict_all(gsr, fill.jars, spec, mode, r, config=config)
    evaluation = evaluate_predictions(gsr, predictions)
    return LeadTimeResult(
        n=min_lead_days,
        auc=evaluation.auc,
        tweets=fill.presented - fill.dropped,
    )


def lead_time_auc(gsr: Sequence[GsrRecord],
                  tweets: Iterable[TweetRecord],
                  spec: StrataSpec,
                  mode: str,
                  r: float,
                  n_range: Iterable[int]=range(0, 31),
                  config: Dict[str, Any]=DEFAULT_CONFIG) -> List[LeadTimeResult]:
    gsr = list(gsr)
    tweets = list(tweets)
    results = []
    for n in n_range:
        if n < 0:
            raise ValueError("lead time must be non-negative, got %d" % n)
        result = pipeline_auc(gsr, tweets, spec, mode, r, min_lead_days=n, config=config)
        logger.debug("n=%d: AUC %.4f from %d postings", n, result.auc, result.tweets)
        results.append(result)
    return results
