import logging
from collections import Counter
from typing import (  # noqa: F401
    Any,
    Dict,
    Iterable,
    List,
    NamedTuple,
    Optional,
    Tuple,
)

from pachinko.data.city_gazetteer import (
    CityGazetteer,
)
from pachinko.data.config import (
    DEFAULT_CONFIG,
)
from pachinko.data.tweet_record import (
    TweetRecord,
)
from pachinko.utils.records import (
    replace,
)

from .geo import (
    find_city_matches,
    is_ambiguous,
)
from .temporal import (
    resolve_temporal,
)


logger = logging.getLogger(__name__)


class FilterReport(NamedTuple):
    presented: int
    kept: int
    # failed the location filter
    no_city: int
    # passed location, no future date reference
    no_future_date: int
    ambiguous: int
    per_city: Dict[str, int]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'presented': self.presented,
            'kept': self.kept,
            'no_city': self.no_city,
            'no_future_date': self.no_future_date,
            'ambiguous': self.ambiguous,
            'per_city': dict(sorted(self.per_city.items())),
        }


def filter_tweets(tweets: Iterable[TweetRecord],
                  gazetteer: CityGazetteer,
                  config: Dict[str, Any]=DEFAULT_CONFIG) -> Tuple[List[TweetRecord], FilterReport]:
    """
    Location and temporal filters applied together. Survivors carry
    ``matched_city``, ``ambiguous_city`` and ``resolved_target_dates``.
    """
    kept = []  # type: List[TweetRecord]
    presented = 0
    no_city = 0
    no_future_date = 0
    ambiguous = 0
    per_city = Counter({name: 0 for name in gazetteer.city_names})  # type: Counter

    for tweet in tweets:
        presented += 1
        matches = find_city_matches(tweet, gazetteer, config)
        if not matches:
            no_city += 1
            continue
        mentions = resolve_temporal(tweet.text, tweet.authored_at)
        if not mentions:
            no_future_date += 1
            continue
        city = matches[0][1]
        flagged = is_ambiguous(matches)
        if flagged:
            ambiguous += 1
            logger.debug(
                "Posting %s matches several cities %s; assigned to %s",
                tweet.id, sorted({name for _, name in matches}), city,
            )
        per_city[city] += 1
        kept.append(replace(
            tweet,
            matched_city=city,
            ambiguous_city=flagged,
            resolved_target_dates=frozenset(mention.resolved for mention in mentions),
        ))

    report = FilterReport(
        presented=presented,
        kept=len(kept),
        no_city=no_city,
        no_future_date=no_future_date,
        ambiguous=ambiguous,
        per_city=dict(per_city),
    )
    logger.info(
        "Filters kept %d of %d postings (%d without a city, %d without a future date)",
        report.kept, presented, no_city, no_future_date,
    )
    return kept, report


def apply_filters(tweets: Iterable[TweetRecord],
                  gazetteer: CityGazetteer,
                  config: Dict[str, Any]=DEFAULT_CONFIG) -> List[TweetRecord]:
    kept, _ = filter_tweets(tweets, gazetteer, config)
    return kept
