import datetime
import logging
from typing import (  # noqa: F401
    Any,
    Dict,
    Iterable,
    List,
    Mapping,
    NamedTuple,
    Sequence,
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
from pachinko.data.tweet_record import (
    TweetRecord,
)
from pachinko.pachinko_typing.custom import (
    JarKey,
    TweetId,
)
from pachinko.utils.records import (
    replace,
)


logger = logging.getLogger(__name__)


class JarFill(NamedTuple):
    jars: Dict[JarKey, Jar]
    # (posting, target date) pairs with no jar to land in
    dropped: int
    # (posting, target date) pairs offered to the grid
    presented: int


def build_jar_grid(gsr: Iterable[GsrRecord]) -> Dict[JarKey, Jar]:
    """
    One empty jar per GSR row. Days missing from the GSR get no jar, so they
    are never mistaken for non-event days.
    """
    return {
        record.key: Jar(date=record.date, city=record.city, event=record.event)
        for record in gsr
    }


def lead_days(tweet: TweetRecord, target_date: datetime.date) -> int:
    return (target_date - tweet.authored_date).days


def drop_tweets_into_jars(tweets: Iterable[TweetRecord],
                          jars: Mapping[JarKey, Jar],
                          min_lead_days: int=0) -> JarFill:
    """
    Sort indicative postings into the grid. A posting referencing m dates lands
    in up to m jars. Only pairs authored at least ``min_lead_days`` before their
    target date are considered. The input grid is left untouched.
    """
    evidence = {key: list(jar.evidence) for key, jar in jars.items()}  # type: Dict[JarKey, List[TweetId]]
    dropped = 0
    presented = 0
    for tweet in tweets:
        if tweet.relevant is not True or tweet.matched_city is None:
            continue
        for target_date in sorted(tweet.resolved_target_dates):
            if lead_days(tweet, target_date) < min_lead_days:
                continue
            presented += 1
            key = JarKey(target_date, tweet.matched_city)
            if key in evidence:
                evidence[key].append(TweetId(tweet.id))
            else:
                dropped += 1

    if dropped:
        logger.info("Dropped %d of %d posting/date pairs with no matching jar", dropped, presented)
    filled = {
        key: replace(jar, evidence=evidence[key])
        for key, jar in jars.items()
    }
    return JarFill(jars=filled, dropped=dropped, presented=presented)


def coverage_gaps(gsr: Iterable[GsrRecord],
                  config: Dict[str, Any]=DEFAULT_CONFIG) -> List[JarKey]:
    """(date, city) pairs inside the study window that have no GSR row."""
    present = {record.key for record in gsr}
    gaps = []
    day = config['study_start']
    while day <= config['study_end']:
        for city in config['cities']:
            key = JarKey(day, city)
            if key not in present:
                gaps.append(key)
        day += datetime.timedelta(days=1)
    return gaps
