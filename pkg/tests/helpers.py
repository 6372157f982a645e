import datetime
from collections import defaultdict
from typing import (  # noqa: F401
    Any,
    Dict,
    List,
    Mapping,
    Tuple,
)

from pachinko.cli.synthetic import (
    SyntheticScenario,
    generate_records,
)
from pachinko.data.constants import (
    STUDY_CITIES,
    STUDY_END,
    STUDY_START,
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
from pachinko.filters.filtering import (
    filter_tweets,
)
from pachinko.utils.records import (
    parse_datetime,
    replace,
)

STUDY_MONTHS = ((2017, 7), (2017, 8), (2017, 9), (2017, 10),
                (2017, 11), (2017, 12), (2018, 1), (2018, 2))

# Event days per city and month, Jul 2017 .. Feb 2018
STUDY_EVENTS = {
    'Adelaide': (1, 2, 2, 2, 3, 1, 1, 0),
    'Brisbane': (2, 7, 7, 6, 7, 4, 3, 1),
    'Canberra': (2, 5, 5, 5, 5, 2, 2, 1),
    'Darwin': (0, 1, 1, 1, 1, 1, 0, 0),
    'Hobart': (1, 2, 2, 2, 2, 1, 1, 0),
    'Melbourne': (4, 10, 10, 10, 11, 5, 5, 2),
    'Perth': (2, 6, 6, 5, 7, 2, 2, 0),
    'Sydney': (2, 8, 8, 9, 11, 4, 4, 1),
}

# Days without a GSR row
STUDY_GAPS = {
    ('Adelaide', datetime.date(2017, 7, 21)),
    ('Adelaide', datetime.date(2017, 7, 22)),
    ('Adelaide', datetime.date(2017, 7, 23)),
    ('Canberra', datetime.date(2017, 7, 21)),
    ('Canberra', datetime.date(2017, 7, 22)),
    ('Canberra', datetime.date(2017, 7, 23)),
    ('Darwin', datetime.date(2017, 7, 21)),
    ('Hobart', datetime.date(2017, 7, 21)),
    ('Hobart', datetime.date(2017, 7, 22)),
}


def study_days() -> List[datetime.date]:
    days = []
    day = STUDY_START
    while day <= STUDY_END:
        days.append(day)
        day += datetime.timedelta(days=1)
    return days


def build_study_gsr() -> List[GsrRecord]:
    """
    1663 rows with 226 events whose city and month margins match the
    published study tables. Events sit on the first days of each cell.
    """
    by_cell = defaultdict(list)  # type: Dict[Any, List[datetime.date]]
    for city in STUDY_CITIES:
        for day in study_days():
            if (city, day) not in STUDY_GAPS:
                by_cell[(city, (day.year, day.month))].append(day)

    gsr = []
    for city in STUDY_CITIES:
        for month_index, month in enumerate(STUDY_MONTHS):
            days = by_cell[(city, month)]
            events = STUDY_EVENTS[city][month_index]
            for i, day in enumerate(days):
                gsr.append(GsrRecord(date=day, city=city, event=i < events))
    return sorted(gsr, key=lambda record: record.key)


def make_tweet(id: str='t1',
               text: str='',
               authored_at: str='2018-01-02T09:00:00+11:00',
               **kwargs: Any) -> TweetRecord:
    return TweetRecord(id=id, text=text, authored_at=parse_datetime(authored_at), **kwargs)


def make_jars(gsr: List[GsrRecord], counts: Mapping[Any, int]=None) -> Dict[Any, Jar]:
    """One jar per GSR row with ``counts[key]`` placeholder evidence ids."""
    counts = counts or {}
    jars = {}
    for record in gsr:
        n = counts.get(record.key, 0)
        jars[record.key] = Jar(
            date=record.date,
            city=record.city,
            event=record.event,
            evidence=['%s-%s-%d' % (record.date.isoformat(), record.city, i) for i in range(n)],
        )
    return jars


def indicative_synthetic(scenario: SyntheticScenario,
                         gazetteer: Any,
                         config: Dict[str, Any]) -> Tuple[List[GsrRecord], List[TweetRecord]]:
    """
    Synthetic GSR and its postings after the filters, every survivor marked
    relevant. Meant for scenarios without distractors.
    """
    data = generate_records(scenario, config)
    kept, _ = filter_tweets(data.tweets, gazetteer, config)
    return data.gsr, [replace(tweet, relevant=True) for tweet in kept]
