"""
Synthetic study data with a planted signal: Bernoulli events per (day, city)
and negative binomial counts of indicative postings that reference each day.
"""
import datetime
import json
import logging
from pathlib import Path
from typing import (  # noqa: F401
    Any,
    Dict,
    List,
    NamedTuple,
    Tuple,
    Union,
)

from eth_utils import (
    ValidationError,
)
import numpy as np
import pandas as pd

from pachinko.data.city_gazetteer import (
    get_default_gazetteer,
)
from pachinko.data.config import (
    DEFAULT_CONFIG,
)
from pachinko.data.constants import (
    STUDY_CITIES,
    STUDY_START,
)
from pachinko.data.gsr_record import (
    GsrRecord,
)
from pachinko.data.io import (
    write_csv,
    write_gazetteer,
    write_gsr,
    write_tweets,
)
from pachinko.data.tweet_record import (
    TweetRecord,
)
from pachinko.exceptions import (
    ParseError,
)
from pachinko.utils.records import (
    Record,
    from_dict,
)


logger = logging.getLogger(__name__)

PathLike = Union[str, Path]

# Texts only name the city and a day-month date; nothing else the
# temporal tagger would pick up.
INDICATIVE_TEMPLATES = (
    "protest rally planned in {city} {when} join us",
    "students walk out and rally in {city} {when}",
    "union strike and picket line in {city} {when}",
    "demonstration against the bill in {city} {when} bring placards",
    "blockade of parliament in {city} {when} show up",
    "climate activists rally in {city} {when} be there",
)
DISTRACTOR_TEMPLATES = (
    "great concert in {city} {when} cannot wait",
    "farmers market in {city} {when} fresh bread",
    "footy final in {city} {when} go team",
    "brunch with friends in {city} {when}",
    "food festival in {city} {when} free entry",
    "new cafe opening in {city} {when}",
)
LOCAL_OFFSET = datetime.timezone(datetime.timedelta(hours=10))


class SyntheticScenario(Record):
    fields = {
        'cities': ['str'],
        # Event probability for every city, unless city_p_event overrides it
        'p_event': 'float',
        'city_p_event': 'json',
        # Indicative postings per jar ~ NB(mu, r)
        'mu_event': 'float',
        'mu_nonevent': 'float',
        'r': 'float',
        'start': 'date',
        'days': 'int',
        # Days between authoring and the referenced day, drawn uniformly
        'lead_days': ['int'],
        # Mean number of non-indicative postings per jar
        'distractor_rate': 'float',
        # Labelled documents in the training corpus, half of each class
        'corpus_size': 'int',
        'seed': 'int',
    }

    defaults = {
        'cities': list(STUDY_CITIES),
        'p_event': 0.136,
        'city_p_event': {},
        'mu_event': 40.0,
        'mu_nonevent': 2.0,
        'r': 5.0,
        'start': STUDY_START,
        'days': 200,
        'lead_days': [0, 1, 2, 3, 4, 5, 6, 7],
        'distractor_rate': 1.0,
        'corpus_size': 400,
        'seed': 0,
    }  # type: Dict[str, Any]

    def event_probability(self, city: str) -> float:
        return float(self.city_p_event.get(city, self.p_event))


class SyntheticData(NamedTuple):
    gsr: List[GsrRecord]
    tweets: List[TweetRecord]
    corpus_texts: List[str]
    corpus_labels: List[bool]


class SyntheticPaths(NamedTuple):
    gsr: Path
    tweets: Path
    corpus: Path
    gazetteer: Path


def validate_scenario(scenario: SyntheticScenario, config: Dict[str, Any]=DEFAULT_CONFIG) -> None:
    if not scenario.mu_event > scenario.mu_nonevent > 0:
        raise ValidationError(
            "Scenario needs mu_event > mu_nonevent > 0:\n"
            "\tFound: mu_event=%s, mu_nonevent=%s" % (scenario.mu_event, scenario.mu_nonevent)
        )
    if not scenario.r > 0:
        raise ValidationError("Scenario dispersion r must be positive, found %s" % scenario.r)
    for city in scenario.cities:
        if city not in config['cities']:
            raise ValidationError("Scenario city %r is not a configured city" % city)
        p = scenario.event_probability(city)
        if not 0 <= p < 1:
            raise ValidationError("Event probability for %s must be in [0, 1), found %s" % (city, p))
    last = scenario.start + datetime.timedelta(days=scenario.days - 1)
    if scenario.days < 1 or scenario.start < config['study_start'] or last > config['study_end']:
        raise ValidationError(
            "Scenario days must lie inside the study window:\n"
            "\tFound: %s .. %s, Expected within: %s .. %s" % (
                scenario.start, last, config['study_start'], config['study_end'],
            )
        )
    if not scenario.lead_days or min(scenario.lead_days) < 0:
        raise ValidationError("lead_days must be a non-empty list of non-negative days")
    if scenario.distractor_rate < 0 or scenario.corpus_size < 2:
        raise ValidationError("distractor_rate must be >= 0 and corpus_size >= 2")


def load_scenario(path: PathLike) -> SyntheticScenario:
    with open(str(path), encoding='utf-8') as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as exc:
            raise ParseError("invalid JSON: %s" % exc.msg, path=str(path), line=exc.lineno) from exc
    unknown = sorted(set(data) - set(SyntheticScenario.fields)) if isinstance(data, dict) else []
    if unknown:
        raise ParseError("unknown scenario keys %s" % unknown, path=str(path))
    try:
        return from_dict(SyntheticScenario, data)
    except (AssertionError, TypeError, ValueError) as exc:
        raise ParseError(str(exc), path=str(path)) from exc


def date_phrase(target: datetime.date, lead: int) -> str:
    if lead == 0:
        return "today"
    elif lead == 1:
        return "tomorrow"
    return "on %d %s" % (target.day, target.strftime('%B'))


def negative_binomial(rng: np.random.Generator, mu: float, r: float) -> int:
    # numpy counts failures before the r-th success, with mean r (1 - p) / p
    return int(rng.negative_binomial(r, r / (r + mu)))


def make_posting(rng: np.random.Generator,
                 tweet_id: str,
                 templates: Tuple[str, ...],
                 city: str,
                 target: datetime.date,
                 lead_days: List[int]) -> TweetRecord:
    lead = int(lead_days[rng.integers(len(lead_days))])
    template = templates[rng.integers(len(templates))]
    authored_date = target - datetime.timedelta(days=lead)
    authored_at = datetime.datetime.combine(
        authored_date,
        datetime.time(int(rng.integers(7, 22)), int(rng.integers(60))),
        tzinfo=LOCAL_OFFSET,
    )
    return TweetRecord(
        id=tweet_id,
        text=template.format(city=city, when=date_phrase(target, lead)),
        authored_at=authored_at,
        bio_location=city,
    )


def make_corpus(rng: np.random.Generator, scenario: SyntheticScenario) -> Tuple[List[str], List[bool]]:
    texts = []  # type: List[str]
    labels = []  # type: List[bool]
    for i in range(scenario.corpus_size):
        positive = i % 2 == 0
        templates = INDICATIVE_TEMPLATES if positive else DISTRACTOR_TEMPLATES
        city = scenario.cities[rng.integers(len(scenario.cities))]
        target = scenario.start + datetime.timedelta(days=int(rng.integers(scenario.days)))
        lead = int(rng.integers(8))
        texts.append(templates[rng.integers(len(templates))].format(
            city=city, when=date_phrase(target, lead),
        ))
        labels.append(positive)
    return texts, labels


def generate_records(scenario: SyntheticScenario,
                     config: Dict[str, Any]=DEFAULT_CONFIG) -> SyntheticData:
    validate_scenario(scenario, config)
    rng = np.random.default_rng(scenario.seed)
    gsr = []  # type: List[GsrRecord]
    tweets = []  # type: List[TweetRecord]
    for offset in range(scenario.days):
        day = scenario.start + datetime.timedelta(days=offset)
        for city in scenario.cities:
            event = bool(rng.random() < scenario.event_probability(city))
            gsr.append(GsrRecord(date=day, city=city, event=event))
            mu = scenario.mu_event if event else scenario.mu_nonevent
            indicative = negative_binomial(rng, mu, scenario.r)
            distractors = int(rng.poisson(scenario.distractor_rate))
            for templates, count in ((INDICATIVE_TEMPLATES, indicative),
                                     (DISTRACTOR_TEMPLATES, distractors)):
                for _ in range(count):
                    tweet_id = 't%07d' % (len(tweets) + 1)
                    tweets.append(make_posting(
                        rng, tweet_id, templates, city, day, scenario.lead_days,
                    ))

    texts, labels = make_corpus(rng, scenario)
    logger.info(
        "Generated %d GSR rows (%d events) and %d postings",
        len(gsr), sum(g.event for g in gsr), len(tweets),
    )
    return SyntheticData(gsr=gsr, tweets=tweets, corpus_texts=texts, corpus_labels=labels)


def write_corpus(texts: List[str], labels: List[bool], path: PathLike) -> None:
    frame = pd.DataFrame({'text': texts, 'label': [int(label) for label in labels]})
    write_csv(frame, path)


def generate_synthetic(scenario: SyntheticScenario,
                       out_dir: PathLike,
                       config: Dict[str, Any]=DEFAULT_CONFIG) -> SyntheticPaths:
    data = generate_records(scenario, config)
    out = Path(out_dir)
    paths = SyntheticPaths(
        gsr=out / 'gsr.csv',
        tweets=out / 'tweets.jsonl',
        corpus=out / 'corpus.csv',
        gazetteer=out / 'gazetteer.json',
    )
    write_gsr(data.gsr, paths.gsr)
    write_tweets(data.tweets, paths.tweets)
    write_corpus(data.corpus_texts, data.corpus_labels, paths.corpus)
    write_gazetteer(get_default_gazetteer(config['radius_miles']), paths.gazetteer)
    return paths
