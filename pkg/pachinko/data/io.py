import datetime
import json
import logging
import re
from pathlib import Path
from typing import (  # noqa: F401
    Any,
    Dict,
    Iterable,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
    Union,
)

from eth_utils import (
    ValidationError,
)
import pandas as pd

from pachinko.data.city_gazetteer import (
    CityGazetteer,
    GazetteerCity,
    get_default_gazetteer,
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
    GeoPoint,
    TweetRecord,
)
from pachinko.exceptions import (
    DuplicateKeyError,
    ParseError,
)
from pachinko.pachinko_typing.custom import (
    JarKey,
)
from pachinko.utils.floats import (
    FLOAT_FORMAT,
)
from pachinko.utils.records import (
    parse_datetime,
    to_dict,
)


logger = logging.getLogger(__name__)

PathLike = Union[str, Path]

GSR_COLUMNS = ('date', 'city', 'event', 'headline', 'violent')
JAR_COLUMNS = ('date', 'city', 'event', 'indicative_count', 'evidence_ids')
TRUE_STRINGS = {'1', 'true', 't', 'yes', 'y'}
FALSE_STRINGS = {'0', 'false', 'f', 'no', 'n'}


#
# CSV helpers
#
def read_csv_strings(path: PathLike, required: Sequence[str]) -> pd.DataFrame:
    """
    Read a CSV with every cell as a string. Missing required columns and
    tokenizer errors are reported as ParseError naming the file and line.
    """
    path = str(path)
    try:
        frame = pd.read_csv(path, dtype=str, keep_default_na=False, skipinitialspace=True)
    except pd.errors.EmptyDataError as exc:
        raise ParseError("file is empty, expected a header row", path=path, line=1) from exc
    except pd.errors.ParserError as exc:
        match = re.search(r'line (\d+)', str(exc))
        raise ParseError(
            "malformed CSV: %s" % exc,
            path=path,
            line=int(match.group(1)) if match else None,
        ) from exc
    missing = [column for column in required if column not in frame.columns]
    if missing:
        raise ParseError("missing columns %s in header" % missing, path=path, line=1)
    return frame


def write_csv(frame: pd.DataFrame, path: PathLike) -> None:
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    frame.to_csv(str(path), index=False, float_format=FLOAT_FORMAT, lineterminator='\n')


def write_json(data: Any, path: PathLike) -> None:
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    with open(str(path), 'w', encoding='utf-8', newline='\n') as f:
        json.dump(to_dict(data), f, indent=2, sort_keys=True)
        f.write('\n')


def read_json(path: PathLike) -> Any:
    with open(str(path), encoding='utf-8') as f:
        try:
            return json.load(f)
        except json.JSONDecodeError as exc:
            raise ParseError("invalid JSON: %s" % exc.msg, path=str(path), line=exc.lineno) from exc


def parse_bool(value: str) -> bool:
    lowered = value.strip().lower()
    if lowered in TRUE_STRINGS:
        return True
    elif lowered in FALSE_STRINGS:
        return False
    raise ValueError("not a boolean: %r" % value)


def parse_optional_bool(value: str) -> Optional[bool]:
    return None if value.strip() == '' else parse_bool(value)


def csv_line(row_index: int) -> int:
    # header is line 1
    return row_index + 2


#
# GSR
#
def validate_gsr_record(record: GsrRecord, config: Dict[str, Any]=DEFAULT_CONFIG) -> None:
    if not config['study_start'] <= record.date <= config['study_end']:
        raise ValidationError(
            "GSR date outside the study window:\n"
            "\tFound: %s, Expected: %s..%s" % (
                record.date, config['study_start'], config['study_end'],
            )
        )
    if record.city not in config['cities']:
        raise ValidationError(
            "GSR city not configured:\n"
            "\tFound: %r, Expected one of: %s" % (record.city, ', '.join(config['cities']))
        )


def load_gsr(path: PathLike, config: Dict[str, Any]=DEFAULT_CONFIG) -> List[GsrRecord]:
    frame = read_csv_strings(path, required=('date', 'city', 'event'))
    records = []  # type: List[GsrRecord]
    seen = {}  # type: Dict[JarKey, int]
    for row_index, row in enumerate(frame.to_dict('records')):
        line = csv_line(row_index)
        try:
            record = GsrRecord(
                date=datetime.date.fromisoformat(row['date'].strip()),
                city=row['city'].strip(),
                event=parse_bool(row['event']),
                headline=row.get('headline') or None,
                violent=parse_optional_bool(row.get('violent', '')),
            )
        except ValueError as exc:
            raise ParseError(str(exc), path=str(path), line=line) from exc
        try:
            validate_gsr_record(record, config)
        except ValidationError as exc:
            raise ParseError(str(exc), path=str(path), line=line) from exc
        if record.key in seen:
            raise DuplicateKeyError(
                "%s:%d: duplicate GSR row for %s %s (first seen on line %d)" % (
                    path, line, record.date, record.city, seen[record.key],
                )
            )
        seen[record.key] = line
        records.append(record)
    logger.info("Loaded %d GSR rows from %s", len(records), path)
    return records


def gsr_totals(gsr: Iterable[GsrRecord]) -> Tuple[int, int]:
    """(event rows, all rows)"""
    events = 0
    rows = 0
    for record in gsr:
        rows += 1
        events += int(record.event)
    return events, rows


def write_gsr(gsr: Sequence[GsrRecord], path: PathLike) -> None:
    frame = pd.DataFrame(
        [
            {
                'date': record.date.isoformat(),
                'city': record.city,
                'event': int(record.event),
                'headline': record.headline or '',
                'violent': '' if record.violent is None else int(record.violent),
            }
            for record in gsr
        ],
        columns=list(GSR_COLUMNS),
    )
    write_csv(frame, path)


#
# Tweets
#
def validate_tweet_record(tweet: TweetRecord) -> None:
    if tweet.authored_at.tzinfo is None or tweet.authored_at.utcoffset() is None:
        raise ValidationError(
            "authored_at must carry an explicit UTC offset:\n"
            "\tFound: %s" % tweet.authored_at.isoformat()
        )
    if tweet.geo is not None:
        if not -90.0 <= tweet.geo.lat <= 90.0:
            raise ValidationError("latitude out of range [-90, 90]: %s" % tweet.geo.lat)
        if not -180.0 <= tweet.geo.lon <= 180.0:
            raise ValidationError("longitude out of range [-180, 180]: %s" % tweet.geo.lon)
    past = [d for d in tweet.resolved_target_dates if d < tweet.authored_date]
    if past:
        raise ValidationError(
            "resolved target dates precede the authoring date %s: %s" % (
                tweet.authored_date, sorted(past),
            )
        )


def tweet_from_json(data: Mapping[str, Any]) -> TweetRecord:
    for key in ('id', 'text', 'authored_at'):
        if key not in data:
            raise ValidationError("missing required key %r" % key)
    geo = data.get('geo')
    if geo is not None and ('lat' not in geo or 'lon' not in geo):
        raise ValidationError("geo requires both 'lat' and 'lon'")
    try:
        if geo is not None:
            geo = GeoPoint(lat=float(geo['lat']), lon=float(geo['lon']))
        authored_at = parse_datetime(str(data['authored_at']))
        resolved = frozenset(
            datetime.date.fromisoformat(value)
            for value in data.get('resolved_target_dates') or ()
        )
    except ValueError as exc:
        raise ValidationError(str(exc)) from exc
    return TweetRecord(
        id=str(data['id']),
        text=str(data['text']),
        authored_at=authored_at,
        geo=geo,
        bio_location=data.get('bio_location'),
        resolved_target_dates=resolved,
        matched_city=data.get('matched_city'),
        ambiguous_city=bool(data.get('ambiguous_city', False)),
        relevant=data.get('relevant'),
    )


def load_tweets(path: PathLike) -> List[TweetRecord]:
    tweets = []  # type: List[TweetRecord]
    seen = {}  # type: Dict[str, int]
    with open(str(path), 'rb') as f:
        for line_number, raw in enumerate(f, start=1):
            try:
                line = raw.decode('utf-8')
            except UnicodeDecodeError as exc:
                raise ParseError(
                    "invalid UTF-8 at byte %d" % exc.start, path=str(path), line=line_number,
                ) from exc
            if not line.strip():
                continue
            try:
                data = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ParseError("invalid JSON: %s" % exc.msg, path=str(path), line=line_number) from exc
            try:
                tweet = tweet_from_json(data)
                validate_tweet_record(tweet)
            except (ValidationError, TypeError) as exc:
                raise ParseError(str(exc), path=str(path), line=line_number) from exc
            if tweet.id in seen:
                raise DuplicateKeyError(
                    "%s:%d: duplicate tweet id %r (first seen on line %d)" % (
                        path, line_number, tweet.id, seen[tweet.id],
                    )
                )
            seen[tweet.id] = line_number
            tweets.append(tweet)
    logger.info("Loaded %d tweets from %s", len(tweets), path)
    return tweets


def write_tweets(tweets: Iterable[TweetRecord], path: PathLike) -> None:
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    with open(str(path), 'w', encoding='utf-8', newline='\n') as f:
        for tweet in tweets:
            f.write(json.dumps(to_dict(tweet), sort_keys=True, ensure_ascii=False))
            f.write('\n')


#
# Gazetteer
#
def validate_gazetteer(gazetteer: CityGazetteer, config: Dict[str, Any]=DEFAULT_CONFIG) -> None:
    if not gazetteer.radius_miles > 0:
        raise ValidationError("radius_miles must be positive: %s" % gazetteer.radius_miles)
    names = gazetteer.city_names
    if len(set(names)) != len(names):
        raise ValidationError("gazetteer city names must be unique: %s" % names)
    missing = [city for city in config['cities'] if city not in names]
    if missing:
        raise ValidationError(
            "gazetteer is missing configured cities:\n\tMissing: %s" % ', '.join(missing)
        )
    for city in gazetteer.cities:
        if not (-90.0 <= city.lat <= 90.0 and -180.0 <= city.lon <= 180.0):
            raise ValidationError("centre of %s out of range: (%s, %s)" % (
                city.name, city.lat, city.lon,
            ))


def load_gazetteer(path: Optional[PathLike]=None,
                   config: Dict[str, Any]=DEFAULT_CONFIG) -> CityGazetteer:
    if path is None:
        gazetteer = get_default_gazetteer(config['radius_miles'])
    else:
        with open(str(path), encoding='utf-8') as f:
            try:
                data = json.load(f)
            except json.JSONDecodeError as exc:
                raise ParseError("invalid JSON: %s" % exc.msg, path=str(path), line=exc.lineno) from exc
        if isinstance(data, list):
            data = {'cities': data}
        gazetteer = CityGazetteer(
            cities=[
                GazetteerCity(
                    name=str(entry['name']),
                    aliases=[str(alias) for alias in entry.get('aliases', [])],
                    lat=float(entry['lat']),
                    lon=float(entry['lon']),
                )
                for entry in data['cities']
            ],
            radius_miles=float(data.get('radius_miles', config['radius_miles'])),
        )
    validate_gazetteer(gazetteer, config)
    return gazetteer


def write_gazetteer(gazetteer: CityGazetteer, path: PathLike) -> None:
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    with open(str(path), 'w', encoding='utf-8', newline='\n') as f:
        json.dump(to_dict(gazetteer), f, indent=2, sort_keys=True)
        f.write('\n')


#
# Jar grid
#
def write_jars(jars: Mapping[JarKey, Jar], path: PathLike) -> None:
    frame = pd.DataFrame(
        [
            {
                'date': jar.date.isoformat(),
                'city': jar.city,
                'event': int(jar.event),
                'indicative_count': jar.indicative_count,
                'evidence_ids': ';'.join(jar.evidence),
            }
            for _, jar in sorted(jars.items())
        ],
        columns=list(JAR_COLUMNS),
    )
    write_csv(frame, path)


def load_jars(path: PathLike) -> Dict[JarKey, Jar]:
    frame = read_csv_strings(path, required=JAR_COLUMNS)
    jars = {}  # type: Dict[JarKey, Jar]
    for row_index, row in enumerate(frame.to_dict('records')):
        line = csv_line(row_index)
        try:
            evidence = [tweet_id for tweet_id in row['evidence_ids'].split(';') if tweet_id]
            jar = Jar(
                date=datetime.date.fromisoformat(row['date'].strip()),
                city=row['city'].strip(),
                event=parse_bool(row['event']),
                evidence=evidence,
            )
            count = int(row['indicative_count'])
        except ValueError as exc:
            raise ParseError(str(exc), path=str(path), line=line) from exc
        if count != jar.indicative_count:
            raise ParseError(
                "indicative_count %d does not match %d evidence ids" % (
                    count, jar.indicative_count,
                ),
                path=str(path),
                line=line,
            )
        if jar.key in jars:
            raise DuplicateKeyError("%s:%d: duplicate jar %s" % (path, line, jar.key))
        jars[jar.key] = jar
    return jars
