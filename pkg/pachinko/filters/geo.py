import math
import re
from typing import (  # noqa: F401
    Any,
    Dict,
    List,
    Optional,
    Pattern,
    Tuple,
)

from pachinko.data.city_gazetteer import (
    CityGazetteer,
    GazetteerCity,
)
from pachinko.data.config import (
    DEFAULT_CONFIG,
)
from pachinko.data.tweet_record import (
    TweetRecord,
)


LatLon = Tuple[float, float]

BIO = 'bio'
GEO = 'geo'
BODY = 'body'
# Criteria are tried in this order
CRITERIA = (BIO, GEO, BODY)


def haversine_miles(a: LatLon,
                    b: LatLon,
                    config: Dict[str, Any]=DEFAULT_CONFIG) -> float:
    """Great-circle distance between two (lat, lon) points in degrees."""
    lat1, lon1 = a
    lat2, lon2 = b
    phi1, phi2 = math.radians(lat1), math.radians(lat2)
    delta_phi = math.radians(lat2 - lat1)
    delta_lambda = math.radians(lon2 - lon1)

    h = math.sin(delta_phi / 2) ** 2 + math.cos(phi1) * math.cos(phi2) * math.sin(delta_lambda / 2) ** 2
    c = 2 * math.atan2(math.sqrt(h), math.sqrt(max(0.0, 1 - h)))
    return config['earth_radius_miles'] * c


_PATTERN_CACHE = {}  # type: Dict[Tuple[str, ...], Pattern[str]]


def name_pattern(city: GazetteerCity) -> Pattern[str]:
    names = tuple(city.names)
    if names not in _PATTERN_CACHE:
        # longest first so "Melbourne" wins over a prefix alias
        alternatives = '|'.join(re.escape(name) for name in sorted(names, key=len, reverse=True))
        _PATTERN_CACHE[names] = re.compile(r'\b(?:%s)\b' % alternatives, re.IGNORECASE)
    return _PATTERN_CACHE[names]


def mentions_city(text: Optional[str], city: GazetteerCity) -> bool:
    return bool(text) and name_pattern(city).search(text) is not None  # type: ignore


def find_city_matches(tweet: TweetRecord,
                      gazetteer: CityGazetteer,
                      config: Dict[str, Any]=DEFAULT_CONFIG) -> List[Tuple[str, str]]:
    """
    Every (criterion, city) pair satisfied by the posting, in criterion order
    then gazetteer order.
    """
    matches = []  # type: List[Tuple[str, str]]
    for city in gazetteer.cities:
        if mentions_city(tweet.bio_location, city):
            matches.append((BIO, city.name))
    if tweet.geo is not None:
        point = (tweet.geo.lat, tweet.geo.lon)
        for city in gazetteer.cities:
            if haversine_miles(point, (city.lat, city.lon), config) <= gazetteer.radius_miles:
                matches.append((GEO, city.name))
    for city in gazetteer.cities:
        if mentions_city(tweet.text, city):
            matches.append((BODY, city.name))
    return matches


def match_city(tweet: TweetRecord,
               gazetteer: CityGazetteer,
               config: Dict[str, Any]=DEFAULT_CONFIG) -> Optional[str]:
    matches = find_city_matches(tweet, gazetteer, config)
    if not matches:
        return None
    return matches[0][1]


def is_ambiguous(matches: List[Tuple[str, str]]) -> bool:
    return len({city for _, city in matches}) > 1
