from typing import (  # noqa: F401
    Any,
    Callable,
    Dict,
)

from eth_utils import (
    ValidationError,
)

from pachinko.data.constants import (
    MONTH_ABBREVIATIONS,
)
from pachinko.pachinko_typing.custom import (
    JarKey,
    StrataKey,
)
from pachinko.utils.records import (
    Record,
)


NONE = 'none'
LOCATION = 'location'
MONTH = 'month'
LOCATION_MONTH = 'location_month'

SCHEMES = (NONE, LOCATION, MONTH, LOCATION_MONTH)

# N_k / E_k count jar-days, or indicative postings
DAYS = 'days'
TWEETS = 'tweets'
MODES = (DAYS, TWEETS)

ALL_STRATUM = StrataKey('all')


def month_key(key: JarKey) -> str:
    return MONTH_ABBREVIATIONS[key.date.month - 1]


EXTRACTORS = {
    NONE: lambda key: ALL_STRATUM,
    LOCATION: lambda key: StrataKey(key.city),
    MONTH: lambda key: StrataKey(month_key(key)),
    LOCATION_MONTH: lambda key: StrataKey('%s/%s' % (key.city, month_key(key))),
}  # type: Dict[str, Callable[[JarKey], StrataKey]]


def normalize_scheme(scheme: str) -> str:
    # the CLI spells it location-month
    normalized = scheme.replace('-', '_')
    if normalized not in SCHEMES:
        raise ValidationError(
            "Unknown strata scheme:\n\tFound: %r, Expected one of: %s" % (scheme, ', '.join(SCHEMES))
        )
    return normalized


def validate_mode(mode: str) -> str:
    if mode not in MODES:
        raise ValidationError(
            "Unknown counts mode:\n\tFound: %r, Expected one of: %s" % (mode, ', '.join(MODES))
        )
    return mode


class StrataSpec(Record):
    fields = {
        # One of SCHEMES
        'scheme': 'str',
    }

    def __init__(self, **kwargs: Any) -> None:
        if 'scheme' in kwargs:
            kwargs['scheme'] = normalize_scheme(kwargs['scheme'])
        super().__init__(**kwargs)

    def key_for(self, key: JarKey) -> StrataKey:
        return EXTRACTORS[self.scheme](key)


class StrataCounts(Record):
    fields = {
        'key': 'str',
        # trials: jar-days, or indicative postings
        'n': 'int',
        # successes: event days, or postings on event days
        'e': 'int',
    }

    def __init__(self, **kwargs: Any) -> None:
        super().__init__(**kwargs)
        if not 0 <= self.e <= self.n:
            raise ValidationError(
                "Stratum %s needs 0 <= E_k <= N_k:\n\tFound: N_k=%s, E_k=%s" % (
                    self.key, self.n, self.e,
                )
            )
