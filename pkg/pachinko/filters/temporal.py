"""
Rule-based tagger for English date expressions in short postings.

Only references to the authoring day or later are returned; anything that
resolves to the past is discarded.
"""
import datetime
import re
from typing import (  # noqa: F401
    Callable,
    Dict,
    List,
    Match,
    Optional,
    Tuple,
)

from .temporal_mention import (
    EXPLICIT_DATE,
    MONTH_DAY,
    RELATIVE_DAY,
    RELATIVE_WEEK,
    WEEKDAY,
    TemporalMention,
)


WEEKDAY_NAMES = (
    'monday', 'tuesday', 'wednesday', 'thursday', 'friday', 'saturday', 'sunday',
)
MONTH_NAMES = {
    'january': 1, 'jan': 1,
    'february': 2, 'feb': 2,
    'march': 3, 'mar': 3,
    'april': 4, 'apr': 4,
    'may': 5,
    'june': 6, 'jun': 6,
    'july': 7, 'jul': 7,
    'august': 8, 'aug': 8,
    'september': 9, 'sept': 9, 'sep': 9,
    'october': 10, 'oct': 10,
    'november': 11, 'nov': 11,
    'december': 12, 'dec': 12,
}
RELATIVE_DAYS = {
    'today': 0,
    'tonight': 0,
    'tomorrow': 1,
    'tmrw': 1,
}
# leap day may need up to eight years to come round again
MAX_YEAR_LOOKAHEAD = 8

_MONTHS = '|'.join(sorted(MONTH_NAMES, key=len, reverse=True))
_WEEKDAYS = '|'.join(WEEKDAY_NAMES)
_ORDINAL = r'(?:st|nd|rd|th)?'

EXPRESSION = re.compile(
    r'\b(?:'
    r'(?P<iso>(?P<iso_y>\d{4})-(?P<iso_m>\d{1,2})-(?P<iso_d>\d{1,2}))'
    r'|(?P<num>(?P<num_d>\d{1,2})/(?P<num_m>\d{1,2})(?:/(?P<num_y>\d{4}|\d{2}))?)'
    r'|(?P<dm>(?P<dm_d>\d{1,2})' + _ORDINAL + r'(?:\s+of)?\s+(?P<dm_m>' + _MONTHS + r')\.?'
    r'(?:,?\s+(?P<dm_y>\d{4}))?)'
    r'|(?P<md>(?P<md_m>' + _MONTHS + r')\.?\s+(?P<md_d>\d{1,2})' + _ORDINAL +
    r'(?:,?\s+(?P<md_y>\d{4}))?)'
    r'|(?P<next_week>next\s+week)'
    r'|(?P<rel_wd>(?P<rel>this|next)\s+(?P<rel_wd_name>' + _WEEKDAYS + r'))'
    r'|(?P<wd>' + _WEEKDAYS + r')'
    r'|(?P<rel_day>' + '|'.join(RELATIVE_DAYS) + r')'
    r')\b',
    re.IGNORECASE,
)


def safe_date(year: int, month: int, day: int) -> Optional[datetime.date]:
    try:
        return datetime.date(year, month, day)
    except ValueError:
        return None


def next_month_day(month: int, day: int, today: datetime.date) -> Optional[datetime.date]:
    """First occurrence of month/day on or after ``today``."""
    for year in range(today.year, today.year + MAX_YEAR_LOOKAHEAD + 1):
        candidate = safe_date(year, month, day)
        if candidate is not None and candidate >= today:
            return candidate
    return None


def next_weekday(weekday: int, today: datetime.date) -> datetime.date:
    """First occurrence strictly after ``today``."""
    delta = (weekday - today.weekday()) % 7 or 7
    return today + datetime.timedelta(days=delta)


def this_weekday(weekday: int, today: datetime.date) -> Optional[datetime.date]:
    """The weekday within today's Monday-Sunday week, unless already past."""
    monday = today - datetime.timedelta(days=today.weekday())
    candidate = monday + datetime.timedelta(days=weekday)
    return candidate if candidate >= today else None


def expand_year(text: str) -> int:
    year = int(text)
    return 2000 + year if len(text) == 2 else year


def resolve_match(match: Match, today: datetime.date) -> Tuple[str, Optional[datetime.date]]:
    group = match.group
    if group('iso'):
        return EXPLICIT_DATE, safe_date(int(group('iso_y')), int(group('iso_m')), int(group('iso_d')))
    elif group('num'):
        # day first
        day, month = int(group('num_d')), int(group('num_m'))
        if group('num_y'):
            return EXPLICIT_DATE, safe_date(expand_year(group('num_y')), month, day)
        return MONTH_DAY, next_month_day(month, day, today)
    elif group('dm') or group('md'):
        prefix = 'dm' if group('dm') else 'md'
        month = MONTH_NAMES[group(prefix + '_m').lower()]
        day = int(group(prefix + '_d'))
        year = group(prefix + '_y')
        if year:
            return EXPLICIT_DATE, safe_date(int(year), month, day)
        return MONTH_DAY, next_month_day(month, day, today)
    elif group('next_week'):
        return RELATIVE_WEEK, today + datetime.timedelta(days=7)
    elif group('rel_wd'):
        weekday = WEEKDAY_NAMES.index(group('rel_wd_name').lower())
        if group('rel').lower() == 'this':
            return WEEKDAY, this_weekday(weekday, today)
        return WEEKDAY, next_weekday(weekday, today)
    elif group('wd'):
        return WEEKDAY, next_weekday(WEEKDAY_NAMES.index(group('wd').lower()), today)
    elif group('rel_day'):
        return RELATIVE_DAY, today + datetime.timedelta(days=RELATIVE_DAYS[group('rel_day').lower()])
    raise Exception("Unhandled temporal match", match.group(0))


def resolve_temporal(text: str, authored_at: datetime.datetime) -> List[TemporalMention]:
    """
    Tag and resolve date expressions relative to the posting's local authoring
    day. Mentions resolving before that day are dropped.
    """
    if not text:
        return []
    today = authored_at.date()
    mentions = []  # type: List[TemporalMention]
    for match in EXPRESSION.finditer(text):
        kind, resolved = resolve_match(match, today)
        if resolved is None or resolved < today:
            continue
        mentions.append(TemporalMention(
            start=match.start(),
            end=match.end(),
            kind=kind,
            resolved=resolved,
        ))
    return mentions
