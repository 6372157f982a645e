from typing import (  # noqa: F401
    Any,
    Dict,
)

from pachinko.utils.records import (
    Record,
)


RELATIVE_DAY = 'relative_day'
RELATIVE_WEEK = 'relative_week'
WEEKDAY = 'weekday'
EXPLICIT_DATE = 'explicit_date'
MONTH_DAY = 'month_day'

MENTION_KINDS = (RELATIVE_DAY, RELATIVE_WEEK, WEEKDAY, EXPLICIT_DATE, MONTH_DAY)


class TemporalMention(Record):
    fields = {
        # Character offsets [start, end) into the posting text
        'start': 'int',
        'end': 'int',
        # One of MENTION_KINDS
        'kind': 'str',
        # Calendar date the expression refers to, never before the authoring date
        'resolved': 'date',
    }
