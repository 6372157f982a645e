import datetime
from typing import (  # noqa: F401
    Any,
    Dict,
)

from pachinko.utils.records import (
    Record,
)


class GeoPoint(Record):
    fields = {
        # Degrees, in [-90, 90]
        'lat': 'float',
        # Degrees, in [-180, 180]
        'lon': 'float',
    }


class TweetRecord(Record):
    fields = {
        # Opaque unique identifier
        'id': 'str',
        'text': 'str',
        # Timezone-aware authoring time
        'authored_at': 'datetime',
        'geo': ('optional', GeoPoint),
        # Free-text "location" from the author's profile
        'bio_location': ('optional', 'str'),
        # Annotations filled in by the pipeline
        'resolved_target_dates': {'date'},
        'matched_city': ('optional', 'str'),
        'ambiguous_city': 'bool',
        'relevant': ('optional', 'bool'),
    }

    defaults = {
        'geo': None,
        'bio_location': None,
        'resolved_target_dates': frozenset(),
        'matched_city': None,
        'ambiguous_city': False,
        'relevant': None,
    }  # type: Dict[str, Any]

    @property
    def authored_date(self) -> datetime.date:
        # local calendar day in the posting's own offset
        return self.authored_at.date()
