from typing import (  # noqa: F401
    Any,
    Dict,
)

from pachinko.pachinko_typing.custom import (
    JarKey,
)
from pachinko.utils.records import (
    Record,
)


class GsrRecord(Record):
    fields = {
        # Calendar day of the row
        'date': 'date',
        # One of the configured cities
        'city': 'str',
        # Whether an unrest event happened in the city on that day
        'event': 'bool',
        # Optional headline of the event report
        'headline': ('optional', 'str'),
        # Optional violent/non-violent marker
        'violent': ('optional', 'bool'),
    }

    defaults = {
        'headline': None,
        'violent': None,
    }  # type: Dict[str, Any]

    @property
    def key(self) -> JarKey:
        return JarKey(self.date, self.city)
