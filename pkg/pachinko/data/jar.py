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


class Jar(Record):
    fields = {
        # Day index i
        'date': 'date',
        # City index j
        'city': 'str',
        # Event indicator copied from the GSR
        'event': 'bool',
        # Ids of the indicative postings sorted into this jar, one per posting/date pair
        'evidence': ['str'],
    }

    defaults = {
        'evidence': [],
    }  # type: Dict[str, Any]

    @property
    def key(self) -> JarKey:
        return JarKey(self.date, self.city)

    @property
    def indicative_count(self) -> int:
        return len(self.evidence)
