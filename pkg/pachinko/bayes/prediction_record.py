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

from .beta_params import (
    BetaParams,
)


class PredictionRecord(Record):
    fields = {
        'date': 'date',
        'city': 'str',
        'stratum': 'str',
        # Indicative count used in the day-level update
        'y': 'int',
        'posterior': BetaParams,
        # a / (a + b) of the posterior
        'posterior_mean': 'float',
        # Equal-tailed credible interval of the posterior
        'ci_low': ('optional', 'float'),
        'ci_high': ('optional', 'float'),
        # Ids of the postings behind y, the audit trail
        'evidence': ['str'],
    }

    defaults = {
        'ci_low': None,
        'ci_high': None,
        'evidence': [],
    }  # type: Dict[str, Any]

    @property
    def key(self) -> JarKey:
        return JarKey(self.date, self.city)
