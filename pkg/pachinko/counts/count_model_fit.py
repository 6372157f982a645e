from typing import (  # noqa: F401
    Any,
    Dict,
)

from pachinko.utils.records import (
    Record,
)


POISSON = 'poisson'
NEGBINOM = 'negbinom'


class DailyCount(Record):
    fields = {
        'date': 'date',
        # Indicative postings referencing the day
        'count': 'int',
    }


class CountModelFit(Record):
    fields = {
        # POISSON or NEGBINOM
        'family': 'str',
        # Poisson rate
        'lam': ('optional', 'float'),
        # Negative binomial mean and dispersion
        'mu': ('optional', 'float'),
        'r': ('optional', 'float'),
        'log_likelihood': 'float',
        # Number of observations fitted
        'n': 'int',
        # Set when the data gave no evidence of overdispersion and r was capped
        'underdispersed': 'bool',
    }

    defaults = {
        'lam': None,
        'mu': None,
        'r': None,
        'underdispersed': False,
    }  # type: Dict[str, Any]
