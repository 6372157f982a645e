from typing import (  # noqa: F401
    Any,
    Dict,
    List,
)

from eth_utils import (
    ValidationError,
)

from pachinko.utils.records import (
    Record,
)


class ContingencyTable(Record):
    fields = {
        # Name of the row factor, e.g. "city"
        'factor': 'str',
        # Factor levels, one per row
        'levels': ['str'],
        # Per-level event and non-event counts
        'events': ['int'],
        'non_events': ['int'],
    }

    defaults = {
        'factor': '',
    }  # type: Dict[str, Any]

    def __init__(self, **kwargs: Any) -> None:
        super().__init__(**kwargs)
        if not len(self.levels) == len(self.events) == len(self.non_events):
            raise ValidationError("Contingency table rows have mismatched lengths")
        if len(self.levels) < 2:
            raise ValidationError("A contingency table needs at least 2 rows, found %d" % len(self.levels))
        if any(count < 0 for count in self.events + self.non_events):
            raise ValidationError("Contingency table counts must be non-negative")

    @property
    def rows(self) -> List[List[int]]:
        return [[e, n] for e, n in zip(self.events, self.non_events)]

    @property
    def trials(self) -> List[int]:
        return [e + n for e, n in zip(self.events, self.non_events)]


class LogisticFit(Record):
    fields = {
        'intercept': 'float',
        'slope': 'float',
        'converged': 'bool',
        'iterations': 'int',
        # Why the fit did not converge, if it did not
        'diagnostic': ('optional', 'str'),
        # Log-likelihood after each IRLS iteration
        'log_likelihood_path': ['float'],
    }

    defaults = {
        'diagnostic': None,
        'log_likelihood_path': [],
    }  # type: Dict[str, Any]
