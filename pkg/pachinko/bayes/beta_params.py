from typing import (  # noqa: F401
    Any,
    Dict,
    Tuple,
)

from eth_utils import (
    ValidationError,
)
import numpy as np
from scipy import stats

from pachinko.utils.records import (
    Record,
)


class BetaParams(Record):
    fields = {
        'a': 'float',
        'b': 'float',
    }

    def __init__(self, **kwargs: Any) -> None:
        super().__init__(**kwargs)
        if not (self.a > 0 and self.b > 0):
            raise ValidationError(
                "Beta parameters must be positive:\n\tFound: a=%s, b=%s" % (self.a, self.b)
            )

    @property
    def mean(self) -> float:
        return self.a / (self.a + self.b)

    def interval(self, level: float=0.95) -> Tuple[float, float]:
        """Equal-tailed credible interval."""
        tail = (1.0 - level) / 2.0
        low, high = stats.beta.ppf([tail, 1.0 - tail], self.a, self.b)
        return float(low), float(high)

    def pdf(self, theta: np.ndarray) -> np.ndarray:
        # log-gamma based, so non-integer shapes are fine
        return stats.beta.pdf(theta, self.a, self.b)
