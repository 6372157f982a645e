import datetime

from eth_utils import (
    ValidationError,
)
import pytest

from pachinko.bayes.beta_params import (
    BetaParams,
)
from pachinko.bayes.strata import (
    LOCATION_MONTH,
    StrataCounts,
    StrataSpec,
    normalize_scheme,
    validate_mode,
)
from pachinko.pachinko_typing.custom import (
    JarKey,
)

KEY = JarKey(datetime.date(2017, 12, 24), 'Hobart')


@pytest.mark.parametrize(
    'scheme, expected',
    [
        ('none', 'all'),
        ('location', 'Hobart'),
        ('month', 'Dec'),
        ('location_month', 'Hobart/Dec'),
        ('location-month', 'Hobart/Dec'),
    ]
)
def test_stratum_for_jar(scheme, expected):
    assert StrataSpec(scheme=scheme).key_for(KEY) == expected


def test_hyphenated_scheme_is_normalized():
    assert normalize_scheme('location-month') == LOCATION_MONTH
    assert StrataSpec(scheme='location-month').scheme == LOCATION_MONTH


@pytest.mark.parametrize('scheme', ['city', 'weekday', ''])
def test_unknown_scheme(scheme):
    with pytest.raises(ValidationError):
        StrataSpec(scheme=scheme)


def test_unknown_mode():
    with pytest.raises(ValidationError):
        validate_mode('hours')


@pytest.mark.parametrize(
    'n, e',
    [
        (3, 4),
        (3, -1),
    ]
)
def test_strata_counts_bounds(n, e):
    with pytest.raises(ValidationError):
        StrataCounts(key='k', n=n, e=e)


@pytest.mark.parametrize(
    'a, b',
    [
        (0, 1),
        (1, 0),
        (-1, 5),
    ]
)
def test_beta_params_must_be_positive(a, b):
    with pytest.raises(ValidationError):
        BetaParams(a=a, b=b)


def test_beta_interval_contains_mean():
    beta = BetaParams(a=283, b=1589)
    low, high = beta.interval(0.95)
    assert low < beta.mean < high
    narrow_low, narrow_high = beta.interval(0.5)
    assert low < narrow_low < narrow_high < high


def test_beta_uniform_interval():
    low, high = BetaParams(a=1, b=1).interval(0.9)
    assert low == pytest.approx(0.05)
    assert high == pytest.approx(0.95)


def test_beta_pdf_with_non_integer_shape():
    density = BetaParams(a=293, b=1589.24).pdf([0.0, 0.155, 1.0])
    assert density[0] == 0
    assert density[1] > 0
    assert density[2] == 0
