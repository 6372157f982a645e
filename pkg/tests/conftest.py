import pytest

from pachinko.data.city_gazetteer import (
    get_default_gazetteer,
)
from pachinko.data.config import (
    CI_LEVEL,
    CI_METHOD,
    CV_FOLDS,
    EARTH_RADIUS_MILES,
    IRLS_MAX_ITERATIONS,
    IRLS_TOLERANCE,
    LOW_TWEET_THRESHOLD,
    NB_R_CAP,
    NB_RELATIVE_TOLERANCE,
    RADIUS_MILES,
    generate_config,
)

from tests.helpers import (
    build_study_gsr,
)


@pytest.fixture
def radius_miles():
    return RADIUS_MILES


@pytest.fixture
def earth_radius_miles():
    return EARTH_RADIUS_MILES


@pytest.fixture
def cv_folds():
    return CV_FOLDS


@pytest.fixture
def nb_relative_tolerance():
    return NB_RELATIVE_TOLERANCE


@pytest.fixture
def nb_r_cap():
    return NB_R_CAP


@pytest.fixture
def irls_tolerance():
    return IRLS_TOLERANCE


@pytest.fixture
def irls_max_iterations():
    return IRLS_MAX_ITERATIONS


@pytest.fixture
def ci_level():
    return CI_LEVEL


@pytest.fixture
def ci_method():
    return CI_METHOD


@pytest.fixture
def low_tweet_threshold():
    return LOW_TWEET_THRESHOLD


@pytest.fixture
def config(radius_miles,
           earth_radius_miles,
           cv_folds,
           nb_relative_tolerance,
           nb_r_cap,
           irls_tolerance,
           irls_max_iterations,
           ci_level,
           ci_method,
           low_tweet_threshold):
    return generate_config(
        radius_miles=radius_miles,
        earth_radius_miles=earth_radius_miles,
        cv_folds=cv_folds,
        nb_relative_tolerance=nb_relative_tolerance,
        nb_r_cap=nb_r_cap,
        irls_tolerance=irls_tolerance,
        irls_max_iterations=irls_max_iterations,
        ci_level=ci_level,
        ci_method=ci_method,
        low_tweet_threshold=low_tweet_threshold
    )


@pytest.fixture
def gazetteer(radius_miles):
    return get_default_gazetteer(radius_miles)


@pytest.fixture(scope="session")
def study_gsr():
    return build_study_gsr()
