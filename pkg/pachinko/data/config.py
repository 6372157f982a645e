import datetime
from typing import (  # noqa: F401
    Any,
    Dict,
    Sequence,
)

from pachinko.data.constants import (
    STUDY_CITIES,
    STUDY_END,
    STUDY_START,
)


RADIUS_MILES = 25.0  # miles
EARTH_RADIUS_MILES = 3958.8  # miles
SVM_REGULARIZATION = 1.0  # C, as in a default linear SVM
SVM_MAX_EPOCHS = 1000
SVM_TOLERANCE = 1e-3
GAUSSIAN_VAR_FLOOR = 1e-9
CV_FOLDS = 5
NB_R_BRACKET = (1e-6, 1e6)
NB_RELATIVE_TOLERANCE = 1e-8
NB_R_CAP = 1e6
IRLS_TOLERANCE = 1e-10
IRLS_MAX_ITERATIONS = 100
CI_LEVEL = 0.95
CI_METHOD = 'wilson'
LEAD_TIME_MAX = 30  # days
LOW_TWEET_THRESHOLD = 25  # indicative postings per jar

# Make sure the r search bracket is a proper interval
assert 0 < NB_R_BRACKET[0] < NB_R_BRACKET[1] <= NB_R_CAP


def generate_config(*,
                    study_start: datetime.date=STUDY_START,
                    study_end: datetime.date=STUDY_END,
                    cities: Sequence[str]=STUDY_CITIES,
                    radius_miles: float=RADIUS_MILES,
                    earth_radius_miles: float=EARTH_RADIUS_MILES,
                    svm_regularization: float=SVM_REGULARIZATION,
                    svm_max_epochs: int=SVM_MAX_EPOCHS,
                    svm_tolerance: float=SVM_TOLERANCE,
                    gaussian_var_floor: float=GAUSSIAN_VAR_FLOOR,
                    cv_folds: int=CV_FOLDS,
                    nb_r_bracket: Sequence[float]=NB_R_BRACKET,
                    nb_relative_tolerance: float=NB_RELATIVE_TOLERANCE,
                    nb_r_cap: float=NB_R_CAP,
                    irls_tolerance: float=IRLS_TOLERANCE,
                    irls_max_iterations: int=IRLS_MAX_ITERATIONS,
                    ci_level: float=CI_LEVEL,
                    ci_method: str=CI_METHOD,
                    lead_time_max: int=LEAD_TIME_MAX,
                    low_tweet_threshold: int=LOW_TWEET_THRESHOLD) -> Dict[str, Any]:
    return {
        'study_start': study_start,
        'study_end': study_end,
        'cities': tuple(cities),
        'radius_miles': radius_miles,
        'earth_radius_miles': earth_radius_miles,
        'svm_regularization': svm_regularization,
        'svm_max_epochs': svm_max_epochs,
        'svm_tolerance': svm_tolerance,
        'gaussian_var_floor': gaussian_var_floor,
        'cv_folds': cv_folds,
        'nb_r_bracket': tuple(nb_r_bracket),
        'nb_relative_tolerance': nb_relative_tolerance,
        'nb_r_cap': nb_r_cap,
        'irls_tolerance': irls_tolerance,
        'irls_max_iterations': irls_max_iterations,
        'ci_level': ci_level,
        'ci_method': ci_method,
        'lead_time_max': lead_time_max,
        'low_tweet_threshold': low_tweet_threshold,
    }


DEFAULT_CONFIG = generate_config()
