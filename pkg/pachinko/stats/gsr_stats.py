import logging
import warnings
from collections import OrderedDict
from typing import (  # noqa: F401
    Any,
    Callable,
    Dict,
    Iterable,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
)

from eth_utils import (
    ValidationError,
)
import numpy as np
from scipy import stats
import statsmodels.api as sm
from statsmodels.stats.proportion import proportion_confint

from pachinko.data.config import (
    DEFAULT_CONFIG,
)
from pachinko.data.constants import (
    MONTH_ABBREVIATIONS,
    WEEKDAY_ABBREVIATIONS,
)
from pachinko.data.gsr_record import (
    GsrRecord,
)
from pachinko.data.jar import (
    Jar,
)
from pachinko.pachinko_typing.custom import (
    JarKey,
)

from .contingency_table import (
    ContingencyTable,
    LogisticFit,
)


logger = logging.getLogger(__name__)

FACTORS = OrderedDict([
    ('city', lambda record: record.city),
    ('month', lambda record: MONTH_ABBREVIATIONS[record.date.month - 1]),
    ('weekday', lambda record: WEEKDAY_ABBREVIATIONS[record.date.weekday()]),
])  # type: Dict[str, Callable[[GsrRecord], str]]


def contingency_table(gsr: Iterable[GsrRecord], factor: str) -> ContingencyTable:
    """Event / non-event counts per level of ``factor`` ("city", "month" or "weekday")."""
    if factor not in FACTORS:
        raise ValidationError("Unknown factor %r, expected one of %s" % (factor, list(FACTORS)))
    level_of = FACTORS[factor]
    counts = OrderedDict()  # type: Dict[str, List[int]]
    for record in sorted(gsr, key=lambda g: (g.date, g.city)):
        level = level_of(record)
        counts.setdefault(level, [0, 0])
        counts[level][0 if record.event else 1] += 1
    if factor == 'city':
        levels = sorted(counts)
    else:
        # chronological order of first appearance
        levels = list(counts)
    return ContingencyTable(
        factor=factor,
        levels=levels,
        events=[counts[level][0] for level in levels],
        non_events=[counts[level][1] for level in levels],
    )


def chi_squared_test(table: ContingencyTable) -> Tuple[float, int, float]:
    """Pearson chi-squared test of independence, no continuity correction."""
    observed = np.asarray(table.rows, dtype=float)
    if np.any(observed.sum(axis=1) == 0) or np.any(observed.sum(axis=0) == 0):
        raise ValidationError(
            "Chi-squared test needs non-zero row and column totals:\n"
            "\tRows: %s, Columns: %s" % (
                observed.sum(axis=1).tolist(), observed.sum(axis=0).tolist(),
            )
        )
    statistic, p_value, df, _ = stats.chi2_contingency(observed, correction=False)
    return float(statistic), int(df), float(p_value)


def chi_squared_report(table: ContingencyTable) -> Dict[str, Any]:
    statistic, df, p_value = chi_squared_test(table)
    return {
        'factor': table.factor,
        'statistic': statistic,
        'df': df,
        'p_value': p_value,
        'table': {
            level: {'events': e, 'non_events': n}
            for level, e, n in zip(table.levels, table.events, table.non_events)
        },
    }


def proportion_ci(successes: int,
                  trials: int,
                  level: float=0.95,
                  method: str='wilson') -> Tuple[float, float]:
    """Wilson score (default) or Wald ("wald") interval for a proportion."""
    if trials < 1:
        raise ValidationError("A proportion interval needs at least one trial")
    if not 0 <= successes <= trials:
        raise ValidationError("successes must lie in [0, trials], found %d of %d" % (successes, trials))
    if method not in ('wilson', 'wald'):
        raise ValidationError("Unknown interval method %r" % method)
    low, high = proportion_confint(
        successes,
        trials,
        alpha=1.0 - level,
        method='wilson' if method == 'wilson' else 'normal',
    )
    low, high = float(max(0.0, low)), float(min(1.0, high))
    if method == 'wilson':
        if successes == 0:
            low = 0.0
        if successes == trials:
            high = 1.0
    return low, high


def proportion_table(gsr: Iterable[GsrRecord],
                     factor: str,
                     config: Dict[str, Any]=DEFAULT_CONFIG) -> List[Dict[str, Any]]:
    """Proportion of event days per factor level with its confidence interval."""
    table = contingency_table(gsr, factor)
    rows = []
    for level, events, trials in zip(table.levels, table.events, table.trials):
        low, high = proportion_ci(events, trials, config['ci_level'], config['ci_method'])
        rows.append({
            'factor': factor,
            'level': level,
            'events': events,
            'days': trials,
            'proportion': events / trials,
            'ci_low': low,
            'ci_high': high,
        })
    return rows


def separation(x: np.ndarray, y: np.ndarray) -> Optional[str]:
    """
    "complete" when a threshold on x splits the classes, "quasi-complete"
    when it does so only with ties at the threshold, else None.
    """
    positives = x[y]
    negatives = x[~y]
    if positives.min() > negatives.max() or positives.max() < negatives.min():
        return 'complete'
    if np.ptp(x) > 0 and (positives.min() >= negatives.max() or positives.max() <= negatives.min()):
        return 'quasi-complete'
    return None


def log_likelihood(params: np.ndarray, design: np.ndarray, y: np.ndarray) -> float:
    eta = design @ params
    return float(np.sum(y * eta - np.logaddexp(0.0, eta)))


def fit_logistic(x: Sequence[float],
                 y: Sequence[bool],
                 config: Dict[str, Any]=DEFAULT_CONFIG) -> LogisticFit:
    """
    Intercept + slope maximum-likelihood logistic regression by IRLS,
    starting from zero coefficients.
    """
    x_arr = np.asarray(x, dtype=float)
    y_arr = np.asarray(y, dtype=bool)
    if x_arr.size < 2 or x_arr.size != y_arr.size:
        raise ValidationError("Logistic fit needs at least two paired observations")
    if y_arr.all() or not y_arr.any():
        raise ValidationError("Logistic fit needs both classes present")

    separated = separation(x_arr, y_arr)
    design = sm.add_constant(x_arr, has_constant='add')
    model = sm.GLM(y_arr.astype(float), design, family=sm.families.Binomial())
    try:
        with warnings.catch_warnings():
            warnings.simplefilter('ignore')
            result = model.fit(
                method='IRLS',
                start_params=np.zeros(2),
                tol=config['irls_tolerance'],
                maxiter=config['irls_max_iterations'],
            )
    except Exception as exc:  # older statsmodels raise PerfectSeparationError
        if separated is None:
            raise
        logger.warning("Logistic fit failed under separation: %s", exc)
        return LogisticFit(
            intercept=float('nan'),
            slope=float('nan'),
            converged=False,
            iterations=0,
            diagnostic='%s separation: coefficients diverge (%s)' % (separated, exc),
        )

    intercept, slope = (float(v) for v in result.params)
    history = result.fit_history
    # params[0] is an infinite placeholder, params[1] the zero start
    path = [
        log_likelihood(np.asarray(params, dtype=float), design, y_arr)
        for params in history['params'][1:]
    ]
    converged = bool(result.converged) and separated is None
    diagnostic = None
    if separated is not None:
        diagnostic = (
            '%s separation: coefficients diverge '
            '(intercept %.4g, slope %.4g after %d iterations)' % (
                separated, intercept, slope, int(history['iteration']),
            )
        )
        logger.warning("Logistic fit: %s", diagnostic)
    elif not converged:
        diagnostic = 'IRLS did not converge in %d iterations' % config['irls_max_iterations']
    return LogisticFit(
        intercept=intercept,
        slope=slope,
        converged=converged,
        iterations=int(history['iteration']),
        diagnostic=diagnostic,
        log_likelihood_path=path,
    )


def low_tweet_diagnostic(jars: Mapping[JarKey, Jar],
                         cities: Sequence[str],
                         config: Dict[str, Any]=DEFAULT_CONFIG) -> Dict[str, Any]:
    """
    Per city, a logistic fit of the event indicator on the jar's indicative
    count over all jars, plus the jars at or below the low-count threshold.
    """
    threshold = config['low_tweet_threshold']
    fits = {}  # type: Dict[str, Any]
    points = []  # type: List[Dict[str, Any]]
    for city in cities:
        city_jars = [jar for _, jar in sorted(jars.items()) if jar.city == city]
        x = [jar.indicative_count for jar in city_jars]
        y = [jar.event for jar in city_jars]
        try:
            fit = fit_logistic(x, y, config)
        except ValidationError as exc:
            logger.warning("Skipping low-count logistic fit for %s: %s", city, exc)
            continue
        fits[city] = {
            'intercept': fit.intercept,
            'slope': fit.slope,
            'converged': fit.converged,
            'iterations': fit.iterations,
            'diagnostic': fit.diagnostic,
        }
        points.extend(
            {'city': city, 'date': jar.date.isoformat(), 'count': jar.indicative_count,
             'event': int(jar.event)}
            for jar in city_jars
            if jar.indicative_count <= threshold
        )
    return {'threshold': threshold, 'fits': fits, 'points': points}
