import logging
import warnings
from collections import defaultdict
from typing import (  # noqa: F401
    Any,
    Dict,
    Iterable,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
    Union,
)

import numpy as np
from scipy import optimize, stats
from scipy.special import digamma, gammaln, polygamma

from pachinko.data.config import (
    DEFAULT_CONFIG,
)
from pachinko.data.jar import (
    Jar,
)
from pachinko.exceptions import (
    FitError,
)
from pachinko.pachinko_typing.custom import (
    JarKey,
)

from .count_model_fit import (
    NEGBINOM,
    POISSON,
    CountModelFit,
    DailyCount,
)


logger = logging.getLogger(__name__)

Counts = Union[Sequence[DailyCount], Sequence[int], np.ndarray]


def as_array(counts: Counts) -> np.ndarray:
    values = [c.count if isinstance(c, DailyCount) else c for c in counts]
    arr = np.asarray(values, dtype=float)
    if arr.size and (np.any(arr < 0) or np.any(arr != np.floor(arr))):
        raise FitError("Counts must be non-negative integers")
    return arr


def daily_counts(jars: Mapping[JarKey, Jar], city: Optional[str]=None) -> List[DailyCount]:
    """Indicative postings per day, summed over cities unless ``city`` is given."""
    totals = defaultdict(int)  # type: Dict[Any, int]
    for key, jar in jars.items():
        if city is not None and jar.city != city:
            continue
        totals[jar.date] += jar.indicative_count
    return [DailyCount(date=day, count=count) for day, count in sorted(totals.items())]


#
# Negative binomial in mean/dispersion form:
#   P(k) = Gamma(k + r) / (k! Gamma(r)) (mu / (r + mu))^k (r / (r + mu))^r
#
def nb_success_probability(mu: float, r: float) -> float:
    """p = mu / (r + mu), the per-trial probability in the theta-power form."""
    return mu / (r + mu)


def nb_scipy_p(mu: float, r: float) -> float:
    # scipy.stats.nbinom(n=r, p) counts failures with success probability r / (r + mu)
    return r / (r + mu)


def nb_logpmf(k: Union[int, np.ndarray], mu: float, r: float) -> np.ndarray:
    return stats.nbinom.logpmf(k, r, nb_scipy_p(mu, r))


def nb_pmf(k: Union[int, np.ndarray], mu: float, r: float) -> np.ndarray:
    return stats.nbinom.pmf(k, r, nb_scipy_p(mu, r))


def nb_cdf(k: Union[int, np.ndarray], mu: float, r: float) -> np.ndarray:
    return stats.nbinom.cdf(k, r, nb_scipy_p(mu, r))


def nb_log_likelihood(y: np.ndarray, mu: float, r: float) -> float:
    n = y.size
    p = nb_success_probability(mu, r)
    return float(
        np.sum(gammaln(y + r)) - n * gammaln(r) - np.sum(gammaln(y + 1))
        + n * r * np.log1p(-p) + np.sum(y) * np.log(p)
    )


def nb_profile_score(r: float, y: np.ndarray, mu: float) -> float:
    """d/dr of the log-likelihood with mu held at its MLE."""
    return float(np.sum(digamma(y + r)) - y.size * digamma(r) + y.size * np.log(r / (r + mu)))


def nb_profile_score_derivative(r: float, y: np.ndarray, mu: float) -> float:
    return float(
        np.sum(polygamma(1, y + r)) - y.size * polygamma(1, r) + y.size * mu / (r * (r + mu))
    )


def poisson_log_likelihood(y: np.ndarray, lam: float) -> float:
    return float(np.sum(stats.poisson.logpmf(y, lam)))


def fit_poisson(counts: Counts) -> CountModelFit:
    y = as_array(counts)
    if y.size == 0:
        raise FitError("Cannot fit a Poisson model to no data")
    lam = float(np.mean(y))
    if lam <= 0:
        raise FitError("All counts are zero; the Poisson rate estimate is degenerate")
    return CountModelFit(
        family=POISSON,
        lam=lam,
        log_likelihood=poisson_log_likelihood(y, lam),
        n=int(y.size),
    )


def fit_negbinom(counts: Counts, config: Dict[str, Any]=DEFAULT_CONFIG) -> CountModelFit:
    """
    Maximum-likelihood (mu, r). mu is the sample mean; r maximises the profile
    likelihood, first by bounded search on log r, then by Newton's method on
    the score.
    """
    y = as_array(counts)
    if y.size == 0:
        raise FitError("Cannot fit a negative binomial model to no data")
    mu = float(np.mean(y))
    if mu <= 0:
        raise FitError("All counts are zero; the negative binomial mean is degenerate")

    r_low, r_high = config['nb_r_bracket']
    r_cap = config['nb_r_cap']
    variance = float(np.var(y, ddof=1)) if y.size > 1 else 0.0
    if variance <= mu:
        logger.warning(
            "Counts are not overdispersed (variance %.4g <= mean %.4g); capping r at %g",
            variance, mu, r_cap,
        )
        return CountModelFit(
            family=NEGBINOM,
            mu=mu,
            r=float(r_cap),
            log_likelihood=nb_log_likelihood(y, mu, r_cap),
            n=int(y.size),
            underdispersed=True,
        )

    tolerance = config['nb_relative_tolerance']
    search = optimize.minimize_scalar(
        lambda log_r: -nb_log_likelihood(y, mu, float(np.exp(log_r))),
        bounds=(np.log(r_low), np.log(r_high)),
        method='bounded',
        options={'xatol': tolerance},
    )
    r_hat = float(np.exp(search.x))

    try:
        with warnings.catch_warnings():
            warnings.simplefilter('ignore', category=RuntimeWarning)
            polished = optimize.newton(
                nb_profile_score,
                r_hat,
                fprime=nb_profile_score_derivative,
                args=(y, mu),
                tol=tolerance * r_hat,
                maxiter=50,
            )
        polished = float(polished)
        if (r_low <= polished <= r_high and
                nb_log_likelihood(y, mu, polished) >= nb_log_likelihood(y, mu, r_hat)):
            r_hat = polished
    except (RuntimeError, OverflowError, ZeroDivisionError):
        logger.debug("Newton polish of r failed; keeping bounded-search estimate %g", r_hat)

    return CountModelFit(
        family=NEGBINOM,
        mu=mu,
        r=r_hat,
        log_likelihood=nb_log_likelihood(y, mu, r_hat),
        n=int(y.size),
    )


def dispersion_stats(counts: Counts) -> Tuple[float, float, float]:
    """(mean, unbiased variance, variance / mean)"""
    y = as_array(counts)
    if y.size < 2:
        raise FitError("Dispersion needs at least two observations")
    mean = float(np.mean(y))
    variance = float(np.var(y, ddof=1))
    if mean == 0:
        ratio = 0.0 if variance == 0 else float('inf')
    else:
        ratio = variance / mean
    return mean, variance, ratio


def empirical_cdf(counts: Counts) -> List[Tuple[float, float]]:
    """Right-continuous step function as sorted (value, cumulative fraction) pairs."""
    y = as_array(counts)
    if y.size == 0:
        raise FitError("Empirical CDF of no data")
    values, multiplicity = np.unique(y, return_counts=True)
    fractions = np.cumsum(multiplicity) / y.size
    fractions[-1] = 1.0
    return [(float(v), float(f)) for v, f in zip(values, fractions)]


def evaluate_ecdf(ecdf: Sequence[Tuple[float, float]], x: float) -> float:
    fraction = 0.0
    for value, cumulative in ecdf:
        if value > x:
            break
        fraction = cumulative
    return fraction


def fitted_cdf_table(counts: Counts,
                     poisson_fit: CountModelFit,
                     negbinom_fit: CountModelFit) -> List[Dict[str, float]]:
    """ECDF next to the fitted Poisson and negative binomial CDFs at each observed count."""
    table = []
    for value, fraction in empirical_cdf(counts):
        table.append({
            'count': value,
            'ecdf': fraction,
            'poisson_cdf': float(stats.poisson.cdf(value, poisson_fit.lam)),
            'negbinom_cdf': float(nb_cdf(value, negbinom_fit.mu, negbinom_fit.r)),
        })
    return table
