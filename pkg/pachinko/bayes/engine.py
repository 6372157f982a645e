import logging
from collections import OrderedDict
from typing import (  # noqa: F401
    Any,
    Collection,
    Dict,
    Iterable,
    List,
    Mapping,
    Optional,
    Sequence,
)

import numpy as np
from scipy import stats

from pachinko.data.config import (
    DEFAULT_CONFIG,
)
from pachinko.data.gsr_record import (
    GsrRecord,
)
from pachinko.data.jar import (
    Jar,
)
from pachinko.exceptions import (
    DegeneratePriorError,
)
from pachinko.pachinko_typing.custom import (
    JarKey,
    StrataKey,
)
from pachinko.utils.records import (
    replace,
)

from .beta_params import (
    BetaParams,
)
from .prediction_record import (
    PredictionRecord,
)

from .strata import (
    ALL_STRATUM,
    DAYS,
    StrataCounts,
    StrataSpec,
    validate_mode,
)


logger = logging.getLogger(__name__)


def prior_from_gsr(gsr: Iterable[GsrRecord]) -> BetaParams:
    """Empirical-Bayes prior: a = event day-rows, b = non-event day-rows."""
    events = 0
    non_events = 0
    for record in gsr:
        if record.event:
            events += 1
        else:
            non_events += 1
    if events == 0 or non_events == 0:
        raise DegeneratePriorError(
            "The GSR needs both event and non-event rows for a proper prior:\n"
            "\tFound: %d events, %d non-events" % (events, non_events)
        )
    return BetaParams(a=float(events), b=float(non_events))


def strata_counts(gsr: Iterable[GsrRecord],
                  jars: Mapping[JarKey, Jar],
                  spec: StrataSpec,
                  mode: str=DAYS,
                  keys: Optional[Collection[JarKey]]=None) -> List[StrataCounts]:
    """
    N_k and E_k per stratum, over the GSR rows (restricted to ``keys`` when
    given). Every stratum that any jar maps to is listed, empty ones with zeros.
    """
    validate_mode(mode)
    gsr = list(gsr)
    n = OrderedDict()  # type: Dict[StrataKey, int]
    e = OrderedDict()  # type: Dict[StrataKey, int]
    for key in sorted(set(jars) | {record.key for record in gsr}):
        stratum = spec.key_for(key)
        n.setdefault(stratum, 0)
        e.setdefault(stratum, 0)

    for record in gsr:
        if keys is not None and record.key not in keys:
            continue
        stratum = spec.key_for(record.key)
        if mode == DAYS:
            n[stratum] += 1
            e[stratum] += int(record.event)
        else:
            jar = jars.get(record.key)
            count = jar.indicative_count if jar is not None else 0
            n[stratum] += count
            e[stratum] += count if record.event else 0

    return [StrataCounts(key=stratum, n=n[stratum], e=e[stratum]) for stratum in sorted(n)]


def strata_posterior(prior: BetaParams, counts: StrataCounts) -> BetaParams:
    return BetaParams(a=counts.e + prior.a, b=counts.n - counts.e + prior.b)


def day_posterior(strata_post: BetaParams, y: int, r: float) -> BetaParams:
    """Day-level update with likelihood kernel theta^y (1 - theta)^r."""
    if y < 0:
        raise ValueError("Indicative count must be non-negative, got %r" % y)
    if not r > 0:
        raise ValueError("Dispersion r must be positive, got %r" % r)
    return BetaParams(a=strata_post.a + y, b=strata_post.b + r)


def predict_all(gsr: Sequence[GsrRecord],
                jars: Mapping[JarKey, Jar],
                spec: StrataSpec,
                mode: str,
                r: float,
                train_keys: Optional[Collection[JarKey]]=None,
                r_overrides: Optional[Mapping[str, float]]=None,
                config: Dict[str, Any]=DEFAULT_CONFIG) -> List[PredictionRecord]:
    """
    One prediction per jar, sorted by (date, city). The prior and strata
    counts come from the GSR rows in ``train_keys`` (all rows by default).
    ``r_overrides`` maps a stratum to its own r.
    """
    gsr = list(gsr)
    training = gsr if train_keys is None else [g for g in gsr if g.key in train_keys]
    prior = prior_from_gsr(training)
    posteriors = {
        counts.key: strata_posterior(prior, counts)
        for counts in strata_counts(training, jars, spec, mode)
    }
    overrides = r_overrides or {}

    records = []  # type: List[PredictionRecord]
    for key in sorted(jars):
        jar = jars[key]
        stratum = spec.key_for(key)
        base = posteriors.get(stratum, prior)
        posterior = day_posterior(base, jar.indicative_count, overrides.get(stratum, r))
        records.append(PredictionRecord(
            date=jar.date,
            city=jar.city,
            stratum=stratum,
            y=jar.indicative_count,
            posterior=posterior,
            posterior_mean=posterior.mean,
            evidence=list(jar.evidence),
        ))
    return with_credible_intervals(records, config['ci_level'])


def with_credible_intervals(records: Sequence[PredictionRecord],
                            level: float) -> List[PredictionRecord]:
    if not records:
        return []
    a = np.array([record.posterior.a for record in records])
    b = np.array([record.posterior.b for record in records])
    tail = (1.0 - level) / 2.0
    lows = stats.beta.ppf(tail, a, b)
    highs = stats.beta.ppf(1.0 - tail, a, b)
    return [
        replace(record, ci_low=float(low), ci_high=float(high))
        for record, low, high in zip(records, lows, highs)
    ]


def baseline_predictions(gsr: Sequence[GsrRecord],
                         jars: Mapping[JarKey, Jar],
                         train_keys: Optional[Collection[JarKey]]=None) -> List[PredictionRecord]:
    """The "overall" model: the prior mean for every jar."""
    training = list(gsr) if train_keys is None else [g for g in gsr if g.key in train_keys]
    prior = prior_from_gsr(training)
    return [
        PredictionRecord(
            date=jars[key].date,
            city=jars[key].city,
            stratum=ALL_STRATUM,
            y=jars[key].indicative_count,
            posterior=prior,
            posterior_mean=prior.mean,
            evidence=list(jars[key].evidence),
        )
        for key in sorted(jars)
    ]


def strata_posterior_table(gsr: Sequence[GsrRecord],
                           jars: Mapping[JarKey, Jar],
                           spec: StrataSpec,
                           mode: str=DAYS,
                           config: Dict[str, Any]=DEFAULT_CONFIG) -> List[Dict[str, Any]]:
    """Posterior shape, mean and credible interval for every stratum."""
    prior = prior_from_gsr(gsr)
    rows = []
    for counts in strata_counts(gsr, jars, spec, mode):
        posterior = strata_posterior(prior, counts)
        low, high = posterior.interval(config['ci_level'])
        rows.append({
            'stratum': counts.key,
            'n': counts.n,
            'e': counts.e,
            'alpha_post': posterior.a,
            'beta_post': posterior.b,
            'posterior_mean': posterior.mean,
            'ci_low': low,
            'ci_high': high,
        })
    return rows


def strata_density_grid(gsr: Sequence[GsrRecord],
                        jars: Mapping[JarKey, Jar],
                        spec: StrataSpec,
                        mode: str=DAYS,
                        points: int=201,
                        theta_max: float=0.4) -> List[Dict[str, Any]]:
    """Posterior densities of every stratum on a theta grid, for plotting."""
    prior = prior_from_gsr(gsr)
    grid = np.linspace(0.0, theta_max, points)
    rows = []
    for counts in strata_counts(gsr, jars, spec, mode):
        density = strata_posterior(prior, counts).pdf(grid)
        rows.extend(
            {'stratum': counts.key, 'theta': float(t), 'density': float(d)}
            for t, d in zip(grid, density)
        )
    return rows
