"""
Stage functions shared by the subcommands, and ``run`` which chains them:
filter, classify, jar fill, count fit, predict, evaluate, report.
"""
import contextlib
import logging
import os
import shutil
import tempfile
from pathlib import Path
from typing import (  # noqa: F401
    Any,
    Dict,
    Iterator,
    List,
    Mapping,
    NamedTuple,
    Optional,
    Sequence,
    Tuple,
    Union,
)

from eth_utils import (
    ValidationError,
)
import pandas as pd

from pachinko.bayes.engine import (
    predict_all,
    strata_density_grid,
    strata_posterior_table,
)
from pachinko.bayes.io import (
    write_predictions,
)
from pachinko.bayes.strata import (
    StrataSpec,
    normalize_scheme,
    validate_mode,
)
from pachinko.classifier.trained_classifier import (
    KINDS,
    TrainedClassifier,
    load_model,
    write_model,
)
from pachinko.classifier.training import (
    classify,
    load_corpus,
    select_model,
    train,
)
from pachinko.counts.models import (
    daily_counts,
    dispersion_stats,
    fit_negbinom,
    fit_poisson,
    fitted_cdf_table,
)
from pachinko.data.config import (
    generate_config,
)
from pachinko.data.gsr_record import (
    GsrRecord,
)
from pachinko.data.io import (
    gsr_totals,
    load_gazetteer,
    load_gsr,
    load_tweets,
    read_json,
    write_csv,
    write_jars,
    write_json,
    write_tweets,
)
from pachinko.data.jar import (
    Jar,
)
from pachinko.data.jar_grid import (
    build_jar_grid,
    coverage_gaps,
    drop_tweets_into_jars,
)
from pachinko.evaluation.lead_time import (
    lead_time_auc,
)
from pachinko.evaluation.models import (
    MODEL_SCHEMES,
    evaluate_models,
    evaluate_split,
    model_predictions,
)
from pachinko.evaluation.plot_data import (
    auc_frame,
    emit_plot_data,
)
from pachinko.exceptions import (
    FitError,
    StageFailure,
)
from pachinko.filters.filtering import (
    filter_tweets,
)
from pachinko.pachinko_typing.custom import (
    JarKey,
)
from pachinko.stats.gsr_stats import (
    FACTORS,
    chi_squared_report,
    contingency_table,
    low_tweet_diagnostic,
    proportion_table,
)
from pachinko.utils.blake import (
    blake_file,
)
from pachinko.utils.records import (
    Record,
    from_dict,
    to_dict,
)


logger = logging.getLogger(__name__)

PathLike = Union[str, Path]

AUTO = 'auto'
MANIFEST_FORMAT_VERSION = 1
MANIFEST_NAME = 'manifest.json'
SEED_ENVIRONMENT_VARIABLE = 'PACHINKO_SEED'
PATH_FIELDS = ('gsr', 'tweets', 'corpus', 'model', 'gazetteer', 'out_dir')


class PipelineConfig(Record):
    fields = {
        # Inputs; corpus trains a classifier, model reuses a trained one
        'gsr': 'str',
        'tweets': 'str',
        'corpus': ('optional', 'str'),
        'model': ('optional', 'str'),
        'gazetteer': ('optional', 'str'),
        'out_dir': 'str',
        'strata': 'str',
        'mode': 'str',
        # A classifier kind, or AUTO for cross-validated selection
        'classifier': 'str',
        'folds': 'int',
        'seed': 'int',
        'lead_time_min': 'int',
        'lead_time_max': 'int',
        'ci_method': 'str',
        'ci_level': 'float',
        # Dispersion override; the negative binomial fit is used when unset
        'r': ('optional', 'float'),
        # Training share for the held-out evaluation, skipped when unset
        'split': ('optional', 'float'),
    }

    defaults = {
        'corpus': None,
        'model': None,
        'gazetteer': None,
        'strata': 'location_month',
        'mode': 'days',
        'classifier': AUTO,
        'folds': 5,
        'seed': 0,
        'lead_time_min': 0,
        'lead_time_max': 30,
        'ci_method': 'wilson',
        'ci_level': 0.95,
        'r': None,
        'split': None,
    }  # type: Dict[str, Any]


class RunReport(NamedTuple):
    out_dir: Path
    manifest: Dict[str, Any]


#
# Configuration
#
def validate_pipeline_config(config: PipelineConfig) -> None:
    for name, label in (('gsr', 'GSR'), ('tweets', 'tweets'), ('corpus', 'corpus'),
                        ('model', 'model'), ('gazetteer', 'gazetteer')):
        path = getattr(config, name)
        if path is not None and not Path(path).is_file():
            raise ValidationError("%s file not found: %s" % (label, path))
    if config.corpus is None and config.model is None:
        raise ValidationError("Either a labelled corpus or a trained model is required")
    normalize_scheme(config.strata)
    validate_mode(config.mode)
    if config.classifier != AUTO and config.classifier not in KINDS:
        raise ValidationError(
            "Unknown classifier %r:\n\tExpected one of: %s" % (
                config.classifier, ', '.join((AUTO,) + KINDS),
            )
        )
    if not 0 <= config.lead_time_min <= config.lead_time_max:
        raise ValidationError(
            "Lead-time range must satisfy 0 <= min <= max:\n"
            "\tFound: %d .. %d" % (config.lead_time_min, config.lead_time_max)
        )
    if config.ci_method not in ('wilson', 'wald'):
        raise ValidationError("Unknown interval method %r" % config.ci_method)
    if config.r is not None and not config.r > 0:
        raise ValidationError("r must be positive, found %s" % config.r)
    if config.split is not None and not 0 < config.split < 1:
        raise ValidationError("split must lie in (0, 1), found %s" % config.split)


def load_pipeline_config(path: Optional[PathLike]=None,
                         overrides: Optional[Mapping[str, Any]]=None,
                         environ: Optional[Mapping[str, str]]=None) -> PipelineConfig:
    """
    JSON file, then non-None ``overrides``, then PACHINKO_SEED. Relative paths
    in the file are taken relative to the file's directory.
    """
    data = {}  # type: Dict[str, Any]
    if path is not None:
        loaded = read_json(path)
        if not isinstance(loaded, dict):
            raise ValidationError("%s: pipeline config must be a JSON object" % path)
        base = Path(path).parent
        for name in PATH_FIELDS:
            if loaded.get(name) is not None and not Path(loaded[name]).is_absolute():
                loaded[name] = str(base / loaded[name])
        data.update(loaded)
    data.update({k: v for k, v in (overrides or {}).items() if v is not None})

    environ = os.environ if environ is None else environ
    if environ.get(SEED_ENVIRONMENT_VARIABLE):
        try:
            data['seed'] = int(environ[SEED_ENVIRONMENT_VARIABLE])
        except ValueError as exc:
            raise ValidationError(
                "%s must be an integer, found %r" % (
                    SEED_ENVIRONMENT_VARIABLE, environ[SEED_ENVIRONMENT_VARIABLE],
                )
            ) from exc

    unknown = sorted(set(data) - set(PipelineConfig.fields))
    if unknown:
        raise ValidationError("Unknown pipeline config keys: %s" % ', '.join(unknown))
    missing = [
        name for name in PipelineConfig.fields
        if name not in data and name not in PipelineConfig.defaults
    ]
    if missing:
        raise ValidationError("Pipeline config is missing: %s" % ', '.join(missing))
    return from_dict(PipelineConfig, data)


def library_config(config: PipelineConfig) -> Dict[str, Any]:
    return generate_config(
        cv_folds=config.folds,
        ci_level=config.ci_level,
        ci_method=config.ci_method,
        lead_time_max=config.lead_time_max,
    )


@contextlib.contextmanager
def stage(name: str) -> Iterator[None]:
    logger.info("Stage %s", name)
    try:
        yield
    except StageFailure:
        raise
    except Exception as exc:
        raise StageFailure(name, exc) from exc


#
# Stages
#
def fit_classifier(kind: str,
                   texts: Sequence[str],
                   labels: Sequence[bool],
                   folds: int,
                   seed: int,
                   config: Dict[str, Any]) -> TrainedClassifier:
    if kind == AUTO:
        return select_model(texts, labels, folds=folds, seed=seed, config=config)
    return train(kind, texts, labels, seed=seed, config=config)


def fit_counts(jars: Mapping[JarKey, Jar], config: Dict[str, Any]) -> Dict[str, Any]:
    """Poisson and negative binomial fits to the daily indicative counts."""
    counts = daily_counts(jars)
    poisson = fit_poisson(counts)
    negbinom = fit_negbinom(counts, config)
    mean, variance, ratio = dispersion_stats(counts)
    return {
        'poisson': to_dict(poisson),
        'negbinom': to_dict(negbinom),
        'mean': mean,
        'variance': variance,
        'dispersion_ratio': ratio,
        'days': len(counts),
        'r': negbinom.r,
        'cdf': fitted_cdf_table(counts, poisson, negbinom),
    }


def resolve_r(r_override: Optional[float], counts_report: Optional[Mapping[str, Any]]) -> float:
    if r_override is not None:
        return float(r_override)
    if counts_report is None or counts_report.get('r') is None:
        raise ValidationError(
            "No dispersion r available: run fit-counts first or pass --r"
        )
    return float(counts_report['r'])


def gsr_report(gsr: Sequence[GsrRecord],
               jars: Optional[Mapping[JarKey, Jar]],
               config: Dict[str, Any]) -> Dict[str, Any]:
    """Chi-squared tests and proportion tables per factor, plus the low-count diagnostic."""
    events, rows = gsr_totals(gsr)
    report = {
        'rows': rows,
        'events': events,
        'chi_squared': {},
        'proportions': {},
    }  # type: Dict[str, Any]
    for factor in FACTORS:
        table = contingency_table(gsr, factor)
        try:
            report['chi_squared'][factor] = chi_squared_report(table)
        except ValidationError as exc:
            logger.warning("No chi-squared test for %s: %s", factor, exc)
            report['chi_squared'][factor] = {'factor': factor, 'error': str(exc)}
        report['proportions'][factor] = proportion_table(gsr, factor, config)
    if jars is not None:
        cities = sorted({jar.city for jar in jars.values()})
        report['low_tweet'] = low_tweet_diagnostic(jars, cities, config)
    return report


def write_manifest(root: Path,
                   settings: Mapping[str, Any],
                   inputs: Mapping[str, Optional[str]]) -> Dict[str, Any]:
    """
    Hash every file under ``root`` into MANIFEST_NAME. Paths are relative and
    nothing run-specific is recorded.
    """
    artifacts = [
        {
            'path': path.relative_to(root).as_posix(),
            'blake2b': blake_file(path),
            'bytes': path.stat().st_size,
        }
        for path in sorted(root.rglob('*'))
        if path.is_file() and path.name != MANIFEST_NAME
    ]
    manifest = {
        'format_version': MANIFEST_FORMAT_VERSION,
        'settings': dict(settings),
        'inputs': {
            name: {'file': Path(path).name, 'blake2b': blake_file(path)}
            for name, path in sorted(inputs.items())
            if path is not None
        },
        'artifacts': artifacts,
    }
    write_json(manifest, root / MANIFEST_NAME)
    return manifest


def run_stages(config: PipelineConfig, work: Path) -> Dict[str, Any]:
    settings = library_config(config)
    spec = StrataSpec(scheme=config.strata)

    with stage('load'):
        gsr = load_gsr(config.gsr, settings)
        tweets = load_tweets(config.tweets)
        gazetteer = load_gazetteer(config.gazetteer, settings)
        gaps = coverage_gaps(gsr, settings)
        if gaps:
            logger.info("%d (date, city) pairs in the study window have no GSR row", len(gaps))

    with stage('filter'):
        kept, filter_report = filter_tweets(tweets, gazetteer, settings)
        write_tweets(kept, work / 'filtered_tweets.jsonl')
        write_json(filter_report.to_dict(), work / 'filter_report.json')

    with stage('classify'):
        if config.corpus is not None:
            texts, labels = load_corpus(config.corpus)
            model = fit_classifier(config.classifier, texts, labels, config.folds, config.seed, settings)
            write_model(model, work / 'model.json')
        else:
            model = load_model(config.model)
        classified = classify(model, kept)
        write_tweets(classified, work / 'classified_tweets.jsonl')

    with stage('jars'):
        fill = drop_tweets_into_jars(classified, build_jar_grid(gsr))
        write_jars(fill.jars, work / 'jars.csv')

    with stage('fit-counts'):
        try:
            counts_report = fit_counts(fill.jars, settings)  # type: Optional[Dict[str, Any]]
        except FitError as exc:
            if config.r is None:
                raise
            logger.warning("Count models not fitted, using r=%s: %s", config.r, exc)
            counts_report = None
        if counts_report is not None:
            write_json({k: v for k, v in counts_report.items() if k != 'cdf'}, work / 'counts.json')
            write_csv(pd.DataFrame(counts_report['cdf']), work / 'count_cdf.csv')
        r = resolve_r(config.r, counts_report)

    with stage('predict'):
        predictions = predict_all(gsr, fill.jars, spec, config.mode, r, config=settings)
        write_predictions(predictions, work / 'predictions.csv')

    with stage('evaluate'):
        by_model = model_predictions(gsr, fill.jars, config.mode, r, config=settings)
        evaluations = evaluate_models(gsr, by_model)
        lead_time = lead_time_auc(
            gsr, classified, spec, config.mode, r,
            range(config.lead_time_min, config.lead_time_max + 1), settings,
        )
        emit_plot_data(
            work / 'plots',
            gsr=gsr,
            predictions={spec.scheme: predictions},
            evaluations=evaluations,
            lead_time=lead_time,
            strata_tables={
                'strata_posteriors': strata_posterior_table(gsr, fill.jars, spec, config.mode, settings),
                'strata_density': strata_density_grid(gsr, fill.jars, spec, config.mode),
            },
        )
        if config.split is not None:
            held_out = evaluate_split(
                gsr, fill.jars, config.mode, r, config.split, config.seed, settings,
            )
            write_csv(auc_frame(held_out), work / 'split_auc.csv')

    with stage('report'):
        write_json(gsr_report(gsr, fill.jars, settings), work / 'tests.json')

    return {
        'strata': spec.scheme,
        'mode': config.mode,
        'classifier': config.classifier,
        'folds': config.folds,
        'seed': config.seed,
        'r': r,
        'r_source': 'override' if config.r is not None else 'negbinom',
        'lead_time': [config.lead_time_min, config.lead_time_max],
        'ci_method': config.ci_method,
        'ci_level': config.ci_level,
        'split': config.split,
        'models': list(MODEL_SCHEMES),
    }


def run(config: PipelineConfig) -> RunReport:
    """
    Run every stage into a scratch directory next to ``out_dir`` and move the
    results over only when all stages succeed.
    """
    validate_pipeline_config(config)
    out = Path(config.out_dir)
    out.parent.mkdir(parents=True, exist_ok=True)
    work = Path(tempfile.mkdtemp(prefix='.pachinko-', dir=str(out.parent)))
    try:
        settings = run_stages(config, work)
        with stage('emit'):
            manifest = write_manifest(work, settings, {
                'gsr': config.gsr,
                'tweets': config.tweets,
                'corpus': config.corpus,
                'model': config.model,
                'gazetteer': config.gazetteer,
            })
            for path in sorted(work.rglob('*')):
                if path.is_file():
                    target = out / path.relative_to(work)
                    target.parent.mkdir(parents=True, exist_ok=True)
                    os.replace(str(path), str(target))
    finally:
        shutil.rmtree(str(work), ignore_errors=True)
    logger.info("Wrote %d artifacts to %s", len(manifest['artifacts']) + 1, out)
    return RunReport(out_dir=out, manifest=manifest)

