import argparse
import logging
import os
import sys
from pathlib import Path
from typing import (  # noqa: F401
    Any,
    Callable,
    Dict,
    List,
    Optional,
    Sequence,
)

from eth_utils import (
    ValidationError,
)
import pandas as pd

from pachinko.bayes.engine import (
    predict_all,
)
from pachinko.bayes.io import (
    write_predictions,
)
from pachinko.bayes.strata import (
    MODES,
    SCHEMES,
    StrataSpec,
)
from pachinko.classifier.trained_classifier import (
    KINDS,
    load_model,
    write_model,
)
from pachinko.classifier.training import (
    classify,
    load_corpus,
)
from pachinko.data.config import (
    DEFAULT_CONFIG,
    LEAD_TIME_MAX,
)
from pachinko.data.io import (
    load_gazetteer,
    load_gsr,
    load_jars,
    load_tweets,
    read_json,
    write_csv,
    write_jars,
    write_json,
    write_tweets,
)
from pachinko.data.jar_grid import (
    build_jar_grid,
    drop_tweets_into_jars,
)
from pachinko.evaluation.lead_time import (
    lead_time_auc,
)
from pachinko.evaluation.models import (
    evaluate_models,
    evaluate_split,
    model_predictions,
)
from pachinko.evaluation.plot_data import (
    auc_frame,
    emit_plot_data,
    lead_time_frame,
)
from pachinko.exceptions import (
    StageFailure,
)
from pachinko.filters.filtering import (
    filter_tweets,
)
from pachinko.stats.gsr_stats import (
    FACTORS,
    proportion_table,
)
from pachinko.utils.records import (
    replace,
)

from .pipeline import (
    AUTO,
    SEED_ENVIRONMENT_VARIABLE,
    fit_classifier,
    fit_counts,
    gsr_report,
    load_pipeline_config,
    resolve_r,
    run,
    stage,
)
from .synthetic import (
    SyntheticScenario,
    generate_synthetic,
    load_scenario,
)


logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_STAGE_FAILURE = 3

# the flag spelling of the schemes
STRATA_CHOICES = tuple(scheme.replace('_', '-') for scheme in SCHEMES)


def resolve_seed(seed: Optional[int]) -> int:
    if os.environ.get(SEED_ENVIRONMENT_VARIABLE):
        try:
            return int(os.environ[SEED_ENVIRONMENT_VARIABLE])
        except ValueError as exc:
            raise ValidationError(
                "%s must be an integer" % SEED_ENVIRONMENT_VARIABLE
            ) from exc
    return 0 if seed is None else seed


def dispersion(args: argparse.Namespace) -> float:
    counts = read_json(args.counts) if getattr(args, 'counts', None) else None
    return resolve_r(args.r, counts)


#
# Subcommands
#
def cmd_filter(args: argparse.Namespace) -> None:
    gsr = load_gsr(args.gsr)
    gazetteer = load_gazetteer(args.gazetteer)
    kept, report = filter_tweets(load_tweets(args.tweets), gazetteer)
    out = Path(args.out)
    write_tweets(kept, out / 'filtered_tweets.jsonl')
    write_json(dict(report.to_dict(), gsr_rows=len(gsr)), out / 'filter_report.json')


def cmd_train_classifier(args: argparse.Namespace) -> None:
    texts, labels = load_corpus(args.corpus)
    model = fit_classifier(args.kind, texts, labels, args.folds, resolve_seed(args.seed), DEFAULT_CONFIG)
    write_model(model, args.out)


def cmd_classify(args: argparse.Namespace) -> None:
    write_tweets(classify(load_model(args.model), load_tweets(args.tweets)), args.out)


def cmd_jars(args: argparse.Namespace) -> None:
    gsr = load_gsr(args.gsr)
    fill = drop_tweets_into_jars(load_tweets(args.tweets), build_jar_grid(gsr), args.min_lead)
    write_jars(fill.jars, args.out)


def cmd_fit_counts(args: argparse.Namespace) -> None:
    report = fit_counts(load_jars(args.jars), DEFAULT_CONFIG)
    write_json({k: v for k, v in report.items() if k != 'cdf'}, args.out)
    if args.cdf:
        write_csv(pd.DataFrame(report['cdf']), args.cdf)


def cmd_predict(args: argparse.Namespace) -> None:
    r = dispersion(args)
    predictions = predict_all(
        load_gsr(args.gsr), load_jars(args.jars), StrataSpec(scheme=args.strata), args.mode, r,
    )
    write_predictions(predictions, args.out)


def cmd_evaluate(args: argparse.Namespace) -> None:
    gsr = load_gsr(args.gsr)
    jars = load_jars(args.jars)
    r = dispersion(args)
    if args.split is not None:
        evaluations = evaluate_split(gsr, jars, args.mode, r, args.split, resolve_seed(args.seed))
        write_csv(auc_frame(evaluations), Path(args.out) / 'split_auc.csv')
    else:
        by_model = model_predictions(gsr, jars, args.mode, r)
        evaluations = evaluate_models(gsr, by_model)
        emit_plot_data(args.out, gsr=gsr, predictions=by_model, evaluations=evaluations)


def cmd_leadtime(args: argparse.Namespace) -> None:
    results = lead_time_auc(
        load_gsr(args.gsr),
        load_tweets(args.tweets),
        StrataSpec(scheme=args.strata),
        args.mode,
        dispersion(args),
        range(args.min, args.max + 1),
    )
    write_csv(lead_time_frame(results), args.out)


def cmd_synth(args: argparse.Namespace) -> None:
    scenario = load_scenario(args.scenario) if args.scenario else SyntheticScenario()
    if args.seed is not None or os.environ.get(SEED_ENVIRONMENT_VARIABLE):
        scenario = replace(scenario, seed=resolve_seed(args.seed))
    generate_synthetic(scenario, args.out)


def cmd_report(args: argparse.Namespace) -> None:
    gsr = load_gsr(args.gsr)
    jars = load_jars(args.jars) if args.jars else None
    out = Path(args.out)
    write_json(gsr_report(gsr, jars, DEFAULT_CONFIG), out / 'tests.json')
    for factor in FACTORS:
        write_csv(pd.DataFrame(proportion_table(gsr, factor)), out / ('proportions_%s.csv' % factor))


def cmd_run(args: argparse.Namespace) -> None:
    config = load_pipeline_config(args.config, overrides={
        'gsr': args.gsr,
        'tweets': args.tweets,
        'corpus': args.corpus,
        'model': args.model,
        'gazetteer': args.gazetteer,
        'out_dir': args.out,
        'strata': args.strata,
        'mode': args.mode,
        'classifier': args.classifier,
        'folds': args.folds,
        'seed': args.seed,
        'r': args.r,
        'split': args.split,
        'lead_time_min': args.lead_min,
        'lead_time_max': args.lead_max,
        'ci_method': args.ci_method,
    })
    report = run(config)
    logger.info("Manifest lists %d artifacts", len(report.manifest['artifacts']))


#
# Parser
#
def add_r_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--r', type=float, help="dispersion override")
    parser.add_argument('--counts', help="count-fit JSON from fit-counts, read for r")


def add_model_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--strata', choices=STRATA_CHOICES, default='location-month')
    parser.add_argument('--mode', choices=MODES, default='days')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='pachinko',
        description="Civil-unrest event probabilities per day and city from filtered postings.",
    )
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument('-v', '--verbose', action='store_true', help="debug logging")
    verbosity.add_argument('-q', '--quiet', action='store_true', help="warnings and errors only")
    sub = parser.add_subparsers(dest='command', metavar='command')
    sub.required = True

    p = sub.add_parser('filter', help="location and temporal filters")
    p.add_argument('--gsr', required=True)
    p.add_argument('--tweets', required=True)
    p.add_argument('--gazetteer', help="gazetteer JSON (built-in capitals by default)")
    p.add_argument('--out', required=True, help="output directory")
    p.set_defaults(func=cmd_filter)

    p = sub.add_parser('train-classifier', help="train or select the relevance classifier")
    p.add_argument('--corpus', required=True, help="labelled CSV with text,label columns")
    p.add_argument('--kind', choices=(AUTO,) + KINDS, default=AUTO)
    p.add_argument('--folds', type=int, default=5)
    p.add_argument('--seed', type=int)
    p.add_argument('--out', required=True, help="model JSON")
    p.set_defaults(func=cmd_train_classifier)

    p = sub.add_parser('classify', help="mark postings relevant or not")
    p.add_argument('--model', required=True)
    p.add_argument('--tweets', required=True)
    p.add_argument('--out', required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser('jars', help="sort relevant postings into day-city jars")
    p.add_argument('--gsr', required=True)
    p.add_argument('--tweets', required=True)
    p.add_argument('--min-lead', type=int, default=0)
    p.add_argument('--out', required=True)
    p.set_defaults(func=cmd_jars)

    p = sub.add_parser('fit-counts', help="Poisson and negative binomial fits")
    p.add_argument('--jars', required=True)
    p.add_argument('--cdf', help="also write the fitted-CDF table here")
    p.add_argument('--out', required=True)
    p.set_defaults(func=cmd_fit_counts)

    p = sub.add_parser('predict', help="posterior event probability per jar")
    p.add_argument('--gsr', required=True)
    p.add_argument('--jars', required=True)
    add_model_arguments(p)
    add_r_arguments(p)
    p.add_argument('--out', required=True)
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser('evaluate', help="ROC curves and AUC per model and city")
    p.add_argument('--gsr', required=True)
    p.add_argument('--jars', required=True)
    p.add_argument('--mode', choices=MODES, default='days')
    add_r_arguments(p)
    p.add_argument('--split', type=float, help="training share for a held-out evaluation")
    p.add_argument('--seed', type=int)
    p.add_argument('--out', required=True, help="output directory")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser(
        'leadtime',
        help="AUC using only postings n or more days ahead",
        description=(
            "AUC for each n using only postings authored n or more days before their "
            "target day. When no posting is left, jars score their stratum prior, so "
            "the AUC is that of the strata alone; with --strata none it is 0.5."
        ),
    )
    p.add_argument('--gsr', required=True)
    p.add_argument('--tweets', required=True, help="classified postings")
    add_model_arguments(p)
    add_r_arguments(p)
    p.add_argument('--min', type=int, default=0)
    p.add_argument('--max', type=int, default=LEAD_TIME_MAX)
    p.add_argument('--out', required=True)
    p.set_defaults(func=cmd_leadtime)

    p = sub.add_parser('synth', help="generate a synthetic study")
    p.add_argument('--scenario', help="scenario JSON (defaults when omitted)")
    p.add_argument('--seed', type=int)
    p.add_argument('--out', required=True)
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser('report', help="chi-squared tests and proportion tables")
    p.add_argument('--gsr', required=True)
    p.add_argument('--jars')
    p.add_argument('--out', required=True)
    p.set_defaults(func=cmd_report)

    p = sub.add_parser('run', help="every stage end to end")
    p.add_argument('--config', help="pipeline config JSON")
    p.add_argument('--gsr')
    p.add_argument('--tweets')
    p.add_argument('--corpus')
    p.add_argument('--model')
    p.add_argument('--gazetteer')
    p.add_argument('--out')
    p.add_argument('--strata', choices=STRATA_CHOICES)
    p.add_argument('--mode', choices=MODES)
    p.add_argument('--classifier', choices=(AUTO,) + KINDS)
    p.add_argument('--folds', type=int)
    p.add_argument('--seed', type=int)
    p.add_argument('--r', type=float)
    p.add_argument('--split', type=float)
    p.add_argument('--lead-min', type=int)
    p.add_argument('--lead-max', type=int)
    p.add_argument('--ci-method', choices=('wilson', 'wald'))
    p.set_defaults(func=cmd_run)
    return parser


def configure_logging(verbose: bool, quiet: bool) -> None:
    level = logging.DEBUG if verbose else logging.WARNING if quiet else logging.INFO
    logging.basicConfig(level=level, format='%(levelname)s %(name)s: %(message)s')


def main(argv: Optional[Sequence[str]]=None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose, args.quiet)
    try:
        if args.command == 'run':
            args.func(args)
        else:
            with stage(args.command):
                args.func(args)
    except ValidationError as exc:
        logger.error("%s", exc)
        return EXIT_VALIDATION
    except StageFailure as exc:
        logger.error("%s", exc)
        if isinstance(exc.cause, ValidationError):
            return EXIT_VALIDATION
        return EXIT_STAGE_FAILURE
    return EXIT_OK


if __name__ == '__main__':
    sys.exit(main())
