from pathlib import Path
from typing import (  # noqa: F401
    Any,
    Dict,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
    Union,
)

import pandas as pd

from pachinko.bayes.prediction_record import (
    PredictionRecord,
)
from pachinko.data.gsr_record import (
    GsrRecord,
)
from pachinko.data.io import (
    write_csv,
)

from .lead_time import (
    LeadTimeResult,
)
from .models import (
    Evaluation,
)


PathLike = Union[str, Path]

TILE_COLUMNS = ('date', 'city', 'value')
ROC_COLUMNS = ('model', 'fpr', 'tpr', 'threshold')
CITY_ROC_COLUMNS = ('model', 'city', 'fpr', 'tpr', 'threshold')
AUC_COLUMNS = ('model', 'slice', 'auc')
LEAD_TIME_COLUMNS = ('n', 'auc', 'tweets')
INTERVAL_COLUMNS = ('date', 'city', 'posterior_mean', 'ci_low', 'ci_high')

OVERALL_SLICE = 'overall'


def truth_tiles(gsr: Sequence[GsrRecord]) -> pd.DataFrame:
    rows = [
        {'date': g.date.isoformat(), 'city': g.city, 'value': int(g.event)}
        for g in sorted(gsr, key=lambda g: g.key)
    ]
    return pd.DataFrame(rows, columns=list(TILE_COLUMNS))


def prediction_tiles(predictions: Sequence[PredictionRecord]) -> pd.DataFrame:
    rows = [
        {'date': p.date.isoformat(), 'city': p.city, 'value': p.posterior_mean}
        for p in predictions
    ]
    return pd.DataFrame(rows, columns=list(TILE_COLUMNS))


def interval_frame(predictions: Sequence[PredictionRecord]) -> pd.DataFrame:
    rows = [
        {
            'date': p.date.isoformat(),
            'city': p.city,
            'posterior_mean': p.posterior_mean,
            'ci_low': p.ci_low,
            'ci_high': p.ci_high,
        }
        for p in predictions
    ]
    return pd.DataFrame(rows, columns=list(INTERVAL_COLUMNS))


def roc_frame(evaluations: Mapping[str, Evaluation]) -> pd.DataFrame:
    rows = [
        {'model': name, 'fpr': fpr, 'tpr': tpr, 'threshold': threshold}
        for name, evaluation in evaluations.items()
        for fpr, tpr, threshold in zip(
            evaluation.curve.fpr, evaluation.curve.tpr, evaluation.curve.thresholds,
        )
    ]
    return pd.DataFrame(rows, columns=list(ROC_COLUMNS))


def city_roc_frame(evaluations: Mapping[str, Evaluation]) -> pd.DataFrame:
    rows = [
        {'model': name, 'city': city, 'fpr': fpr, 'tpr': tpr, 'threshold': threshold}
        for name, evaluation in evaluations.items()
        for city, (curve, _) in evaluation.per_city.items()
        for fpr, tpr, threshold in zip(curve.fpr, curve.tpr, curve.thresholds)
    ]
    return pd.DataFrame(rows, columns=list(CITY_ROC_COLUMNS))


def auc_frame(evaluations: Mapping[str, Evaluation]) -> pd.DataFrame:
    rows = []  # type: List[Dict[str, Any]]
    for name, evaluation in evaluations.items():
        rows.append({'model': name, 'slice': OVERALL_SLICE, 'auc': evaluation.auc})
        rows.extend(
            {'model': name, 'slice': city, 'auc': city_auc}
            for city, (_, city_auc) in evaluation.per_city.items()
        )
    return pd.DataFrame(rows, columns=list(AUC_COLUMNS))


def lead_time_frame(results: Sequence[LeadTimeResult]) -> pd.DataFrame:
    return pd.DataFrame(
        [{'n': r.n, 'auc': r.auc, 'tweets': r.tweets} for r in results],
        columns=list(LEAD_TIME_COLUMNS),
    )


def emit_plot_data(out_dir: PathLike,
                   gsr: Optional[Sequence[GsrRecord]]=None,
                   predictions: Optional[Mapping[str, Sequence[PredictionRecord]]]=None,
                   evaluations: Optional[Mapping[str, Evaluation]]=None,
                   lead_time: Optional[Sequence[LeadTimeResult]]=None,
                   strata_tables: Optional[Mapping[str, Sequence[Dict[str, Any]]]]=None) -> List[Path]:
    """
    Write whichever plot inputs are given under ``out_dir`` and return the
    written paths in order. File names carry the model or table name.
    """
    out = Path(out_dir)
    frames = []  # type: List[Tuple[str, pd.DataFrame]]
    if gsr is not None:
        frames.append(('tiles_truth.csv', truth_tiles(gsr)))
    for name, records in (predictions or {}).items():
        frames.append(('tiles_%s.csv' % name, prediction_tiles(records)))
        frames.append(('intervals_%s.csv' % name, interval_frame(records)))
    if evaluations is not None:
        frames.append(('roc.csv', roc_frame(evaluations)))
        frames.append(('roc_by_city.csv', city_roc_frame(evaluations)))
        frames.append(('auc.csv', auc_frame(evaluations)))
    if lead_time is not None:
        frames.append(('leadtime.csv', lead_time_frame(lead_time)))
    for name, rows in (strata_tables or {}).items():
        frames.append(('%s.csv' % name, pd.DataFrame(list(rows))))

    written = []
    for file_name, frame in frames:
        path = out / file_name
        write_csv(frame, path)
        written.append(path)
    return written
