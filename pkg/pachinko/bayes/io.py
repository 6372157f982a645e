import datetime
from pathlib import Path
from typing import (  # noqa: F401
    Dict,
    List,
    Sequence,
    Union,
)

import pandas as pd

from pachinko.data.io import (
    csv_line,
    read_csv_strings,
    write_csv,
)
from pachinko.exceptions import (
    ParseError,
)

from .beta_params import (
    BetaParams,
)
from .prediction_record import (
    PredictionRecord,
)


PREDICTION_COLUMNS = (
    'date', 'city', 'stratum', 'y', 'alpha_post', 'beta_post', 'posterior_mean',
    'ci_low', 'ci_high', 'evidence_ids',
)


def predictions_frame(predictions: Sequence[PredictionRecord]) -> pd.DataFrame:
    return pd.DataFrame(
        [
            {
                'date': p.date.isoformat(),
                'city': p.city,
                'stratum': p.stratum,
                'y': p.y,
                'alpha_post': p.posterior.a,
                'beta_post': p.posterior.b,
                'posterior_mean': p.posterior_mean,
                'ci_low': p.ci_low,
                'ci_high': p.ci_high,
                'evidence_ids': ';'.join(p.evidence),
            }
            for p in predictions
        ],
        columns=list(PREDICTION_COLUMNS),
    )


def write_predictions(predictions: Sequence[PredictionRecord], path: Union[str, Path]) -> None:
    write_csv(predictions_frame(predictions), path)


def load_predictions(path: Union[str, Path]) -> List[PredictionRecord]:
    frame = read_csv_strings(path, required=PREDICTION_COLUMNS[:7])
    predictions = []  # type: List[PredictionRecord]
    for row_index, row in enumerate(frame.to_dict('records')):
        try:
            predictions.append(PredictionRecord(
                date=datetime.date.fromisoformat(row['date'].strip()),
                city=row['city'].strip(),
                stratum=row['stratum'],
                y=int(row['y']),
                posterior=BetaParams(a=float(row['alpha_post']), b=float(row['beta_post'])),
                posterior_mean=float(row['posterior_mean']),
                ci_low=float(row['ci_low']) if row.get('ci_low') else None,
                ci_high=float(row['ci_high']) if row.get('ci_high') else None,
                evidence=[i for i in row.get('evidence_ids', '').split(';') if i],
            ))
        except ValueError as exc:
            raise ParseError(str(exc), path=str(path), line=csv_line(row_index)) from exc
    return predictions
