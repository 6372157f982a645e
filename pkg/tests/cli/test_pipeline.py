import json

from eth_utils import (
    ValidationError,
)
import pytest

from pachinko.cli.pipeline import (
    MANIFEST_NAME,
    PipelineConfig,
    load_pipeline_config,
    resolve_r,
    run,
    validate_pipeline_config,
)
from pachinko.exceptions import (
    ParseError,
    StageFailure,
)
from pachinko.utils.blake import (
    blake_file,
)
from pachinko.utils.records import (
    replace,
)

EXPECTED_ARTIFACTS = {
    'filtered_tweets.jsonl',
    'filter_report.json',
    'model.json',
    'classified_tweets.jsonl',
    'jars.csv',
    'counts.json',
    'count_cdf.csv',
    'predictions.csv',
    'plots/tiles_truth.csv',
    'plots/tiles_location_month.csv',
    'plots/intervals_location_month.csv',
    'plots/roc.csv',
    'plots/roc_by_city.csv',
    'plots/auc.csv',
    'plots/leadtime.csv',
    'plots/strata_posteriors.csv',
    'plots/strata_density.csv',
    'split_auc.csv',
    'tests.json',
}


@pytest.fixture
def pipeline_config(small_study, tmp_path):
    return PipelineConfig(
        gsr=str(small_study.gsr),
        tweets=str(small_study.tweets),
        corpus=str(small_study.corpus),
        gazetteer=str(small_study.gazetteer),
        out_dir=str(tmp_path / 'out'),
        classifier='bernoulli_nb',
        folds=3,
        lead_time_max=2,
        split=0.7,
    )


def scratch_dirs(parent):
    return [p for p in parent.iterdir() if p.name.startswith('.pachinko-')]


def test_run_end_to_end(pipeline_config, tmp_path):
    report = run(pipeline_config)
    out = tmp_path / 'out'
    manifest = json.loads((out / MANIFEST_NAME).read_text())
    assert manifest == report.manifest

    paths = {artifact['path'] for artifact in manifest['artifacts']}
    assert paths == EXPECTED_ARTIFACTS
    for artifact in manifest['artifacts']:
        assert blake_file(out / artifact['path']) == artifact['blake2b']
        assert (out / artifact['path']).stat().st_size == artifact['bytes']

    assert set(manifest['inputs']) == {'corpus', 'gazetteer', 'gsr', 'tweets'}
    assert manifest['inputs']['gsr']['file'] == 'gsr.csv'
    assert manifest['settings']['strata'] == 'location_month'
    assert manifest['settings']['r_source'] == 'negbinom'
    assert manifest['settings']['r'] > 0
    assert str(tmp_path) not in (out / MANIFEST_NAME).read_text()
    assert scratch_dirs(tmp_path) == []

    tests = json.loads((out / 'tests.json').read_text())
    assert tests['rows'] == 90
    assert set(tests['chi_squared']) == {'city', 'month', 'weekday'}


def test_runs_are_byte_identical(pipeline_config, tmp_path):
    run(replace(pipeline_config, out_dir=str(tmp_path / 'first')))
    run(replace(pipeline_config, out_dir=str(tmp_path / 'second')))
    first = (tmp_path / 'first' / MANIFEST_NAME).read_bytes()
    second = (tmp_path / 'second' / MANIFEST_NAME).read_bytes()
    assert first == second


def test_run_with_r_override(pipeline_config, tmp_path):
    report = run(replace(pipeline_config, r=0.5, split=None, strata='none'))
    assert report.manifest['settings']['r'] == 0.5
    assert report.manifest['settings']['r_source'] == 'override'
    paths = {artifact['path'] for artifact in report.manifest['artifacts']}
    assert 'split_auc.csv' not in paths
    assert 'plots/tiles_none.csv' in paths


def test_missing_gsr_names_the_path(pipeline_config, tmp_path):
    missing = str(tmp_path / 'nowhere' / 'gsr.csv')
    with pytest.raises(ValidationError, match='nowhere'):
        run(replace(pipeline_config, gsr=missing))
    assert not (tmp_path / 'out').exists()


def test_failed_stage_leaves_no_output(pipeline_config, tmp_path):
    broken = tmp_path / 'broken.jsonl'
    broken.write_text('{"id": "t1", "text": \n')
    with pytest.raises(StageFailure) as excinfo:
        run(replace(pipeline_config, tweets=str(broken)))
    assert excinfo.value.stage == 'load'
    assert isinstance(excinfo.value.cause, ParseError)
    assert not (tmp_path / 'out').exists()
    assert scratch_dirs(tmp_path) == []


def test_failure_after_writes_leaves_no_output(pipeline_config, tmp_path, mocker):
    mocker.patch('pachinko.cli.pipeline.gsr_report', side_effect=RuntimeError('boom'))
    with pytest.raises(StageFailure) as excinfo:
        run(pipeline_config)
    assert excinfo.value.stage == 'report'
    assert not (tmp_path / 'out').exists()
    assert scratch_dirs(tmp_path) == []


@pytest.mark.parametrize(
    'changes',
    [
        {'corpus': None},
        {'strata': 'weekday'},
        {'mode': 'hours'},
        {'classifier': 'forest'},
        {'lead_time_min': 5, 'lead_time_max': 2},
        {'ci_method': 'exact'},
        {'r': 0.0},
        {'split': 1.0},
    ]
)
def test_invalid_pipeline_config(pipeline_config, changes):
    with pytest.raises(ValidationError):
        validate_pipeline_config(replace(pipeline_config, **changes))


def test_config_file_paths_are_relative_to_file(tmp_path):
    (tmp_path / 'gsr.csv').write_text('date,city,event\n')
    path = tmp_path / 'pipeline.json'
    path.write_text(json.dumps({
        'gsr': 'gsr.csv',
        'tweets': 'tweets.jsonl',
        'corpus': 'corpus.csv',
        'out_dir': 'out',
        'seed': 3,
    }))
    config = load_pipeline_config(path, environ={})
    assert config.gsr == str(tmp_path / 'gsr.csv')
    assert config.out_dir == str(tmp_path / 'out')
    assert config.seed == 3
    assert config.strata == 'location_month'


def test_overrides_and_seed_environment(tmp_path):
    path = tmp_path / 'pipeline.json'
    path.write_text(json.dumps({'gsr': 'g.csv', 'tweets': 't.jsonl', 'out_dir': 'o', 'seed': 3}))
    config = load_pipeline_config(
        path,
        overrides={'strata': 'month', 'mode': None},
        environ={'PACHINKO_SEED': '11'},
    )
    assert config.strata == 'month'
    assert config.mode == 'days'
    assert config.seed == 11


@pytest.mark.parametrize(
    'data, environ',
    [
        ({'gsr': 'g', 'tweets': 't', 'out_dir': 'o', 'colour': 'red'}, {}),
        ({'gsr': 'g', 'out_dir': 'o'}, {}),
        ({'gsr': 'g', 'tweets': 't', 'out_dir': 'o'}, {'PACHINKO_SEED': 'seven'}),
    ]
)
def test_bad_pipeline_config_file(tmp_path, data, environ):
    path = tmp_path / 'pipeline.json'
    path.write_text(json.dumps(data))
    with pytest.raises(ValidationError):
        load_pipeline_config(path, environ=environ)


def test_resolve_r():
    assert resolve_r(0.3, None) == 0.3
    assert resolve_r(None, {'r': 1.25}) == 1.25
    assert resolve_r(0.3, {'r': 1.25}) == 0.3
    with pytest.raises(ValidationError, match='--r'):
        resolve_r(None, None)
