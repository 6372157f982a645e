import pytest

from pachinko.cli.synthetic import (
    SyntheticScenario,
    generate_synthetic,
)


@pytest.fixture(scope="session")
def small_scenario():
    return SyntheticScenario(
        cities=['Melbourne', 'Perth', 'Sydney'],
        p_event=0.3,
        days=30,
        lead_days=[0, 1, 2, 3],
        corpus_size=60,
        seed=21,
    )


@pytest.fixture(scope="session")
def small_study(tmp_path_factory, small_scenario):
    return generate_synthetic(small_scenario, tmp_path_factory.mktemp('study'))
