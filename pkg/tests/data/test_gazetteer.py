import json

from eth_utils import (
    ValidationError,
)
import pytest

from pachinko.data.city_gazetteer import (
    CityGazetteer,
    GazetteerCity,
)
from pachinko.data.config import (
    generate_config,
)
from pachinko.data.constants import (
    STUDY_CITIES,
)
from pachinko.data.io import (
    load_gazetteer,
    validate_gazetteer,
    write_gazetteer,
)


def test_default_gazetteer_covers_study_cities(gazetteer):
    assert gazetteer.city_names == list(STUDY_CITIES)
    assert gazetteer.radius_miles == 25.0
    assert 'Melb' in gazetteer.get('Melbourne').aliases
    assert gazetteer.get('Auckland') is None


def test_load_without_path_uses_default(gazetteer):
    assert load_gazetteer() == gazetteer


def test_write_and_load(tmp_path, gazetteer):
    path = tmp_path / 'gazetteer.json'
    write_gazetteer(gazetteer, path)
    assert load_gazetteer(path) == gazetteer


def test_list_form_with_custom_radius(tmp_path):
    path = tmp_path / 'gazetteer.json'
    path.write_text(json.dumps([
        {'name': 'Perth', 'lat': -31.9505, 'lon': 115.8605},
        {'name': 'Darwin', 'aliases': ['Top End'], 'lat': -12.4634, 'lon': 130.8456},
    ]))
    config = generate_config(cities=('Perth', 'Darwin'), radius_miles=10.0)
    loaded = load_gazetteer(path, config)
    assert loaded.radius_miles == 10.0
    assert loaded.get('Darwin').names == ['Darwin', 'Top End']


@pytest.mark.parametrize(
    'cities, radius',
    [
        ([GazetteerCity(name='Perth', lat=-31.9, lon=115.8)] * 2, 25.0),
        ([GazetteerCity(name='Perth', lat=-31.9, lon=115.8)], 0.0),
        ([GazetteerCity(name='Perth', lat=-91.0, lon=115.8)], 25.0),
    ]
)
def test_invalid_gazetteer(cities, radius):
    config = generate_config(cities=('Perth',))
    with pytest.raises(ValidationError):
        validate_gazetteer(CityGazetteer(cities=cities, radius_miles=radius), config)


def test_missing_configured_city():
    gazetteer = CityGazetteer(cities=[GazetteerCity(name='Perth', lat=-31.9, lon=115.8)])
    with pytest.raises(ValidationError):
        validate_gazetteer(gazetteer)
