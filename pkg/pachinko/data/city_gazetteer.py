from typing import (  # noqa: F401
    Any,
    Dict,
    List,
    Optional,
)

from pachinko.data.config import (
    RADIUS_MILES,
)
from pachinko.data.constants import (
    DEFAULT_GAZETTEER_ENTRIES,
)
from pachinko.utils.records import (
    Record,
)


class GazetteerCity(Record):
    fields = {
        # Canonical name, used as the city identifier
        'name': 'str',
        # Alternative spellings matched like the name
        'aliases': ['str'],
        # Centre of the city, degrees
        'lat': 'float',
        'lon': 'float',
    }

    defaults = {
        'aliases': [],
    }  # type: Dict[str, Any]

    @property
    def names(self) -> List[str]:
        return [self.name] + list(self.aliases)


class CityGazetteer(Record):
    fields = {
        # Order matters: it breaks ties between matching cities
        'cities': [GazetteerCity],
        'radius_miles': 'float',
    }

    defaults = {
        'cities': [],
        'radius_miles': RADIUS_MILES,
    }  # type: Dict[str, Any]

    @property
    def city_names(self) -> List[str]:
        return [city.name for city in self.cities]

    def get(self, name: str) -> Optional[GazetteerCity]:
        for city in self.cities:
            if city.name == name:
                return city
        return None


def get_default_gazetteer(radius_miles: float=RADIUS_MILES) -> CityGazetteer:
    return CityGazetteer(
        cities=[
            GazetteerCity(name=name, aliases=list(aliases), lat=lat, lon=lon)
            for name, aliases, lat, lon in DEFAULT_GAZETTEER_ENTRIES
        ],
        radius_miles=radius_miles,
    )
