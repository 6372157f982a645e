import datetime

from pachinko.pachinko_typing.custom import (
    CityName,
)


STUDY_START = datetime.date(2017, 7, 21)
STUDY_END = datetime.date(2018, 2, 14)

STUDY_CITIES = (
    CityName('Adelaide'),
    CityName('Brisbane'),
    CityName('Canberra'),
    CityName('Darwin'),
    CityName('Hobart'),
    CityName('Melbourne'),
    CityName('Perth'),
    CityName('Sydney'),
)

# name, aliases, centre latitude, centre longitude
DEFAULT_GAZETTEER_ENTRIES = (
    ('Adelaide', ('Adel',), -34.9285, 138.6007),
    ('Brisbane', ('Brissie', 'Brisvegas'), -27.4698, 153.0251),
    ('Canberra', (), -35.2809, 149.1300),
    ('Darwin', (), -12.4634, 130.8456),
    ('Hobart', (), -42.8821, 147.3272),
    ('Melbourne', ('Melb',), -37.8136, 144.9631),
    ('Perth', (), -31.9505, 115.8605),
    ('Sydney', ('Syd',), -33.8688, 151.2093),
)

MONTH_ABBREVIATIONS = (
    'Jan', 'Feb', 'Mar', 'Apr', 'May', 'Jun',
    'Jul', 'Aug', 'Sep', 'Oct', 'Nov', 'Dec',
)
WEEKDAY_ABBREVIATIONS = ('Mon', 'Tue', 'Wed', 'Thu', 'Fri', 'Sat', 'Sun')
