import datetime
from typing import (
    NamedTuple,
    NewType,
)


CityName = NewType('CityName', str)
StrataKey = NewType('StrataKey', str)
TweetId = NewType('TweetId', str)


class JarKey(NamedTuple):
    date: datetime.date
    city: CityName
