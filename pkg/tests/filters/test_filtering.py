import datetime

from pachinko.data.tweet_record import (
    GeoPoint,
)
from pachinko.filters.filtering import (
    apply_filters,
    filter_tweets,
)

from tests.helpers import (
    make_tweet,
)


def fixture_tweets():
    return [
        make_tweet(id='1', text='protest tomorrow', bio_location='Melbourne, Australia'),
        make_tweet(id='2', text='rally on Friday', geo=GeoPoint(lat=-31.8058, lon=115.8605)),
        make_tweet(id='3', text='Sydney rally next week'),
        make_tweet(id='4', text='Sydney march yesterday'),
        make_tweet(id='5', text='nothing to see here tomorrow'),
        make_tweet(id='6', text='rally tomorrow', bio_location='Perthshire'),
        make_tweet(id='7', text='Brisbane and Sydney strike tomorrow'),
        make_tweet(id='8', text='rally tomorrow', geo=GeoPoint(lat=-36.85, lon=174.76)),
        make_tweet(id='9', text='Hobart rally on 2017-12-01'),
        make_tweet(id='10', text='Darwin'),
    ]


def test_four_survivors_with_annotations(gazetteer):
    kept = apply_filters(fixture_tweets(), gazetteer)

    assert [t.id for t in kept] == ['1', '2', '3', '7']
    assert [t.matched_city for t in kept] == ['Melbourne', 'Perth', 'Sydney', 'Brisbane']
    assert [sorted(t.resolved_target_dates) for t in kept] == [
        [datetime.date(2018, 1, 3)],
        [datetime.date(2018, 1, 5)],
        [datetime.date(2018, 1, 9)],
        [datetime.date(2018, 1, 3)],
    ]
    assert [t.ambiguous_city for t in kept] == [False, False, False, True]
    assert all(t.relevant is None for t in kept)


def test_filter_report(gazetteer):
    _, report = filter_tweets(fixture_tweets(), gazetteer)

    assert report.presented == 10
    assert report.kept == 4
    assert report.no_city == 3
    assert report.no_future_date == 3
    assert report.ambiguous == 1
    assert report.per_city['Melbourne'] == 1
    assert report.per_city['Darwin'] == 0
    assert report.to_dict()['kept'] == 4


def test_output_is_subset_of_input(gazetteer):
    tweets = fixture_tweets()
    kept = apply_filters(tweets, gazetteer)
    originals = {t.id: t for t in tweets}
    for tweet in kept:
        assert tweet.text == originals[tweet.id].text
        assert tweet.authored_at == originals[tweet.id].authored_at
        assert originals[tweet.id].matched_city is None
