import numpy as np
import pytest

POSITIVE_WORDS = ('protest', 'rally', 'strike', 'blockade', 'picket', 'demonstration')
NEGATIVE_WORDS = ('concert', 'brunch', 'festival', 'market', 'footy', 'cafe')
SHARED_WORDS = ('sydney', 'perth', 'hobart', 'tomorrow', 'today', 'great', 'city', 'people')


def make_corpus(size, seed):
    rng = np.random.default_rng(seed)
    texts = []
    labels = []
    for i in range(size):
        positive = i % 2 == 0
        own = POSITIVE_WORDS if positive else NEGATIVE_WORDS
        words = [own[rng.integers(len(own))]]
        words += [SHARED_WORDS[rng.integers(len(SHARED_WORDS))] for _ in range(3)]
        rng.shuffle(words)
        texts.append(' '.join(words))
        labels.append(positive)
    return texts, labels


@pytest.fixture(scope="module")
def corpus_200():
    return make_corpus(200, seed=1)


@pytest.fixture(scope="module")
def corpus_400():
    return make_corpus(400, seed=2)


BLOCK_WORDS = (
    'alpha', 'bravo', 'charlie', 'delta', 'echo', 'foxtrot', 'golf', 'hotel',
    'india', 'juliet', 'kilo', 'lima', 'mike', 'november', 'oscar',
)


def make_redundant_corpus():
    """
    "protest" is right 90% of the time. A block of always co-occurring words
    is right 70% of the time and is counted once per word and bigram by
    Naive Bayes, so only the linear models follow "protest".
    """
    # (protest, block) -> (positives, negatives)
    cells = {
        (True, True): (54, 14),
        (True, False): (126, 6),
        (False, True): (6, 126),
        (False, False): (14, 54),
    }
    texts = []
    labels = []
    for (protest, block), (positives, negatives) in sorted(cells.items()):
        words = list(BLOCK_WORDS) if block else []
        if protest:
            words.append('protest')
        words.append('today')
        texts.extend([' '.join(words)] * (positives + negatives))
        labels.extend([True] * positives + [False] * negatives)
    return texts, labels


@pytest.fixture(scope="module")
def redundant_corpus():
    return make_redundant_corpus()
