from collections import Counter
from typing import (  # noqa: F401
    Callable,
    Dict,
    List,
    Optional,
    Sequence,
    Union,
)

from scipy import sparse
from sklearn.feature_extraction.text import CountVectorizer


# lowercase alphanumeric runs of at least two characters
TOKEN_PATTERN = r'(?u)[^\W_]{2,}'
NGRAM_RANGE = (1, 2)

Vocabulary = Dict[str, int]


def make_vectorizer(vocabulary: Optional[Vocabulary]=None) -> CountVectorizer:
    return CountVectorizer(
        lowercase=True,
        token_pattern=TOKEN_PATTERN,
        ngram_range=NGRAM_RANGE,
        vocabulary=vocabulary,
    )


_ANALYZER = make_vectorizer().build_analyzer()  # type: Callable[[str], List[str]]


def tokenize_ngrams(text: str,
                    vocabulary: Optional[Vocabulary]=None) -> Dict[Union[str, int], int]:
    """
    1- and 2-gram counts of ``text``. Without a vocabulary the keys are the
    n-grams themselves; with one, they are token ids and unknown n-grams are
    ignored.
    """
    counts = Counter(_ANALYZER(text or ''))
    if vocabulary is None:
        return dict(counts)
    return {
        vocabulary[ngram]: count
        for ngram, count in counts.items()
        if ngram in vocabulary
    }


def fit_vocabulary(texts: Sequence[str]) -> Vocabulary:
    """Vocabulary of every n-gram seen in ``texts``; ids follow sorted order."""
    vectorizer = make_vectorizer()
    try:
        vectorizer.fit(texts)
    except ValueError:
        # nothing but stop-length tokens
        return {}
    return {ngram: int(index) for ngram, index in sorted(vectorizer.vocabulary_.items())}


def vectorize(texts: Sequence[str], vocabulary: Vocabulary) -> sparse.csr_matrix:
    """Count matrix, one row (feature vector) per text."""
    if not vocabulary:
        return sparse.csr_matrix((len(texts), 0), dtype='float64')
    return make_vectorizer(vocabulary).transform(texts).astype('float64').tocsr()
