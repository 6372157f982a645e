import numpy as np
import pytest
from sklearn.naive_bayes import GaussianNB

from pachinko.classifier import (
    training,
)
from pachinko.classifier.trained_classifier import (
    BERNOULLI_NB,
    GAUSSIAN_NB,
    KINDS,
    SVM_L1,
    SVM_L2,
    bias_class,
    load_model,
    predict_texts,
    write_model,
)
from pachinko.classifier.training import (
    classify,
    confusion_counts,
    cross_validate_kind,
    f1_score,
    fold_indices,
    load_corpus,
    select_model,
    train,
)
from pachinko.exceptions import (
    ParseError,
    TrainingError,
)

from tests.helpers import (
    make_tweet,
)


@pytest.mark.parametrize(
    'tp, fp, fn, expected',
    [
        (10, 0, 0, 1.0),
        (2, 1, 1, 2 / 3),
        (0, 5, 5, 0.0),
    ]
)
def test_f1_score(tp, fp, fn, expected):
    assert f1_score(tp, fp, fn) == pytest.approx(expected, abs=1e-12)


@pytest.mark.parametrize('tp', [1, 2, 5, 13])
def test_f1_never_rises_with_more_errors(tp):
    for fp in range(6):
        for fn in range(6):
            score = f1_score(tp, fp, fn)
            assert 0.0 <= score <= 1.0
            assert f1_score(tp, fp + 1, fn) <= score
            assert f1_score(tp, fp, fn + 1) <= score


def test_f1_without_positives():
    with pytest.raises(ValueError):
        f1_score(0, 3, 0)


def test_confusion_counts():
    assert confusion_counts([True, True, False, False], [True, False, True, False]) == (1, 1, 1)


def test_single_class_rejected():
    with pytest.raises(TrainingError):
        train(SVM_L2, ['protest', 'rally'], [True, True])


def test_unknown_kind_rejected():
    with pytest.raises(TrainingError):
        train('random_forest', ['protest', 'cat'], [True, False])


def test_bernoulli_two_documents():
    model = train(BERNOULLI_NB, ['protest', 'cat'], [True, False])
    assert predict_texts(model, ['protest', 'cat']).tolist() == [True, False]


@pytest.mark.parametrize('kind', [SVM_L2, SVM_L1])
def test_svm_separates_two_points(kind):
    texts = ['protest', 'cat'] * 5
    labels = [True, False] * 5
    model = train(kind, texts, labels)
    assert predict_texts(model, ['protest', 'cat']).tolist() == [True, False]


@pytest.mark.parametrize('kind', KINDS)
def test_training_set_f1(kind, corpus_200):
    texts, labels = corpus_200
    model = train(kind, texts, labels, seed=0)
    tp, fp, fn = confusion_counts(labels, predict_texts(model, texts))
    assert f1_score(tp, fp, fn) >= 0.95
    assert model.metadata == {'documents': 200, 'positives': 100, 'negatives': 100, 'seed': 0}


@pytest.mark.parametrize('kind', KINDS)
def test_training_example_is_relevant(kind, corpus_200):
    texts, labels = corpus_200
    model = train(kind, texts, labels)
    positive = texts[labels.index(True)]
    (tweet,) = classify(model, [make_tweet(text=positive)])
    assert tweet.relevant is True


@pytest.mark.parametrize('kind', KINDS)
def test_out_of_vocabulary_text_gets_bias_class(kind, corpus_200):
    texts, labels = corpus_200
    model = train(kind, texts, labels)
    assert predict_texts(model, ['zzz qqq xyzzy'])[0] == bias_class(model)


def test_classify_empty():
    model = train(BERNOULLI_NB, ['protest', 'cat'], [True, False])
    assert classify(model, []) == []


def test_fold_indices_reproducible(corpus_400):
    _, labels = corpus_400
    first = fold_indices(labels, 5, seed=11)
    second = fold_indices(labels, 5, seed=11)
    other = fold_indices(labels, 5, seed=12)

    assert len(first) == 5
    for (train_a, test_a), (train_b, test_b) in zip(first, second):
        assert np.array_equal(train_a, train_b)
        assert np.array_equal(test_a, test_b)
    assert any(not np.array_equal(a[1], b[1]) for a, b in zip(first, other))
    covered = np.sort(np.concatenate([test for _, test in first]))
    assert covered.tolist() == list(range(len(labels)))


def test_select_model_on_separable_corpus(corpus_400):
    texts, labels = corpus_400
    model = select_model(texts, labels, folds=5, seed=0)

    assert model.cv_f1 >= 0.95
    assert set(model.cv_scores) == set(KINDS)
    assert model.cv_f1 == max(model.cv_scores.values())
    assert model.metadata['folds'] == 5


def test_tied_scores_pick_svm_l2(mocker, corpus_400):
    texts, labels = corpus_400
    mocker.patch('pachinko.classifier.training.cross_validate_kind', return_value=0.9)
    assert select_model(texts, labels).kind == SVM_L2


def test_dominant_kind_selected(redundant_corpus):
    texts, labels = redundant_corpus
    model = select_model(texts, labels, folds=5, seed=0)

    svm_scores = [model.cv_scores[kind] for kind in (SVM_L2, SVM_L1)]
    nb_scores = [model.cv_scores[kind] for kind in (BERNOULLI_NB, GAUSSIAN_NB)]
    assert min(svm_scores) > max(nb_scores) + 0.1
    assert model.kind in (SVM_L2, SVM_L1)
    assert model.cv_f1 == max(model.cv_scores.values())


@pytest.mark.parametrize('kind', KINDS)
def test_validation_only_token_does_not_change_fold_score(kind, corpus_200):
    texts, labels = corpus_200
    for train_index, validation_index in fold_indices(labels, 5, seed=3):
        model = train(kind, [texts[i] for i in train_index], [labels[i] for i in train_index])
        assert not any('xyzzy' in ngram for ngram in model.vocabulary)

        truth = [labels[i] for i in validation_index]
        plain = [texts[i] for i in validation_index]
        planted = [text + ' xyzzy' for text in plain]
        assert (
            f1_score(*confusion_counts(truth, predict_texts(model, planted))) ==
            f1_score(*confusion_counts(truth, predict_texts(model, plain)))
        )


def test_cross_validation_vocabulary_sees_training_fold_only(mocker, corpus_200):
    texts, labels = corpus_200
    planted = list(texts)
    _, first_validation = fold_indices(labels, 5, seed=0)[0]
    for i in first_validation:
        planted[i] = planted[i] + ' xyzzy'
    spy = mocker.spy(training, 'fit_vocabulary')

    cross_validate_kind(SVM_L2, planted, labels, folds=5, seed=0)

    assert spy.call_count == 5
    assert all(len(call.args[0]) == 160 for call in spy.call_args_list)
    first_fold_texts = spy.call_args_list[0].args[0]
    assert not any('xyzzy' in text for text in first_fold_texts)


def test_duplicated_corpus_keeps_gaussian_predictions(corpus_200):
    texts, labels = corpus_200
    once = train(GAUSSIAN_NB, texts, labels)
    twice = train(GAUSSIAN_NB, texts * 2, labels * 2)

    assert twice.vocabulary == once.vocabulary
    for name in ('theta', 'var', 'class_log_prior'):
        assert np.allclose(twice.parameters[name], once.parameters[name], rtol=1e-9, atol=0)
    queries = texts + ['protest today', 'brunch sydney', 'rally cafe', 'zzz']
    assert predict_texts(twice, queries).tolist() == predict_texts(once, queries).tolist()


def test_duplicated_corpus_shifts_bernoulli_smoothing():
    # add-one smoothing turns (c + 1) / (n + 2) into (2c + 1) / (2n + 2)
    texts = ['aa', 'bb cc aa', 'cc ee dd', 'bb dd aa', 'cc ee', 'ee', 'dd']
    labels = [False, True, False, True, False, True, False]
    once = train(BERNOULLI_NB, texts, labels)
    twice = train(BERNOULLI_NB, texts * 2, labels * 2)
    assert predict_texts(once, ['ee bb']).tolist() == [False]
    assert predict_texts(twice, ['ee bb']).tolist() == [True]


def test_gaussian_variance_floor_is_absolute(config):
    texts = ['march march march march', 'march', 'cat', 'cat']
    labels = [True, True, False, False]
    model = train(GAUSSIAN_NB, texts, labels, config=config)
    var = np.asarray(model.parameters['var'])
    cat = model.vocabulary['cat']
    assert var[0, cat] == config['gaussian_var_floor']
    assert var[1, cat] == config['gaussian_var_floor']
    assert var.min() == config['gaussian_var_floor']


def test_gaussian_fit_in_chunks(mocker, corpus_200):
    texts, labels = corpus_200
    whole = train(GAUSSIAN_NB, texts, labels)
    mocker.patch('pachinko.classifier.training.GAUSSIAN_CHUNK_CELLS', 50)
    spy = mocker.spy(GaussianNB, 'partial_fit')
    chunked = train(GAUSSIAN_NB, texts, labels)

    assert spy.call_count > 1
    for name in ('theta', 'var', 'class_log_prior'):
        assert np.allclose(chunked.parameters[name], whole.parameters[name], rtol=1e-9, atol=1e-12)


def test_empty_vocabulary_rejected():
    with pytest.raises(TrainingError):
        train(GAUSSIAN_NB, ['a b', 'c d'], [True, False])


@pytest.mark.parametrize('kind', KINDS)
def test_model_file_round_trip(tmp_path, kind, corpus_200):
    texts, labels = corpus_200
    model = train(kind, texts, labels)
    path = tmp_path / 'model.json'
    write_model(model, path)
    loaded = load_model(path)

    assert loaded.kind == kind
    assert np.allclose(
        predict_texts(loaded, texts[:20]).astype(int), predict_texts(model, texts[:20]).astype(int),
    )


def test_model_version_checked(tmp_path):
    path = tmp_path / 'model.json'
    path.write_text('{"format_version": 99, "kind": "svm_l2"}')
    with pytest.raises(ParseError):
        load_model(path)


def test_load_corpus(tmp_path):
    path = tmp_path / 'corpus.csv'
    path.write_text('text,label\nprotest tomorrow,1\nbrunch today,0\n')
    assert load_corpus(path) == (['protest tomorrow', 'brunch today'], [True, False])

    path.write_text('text,label\nprotest tomorrow,perhaps\n')
    with pytest.raises(ParseError):
        load_corpus(path)
