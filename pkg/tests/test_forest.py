"""Tests for the bagged random-forest classifier."""

import numpy as np
import pytest

from ntzeros import ForestClassifier
from ntzeros.forest import balanced_class_weights
from synthdata import make_records
from ntzeros.features import build_dataset


def toy_blobs(n_per=30, seed=0):
    rng = np.random.default_rng(seed)
    centers = np.array([[0.0, 0.0], [4.0, 0.0], [0.0, 4.0]])
    X = np.vstack([c + rng.normal(scale=0.5, size=(n_per, 2)) for c in centers])
    y = np.repeat([10, 20, 30], n_per)
    return X, y


def test_balanced_class_weights_formula():
    # N / (K * count): 4 samples, 2 classes, counts 3 and 1.
    w = balanced_class_weights(np.array([1, 1, 1, 2]))
    assert w == {1: pytest.approx(4 / 6), 2: pytest.approx(2.0)}


def test_forest_fits_separable_blobs():
    X, y = toy_blobs()
    clf = ForestClassifier(n_trees=25, seed=0).fit(X, y)
    assert list(clf.classes_) == [10, 20, 30]
    assert clf.score(X, y) == 1.0
    proba = clf.predict_proba(X)
    assert proba.shape == (90, 3)
    assert np.allclose(proba.sum(axis=1), 1.0)
    assert np.all(proba >= 0.0)


def test_forest_predictions_match_argmax_of_proba():
    X, y = toy_blobs(seed=3)
    clf = ForestClassifier(n_trees=15, seed=1).fit(X, y)
    proba = clf.predict_proba(X)
    pred = clf.predict(X)
    assert np.array_equal(pred, clf.classes_[np.argmax(proba, axis=1)])


def test_forest_deterministic_for_fixed_seed():
    X, y = toy_blobs(seed=5)
    # Probe points between the blob centers, where tree votes disagree.
    probe = np.array([[2.0, 0.5], [0.5, 2.0], [2.0, 2.0], [1.4, 1.4]])
    a = ForestClassifier(n_trees=20, seed=7).fit(X, y).predict_proba(probe)
    b = ForestClassifier(n_trees=20, seed=7).fit(X, y).predict_proba(probe)
    assert np.array_equal(a, b)
    c = ForestClassifier(n_trees=20, seed=8).fit(X, y).predict_proba(probe)
    assert not np.array_equal(a, c)


def test_forest_invariant_to_worker_count():
    X, y = toy_blobs(seed=6)
    serial = ForestClassifier(n_trees=16, seed=3, n_jobs=1).fit(X, y)
    threaded = ForestClassifier(n_trees=16, seed=3, n_jobs=2).fit(X, y)
    assert np.array_equal(serial.predict_proba(X), threaded.predict_proba(X))


def test_forest_balanced_weights_help_minority_class():
    rng = np.random.default_rng(11)
    # 5:1 imbalance with overlapping classes.
    X0 = rng.normal(loc=0.0, scale=1.0, size=(250, 2))
    X1 = rng.normal(loc=1.5, scale=1.0, size=(50, 2))
    X = np.vstack([X0, X1])
    y = np.array([0] * 250 + [1] * 50)
    Xt0 = rng.normal(loc=0.0, scale=1.0, size=(200, 2))
    Xt1 = rng.normal(loc=1.5, scale=1.0, size=(200, 2))
    Xt = np.vstack([Xt0, Xt1])
    yt = np.array([0] * 200 + [1] * 200)
    # Depth-limited trees keep impure leaves, where the weights matter;
    # fully grown trees have pure leaves and wash the weighting out.
    balanced = ForestClassifier(
        n_trees=60, seed=0, max_depth=3, class_weight="balanced"
    ).fit(X, y)
    plain = ForestClassifier(
        n_trees=60, seed=0, max_depth=3, class_weight=None
    ).fit(X, y)
    recall_b = balanced.predict(Xt1).tolist().count(1) / 200
    recall_p = plain.predict(Xt1).tolist().count(1) / 200
    assert recall_b > recall_p + 0.1
    assert balanced.score(Xt, yt) > 0.5


def test_forest_single_class_rejected():
    X = np.ones((5, 2))
    y = np.zeros(5, dtype=int)
    with pytest.raises(ValueError):
        ForestClassifier(n_trees=3).fit(X, y)


def test_forest_input_validation():
    X, y = toy_blobs()
    clf = ForestClassifier(n_trees=3, seed=0)
    with pytest.raises(ValueError):
        clf.fit(X[:5], y[:4])
    with pytest.raises(ValueError):
        clf.fit(X.ravel(), y)
    bad = X.copy()
    bad[0, 0] = np.nan
    with pytest.raises(ValueError):
        clf.fit(bad, y)
    clf.fit(X, y)
    with pytest.raises(ValueError):
        clf.predict(np.ones((4, 5)))


def test_forest_predict_before_fit_raises():
    with pytest.raises(Exception):
        ForestClassifier().predict(np.ones((2, 2)))


def test_forest_max_features_sqrt_default():
    records = make_records(labels=range(1, 6), rows_per_label=6, seed=20)
    ds = build_dataset(records)
    clf = ForestClassifier(n_trees=30, seed=2).fit(ds.X, ds.y)
    # ceil(sqrt(40)) = 7.
    assert clf.max_features_ == 7
    assert clf.n_features_in_ == 40
    assert clf.score(ds.X, ds.y) == 1.0


def test_forest_get_set_params_roundtrip():
    clf = ForestClassifier(n_trees=12, max_depth=3, seed=5)
    params = clf.get_params()
    assert params["n_trees"] == 12
    assert params["max_depth"] == 3
    clone = ForestClassifier(**params)
    assert clone.get_params() == params
    clf.set_params(n_trees=9)
    assert clf.n_trees == 9


def test_forest_bootstrap_off_uses_all_rows():
    X, y = toy_blobs(seed=9)
    clf = ForestClassifier(n_trees=5, bootstrap=False, seed=0).fit(X, y)
    # Without row resampling and common defaults, trees agree on train data.
    assert clf.score(X, y) == 1.0


def test_forest_generalizes_on_gap_coded_data():
    records = make_records(labels=range(1, 11), rows_per_label=8, seed=30)
    ds = build_dataset(records)
    holdout = make_records(labels=range(1, 11), rows_per_label=2, seed=31)
    hs = build_dataset(holdout)
    clf = ForestClassifier(n_trees=50, seed=0).fit(ds.X, ds.y)
    assert clf.score(hs.X, hs.y) >= 0.9
