import numpy as np
import pytest
from sklearn.base import clone

from boolmetric.errors import ContainmentError, ContractivityError, DimensionError
from boolmetric.estimators import CFGSpace, PolynomialInterpolator, check_points

G32_ALL = np.array([[[a, b]] for a in range(3) for b in range(3)])


def test_check_points():
    from boolmetric.cfg_ring import RingSpec

    assert check_points([0, 1, 2], RingSpec(3, 1)).shape == (3, 1, 1)
    assert check_points(G32_ALL, RingSpec(3, 2)).shape == (9, 1, 2)
    with pytest.raises(ValueError):
        check_points([[3]], RingSpec(3, 1))
    with pytest.raises(DimensionError):
        check_points([[0, 1]], RingSpec(3, 2))


def test_cfg_space():
    est = CFGSpace(p=3, omega=2).fit([[[0, 0]], [[1, 1]], [[1, 2]]])
    assert est.alphas_.to_list() == [[1, 1], [0, 1]]
    inside = est.contains(G32_ALL)
    assert inside.sum() == 6
    C = est.transform(G32_ALL[inside])
    assert C.shape == (6, 2, 2)
    np.testing.assert_array_equal(est.inverse_transform(C), G32_ALL[inside])
    with pytest.raises(ContainmentError):
        est.transform(G32_ALL[~inside][:1])
    assert clone(est).get_params() == {"p": 3, "omega": 2, "base_index": 0}


def test_cfg_space_omega_one():
    est = CFGSpace(p=5, omega=1).fit([[0], [2]])
    assert est.contains([[0], [1], [2]]).tolist() == [True, False, True]
    assert est.fit_transform([[0], [2]]).tolist() == [[[0]], [[1]]]


def test_interpolator_full_table():
    est = PolynomialInterpolator(p=3).fit([[0], [1], [2]], [[0], [0], [1]])
    assert repr(est.polynomials_[0]) == "(2)*X^2 + (1)*X"
    assert est.predict([[0], [1], [2]]).tolist() == [[0], [0], [1]]


def test_interpolator_extends_from_samples():
    X = [[[0, 0]], [[1, 2]]]
    y = [[[1, 1]], [[2, 1]]]
    est = PolynomialInterpolator(p=3, omega=2).fit(X, y)
    np.testing.assert_array_equal(est.predict(X), y)
    # the map is fixed on the convex closure: (1, 0) mixes the two samples
    assert est.predict([[[1, 0]]]).tolist() == [[[2, 1]]]


def test_interpolator_rejects_non_contractive():
    with pytest.raises(ContractivityError):
        PolynomialInterpolator(p=3, omega=2).fit([[[0, 0]], [[1, 0]]], [[[0, 0]], [[0, 1]]])
