"""scikit-learn style wrappers.

Points of A^n = GF(p)^(n x omega) travel as integer arrays of shape
``(n_samples, n, omega)``; when ``omega == 1`` the last axis may be dropped.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted

from . import oracle, polynomials, span
from .boolean_ring import BoolElem
from .cfg_ring import RingSpec
from .errors import ContainmentError, ContractivityError, DimensionError
from .metric import Point, PointedSpace


def check_points(X, spec: RingSpec, n: int | None = None) -> np.ndarray:
    """Validate ``X`` and return it as an int array of shape ``(m, n, omega)``."""
    X = check_array(X, dtype=np.int64, allow_nd=True, ensure_2d=False)
    if X.ndim == 1:
        X = X[:, None]
    if X.ndim == 2:
        if spec.omega != 1:
            raise DimensionError(f"2-d input only works for omega == 1, ring has omega = {spec.omega}")
        X = X[:, :, None]
    if X.ndim != 3 or X.shape[2] != spec.omega:
        raise DimensionError(f"expected shape (m, n, {spec.omega}), got {X.shape}")
    if n is not None and X.shape[1] != n:
        raise DimensionError(f"expected n = {n} coordinates, got {X.shape[1]}")
    if X.min() < 0 or X.max() >= spec.p:
        raise ValueError(f"entries must be residues in 0..{spec.p - 1}")
    return X


def to_points(X: np.ndarray, spec: RingSpec) -> list[Point]:
    return [Point.of(spec, *row.tolist()) for row in X]


def from_points(points, omega: int | None = None) -> np.ndarray:
    arr = np.array([x.to_list() for x in points], dtype=np.int64)
    if omega == 1 and arr.ndim == 3:
        arr = arr[:, :, 0]
    return arr


class CFGSpace(TransformerMixin, BaseEstimator):
    """The convex closure of the training points, pointed at ``X[base_index]``.

    ``transform`` returns Boolean coordinates on a base: an array of shape
    ``(m, k, omega)`` with 0/1 entries, one row of ``k`` idempotents per point.
    """

    def __init__(self, p: int = 3, omega: int = 1, base_index: int = 0):
        self.p = p
        self.omega = omega
        self.base_index = base_index

    def fit(self, X, y=None):
        self.spec_ = RingSpec(self.p, self.omega)
        arr = check_points(X, self.spec_)
        pts = to_points(arr, self.spec_)
        base = pts[self.base_index]
        self.space_ = PointedSpace.conv(base, [x for i, x in enumerate(pts) if i != self.base_index])
        self.base_ = span.build_base(self.space_)
        self.alphas_ = span.alpha_invariants(self.space_)
        self.n_features_in_ = arr.shape[1]
        return self

    def _points(self, X):
        check_is_fitted(self, "space_")
        return to_points(check_points(X, self.spec_, self.n_features_in_), self.spec_)

    def contains(self, X) -> np.ndarray:
        return np.array([span.contains(self.space_, x) for x in self._points(X)], dtype=bool)

    def transform(self, X) -> np.ndarray:
        out = []
        for x in self._points(X):
            coords = span.coordinates(self.base_, x)
            if span.reconstruct(self.base_, coords) != x:
                raise ContainmentError(f"{x!r} is not in the fitted space")
            out.append([a.to_list() for a in coords])
        return np.array(out, dtype=np.int64).reshape(len(out), len(self.base_.elements), self.omega)

    def inverse_transform(self, C) -> np.ndarray:
        check_is_fitted(self, "space_")
        C = np.asarray(C, dtype=np.int64)
        k = len(self.base_.elements)
        if C.ndim != 3 or C.shape[1:] != (k, self.omega):
            raise DimensionError(f"expected coordinates of shape (m, {k}, {self.omega}), got {C.shape}")
        pts = [span.reconstruct(self.base_, [BoolElem.from_list(a) for a in row.tolist()]) for row in C]
        return from_points(pts, self.omega)


class PolynomialInterpolator(BaseEstimator):
    """Fit polynomials over GF(p)^omega reproducing a contractive sample map.

    The samples determine the map on their convex closure; the polynomials
    agree with it there (and are extended by a constant on the orthogonal
    complement).  Non-contractive samples raise ``ContractivityError``.
    """

    def __init__(self, p: int = 3, omega: int = 1, limit: int = oracle.DEFAULT_LIMIT):
        self.p = p
        self.omega = omega
        self.limit = limit

    def fit(self, X, y):
        self.spec_ = RingSpec(self.p, self.omega)
        Xa = check_points(X, self.spec_)
        ya = check_points(y, self.spec_)
        if len(Xa) != len(ya):
            raise DimensionError(f"{len(Xa)} inputs but {len(ya)} outputs")
        n, m = Xa.shape[1], ya.shape[1]
        # the graph of a contractive map is convex: close it in A^(n+m), then project
        graph = to_points(np.concatenate([Xa, ya], axis=1), self.spec_)
        G = PointedSpace.conv(graph[0], graph[1:])
        table = {}
        for z in oracle.enumerate_members(G, self.limit):
            x, fx = Point(z.coords[:n]), Point(z.coords[n:])
            if table.setdefault(x, fx) != fx:
                raise ContractivityError(f"samples are not contractive: two values at {x!r}")
        xs = to_points(Xa, self.spec_)
        U = PointedSpace.conv(xs[0], xs[1:])
        self.polynomials_ = polynomials.interp_on_variety(table, U)
        self.n_features_in_ = n
        self.n_outputs_ = m
        return self

    def predict(self, X) -> np.ndarray:
        check_is_fitted(self, "polynomials_")
        pts = to_points(check_points(X, self.spec_, self.n_features_in_), self.spec_)
        f = polynomials.poly_map(self.polynomials_)
        return from_points([f(x) for x in pts], self.omega)
