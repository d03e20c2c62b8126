"""scikit-learn wrappers around the builders and the exact oracle."""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .builders import BUILDERS, build, prune_to_minimal
from .oracle import ENUMERATORS, s_value
from .separators import is_separating, signature_table
from .validation import check_points

__all__ = ["MinimumSeparatingFamily", "SeparatingFamilyTransformer"]


def _signatures(family, points) -> np.ndarray:
    table = signature_table(family, points)
    return np.asarray(table, dtype=np.int8).reshape(len(points), len(family))


class _FamilyEncoder(TransformerMixin, BaseEstimator):
    """Shared transform/predict over a fitted ``family_``."""

    def transform(self, X):
        """Membership matrix of shape (n_queries, n_separators), entries 0/1."""
        check_is_fitted(self, "family_")
        return _signatures(self.family_, check_points(X, unique=False))

    def predict(self, X):
        """Index of the fitted point sharing each query's signature, or -1."""
        check_is_fitted(self, "family_")
        codes = self.transform(X)
        return np.array([self._lookup_.get(row.tobytes(), -1) for row in codes], dtype=np.intp)

    def _store(self, family, points):
        if self.prune:
            family = prune_to_minimal(family, points)
        ok, pair = is_separating(family, points)
        if not ok:
            raise RuntimeError(f"family does not separate points {pair}")
        self.family_ = family
        self.points_ = points
        self.n_features_in_ = 2
        codes = _signatures(family, points)
        self._lookup_ = {row.tobytes(): i for i, row in enumerate(codes)}
        return self


class SeparatingFamilyTransformer(_FamilyEncoder):
    """Build a verified separating family on the training points.

    Parameters
    ----------
    method : {"prefix", "halfplane", "disc", "convex"}, default="convex"
        Constructive builder to run.
    prune : bool, default=False
        Drop redundant members after building.

    Attributes
    ----------
    family_ : SeparatingFamily
    points_ : PointSet
    """

    def __init__(self, method: str = "convex", prune: bool = False):
        self.method = method
        self.prune = prune

    def fit(self, X, y=None):
        if self.method not in BUILDERS:
            raise ValueError(f"method must be one of {sorted(BUILDERS)}, got {self.method!r}")
        points = check_points(X)
        return self._store(build(self.method, points), points)


class MinimumSeparatingFamily(_FamilyEncoder):
    """Exact minimum separating family of one separator class.

    Attributes
    ----------
    s_ : int
        Minimum family size.
    family_ : SeparatingFamily
        A witness family of size ``s_``.
    explored_ : int
        Search nodes visited.
    """

    def __init__(self, separator: str = "convex", prune: bool = False):
        self.separator = separator
        self.prune = prune

    def fit(self, X, y=None):
        if self.separator not in ENUMERATORS:
            raise ValueError(f"separator must be one of {sorted(ENUMERATORS)}, got {self.separator!r}")
        points = check_points(X)
        result = s_value(points, self.separator)
        self.s_ = result.size
        self.explored_ = result.explored
        return self._store(result.family, points)
