"""Input checks shared by the estimators."""
from __future__ import annotations

import numpy as np

from .geometry import Point, PointSet

__all__ = ["check_points"]


def check_points(X, *, unique: bool = True, min_points: int = 1):
    """Coerce ``X`` to exact points.

    ``X`` may be a PointSet, a sequence of pairs, or an array of shape
    (n, 2) with integer, float or object (Fraction) entries. Floats are
    converted exactly. With ``unique`` the result is a PointSet and
    duplicates raise; otherwise a tuple of Points is returned.
    """
    if isinstance(X, PointSet):
        pts = X.points
    else:
        if isinstance(X, np.ndarray):
            arr = X
        else:
            rows = list(X)
            arr = np.empty((len(rows), 2), dtype=object)
            for i, row in enumerate(rows):
                row = tuple(row)
                if len(row) != 2:
                    raise ValueError(f"row {i} has {len(row)} coordinates; expected 2")
                arr[i, 0], arr[i, 1] = row
        if arr.ndim != 2 or arr.shape[1] != 2:
            raise ValueError(f"expected an array of shape (n, 2), got {arr.shape}")
        pts = tuple(Point.of(x, y) for x, y in arr.tolist())
    if len(pts) < min_points:
        raise ValueError(f"need at least {min_points} point(s), got {len(pts)}")
    return PointSet(pts) if unique else tuple(pts)
