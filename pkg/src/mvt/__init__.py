"""Exact-arithmetic toolkit for rank-<=3 matroids and their circuit varieties."""

from .matroid import Matroid, MatroidError, uniform, identify_classes

__all__ = ["Matroid", "MatroidError", "uniform", "identify_classes"]
