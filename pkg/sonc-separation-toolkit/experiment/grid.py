"""Uniform-grid approximations of the sup-norm ||f||_K = max over K of |f|."""
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from errors import DimensionMismatchError
from polycore.polynomial import SparsePolynomial
from polycore.region import BoxRegion
from polycore.rationals import RationalLike, to_rational


# PUBLIC_INTERFACE
def grid_sup_norm(
    f: SparsePolynomial,
    region: BoxRegion,
    resolution: int,
    extra_points: Iterable[Sequence[RationalLike]] = (),
) -> float:
    """
    Max of |f| over the uniform rational grid of K, evaluated exactly.

    Args:
        f: Polynomial in region.n variables
        region: The box K
        resolution: Grid points per axis, endpoints included (>= 2)
        extra_points: Further points of K to include, e.g. the evaluation
            points of L

    Returns:
        The exact maximum rendered as a float

    Raises:
        DimensionMismatchError: When f and K differ in dimension
        ValueError: When resolution < 2 or an extra point lies outside K
    """
    if f.n != region.n:
        raise DimensionMismatchError(f"Polynomial in {f.n} variables, K in {region.n}")
    best = Fraction(0)
    for point in region.grid(resolution):
        best = max(best, abs(f.evaluate(point)))
    for point in extra_points:
        point = tuple(to_rational(v) for v in point)
        if not region.contains(point):
            raise ValueError(f"Extra point {[str(v) for v in point]} lies outside K")
        best = max(best, abs(f.evaluate(point)))
    return float(best)


def float_grid(region: BoxRegion, resolution: int, extra_points: Iterable[Sequence[Fraction]] = ()) -> np.ndarray:
    """Grid of K (plus extra points) as an (N, n) float array."""
    axes = [np.linspace(float(lo), float(hi), resolution) for lo, hi in region.intervals]
    mesh = np.meshgrid(*axes, indexing="ij")
    points = np.stack([m.ravel() for m in mesh], axis=1)
    extra = np.array([[float(v) for v in p] for p in extra_points], dtype=float).reshape(-1, region.n)
    return np.vstack([points, extra])


def monomial_columns(points: np.ndarray, exponents: Iterable[Sequence[int]]) -> dict:
    """Map each exponent vector to its float values x^a at the given points."""
    return {tuple(alpha): np.prod(points ** np.asarray(alpha, dtype=float), axis=1) for alpha in exponents}
