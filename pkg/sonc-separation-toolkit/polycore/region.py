"""Axis-aligned rational boxes used as the compact set K."""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Iterator, List, Sequence, Tuple

from errors import DimensionMismatchError, InvalidRegionError, InvalidScalingError
from polycore.rationals import RationalLike, format_rational, to_rational

Interval = Tuple[Fraction, Fraction]
Point = Tuple[Fraction, ...]


# PUBLIC_INTERFACE
@dataclass(frozen=True)
class BoxRegion:
    """
    Product of closed intervals [lo_i, hi_i] with rational endpoints.

    Attributes:
        intervals: one (lo, hi) pair per coordinate, lo < hi
    """

    intervals: Tuple[Interval, ...]

    def __post_init__(self):
        if not self.intervals:
            raise InvalidRegionError("A box needs at least one interval")
        cleaned = []
        for i, (lo, hi) in enumerate(self.intervals, start=1):
            lo, hi = to_rational(lo), to_rational(hi)
            if not lo < hi:
                raise InvalidRegionError(f"Interval {i} is [{lo}, {hi}]; need lo < hi for a non-empty interior")
            cleaned.append((lo, hi))
        object.__setattr__(self, "intervals", tuple(cleaned))

    @classmethod
    def from_bounds(cls, bounds: Iterable[Tuple[RationalLike, RationalLike]]) -> "BoxRegion":
        return cls(tuple((to_rational(lo), to_rational(hi)) for lo, hi in bounds))

    @classmethod
    def cube(cls, lo: RationalLike, hi: RationalLike, n: int) -> "BoxRegion":
        """The box [lo, hi]^n."""
        return cls.from_bounds([(lo, hi)] * n)

    @classmethod
    def parse(cls, specs: Sequence[str], n: int) -> "BoxRegion":
        """
        Build a box from "lo:hi" strings.

        A single spec is broadcast to all n axes; otherwise exactly n specs
        are required.

        Raises:
            InvalidRegionError: When a spec is malformed or the count is wrong
        """
        if len(specs) == 1:
            specs = list(specs) * n
        if len(specs) != n:
            raise InvalidRegionError(f"Expected 1 or {n} interval specs, got {len(specs)}")
        bounds = []
        for spec in specs:
            lo_text, sep, hi_text = spec.partition(":")
            if not sep:
                raise InvalidRegionError(f"Interval spec {spec!r} is not of the form lo:hi")
            try:
                bounds.append((to_rational(lo_text), to_rational(hi_text)))
            except ValueError as e:
                raise InvalidRegionError(f"Interval spec {spec!r}: {e}") from e
        return cls.from_bounds(bounds)

    @property
    def n(self) -> int:
        return len(self.intervals)

    def _check_point(self, point: Sequence[RationalLike]) -> List[Fraction]:
        if len(point) != self.n:
            raise DimensionMismatchError(f"Point has length {len(point)}, expected {self.n}")
        return [to_rational(v) for v in point]

    def contains(self, point: Sequence[RationalLike]) -> bool:
        values = self._check_point(point)
        return all(lo <= v <= hi for v, (lo, hi) in zip(values, self.intervals))

    def contains_interior(self, point: Sequence[RationalLike]) -> bool:
        values = self._check_point(point)
        return all(lo < v < hi for v, (lo, hi) in zip(values, self.intervals))

    def axis_grid(self, axis: int, resolution: int) -> List[Fraction]:
        """resolution equally spaced rationals on one axis, endpoints included."""
        if resolution < 2:
            raise ValueError(f"Grid resolution must be at least 2, got {resolution}")
        lo, hi = self.intervals[axis]
        step = (hi - lo) / (resolution - 1)
        return [lo + k * step for k in range(resolution)]

    def grid(self, resolution: int) -> Iterator[Point]:
        """Uniform rational grid with resolution points per axis."""
        axes = [self.axis_grid(i, resolution) for i in range(self.n)]
        return (tuple(p) for p in product(*axes))

    def to_strings(self) -> List[List[str]]:
        return [[format_rational(lo), format_rational(hi)] for lo, hi in self.intervals]


# PUBLIC_INTERFACE
def rescale_region(region: BoxRegion, a: Sequence[RationalLike]) -> BoxRegion:
    """
    Region H with x in H iff (a1*x1, ..., an*xn) in K.

    Args:
        region: The box K
        a: Nonzero rational factors, one per variable

    Returns:
        The box with interval i equal to [lo_i/a_i, hi_i/a_i], reordered so lo < hi

    Raises:
        InvalidScalingError: When some a_i is zero
    """
    if len(a) != region.n:
        raise DimensionMismatchError(f"Scaling vector has length {len(a)}, expected {region.n}")
    factors = [to_rational(v) for v in a]
    if any(v == 0 for v in factors):
        raise InvalidScalingError(f"Scaling vector {[str(v) for v in factors]} has a zero entry")
    bounds = []
    for (lo, hi), v in zip(region.intervals, factors):
        ends = sorted((lo / v, hi / v))
        bounds.append((ends[0], ends[1]))
    return BoxRegion(tuple(bounds))
