"""Choosing u and assembling the certified separation bound.

For f the square witness and any g in the SONC cone, L[g] >= 0 and
L[f] = -f(u), so

    ||g - f||_K >= max_j |g - f|(u^j, 1..1) >= (L[g] - L[f]) / 4 >= f(u) / 4

as long as the four evaluation points lie in K.
"""
import logging
from fractions import Fraction
from typing import Optional, Tuple

from config import settings
from errors import ClaimViolationError, DimensionMismatchError, InadmissibleConfigurationError
from polycore.polynomial import rescale
from polycore.rationals import RationalLike, to_rational
from polycore.region import BoxRegion, rescale_region
from separation.functional import SeparatingFunctional, apply_L
from separation.models import SeparationReport
from separation.witness import build_witness

logger = logging.getLogger("sonc_separation.separation")

ANCHOR_SCAN_DEPTH = 32


def _ones(n: int) -> Tuple[Fraction, ...]:
    return (Fraction(1),) * n


# PUBLIC_INTERFACE
def choose_u(region: BoxRegion, max_k: Optional[int] = None) -> Fraction:
    """
    Largest u = 1 + 1/k with all four evaluation points in the box.

    Args:
        region: The box K; the all-ones point must be interior
        max_k: Largest k scanned, defaults to settings.MAX_U_DENOMINATOR

    Returns:
        u = 1 + 1/k for the least admissible k

    Raises:
        InadmissibleConfigurationError: When the all-ones point is not interior
            or even u = 1 + 1/max_k leaves the box
    """
    max_k = settings.MAX_U_DENOMINATOR if max_k is None else max_k
    if not region.contains_interior(_ones(region.n)):
        raise InadmissibleConfigurationError(
            f"K = {region.to_strings()} does not contain the all-ones point in its interior; "
            "rescale with an anchor point first"
        )
    hi = region.intervals[0][1]

    def fits(k: int) -> bool:
        return (1 + Fraction(1, k)) ** 3 <= hi

    if not fits(max_k):
        raise InadmissibleConfigurationError(f"No u = 1 + 1/k with k <= {max_k} keeps u^3 <= {hi}")
    # (1 + 1/k)^3 decreases in k, so the admissible k form a suffix of 1..max_k.
    lo_k, hi_k = 1, max_k
    while lo_k < hi_k:
        mid = (lo_k + hi_k) // 2
        if fits(mid):
            hi_k = mid
        else:
            lo_k = mid + 1
    u = 1 + Fraction(1, lo_k)
    logger.info(f"Chose u = {u} (k = {lo_k}) for K = {region.to_strings()}")
    return u


def _interior_nonzero(lo: Fraction, hi: Fraction) -> Fraction:
    if lo < 1 < hi:
        return Fraction(1)
    width = hi - lo
    for depth in range(1, ANCHOR_SCAN_DEPTH + 1):
        denominator = 2 ** depth
        for j in range(1, denominator, 2):
            candidate = lo + width * Fraction(j, denominator)
            if candidate != 0:
                return candidate
    raise InadmissibleConfigurationError(f"No nonzero interior point found in [{lo}, {hi}]")


# PUBLIC_INTERFACE
def anchor_region(region: BoxRegion) -> Tuple[Tuple[Fraction, ...], BoxRegion]:
    """
    Pick an interior point a with nonzero coordinates and rescale K by it.

    Each coordinate is 1 when 1 is interior to its interval, otherwise the
    first nonzero dyadic point lo + (hi - lo) * j / 2^m. The all-ones point is
    interior to the returned box H, and x is in H iff (a1 x1, ..., an xn) is in K.

    Returns:
        (a, H)
    """
    a = tuple(_interior_nonzero(lo, hi) for lo, hi in region.intervals)
    rescaled = rescale_region(region, a)
    logger.debug(f"Anchored K = {region.to_strings()} at a = {[str(v) for v in a]}")
    return a, rescaled


# PUBLIC_INTERFACE
def separation_bound(
    region: BoxRegion,
    d: int,
    n: int,
    u: Optional[RationalLike] = None,
    anchor: bool = False,
) -> SeparationReport:
    """
    Build the witness and its certified lower bound f(u)/4 on K.

    Args:
        region: The box K
        d: Degree of the witness' square root, d >= 3
        n: Number of variables
        u: Explicit parameter; chosen by choose_u when omitted
        anchor: Rescale K so that the all-ones point is interior first

    Returns:
        SeparationReport with exact L[f] and lower bound

    Raises:
        DimensionMismatchError: When K is not a box in n variables
        InadmissibleConfigurationError: When K, d or u are not admissible
        ClaimViolationError: When L[f] != -f(u) (never for a correct build)
    """
    if region.n != n:
        raise DimensionMismatchError(f"K has {region.n} intervals, expected {n}")
    a: Optional[Tuple[Fraction, ...]] = None
    working = region
    if anchor:
        a, working = anchor_region(region)

    if u is None:
        u = choose_u(working)
    else:
        u = to_rational(u)
        if not working.contains_interior(_ones(n)):
            raise InadmissibleConfigurationError(
                f"K = {working.to_strings()} does not contain the all-ones point in its interior"
            )
    functional = SeparatingFunctional(n=n, u=u)
    inside = tuple(working.contains(p) for p in functional.points)
    if not all(inside):
        raise InadmissibleConfigurationError(
            f"u = {u} puts evaluation points outside K: {[str(p[0]) for p, ok in zip(functional.points, inside) if not ok]}"
        )

    witness = build_witness(u, d, n)
    l_value = apply_L(functional, witness.polynomial)
    f_u = witness.value_at(u)
    if l_value != -f_u:
        raise ClaimViolationError(f"L[f] = {l_value} differs from -f(u) = {-f_u}")
    lower_bound = f_u / 4
    if not lower_bound > 0:
        raise ClaimViolationError(f"Lower bound {lower_bound} is not positive")

    original_witness = None
    if a is not None:
        original_witness = rescale(witness.polynomial, [1 / v for v in a])
    logger.info(f"Separation bound for d={d} n={n} u={u}: lower_bound={lower_bound}")
    return SeparationReport(
        u=u,
        region=working,
        witness=witness,
        l_of_witness=l_value,
        lower_bound=lower_bound,
        points_in_region=inside,
        anchor=a,
        original_region=region if a is not None else None,
        original_witness=original_witness,
    )
