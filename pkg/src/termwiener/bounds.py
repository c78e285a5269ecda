"""Closed-form bounds and formula evaluators, all in exact integer/rational arithmetic.

Symbols used throughout: ``n`` is the order, ``d`` the diameter, ``l`` the
number of leaves, ``l0`` the minimum feasible leaf count for given (n, d).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    BadArgError,
    BadDiameterError,
    BadLeafCountError,
    InfeasibleShapeError,
    OrderTooSmallError,
)


@dataclass(frozen=True)
class LeafBounds:
    l0: int
    l_max: int


@dataclass(frozen=True)
class GMax:
    value: int
    argmax: frozenset[int]


@dataclass(frozen=True)
class DiameterUpperBound:
    value: int
    asserted_valid: bool


@dataclass(frozen=True)
class Delta3Max:
    value: int
    p: int
    case: int  # residue of n mod 4


def leaf_bounds(n: int, d: int) -> LeafBounds:
    """Feasible leaf-count window for trees of order n and diameter d.

    l0 = ceil((n-1)/floor(d/2)) for even d and ceil((n-2)/floor(d/2)) for
    odd d; the maximum is n-d+1.
    """
    _check_diameter(n, d)
    half = d // 2
    numer = n - 1 if d % 2 == 0 else n - 2
    return LeafBounds(l0=-(-numer // half), l_max=n - d + 1)


def lower_bound_by_leaves(n: int, l: int) -> int:
    """(n-1)(l-1), valid for 3 <= l <= n-1."""
    if not 3 <= l <= n - 1:
        raise BadLeafCountError(f"need 3 <= l <= n-1, got l={l}, n={n}")
    return (n - 1) * (l - 1)


def lower_bound_by_diameter(n: int, d: int) -> int:
    """(n-1)(l0-1) with l0 from :func:`leaf_bounds`."""
    return (n - 1) * (leaf_bounds(n, d).l0 - 1)


def g_value(x: int, n: int) -> int:
    """g(x) = x(x-1) + (n-x-1) * floor(x/2) * ceil(x/2) on 2 <= x <= n-1."""
    if not 2 <= x <= n - 1:
        raise BadArgError(f"need 2 <= x <= n-1, got x={x}, n={n}")
    return g_polynomial(x, n)


def g_polynomial(x: int, n: int) -> int:
    """The defining polynomial of :func:`g_value` without the domain restriction."""
    return x * (x - 1) + (n - x - 1) * (x // 2) * ((x + 1) // 2)


def g_max(n: int) -> GMax:
    """Residue-split maximum of g and its maximizer set.

    One maximizer when n or n-2 is divisible by 3, two when n-1 is.  For
    n <= 7 the stated maximizers spill past x = n-1; callers scanning the
    restricted domain should treat those orders separately.
    """
    if n < 3:
        raise BadArgError(f"need n >= 3, got {n}")
    lo = (2 * n) // 3 + 2
    hi = (2 * n + 1) // 3 + 2
    if n % 3 == 0:
        numer = n**3 + 9 * n**2 + 9 * n - 27
        argmax = frozenset({lo})
    elif n % 3 == 1:
        numer = n**3 + 9 * n**2 + 6 * n - 16
        argmax = frozenset({lo, hi})
    else:
        numer = n**3 + 9 * n**2 + 6 * n - 2
        argmax = frozenset({lo})
    if numer % 27:
        raise AssertionError(f"residue formula not divisible by 27 at n={n}")
    return GMax(value=numer // 27, argmax=argmax)


def upper_bound_by_diameter(n: int, d: int) -> DiameterUpperBound:
    """(n-d+1)(n-d) + (d-2) * floor((n-d+1)/2) * ceil((n-d+1)/2).

    The formula is evaluated for any feasible d; ``asserted_valid`` flags
    whether d >= floor((n-2)/3), the range on which the bound is claimed.
    Outside that range the value may undershoot the true maximum.
    """
    _check_diameter(n, d)
    m = n - d + 1
    value = m * (n - d) + (d - 2) * (m // 2) * ((m + 1) // 2)
    return DiameterUpperBound(value=value, asserted_valid=d >= (n - 2) // 3)


def g1_value(x, n: int) -> Fraction:
    """g1(x) = (x-1)(x^2+7x-12)/6 + (x^2/4)(n+2-2x), exact rational."""
    x = Fraction(x)
    return (x - 1) * (x * x + 7 * x - 12) / 6 + x * x / 4 * (n + 2 - 2 * x)


def g2_value(x, n: int) -> Fraction:
    """g2(x) = (x-1)(x^2+7x-12)/6 + ((x^2-1)/4)(n+2-2x), exact rational."""
    x = Fraction(x)
    return (x - 1) * (x * x + 7 * x - 12) / 6 + (x * x - 1) / 4 * (n + 2 - 2 * x)


def spine3_closed_form(n: int, k: int, t: int) -> int:
    """Index of the caterpillar whose spine has degree 3 on positions 1..t
    and s..k and degree 2 in between, where s - t = n + 3 - 2l and l = n - k.

    Evaluates (l-1)(l^2+7l-12)/6 + (t+1)(l-(t+1))(n+2-2l).  The trailing
    degree-3 block may be empty (s = k+1), which the t-independent zero of
    the second term makes harmless.
    """
    l = n - k
    if k < 1 or l < 4:
        raise InfeasibleShapeError(f"need k >= 1 and l = n-k >= 4, got n={n}, k={k}")
    gap = n + 2 - 2 * l
    if gap < 0:
        raise InfeasibleShapeError(f"leaf count l={l} too large for order {n}")
    tail = k - t - gap
    if t < 1 or tail < 0:
        raise InfeasibleShapeError(f"no spine of length {k} fits t={t}, gap={gap}")
    head = (l - 1) * (l * l + 7 * l - 12)
    if head % 6:
        raise AssertionError(f"cubic term not divisible by 6 at l={l}")
    return head // 6 + (t + 1) * (l - (t + 1)) * gap


def delta3_max(n: int) -> Delta3Max:
    """Maximum index over trees of order n with maximum degree 3 (n >= 6).

    Four residue cases for n = 4p + r:
      r=0: p(4p^2+18p-4)/3          r=1: p(4p^2+21p-1)/3
      r=2: (2p+1)(2p^2+11p+3)/3     r=3: the r=2 value + (p+1)^2
    """
    if n < 6:
        raise OrderTooSmallError(f"need n >= 6, got {n}")
    p, r = divmod(n, 4)
    if r == 0:
        numer = p * (4 * p * p + 18 * p - 4)
    elif r == 1:
        numer = p * (4 * p * p + 21 * p - 1)
    else:
        numer = (2 * p + 1) * (2 * p * p + 11 * p + 3)
    if numer % 3:
        raise AssertionError(f"residue formula not divisible by 3 at n={n}")
    value = numer // 3
    if r == 3:
        value += (p + 1) ** 2
    return Delta3Max(value=value, p=p, case=r)


def _check_diameter(n: int, d: int) -> None:
    if not 2 <= d <= n - 1:
        raise BadDiameterError(f"need 2 <= d <= n-1, got d={d}, n={n}")
