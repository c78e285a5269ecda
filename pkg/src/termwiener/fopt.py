"""Maximization of the split-product sum F over arrangements of a weight multiset.

``f_value`` evaluates F(y) = sum over cut points i of
(y_1+...+y_i) * (y_{i+1}+...+y_k).  The brute-force route scans every
distinct permutation with y_1 >= y_k; the fast route scans only
valley-shaped arrangements (a non-increasing block followed by a
non-decreasing block).  ``certify_valley`` checks the balance-and-shape
certificate that optimal arrangements carry.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import BadArgError, TooLargeError, TooShortError

DEFAULT_BRUTE_CAP = 9

SHAPE_STRICT = "strict-valley"
SHAPE_AT_T = "valley-at-t"
SHAPE_BEFORE_T = "valley-before-t"


@dataclass(frozen=True)
class FMaxResult:
    """Exact maximum plus every optimal arrangement, deduplicated up to reversal."""

    value: int
    argmax: frozenset[tuple[int, ...]]


@dataclass(frozen=True)
class ValleyCertificate:
    """Balance point and shape certificate for an arrangement.

    ``t`` is the unique index where the running balance
    f(i) = (y_1+...+y_{i-1}) - (y_{i+2}+...+y_k) crosses from <= 0 to > 0.
    The two recorded comparisons are head_le <= tail_le (tight when
    ``strict`` is False) and head_gt > tail_gt.  Shapes ``strict-valley``
    and ``valley-at-t`` bottom out at position t+1, ``valley-before-t``
    at position t.  ``in_stated_window`` records whether t lies in
    [2, k-2]; the crossing can legitimately land at t = 1.
    """

    t: int
    shape: str
    strict: bool
    head_le: int
    tail_le: int
    head_gt: int
    tail_gt: int
    in_stated_window: bool


def f_value(y: Sequence[int]) -> int:
    """F(y): sum over the k-1 cut points of prefix-sum times suffix-sum."""
    if len(y) < 1:
        raise BadArgError("f_value needs at least one entry")
    total = sum(y)
    prefix = 0
    acc = 0
    for entry in y[:-1]:
        prefix += entry
        acc += prefix * (total - prefix)
    return acc


def as_weight_multiset(w: Iterable[int]) -> tuple[int, ...]:
    """Normalize to a non-increasing tuple of non-negative integers."""
    vals = tuple(sorted(w, reverse=True))
    if not vals:
        raise BadArgError("empty weight multiset")
    if any(not isinstance(v, int) or v < 0 for v in vals):
        raise BadArgError(f"weights must be non-negative integers, got {vals}")
    return vals


def f_max_bruteforce(w: Iterable[int], cap: int = DEFAULT_BRUTE_CAP) -> FMaxResult:
    """Exact maximum of f_value over all distinct permutations with y1 >= yk.

    Every tied arrangement is retained (reported up to reversal, which
    leaves f_value unchanged).
    """
    weights = as_weight_multiset(w)
    if len(weights) > cap:
        raise TooLargeError(f"brute force capped at k <= {cap}, got {len(weights)}")
    best = -1
    arg: set[tuple[int, ...]] = set()
    for perm in _distinct_permutations(weights):
        if perm[0] < perm[-1]:
            continue
        val = f_value(perm)
        if val > best:
            best = val
            arg = {_reversal_rep(perm)}
        elif val == best:
            arg.add(_reversal_rep(perm))
    return FMaxResult(best, frozenset(arg))


def f_max_valley(w: Iterable[int]) -> FMaxResult:
    """Maximum of f_value over valley-shaped arrangements only.

    Arrangements are produced by taking the weights in non-increasing order
    and appending each to either the left block (kept in order) or the
    right block (reversed at the end); equal weights are deduplicated by
    assigning counts per distinct value.
    """
    weights = as_weight_multiset(w)
    counts = Counter(weights)
    values = sorted(counts, reverse=True)
    best = -1
    arg: set[tuple[int, ...]] = set()
    seen: set[tuple[int, ...]] = set()
    for split in itertools.product(*(range(counts[v] + 1) for v in values)):
        left: list[int] = []
        right: list[int] = []
        for v, take in zip(values, split):
            left.extend([v] * take)
            right.extend([v] * (counts[v] - take))
        arrangement = tuple(left + right[::-1])
        if arrangement in seen or arrangement[0] < arrangement[-1]:
            continue
        seen.add(arrangement)
        val = f_value(arrangement)
        if val > best:
            best = val
            arg = {_reversal_rep(arrangement)}
        elif val == best:
            arg.add(_reversal_rep(arrangement))
    return FMaxResult(best, frozenset(arg))


def certify_valley(y: Sequence[int]) -> ValleyCertificate | None:
    """Certificate for an arrangement, or None (refusal) when none applies.

    Finds the unique balance crossing t in [1, k-2] with f(t) <= 0 < f(t+1)
    and then requires the matching monotone shape: with a strict crossing
    the entries must fall through position t+1 and rise after it; with a
    tight crossing the valley may instead bottom out at position t.
    """
    k = len(y)
    if k < 4:
        raise TooShortError(f"certificate needs k >= 4, got {k}")
    prefix = list(itertools.accumulate(y, initial=0))
    total = prefix[-1]

    def balance(i: int) -> int:
        # f(i) with 1-based i: sum of first i-1 entries minus sum from i+2 on.
        return prefix[i - 1] - (total - prefix[min(i + 1, k)])

    found = None
    for t in range(1, k - 1):
        if balance(t) <= 0 < balance(t + 1):
            found = t
            break
    if found is None:
        return None
    t = found
    strict = balance(t) < 0
    falls_through = _non_increasing(y[: t + 1]) and _non_decreasing(y[t:])
    bottoms_at_t = _non_increasing(y[:t]) and _non_decreasing(y[t - 1 :])
    if strict:
        if not falls_through:
            return None
        shape = SHAPE_STRICT
    elif falls_through:
        shape = SHAPE_AT_T
    elif bottoms_at_t:
        shape = SHAPE_BEFORE_T
    else:
        return None
    return ValleyCertificate(
        t=t,
        shape=shape,
        strict=strict,
        head_le=prefix[t - 1],
        tail_le=total - prefix[min(t + 1, k)],
        head_gt=prefix[t],
        tail_gt=total - prefix[min(t + 2, k)],
        in_stated_window=t >= 2,
    )


def is_valley(y: Sequence[int]) -> bool:
    """True when y is non-increasing up to some index and non-decreasing after."""
    k = len(y)
    drop = 0
    while drop + 1 < k and y[drop] >= y[drop + 1]:
        drop += 1
    return _non_decreasing(y[drop:])


def _distinct_permutations(weights: Sequence[int]):
    """Each distinct permutation of the multiset exactly once (lexicographic
    next-permutation; cost proportional to the distinct count, not k!)."""
    seq = sorted(weights)
    k = len(seq)
    while True:
        yield tuple(seq)
        i = k - 2
        while i >= 0 and seq[i] >= seq[i + 1]:
            i -= 1
        if i < 0:
            return
        j = k - 1
        while seq[j] <= seq[i]:
            j -= 1
        seq[i], seq[j] = seq[j], seq[i]
        seq[i + 1 :] = reversed(seq[i + 1 :])


def _reversal_rep(y: tuple[int, ...]) -> tuple[int, ...]:
    rev = y[::-1]
    return y if y >= rev else rev


def _non_increasing(seq: Sequence[int]) -> bool:
    return all(a >= b for a, b in zip(seq, seq[1:]))


def _non_decreasing(seq: Sequence[int]) -> bool:
    return all(a <= b for a, b in zip(seq, seq[1:]))
