"""The unique shift-invariant letter-frequency state, evaluated exactly.

Every factor w has a well-defined frequency in the Thue-Morse sequence,
and the frequencies are the values of the unique tracial state on range
projections.  They satisfy a peeling rule: every length-3 factor has
value 1/6, and prepending a letter to a word of length >= 3 keeps the
value when the complementary extension is impossible and halves it when
both extensions occur.  Lengths 1 and 2 are fixed by additivity over
left extensions.  All arithmetic is exact rational.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import ResourceLimitError
from .words import _check_word, is_factor, require_factor, tm_prefix_array

MAX_FREQUENCY_WINDOW = 1 << 26
MAX_BLOCK_TRACE_LEVEL = 30

_HALF = Fraction(1, 2)


def _flip(c: str) -> str:
    return "1" if c == "0" else "0"


@lru_cache(maxsize=None)
def _trace(w: str) -> Fraction:
    if len(w) < 3:
        total = Fraction(0)
        for a in ("0", "1"):
            if is_factor(a + w):
                total += _trace(a + w)
        return total
    value = Fraction(1, 6)
    # peel leading letters off successively longer suffixes of w
    for k in range(len(w) - 4, -1, -1):
        if is_factor(_flip(w[k]) + w[k + 1:]):
            value /= 2
    return value


def trace_range(w: str) -> Fraction:
    """Trace of the range projection of w = frequency of w in the sequence."""
    require_factor(w)
    return _trace(w)


def check_range_family(words) -> tuple:
    """Validate a disjoint union of ranges: distinct factors, equal length."""
    members = tuple(words)
    if not members:
        raise ValueError("a range family needs at least one member")
    if len(set(members)) != len(members):
        raise ValueError("range family members must be pairwise distinct")
    lengths = {len(u) for u in members}
    if len(lengths) != 1 or 0 in lengths:
        raise ValueError("range family members must share one positive length")
    for u in members:
        require_factor(u)
    return members


def trace_family(words) -> Fraction:
    """Trace of a disjoint union of range projections."""
    return sum((_trace(u) for u in check_range_family(words)), Fraction(0))


def trace_spanning(alpha: str, beta: str, words) -> Fraction:
    """Trace of a spanning element s_alpha p_A s_beta*.

    Vanishes unless alpha = beta; the projection part only sees members
    whose range lies inside r(alpha), i.e. members with suffix alpha.
    """
    _check_word(alpha, allow_empty=True)
    _check_word(beta, allow_empty=True)
    members = check_range_family(words)
    if alpha != beta:
        return Fraction(0)
    return sum((_trace(u) for u in members if u.endswith(alpha)), Fraction(0))


def block_trace(i: int, j: int, n: int) -> Fraction:
    """Closed-form trace of the two-block word i^(n) j^(n)."""
    if i not in (0, 1) or j not in (0, 1):
        raise ValueError("block letters must be 0 or 1")
    if not 0 <= n <= MAX_BLOCK_TRACE_LEVEL:
        raise ValueError(f"level must lie in [0, {MAX_BLOCK_TRACE_LEVEL}]")
    if i == j:
        return Fraction(1, 6 * 2 ** n)
    return Fraction(1, 3 * 2 ** n)


def matrix_iterate(t, n: int):
    """Level-n pair (value of 00-blocks, value of 01-blocks) given t at level 0.

    Computed both by the diagonalized closed form with eigenvalues 1/2
    and -1 and by exact iteration of the inverse step matrix
    (-1/2 1/2; 1 0); the two must agree.
    """
    t = Fraction(t)
    if not 0 <= t <= _HALF:
        raise ValueError("t must lie in [0, 1/2]")
    if n < 0:
        raise ValueError("n must be nonnegative")
    u = 3 * t - _HALF
    sign = 1 if n % 2 == 0 else -1
    closed = ((_HALF ** (n + 1) + u * sign) / 3, (_HALF ** n - u * sign) / 3)
    x, y = t, _HALF - t
    for _ in range(n):
        x, y = (y - x) / 2, x
    if (x, y) != closed:
        raise AssertionError(f"closed form {closed} != iterated {(x, y)}")
    return closed


def uniqueness_interval(N: int):
    """The open interval of t with both level-n values positive for n <= N.

    Shrinks to the single admissible value 1/6 as N grows; the width is
    at most 2**-N.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    lo_u, hi_u = Fraction(-1), Fraction(1)
    for n in range(N + 1):
        if n % 2 == 0:
            lo_u = max(lo_u, -(_HALF ** (n + 1)))
            hi_u = min(hi_u, _HALF ** n)
        else:
            lo_u = max(lo_u, -(_HALF ** n))
            hi_u = min(hi_u, _HALF ** (n + 1))
    return ((lo_u + _HALF) / 3, (hi_u + _HALF) / 3)


def frequency(w: str, N: int) -> Fraction:
    """Occurrence count of w among the first N letters over window count.

    An exact rational; by unique ergodicity it converges to
    trace_range(w) as N grows.
    """
    require_factor(w)
    if N > MAX_FREQUENCY_WINDOW:
        raise ResourceLimitError(f"window {N} exceeds {MAX_FREQUENCY_WINDOW}")
    L = len(w)
    if N < L:
        raise ValueError("window must be at least as long as the word")
    arr = tm_prefix_array(N)
    hits = np.ones(N - L + 1, dtype=bool)
    for k, ch in enumerate(w):
        hits &= arr[k:N - L + 1 + k] == int(ch)
    return Fraction(int(hits.sum()), N - L + 1)
