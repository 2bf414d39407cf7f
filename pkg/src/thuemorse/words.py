"""The two-sided Thue-Morse sequence and its factor language.

The sequence is the fixed point of the substitution 0 -> 01, 1 -> 10
starting from 0, extended to negative indices by the mirror rule
w[-i] = w[i-1].  Words are plain strings over the alphabet "01".
Factor membership is decided exactly by de-substitution: a long word
occurs in the sequence iff, for one of the two possible alignments of
the substitution grid, its letter pairs de-substitute to a shorter
factor.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .errors import NotAFactorError, ResourceLimitError

MAX_SLICE = 1 << 26
MAX_BLOCK_LEVEL = 30
MAX_FACTOR_LENGTH = 64


def _factor_window(L: int) -> int:
    # generous for a linearly recurrent sequence; cross-checked in tests
    return 10 * L + 64


_COMPLEMENT = str.maketrans("01", "10")

# module-level prefix cache, grown by doubling; replaced atomically so
# concurrent readers only ever see a complete string
_prefix_cache = "0"


def _check_word(w: str, allow_empty: bool = False) -> str:
    if not isinstance(w, str):
        raise TypeError(f"word must be a string, got {type(w).__name__}")
    if not w and not allow_empty:
        raise ValueError("empty word not allowed here")
    if w.strip("01"):
        raise ValueError(f"word must consist of '0'/'1' only: {w!r}")
    return w


def complement(w: str) -> str:
    """Bitwise complement of a word."""
    return w.translate(_COMPLEMENT)


def tm_prefix(n: int) -> str:
    """The one-sided prefix w[0] w[1] ... w[n-1]."""
    global _prefix_cache
    if n > MAX_SLICE:
        raise ResourceLimitError(f"prefix length {n} exceeds {MAX_SLICE}")
    p = _prefix_cache
    while len(p) < n:
        p = p + complement(p)
    if len(p) > len(_prefix_cache):
        _prefix_cache = p
    return p[:n]


def tm_letter(i: int) -> int:
    """Letter at any integer index; negative indices mirror: w[-i] = w[i-1]."""
    if i < 0:
        i = -i - 1
    return bin(i).count("1") & 1


def tm_slice(lo: int, hi: int) -> str:
    """The word w[lo] w[lo+1] ... w[hi-1] over two-sided indices."""
    if lo > hi:
        raise ValueError(f"need lo <= hi, got [{lo}, {hi})")
    if hi - lo > MAX_SLICE:
        raise ResourceLimitError(f"slice length {hi - lo} exceeds {MAX_SLICE}")
    if lo >= 0:
        return tm_prefix(hi)[lo:hi]
    # negative part: w[lo..min(hi,0)-1] is a reversed segment of the prefix
    neg = tm_prefix(-lo)[max(0, -hi):-lo][::-1]
    if hi <= 0:
        return neg
    return neg + tm_prefix(hi)


def tm_prefix_array(n: int) -> np.ndarray:
    """The prefix of length n as a uint8 array (for bulk scanning)."""
    if n > MAX_SLICE:
        raise ResourceLimitError(f"prefix length {n} exceeds {MAX_SLICE}")
    arr = np.zeros(1, dtype=np.uint8)
    while len(arr) < n:
        arr = np.concatenate([arr, 1 - arr])
    return arr[:n]


def block(i: int, n: int) -> str:
    """n-fold substitution image of the letter i; length 2**n."""
    if i not in (0, 1):
        raise ValueError(f"letter must be 0 or 1, got {i}")
    if n < 0:
        raise ValueError("level must be nonnegative")
    if n > MAX_BLOCK_LEVEL:
        raise ResourceLimitError(f"level {n} exceeds {MAX_BLOCK_LEVEL}")
    b = "01"[i]
    for _ in range(n):
        b = b + complement(b)
    return b


def keane_product(b: str, c: str) -> str:
    """Concatenate |c| copies of b, complementing the i-th copy when c[i] = 1."""
    _check_word(b)
    _check_word(c)
    cb = complement(b)
    return "".join(b if ch == "0" else cb for ch in c)


def transform(w: str, kind: str) -> str:
    """Reversal or complement of a word.

    Reversal is an anti-homomorphism and both transforms preserve the
    factor language.
    """
    _check_word(w, allow_empty=True)
    if kind == "reverse":
        return w[::-1]
    if kind == "complement":
        return complement(w)
    raise ValueError(f"kind must be 'reverse' or 'complement', got {kind!r}")


# All factors of length <= 8, collected from a window far wider than the
# recurrence bound at these lengths (validated against a 2**16 scan in the
# tests).
_BASE_LENGTH = 8


@lru_cache(maxsize=1)
def _base_factors() -> frozenset:
    window = tm_prefix(1024)
    found = set()
    for L in range(1, _BASE_LENGTH + 1):
        for i in range(len(window) - L + 1):
            found.add(window[i:i + L])
    return frozenset(found)


@lru_cache(maxsize=None)
def _is_factor(w: str) -> bool:
    if len(w) <= _BASE_LENGTH:
        return w in _base_factors()
    for phase in (0, 1):
        parent = _parent_word(w, phase)
        if parent is not None and _is_factor(parent):
            return True
    return False


def _parent_word(w: str, phase: int):
    """De-substitute one level assuming w starts at grid offset `phase`.

    A dangling leading letter x is the second half of a pair, so its
    parent letter is the complement of x; a dangling trailing letter is
    a first half and maps to itself.  Returns None when some interior
    pair is not 01 or 10.
    """
    out = []
    if phase == 1:
        out.append("1" if w[0] == "0" else "0")
    i = phase
    while i + 1 < len(w):
        a, b = w[i], w[i + 1]
        if a == b:
            return None
        out.append(a)
        i += 2
    if i < len(w):
        out.append(w[i])
    return "".join(out)


def is_factor(w: str) -> bool:
    """Whether w occurs in the Thue-Morse sequence."""
    _check_word(w)
    return _is_factor(w)


def require_factor(w: str) -> str:
    _check_word(w)
    if not _is_factor(w):
        raise NotAFactorError(f"{w!r} does not occur in the Thue-Morse sequence")
    return w


def factors_of_length(L: int) -> list:
    """All factors of length L, lexicographically sorted."""
    if L < 1:
        raise ValueError("length must be positive")
    if L > MAX_FACTOR_LENGTH:
        raise ResourceLimitError(f"length {L} exceeds {MAX_FACTOR_LENGTH}")
    window = tm_prefix(_factor_window(L))
    return sorted({window[i:i + L] for i in range(len(window) - L + 1)})


def occurrences(w: str, lo: int, hi: int) -> list:
    """Start indices of all occurrences of w inside the slice [lo, hi)."""
    _check_word(w)
    if lo > hi:
        raise ValueError(f"need lo <= hi, got [{lo}, {hi})")
    s = tm_slice(lo, hi)
    out = []
    start = 0
    while True:
        j = s.find(w, start)
        if j < 0:
            break
        out.append(j + lo)
        start = j + 1
    return out
