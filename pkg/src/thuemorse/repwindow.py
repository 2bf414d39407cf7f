"""Finite-window model of the shift representation on two-sided sequences.

The two generator operators act on basis vectors indexed by integers in
[-W, W]: T_i sends v_n to v_{n-1} exactly when the sequence letter at
n-1 is i, and to zero when the shift would leave the window.  All
matrices are integer 0/1, so the defining relations of the represented
algebra hold with residual exactly zero on the interior band where the
truncation is invisible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np
from scipy import sparse

from .errors import ResourceLimitError
from .words import factors_of_length, is_factor, require_factor, tm_slice

MAX_HALF_WIDTH = 1 << 20


@dataclass(frozen=True)
class WindowOperator:
    """A sparse integer matrix acting on basis indices -W..W."""

    W: int
    matrix: sparse.csr_matrix

    @property
    def size(self) -> int:
        return 2 * self.W + 1


def _letters(W: int) -> np.ndarray:
    # letter at position n stored at array index n + W
    s = tm_slice(-W, W + 1)
    return np.frombuffer(s.encode(), dtype=np.uint8) - ord("0")


def _check_width(W: int):
    if W < 1:
        raise ValueError("half-width must be positive")
    if W > MAX_HALF_WIDTH:
        raise ResourceLimitError(f"half-width {W} exceeds {MAX_HALF_WIDTH}")


def build_generators(W: int):
    """The pair (T0, T1) of truncated shift generators."""
    _check_width(W)
    letters = _letters(W)
    size = 2 * W + 1
    cols = np.arange(1, size)
    rows = cols - 1
    out = []
    for i in (0, 1):
        keep = letters[rows] == i
        m = sparse.csr_matrix(
            (np.ones(int(keep.sum()), dtype=np.int64), (rows[keep], cols[keep])),
            shape=(size, size),
        )
        out.append(WindowOperator(W, m))
    return out[0], out[1]


@lru_cache(maxsize=8)
def _gen_matrices(W: int):
    t0, t1 = build_generators(W)
    return t0.matrix, t1.matrix


def word_operator(alpha: str, W: int) -> WindowOperator:
    """Ordered product of generators along the letters of alpha.

    Words that are not factors give the zero operator.
    """
    if not alpha or alpha.strip("01"):
        raise ValueError("word must be a nonempty '0'/'1' string")
    if len(alpha) > W // 4:
        raise ValueError("word too long for this window")
    gens = _gen_matrices(W)
    m = gens[int(alpha[0])]
    for ch in alpha[1:]:
        m = m @ gens[int(ch)]
    return WindowOperator(W, sparse.csr_matrix(m))


def range_projection(alpha: str, W: int) -> WindowOperator:
    """Diagonal projection onto positions n where alpha ends just before n.

    Computed directly from the sequence letters (not from operator
    products): the diagonal entry at n is 1 iff n - |alpha| >= -W and
    the letters at n - |alpha| .. n - 1 spell alpha.
    """
    _check_width(W)
    if alpha:
        if alpha.strip("01"):
            raise ValueError("word must consist of '0'/'1' only")
        if len(alpha) > W // 4:
            raise ValueError("word too long for this window")
    diag = _range_diagonal(alpha, W)
    return WindowOperator(W, sparse.csr_matrix(sparse.diags(diag, dtype=np.int64)))


def _range_diagonal(alpha: str, W: int) -> np.ndarray:
    letters = _letters(W)
    size = 2 * W + 1
    L = len(alpha)
    if L == 0:
        return np.ones(size, dtype=np.int64)
    hit = np.zeros(size, dtype=bool)
    window = np.ones(size - L, dtype=bool)
    for k, ch in enumerate(alpha):
        window &= letters[k:size - L + k] == int(ch)
    hit[L:] = window
    return hit.astype(np.int64)


def _interior(m: sparse.csr_matrix, pad: int) -> sparse.csr_matrix:
    return m[pad:m.shape[0] - pad, pad:m.shape[1] - pad]


def _max_abs(m) -> int:
    m = sparse.csr_matrix(m)
    return int(abs(m).max()) if m.nnz else 0


def axiom_residuals(W: int, maxlen: int) -> dict:
    """Maximum residual of each defining relation on the interior band.

    Checks, over all factors up to maxlen: the boolean algebra of range
    projections (intersections, unions, disjointness), the commutation
    p_A s_a = s_a p_{r(A,a)}, the range identities s_a* s_a = p_{r(a)}
    and s_a* s_b = 0, and the sum decomposition of p_A over outgoing
    letters.  All residuals must be exactly zero.
    """
    _check_width(W)
    if maxlen < 1 or maxlen > W // 8:
        raise ValueError("maxlen must lie in [1, W/8]")
    gens = _gen_matrices(W)
    pad = maxlen

    words = []
    for L in range(1, maxlen + 1):
        words.extend(factors_of_length(L))
    diag = {w: _range_diagonal(w, W) for w in words}

    size = 2 * W + 1
    inner = slice(pad, size - pad)
    res_i = 0
    for u in words:
        du = diag[u]
        for v in words:
            if len(v) < len(u):
                continue
            dv = diag[v]
            # r(u) meets r(v) iff both words end at a common position,
            # i.e. u is the final subword of v
            if u == v:
                expect = du
                expect_union = du
            elif v.endswith(u):
                expect = dv
                expect_union = du
            else:
                expect = np.zeros_like(du)
                expect_union = du + dv
            inter = du * dv
            res_i = max(res_i, int(np.abs(inter - expect)[inner].max()))
            union = du + dv - inter
            res_i = max(res_i, int(np.abs(union - expect_union)[inner].max()))

    res_ii = 0
    res_iv = 0
    for w in words:
        if len(w) >= maxlen:
            continue
        p_a = sparse.diags(diag[w], dtype=np.int64)
        decomp = sparse.csr_matrix((size, size), dtype=np.int64)
        for a in "01":
            ext = w + a
            s_a = gens[int(a)]
            p_ext = sparse.diags(
                diag[ext] if is_factor(ext) else np.zeros(size, dtype=np.int64),
                dtype=np.int64,
            )
            res_ii = max(res_ii, _max_abs(_interior(
                sparse.csr_matrix(p_a @ s_a - s_a @ p_ext), pad)))
            decomp = decomp + s_a @ p_ext @ s_a.T
        res_iv = max(res_iv, _max_abs(_interior(sparse.csr_matrix(p_a - decomp), pad)))

    res_iii = 0
    for a in (0, 1):
        lhs = gens[a].T @ gens[a]
        rhs = sparse.diags(diag["01"[a]], dtype=np.int64)
        res_iii = max(res_iii, _max_abs(_interior(sparse.csr_matrix(lhs - rhs), pad)))
    res_iii = max(res_iii, _max_abs(_interior(
        sparse.csr_matrix(gens[0].T @ gens[1]), pad)))
    res_iii = max(res_iii, _max_abs(_interior(
        sparse.csr_matrix(gens[1].T @ gens[0]), pad)))

    return {
        "axiom_i": res_i,
        "axiom_ii": res_ii,
        "axiom_iii": res_iii,
        "axiom_iv": res_iv,
    }


def empirical_trace(alpha: str, W: int) -> Fraction:
    """Normalized diagonal count of the range projection of alpha."""
    _check_width(W)
    if len(alpha) > W // 4:
        raise ValueError("word too long for this window")
    if alpha:
        require_factor(alpha)
    diag = _range_diagonal(alpha, W)
    interior = 2 * W + 1 - len(alpha)
    return Fraction(int(diag.sum()), interior)
