"""One-shot verification suite behind the CLI `verify` subcommand.

Each check re-derives an exact identity at desk scale and returns a
(name, ok, detail) triple.  Quick mode shrinks the bounds to keep the
whole suite under a minute; full mode runs the documented sizes.
"""

from __future__ import annotations

from fractions import Fraction

from . import afcore, blocks, extensions, ktheory, repwindow, trace, words
from .errors import LevelError


def _result(name: str, ok: bool, detail: str) -> dict:
    return {"name": name, "ok": bool(ok), "detail": detail}


def _all_factors_upto(max_len: int) -> list:
    out = []
    for L in range(1, max_len + 1):
        out.extend(words.factors_of_length(L))
    return out


def check_trace_values(quick: bool) -> dict:
    """Pinned exact trace values at lengths 2, 3 and the 22-letter example."""
    expected = {
        "00": Fraction(1, 6), "11": Fraction(1, 6),
        "01": Fraction(1, 3), "10": Fraction(1, 3),
    }
    bad = [w for w, v in expected.items() if trace.trace_range(w) != v]
    bad += [w for w in words.factors_of_length(3)
            if trace.trace_range(w) != Fraction(1, 6)]
    if trace.trace_range(words.tm_slice(10, 32)) != Fraction(1, 48):
        bad.append("slice[10,32)")
    return _result("trace-values", not bad, f"mismatches: {bad}" if bad else "exact")


def check_block_traces(quick: bool) -> dict:
    """Closed-form two-block traces against the peeling recursion."""
    n_max = 5 if quick else 8
    for n in range(n_max + 1):
        for i in (0, 1):
            for j in (0, 1):
                w = words.block(i, n) + words.block(j, n)
                if trace.trace_range(w) != trace.block_trace(i, j, n):
                    return _result("block-traces", False, f"mismatch at {(i, j, n)}")
    return _result("block-traces", True, f"all pairs for n <= {n_max}")


def check_trace_axioms(quick: bool) -> dict:
    """Additivity both sides, symmetry, partition of unity, positivity."""
    max_len = 10 if quick else 16
    for L in range(1, max_len + 1):
        total = Fraction(0)
        for w in words.factors_of_length(L):
            v = trace.trace_range(w)
            total += v
            if v <= 0:
                return _result("trace-axioms", False, f"nonpositive at {w}")
            if v != trace.trace_range(w[::-1]):
                return _result("trace-axioms", False, f"reversal fails at {w}")
            if v != trace.trace_range(words.complement(w)):
                return _result("trace-axioms", False, f"complement fails at {w}")
            right = sum(trace.trace_range(w + a) for a in "01"
                        if words.is_factor(w + a))
            left = sum(trace.trace_range(a + w) for a in "01"
                       if words.is_factor(a + w))
            if not v == right == left:
                return _result("trace-axioms", False, f"additivity fails at {w}")
        if total != 1:
            return _result("trace-axioms", False, f"partition sum {total} at length {L}")
    return _result("trace-axioms", True, f"lengths <= {max_len}")


def check_uniqueness_certificate(quick: bool) -> dict:
    """Nested positivity intervals shrinking to 1/6; closed form at 1/6."""
    n_max = 20 if quick else 30
    sixth = Fraction(1, 6)
    prev = None
    for n in range(1, n_max + 1):
        lo, hi = trace.uniqueness_interval(n)
        if not lo < sixth < hi:
            return _result("uniqueness", False, f"1/6 outside interval at N={n}")
        if hi - lo > Fraction(1, 2 ** n):
            return _result("uniqueness", False, f"width too large at N={n}")
        if prev is not None and not (prev[0] <= lo and hi <= prev[1]):
            return _result("uniqueness", False, f"not nested at N={n}")
        prev = (lo, hi)
    for n in range(n_max + 1):
        got = trace.matrix_iterate(sixth, n)
        if got != (Fraction(1, 6 * 2 ** n), Fraction(1, 3 * 2 ** n)):
            return _result("uniqueness", False, f"closed form fails at n={n}")
    return _result("uniqueness", True, f"N <= {n_max}")


def check_ergodic_oracle(quick: bool) -> dict:
    """Trace values against empirical frequencies in a long prefix."""
    window = 1 << (18 if quick else 22)
    max_len = 6 if quick else 8
    tol = Fraction(1, 100)
    worst = Fraction(0)
    for w in _all_factors_upto(max_len):
        gap = abs(trace.trace_range(w) - trace.frequency(w, window))
        worst = max(worst, gap)
        if gap > tol:
            return _result("ergodic-oracle", False, f"gap {gap} at {w}")
    return _result("ergodic-oracle", True,
                   f"max gap {worst} <= 1/100 over lengths <= {max_len}")


def _brute_level_splits(w: str, n: int) -> list:
    """All (gamma0, blocks, gamma1) splittings of w at level n, by brute force."""
    size = 1 << n
    bl = [words.block(0, n), words.block(1, n)]
    out = []
    for g0 in range(size):
        rest = len(w) - g0
        if rest < 2 * size:
            continue
        k = rest // size
        g1 = rest - k * size
        gamma0, gamma1 = w[:g0], w[len(w) - g1:] if g1 else ""
        if gamma0 and not any(b.endswith(gamma0) for b in bl):
            continue
        if gamma1 and not any(b.startswith(gamma1) for b in bl):
            continue
        mid = w[g0:len(w) - g1] if g1 else w[g0:]
        bits = []
        for t in range(k):
            chunk = mid[t * size:(t + 1) * size]
            if chunk == bl[0]:
                bits.append(0)
            elif chunk == bl[1]:
                bits.append(1)
            else:
                bits = None
                break
        if bits is not None:
            out.append((gamma0, tuple(bits), gamma1))
    return out


def check_combinatorics(quick: bool) -> dict:
    """Extension counts, decomposition existence/uniqueness, follower
    blocks, overlap-freeness."""
    count_len = 10 if quick else 14
    decomp_len = 24 if quick else 48
    follow_n = 2 if quick else 3
    overlap_len = 6 if quick else 8

    # two-sided extension counts with the exact exceptional families
    for L in range(2, count_len + 1):
        bad = {w for w in words.factors_of_length(L)
               if extensions.classify_extension_count(w) not in (1, 2, 4)}
        if bad:
            return _result("combinatorics", False, f"bad count at {sorted(bad)}")
        achieved = {w for w in words.factors_of_length(L)
                    if extensions.classify_extension_count(w) == 4}
        expected = set()
        if L & (L - 1) == 0:
            # two-block family at length 2^(m+1)
            m = L.bit_length() - 2
            b0, b1 = words.block(0, m), words.block(1, m)
            expected |= {b0 + b1, b1 + b0}
        if L % 4 == 0 and (L // 4) & (L // 4 - 1) == 0:
            # four-block family at length 4 * 2^m
            m = (L // 4).bit_length() - 1
            b0, b1 = words.block(0, m), words.block(1, m)
            expected |= {b0 + b1 + b1 + b0, b1 + b0 + b0 + b1}
        if achieved != expected:
            return _result("combinatorics", False,
                           f"count-4 set at length {L}: {sorted(achieved)}")

    # canonical decomposition: existence with 2..4 blocks, uniqueness per level
    for L in range(2, decomp_len + 1):
        for w in words.factors_of_length(L):
            n_star = blocks.choose_level(w)
            d = blocks.decompose(w, n_star)
            if not 2 <= len(d.blocks) <= 4:
                return _result("combinatorics", False, f"existence fails at {w}")
            for n in range(n_star + 1):
                try:
                    dn = blocks.decompose(w, n)
                except LevelError:
                    continue
                if blocks.recompose(dn) != w:
                    return _result("combinatorics", False, f"round trip fails at {w}")
                splits = _brute_level_splits(w, n)
                if splits != [(dn.gamma0, dn.blocks, dn.gamma1)]:
                    return _result("combinatorics", False,
                                   f"uniqueness fails at {w} level {n}: {splits}")

    # a block pair is followed (preceded) only by a full block
    for n in range(1, follow_n + 1):
        size = 1 << n
        bl = {words.block(0, n), words.block(1, n)}
        for w in words.factors_of_length(3 * size):
            if w[:size] in bl and w[size:2 * size] in bl and w[2 * size:] not in bl:
                return _result("combinatorics", False, f"follower fails at {w}")
            if w[size:2 * size] in bl and w[2 * size:] in bl and w[:size] not in bl:
                return _result("combinatorics", False, f"preceder fails at {w}")

    # overlap-freeness
    for L in range(1, overlap_len + 1):
        for beta in words.factors_of_length(L):
            for p in range(1, L + 1):
                if words.is_factor(beta + beta + beta[:p]):
                    return _result("combinatorics", False, f"overlap {beta}+{p}")

    return _result("combinatorics", True,
                   f"counts <= {count_len}, decompositions <= {decomp_len}")


def check_k_theory(quick: bool) -> dict:
    """Reduction soundness, generator relations, order unit, kernel element."""
    max_len = 8 if quick else 12
    for w in _all_factors_upto(max_len):
        if ktheory.evaluate(ktheory.reduce_class(w)) != trace.trace_range(w):
            return _result("k-theory", False, f"evaluation fails at {w}")
    K = ktheory.K0Element
    for n in range(11):
        if not ktheory.k0_equal(K(n, 1, 0), K(n + 1, 0, 2)):
            return _result("k-theory", False, f"a_n = 2b_(n+1) fails at {n}")
        if not ktheory.k0_equal(K(n, 0, 1), K(n + 1, 1, 1)):
            return _result("k-theory", False, f"b_n = a+b fails at {n}")
        if ktheory.k0_equal(K(n, 1, 0), K(n, 0, 1)):
            return _result("k-theory", False, f"a_n = b_n at {n}")
    unit = ktheory.k0_add(ktheory.reduce_class("0"), ktheory.reduce_class("1"))
    if unit != K(0, 2, 4):
        return _result("k-theory", False, f"order unit {unit}")
    kernel = K(0, 1, -1)
    if ktheory.evaluate(kernel) != 0:
        return _result("k-theory", False, "kernel element evaluates nonzero")
    if ktheory.is_positive(kernel) or ktheory.is_positive(ktheory.k0_neg(kernel)):
        return _result("k-theory", False, "kernel element ordered")
    return _result("k-theory", True, f"soundness over lengths <= {max_len}")


def check_af_core(quick: bool) -> dict:
    """Dimensions and trace compatibility along the inclusions."""
    k_max = 4 if quick else 8
    dims = [afcore.af_level(k).dimension for k in (1, 2, 3)]
    if dims != [4, 10, 16]:
        return _result("af-core", False, f"dimensions {dims}")
    for k in range(1, k_max + 1):
        m = afcore.inclusion_matrix(k)
        if any(s not in (1, 2, 4) for s in m.column_sums()):
            return _result("af-core", False, f"column sums at k={k}")
        if any(s < 1 for s in m.row_sums()):
            return _result("af-core", False, f"row sums at k={k}")
        if afcore.push_trace_down(m, afcore.trace_vector(k + 1)) != afcore.trace_vector(k):
            return _result("af-core", False, f"trace compatibility at k={k}")
        if sum(afcore.trace_vector(k)) != 1:
            return _result("af-core", False, f"trace sum at k={k}")
    return _result("af-core", True, f"inclusions up to k={k_max}")


def check_representation(quick: bool) -> dict:
    """Zero residuals on the window interior; empirical trace agreement."""
    w_axiom = 1 << (10 if quick else 14)
    maxlen = 4 if quick else 8
    w_trace = 1 << (12 if quick else 16)
    trace_len = 4 if quick else 6
    res = repwindow.axiom_residuals(w_axiom, maxlen)
    if any(v != 0 for v in res.values()):
        return _result("representation", False, f"residuals {res}")
    tol = Fraction(1, 100)
    for w in _all_factors_upto(trace_len):
        gap = abs(repwindow.empirical_trace(w, w_trace) - trace.trace_range(w))
        if gap > tol:
            return _result("representation", False, f"empirical gap {gap} at {w}")
    return _result("representation", True,
                   f"residuals 0 at W={w_axiom}, trace gaps <= 1/100 at W={w_trace}")


ALL_CHECKS = [
    check_trace_values,
    check_block_traces,
    check_trace_axioms,
    check_uniqueness_certificate,
    check_ergodic_oracle,
    check_combinatorics,
    check_k_theory,
    check_af_core,
    check_representation,
]


def run_suite(quick: bool = False) -> dict:
    checks = [fn(quick) for fn in ALL_CHECKS]
    return {
        "mode": "quick" if quick else "full",
        "checks": checks,
        "ok": all(c["ok"] for c in checks),
    }
