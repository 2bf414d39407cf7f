from fractions import Fraction

import pytest

from thuemorse import trace, words
from thuemorse.errors import NotAFactorError, ResourceLimitError

SIXTH = Fraction(1, 6)
THIRD = Fraction(1, 3)


def test_length_three_values():
    for w in words.factors_of_length(3):
        assert trace.trace_range(w) == SIXTH


def test_length_one_two_values():
    assert trace.trace_range("0") == Fraction(1, 2)
    assert trace.trace_range("1") == Fraction(1, 2)
    assert trace.trace_range("00") == SIXTH
    assert trace.trace_range("11") == SIXTH
    assert trace.trace_range("01") == THIRD
    assert trace.trace_range("10") == THIRD


def test_long_word_collapses_to_block_pair_value():
    # the 22-letter word starting at position 10 completes to a pair of
    # level-3 blocks, value 1/(6 * 2^3)
    assert trace.trace_range(words.tm_slice(10, 32)) == Fraction(1, 48)


def test_peeling_example():
    assert trace.trace_range("0110") == SIXTH
    assert trace.trace_range("1001") == SIXTH
    assert trace.trace_range("0011") == Fraction(1, 12)


def test_not_a_factor():
    with pytest.raises(NotAFactorError):
        trace.trace_range("100100")


def test_family_examples():
    assert trace.trace_family(["00", "01"]) == Fraction(1, 2)
    assert trace.trace_family(["00", "10"]) == Fraction(1, 2)
    assert trace.trace_family(["0110"]) == trace.trace_range("0110")
    assert trace.trace_family(words.factors_of_length(4)) == 1


def test_family_validation():
    with pytest.raises(ValueError):
        trace.trace_family([])
    with pytest.raises(ValueError):
        trace.trace_family(["00", "00"])
    with pytest.raises(ValueError):
        trace.trace_family(["00", "010"])
    with pytest.raises(NotAFactorError):
        trace.trace_family(["000"])


def test_spanning_examples():
    assert trace.trace_spanning("01", "10", ["1001"]) == 0
    assert trace.trace_spanning("01", "01", ["1001"]) == SIXTH
    assert trace.trace_spanning("", "", ["00", "01", "10", "11"]) == 1
    # members without the suffix contribute nothing
    assert trace.trace_spanning("01", "01", ["1001", "0110"]) == SIXTH
    with pytest.raises(ValueError):
        trace.trace_spanning("01x", "01x", ["1001"])


def test_block_trace_examples():
    assert trace.block_trace(0, 0, 0) == SIXTH
    assert trace.block_trace(0, 1, 3) == Fraction(1, 24)
    for n in range(9):
        assert trace.block_trace(1, 0, n) == trace.block_trace(0, 1, n)
        assert trace.block_trace(1, 1, n) == trace.block_trace(0, 0, n)


def test_block_trace_matches_peeling():
    for n in range(9):
        for i in (0, 1):
            for j in (0, 1):
                w = words.block(i, n) + words.block(j, n)
                assert trace.trace_range(w) == trace.block_trace(i, j, n)
        # same-letter pairs are strictly rarer than mixed pairs
        assert trace.block_trace(0, 0, n) < trace.block_trace(0, 1, n)


def test_additivity_both_sides():
    for L in range(1, 13):
        for w in words.factors_of_length(L):
            v = trace.trace_range(w)
            right = sum(trace.trace_range(w + a) for a in "01" if words.is_factor(w + a))
            left = sum(trace.trace_range(a + w) for a in "01" if words.is_factor(a + w))
            assert v == right == left


def test_symmetry():
    for L in range(1, 13):
        for w in words.factors_of_length(L):
            v = trace.trace_range(w)
            assert v == trace.trace_range(w[::-1])
            assert v == trace.trace_range(words.complement(w))


def test_partition_of_unity_and_positivity():
    for L in range(1, 17):
        values = [trace.trace_range(w) for w in words.factors_of_length(L)]
        assert sum(values) == 1
        assert all(v > 0 for v in values)


def test_monotone_halving():
    for L in range(4, 13):
        for w in words.factors_of_length(L):
            tail = trace.trace_range(w[1:])
            assert trace.trace_range(w) in (tail, tail / 2)


def test_matrix_iterate_examples():
    assert trace.matrix_iterate(SIXTH, 0) == (SIXTH, THIRD)
    assert trace.matrix_iterate(SIXTH, 3) == (Fraction(1, 48), Fraction(1, 24))
    # direct substitution into the closed form; the first coordinate
    # vanishing is the positivity failure that rules out t = 1/4
    assert trace.matrix_iterate(Fraction(1, 4), 1) == (Fraction(0), Fraction(1, 4))


def test_matrix_iterate_closed_form_is_checked_deeply():
    for t in (Fraction(0), SIXTH, Fraction(1, 4), Fraction(1, 2)):
        for n in range(41):
            b1, b2 = trace.matrix_iterate(t, n)
            u = 3 * t - Fraction(1, 2)
            sign = (-1) ** n
            assert 3 * b1 == Fraction(1, 2) ** (n + 1) + u * sign
            assert 3 * b2 == Fraction(1, 2) ** n - u * sign


def test_matrix_iterate_validation():
    with pytest.raises(ValueError):
        trace.matrix_iterate(Fraction(2, 3), 1)
    with pytest.raises(ValueError):
        trace.matrix_iterate(SIXTH, -1)


def test_uniqueness_interval_examples():
    lo, hi = trace.uniqueness_interval(1)
    assert lo < SIXTH < hi
    assert hi <= Fraction(1, 4)


def test_uniqueness_interval_nesting_and_width():
    prev = None
    for n in range(1, 31):
        lo, hi = trace.uniqueness_interval(n)
        assert lo < SIXTH < hi
        assert hi - lo <= Fraction(1, 2 ** n)
        if prev:
            assert prev[0] <= lo and hi <= prev[1]
        prev = (lo, hi)
    # the endpoints themselves violate positivity at some level
    for t in trace.uniqueness_interval(6):
        values = [trace.matrix_iterate(t, n) for n in range(8)]
        assert any(b1 <= 0 or b2 <= 0 for b1, b2 in values)


def test_frequency_examples():
    assert trace.frequency("0", 1 << 20) == Fraction(1, 2)
    assert abs(trace.frequency("01", 1 << 20) - THIRD) <= Fraction(1, 100)
    assert abs(trace.frequency("00", 1 << 20) - SIXTH) <= Fraction(1, 100)


def test_frequency_oracle_agreement():
    window = 1 << 18
    for L in range(1, 7):
        for w in words.factors_of_length(L):
            gap = abs(trace.trace_range(w) - trace.frequency(w, window))
            assert gap <= Fraction(1, 100)


def test_frequency_validation():
    with pytest.raises(ResourceLimitError):
        trace.frequency("0", (1 << 26) + 1)
    with pytest.raises(ValueError):
        trace.frequency("0110", 2)
