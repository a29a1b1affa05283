"""Per-term closed forms against the truncated-series oracles."""

import pytest

from thankel.number_sets import SetId, membership
from thankel.sequences import SequenceId, prefix_terms, series_oracle, term

ALL = list(SequenceId)


@pytest.mark.parametrize("seq", ALL)
def test_term_matches_series_oracle(seq):
    assert prefix_terms(seq, 4096) == series_oracle(seq, 4096)


def test_listed_openings():
    assert prefix_terms(SequenceId.THUE_MORSE, 4) == [1, -1, -1, 1]
    assert prefix_terms(SequenceId.PERIOD_DOUBLING, 6) == [1, 0, 1, 1, 1, 0]
    assert prefix_terms(SequenceId.PAPERFOLDING, 7) == [1, 1, 0, 1, 1, 0, 0]
    assert term(SequenceId.COONS_G00, 1) == 2


def test_series_oracle_openings():
    assert series_oracle(SequenceId.THUE_MORSE, 4) == [1, -1, -1, 1]
    assert series_oracle(SequenceId.PAPERFOLDING, 7) == [1, 1, 0, 1, 1, 0, 0]
    # only the first summand contributes below order 1
    assert series_oracle(SequenceId.COONS_G00, 1) == [1]
    assert series_oracle(SequenceId.PERIOD_DOUBLING, 0) == []


def test_prefix_terms_edges():
    assert prefix_terms(SequenceId.PERIOD_DOUBLING, 0) == []
    with pytest.raises(ValueError):
        prefix_terms(SequenceId.PERIOD_DOUBLING, -1)
    with pytest.raises(ValueError):
        term(SequenceId.THUE_MORSE, -1)


def test_value_ranges():
    assert set(prefix_terms(SequenceId.THUE_MORSE, 4096)) == {1, -1}
    assert set(prefix_terms(SequenceId.PERIOD_DOUBLING, 4096)) == {0, 1}
    assert set(prefix_terms(SequenceId.PAPERFOLDING, 4096)) == {0, 1}
    assert min(prefix_terms(SequenceId.COONS_G00, 4096)) >= 1


def test_period_doubling_from_thue_morse_difference():
    e = prefix_terms(SequenceId.THUE_MORSE, 4097)
    d = prefix_terms(SequenceId.PERIOD_DOUBLING, 4096)
    for n in range(4096):
        assert d[n] == abs(e[n] - e[n + 1]) // 2


def test_period_doubling_parity_characterizes_j():
    for n in range(1 << 16):
        assert (term(SequenceId.PERIOD_DOUBLING, n) % 2 == 1) == membership(
            SetId.J, n
        )


def test_paperfolding_ones_characterize_r():
    for n in range(1 << 16):
        assert (term(SequenceId.PAPERFOLDING, n) == 1) == membership(SetId.R, n)
