"""The four automatic sequences, as exact integer streams.

Each sequence has a fast per-term form plus an independent oracle that
expands the defining generating function as a truncated formal power
series with exact integer arithmetic:

    thue-morse       product of (1 - x^(2^k)), terms in {+1, -1}
    period-doubling  d_n = |e_n - e_{n+1}| / 2, terms in {0, 1}
    paperfolding     sum of x^(2^n - 1) / (1 - x^(2^(n+2))), terms in {0, 1}
    coons-g00        sum of x^(2^n - 1) / (1 - x^(2^n)), terms >= 1

The fast forms (digit-sum parity for thue-morse, set membership for the
0/1 sequences, valuation count for coons-g00) are accepted only because
the suite checks them against the series expansions on long prefixes.
"""

from __future__ import annotations

from enum import Enum

from .number_sets import SetId, membership, two_adic_valuation


class SequenceId(Enum):
    THUE_MORSE = "thue-morse"
    PERIOD_DOUBLING = "period-doubling"
    PAPERFOLDING = "paperfolding"
    COONS_G00 = "coons-g00"


def term(seq: SequenceId, n: int) -> int:
    """Exact n-th coefficient of the sequence's generating function."""
    if n < 0:
        raise ValueError("sequence index must be nonnegative")
    if seq is SequenceId.THUE_MORSE:
        return -1 if n.bit_count() % 2 else 1
    if seq is SequenceId.PERIOD_DOUBLING:
        return 1 if membership(SetId.J, n) else 0
    if seq is SequenceId.PAPERFOLDING:
        return 1 if membership(SetId.R, n) else 0
    if seq is SequenceId.COONS_G00:
        # one summand per power of two dividing n+1
        return two_adic_valuation(n + 1) + 1
    raise ValueError(f"unknown sequence {seq!r}")


def prefix_terms(seq: SequenceId, length: int) -> list[int]:
    """The first ``length`` terms."""
    if length < 0:
        raise ValueError("prefix length must be nonnegative")
    return [term(seq, n) for n in range(length)]


def series_oracle(seq: SequenceId, length: int) -> list[int]:
    """First ``length`` coefficients straight from the defining series.

    Purely truncated product/sum expansion; shares nothing with term().
    A factor or summand participates iff its minimal exponent is below
    the truncation order.
    """
    if length < 0:
        raise ValueError("prefix length must be nonnegative")
    if length == 0:
        return []
    if seq is SequenceId.THUE_MORSE:
        return _product_expansion(length)
    if seq is SequenceId.PERIOD_DOUBLING:
        e = _product_expansion(length + 1)
        out = []
        for k in range(length):
            diff = abs(e[k] - e[k + 1])
            if diff % 2:
                raise AssertionError("thue-morse difference must be even")
            out.append(diff // 2)
        return out
    if seq is SequenceId.PAPERFOLDING:
        return _geometric_sum_expansion(length, step_exponent_offset=2)
    if seq is SequenceId.COONS_G00:
        return _geometric_sum_expansion(length, step_exponent_offset=0)
    raise ValueError(f"unknown sequence {seq!r}")


def _product_expansion(length: int) -> list[int]:
    # product over k of (1 - x^(2^k)), truncated below `length`
    coeffs = [0] * length
    coeffs[0] = 1
    step = 1
    while step < length:
        # multiply in place by (1 - x^step)
        for i in range(length - 1, step - 1, -1):
            coeffs[i] -= coeffs[i - step]
        step *= 2
    return coeffs


def _geometric_sum_expansion(length: int, step_exponent_offset: int) -> list[int]:
    # sum over n of x^(2^n - 1) * (1 + x^s + x^(2s) + ...), s = 2^(n+offset)
    coeffs = [0] * length
    n = 0
    while (1 << n) - 1 < length:
        start = (1 << n) - 1
        step = 1 << (n + step_exponent_offset)
        for i in range(start, length, step):
            coeffs[i] += 1
        n += 1
    return coeffs
