"""Closed-form membership against brute enumeration of the defining
parameterizations, plus the transformation lemmas."""

import pytest

from thankel.number_sets import (
    SetId,
    beta,
    delta,
    membership,
    prefix,
    transposition_in,
    two_adic_valuation,
)

LIMIT = 1 << 16


def param_set_j(limit):
    # (2n+1) * 2^(2k) - 1
    out = set()
    k = 0
    while (1 << (2 * k)) - 1 <= limit:
        step = 1 << (2 * k)
        n = 0
        while (2 * n + 1) * step - 1 <= limit:
            out.add((2 * n + 1) * step - 1)
            n += 1
        k += 1
    return out


def param_set_jstar(limit):
    out = set()
    k = 1
    while (1 << (2 * k)) - 1 <= limit:
        step = 1 << (2 * k)
        n = 0
        while (2 * n + 1) * step - 1 <= limit:
            out.add((2 * n + 1) * step - 1)
            n += 1
        k += 1
    return out


def param_set_k(limit):
    # (2n+1) * 2^(2k+1) - 1
    out = set()
    k = 0
    while (1 << (2 * k + 1)) - 1 <= limit:
        step = 1 << (2 * k + 1)
        n = 0
        while (2 * n + 1) * step - 1 <= limit:
            out.add((2 * n + 1) * step - 1)
            n += 1
        k += 1
    return out


def param_set_r(limit):
    # (4k+1) * 2^n - 1
    out = set()
    n = 0
    while (1 << n) - 1 <= limit:
        step = 1 << n
        k = 0
        while (4 * k + 1) * step - 1 <= limit:
            out.add((4 * k + 1) * step - 1)
            k += 1
        n += 1
    return out


def test_closed_forms_match_parameterizations():
    in_j = param_set_j(LIMIT)
    in_jstar = param_set_jstar(LIMIT)
    in_k = param_set_k(LIMIT)
    in_r = param_set_r(LIMIT)
    for n in range(LIMIT):
        assert membership(SetId.J, n) == (n in in_j)
        assert membership(SetId.JSTAR, n) == (n in in_jstar)
        assert membership(SetId.K, n) == (n in in_k)
        assert membership(SetId.R, n) == (n in in_r)
        assert membership(SetId.L, n) == (
            n in in_k or n % 2 == 0
        )  # L = K union evens
        assert membership(SetId.N, n)


def test_partitions():
    for n in range(LIMIT):
        assert membership(SetId.J, n) != membership(SetId.K, n)
        assert membership(SetId.P, n) != membership(SetId.Q, n)
        assert membership(SetId.L, n) != membership(SetId.JSTAR, n)


def test_jstar_inside_j():
    for n in range(1 << 12):
        if membership(SetId.JSTAR, n):
            assert membership(SetId.J, n)


@pytest.mark.parametrize(
    "set_id,n,expected",
    [
        (SetId.J, 0, True),
        (SetId.J, 5, False),
        (SetId.JSTAR, 11, True),
        (SetId.R, 9, True),
        (SetId.P, 2, False),
    ],
)
def test_membership_examples(set_id, n, expected):
    assert membership(set_id, n) is expected


def test_listed_prefixes():
    assert list(prefix(SetId.J, 10)) == [0, 2, 3, 4, 6, 8, 10, 11, 12, 14]
    assert list(prefix(SetId.JSTAR, 6)) == [3, 11, 15, 19, 27, 35]
    assert list(prefix(SetId.K, 6)) == [1, 5, 7, 9, 13, 17]
    assert list(prefix(SetId.L, 10)) == [0, 1, 2, 4, 6, 8, 10, 13, 14, 16]
    assert list(prefix(SetId.P, 5)) == [0, 3, 4, 7, 8]
    assert list(prefix(SetId.Q, 6)) == [1, 2, 5, 6, 9, 10]
    assert list(prefix(SetId.R, 10)) == [0, 1, 3, 4, 7, 8, 9, 12, 15, 16]
    assert list(prefix(SetId.J, 0)) == []


def test_prefix_properties():
    fp = prefix(SetId.Q, 64)
    assert fp.size == 64 == len(fp)
    assert list(fp.elements) == sorted(fp.elements)
    assert all(membership(SetId.Q, n) for n in fp)
    # nothing skipped below the last element
    below = [n for n in range(fp.elements[-1] + 1) if membership(SetId.Q, n)]
    assert below == list(fp.elements)


def test_prefix_rejects_negative_size():
    with pytest.raises(ValueError):
        prefix(SetId.J, -1)


def test_beta_examples():
    assert beta(0) == 0
    assert beta(7) == 15
    assert beta(5) == 11


def test_beta_bijects_onto_p_prefix():
    for m in (0, 1, 2, 17, 256, 512):
        image = {beta(n) for n in prefix(SetId.N, m)}
        assert image == set(prefix(SetId.P, m).elements)


def test_delta_examples():
    assert delta(15) == 14
    assert delta(0) == 1
    with pytest.raises(ValueError):
        delta(2)


def test_delta_bijects_onto_q_prefix():
    for m in (0, 1, 2, 17, 256, 512):
        image = {delta(n) for n in prefix(SetId.P, m)}
        assert image == set(prefix(SetId.Q, m).elements)


def test_transposition_in():
    assert transposition_in(0, 2, SetId.J)
    assert not transposition_in(2, 3, SetId.J)  # 5 lies in K
    assert transposition_in(4, 7, SetId.JSTAR)
    with pytest.raises(ValueError):
        transposition_in(3, 3, SetId.J)


def test_beta_carries_j_sums_to_l_sums():
    for c in range(256):
        for d in range(c + 1, 256):
            assert membership(SetId.J, c + d) == membership(
                SetId.L, beta(c) + beta(d)
            )


def test_delta_preserves_jstar_sums():
    elems = prefix(SetId.P, 256).elements
    for i, c in enumerate(elems):
        for d in elems[i + 1 :]:
            if membership(SetId.JSTAR, c + d):
                assert delta(c) + delta(d) == c + d


def test_jstar_sums_are_3_mod_4():
    # sums of pairs below 2^12 stay below 2^13
    for s in range(1 << 13):
        if membership(SetId.JSTAR, s):
            assert s % 4 == 3


def test_even_members_of_r():
    for m in range(0, LIMIT, 2):
        assert membership(SetId.R, m) == (m % 4 == 0)


def test_r_decomposition_unique():
    for m in prefix(SetId.R, 4096):
        target = m + 1
        decompositions = []
        for n in range(target.bit_length() + 1):
            if target % (1 << n) == 0:
                q = target >> n
                if q % 4 == 1:
                    decompositions.append((n, (q - 1) // 4))
        assert len(decompositions) == 1, m


def test_two_adic_valuation():
    assert two_adic_valuation(1) == 0
    assert two_adic_valuation(12) == 2
    assert two_adic_valuation(1 << 20) == 20
    with pytest.raises(ValueError):
        two_adic_valuation(0)


def test_membership_rejects_negative():
    with pytest.raises(ValueError):
        membership(SetId.J, -1)
