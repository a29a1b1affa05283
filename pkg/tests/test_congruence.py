"""Binomial values against math.comb, parity against exact values, and
the two parity lemmas at reduced scale (full scale runs in acceptance)."""

import math

from thankel.congruence import binom, binom_parity


def test_examples():
    assert binom(4, 2) == 6
    assert binom(17, 0) == 1
    assert binom(10, 11) == 0
    assert binom(10, -1) == 0
    assert binom_parity(6, 3) == 0  # (2a, 2b+1) with a=3, b=1
    assert binom_parity(9, 9) == 1
    assert binom_parity(5, 2) == 0


def test_values_match_math_comb():
    for n in range(0, 200):
        for k in range(0, n + 1):
            assert binom(n, k) == math.comb(n, k)
    assert binom(512, 256) == math.comb(512, 256)


def test_parity_matches_exact_values():
    for n in range(0, 256):
        for k in range(0, n + 1):
            assert binom_parity(n, k) == binom(n, k) % 2


def test_even_times_odd_entry_is_even():
    for a in range(1, 65):
        for b in range(1, 65):
            assert binom_parity(2 * a, 2 * b + 1) == 0


def test_even_split_parity_lemma_small():
    # sum over i+j=k of C(n,2i)C(n,2j): even for odd k, C(n,k) mod 2 otherwise
    for n in range(0, 33):
        for k in range(0, 33):
            s = sum(binom(n, 2 * i) * binom(n, 2 * (k - i)) for i in range(k + 1))
            if k % 2:
                assert s % 2 == 0
            else:
                assert s % 2 == binom_parity(n, k)


def test_mixed_split_parity_lemma_small():
    for n in range(0, 33):
        for m in range(0, 33):
            if (n + m) % 2 == 0:
                continue
            for k in range(0, 33):
                s = sum(
                    binom(n, 2 * i) * binom(m, 2 * (k - i)) for i in range(k + 1)
                )
                assert s % 2 == binom_parity(n + m, 2 * k)


def test_vandermonde_exact():
    # Encode row n as sum of C(n,i) * B^i with B large enough that the
    # integer product of two encodings carries out the convolution
    # sum(C(n,i)C(m,j-i)) digit by digit without overflow; the identity
    # then reads enc(n) * enc(m) == enc(n+m).
    shift = 192  # digits stay below 65 * C(64,32)^2 < 2^130

    def enc(n):
        out = 0
        for i in range(n, -1, -1):
            out = (out << shift) + binom(n, i)
        return out

    encodings = [enc(n) for n in range(129)]
    for n in range(0, 65):
        for m in range(0, 65):
            assert encodings[n] * encodings[m] == encodings[n + m]
