"""Ring arithmetic, interpolation round trips, and the GF(2) kernel."""

import random

import pytest

from thankel.polynomial import (
    GF2Polynomial,
    IntPolynomial,
    _sdivexact,
    _smul,
    _spread,
    _unspread,
    default_nodes,
    interpolate,
    poly_add,
    poly_eval,
    poly_mod2,
    poly_mul,
    poly_neg,
)

rng = random.Random(20260809)


def random_poly(max_deg=16, bound=1 << 64):
    deg = rng.randrange(-1, max_deg + 1)
    if deg < 0:
        return IntPolynomial()
    coeffs = [rng.randint(-bound, bound) for _ in range(deg)]
    coeffs.append(rng.randint(1, bound) * rng.choice((1, -1)))
    return IntPolynomial(coeffs)


def test_normalization():
    assert IntPolynomial((0, 0, 0)).coeffs == ()
    assert IntPolynomial((1, 2, 0)).coeffs == (1, 2)
    assert IntPolynomial().degree == -1
    assert not IntPolynomial()
    assert IntPolynomial((5,)).degree == 0


def test_add_neg_cancel():
    t = IntPolynomial.variable()
    assert (t + (-t)).coeffs == ()
    assert poly_add(t, poly_neg(t)) == IntPolynomial()


def test_paper_row_as_product():
    t = IntPolynomial.variable()
    assert t * IntPolynomial((-2, 0, 1)) == IntPolynomial((0, -2, 0, 1))


def test_one_is_identity():
    one = IntPolynomial((1,))
    for _ in range(20):
        p = random_poly()
        assert poly_mul(one, p) == p


def test_ring_axioms_random():
    for _ in range(50):
        a, b, c = random_poly(8), random_poly(8), random_poly(8)
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


def test_degree_additivity():
    for _ in range(50):
        a, b = random_poly(10), random_poly(10)
        if a and b:
            assert (a * b).degree == a.degree + b.degree


def test_eval_examples():
    assert poly_eval(IntPolynomial((0, 0, 0, -64, 48, 16, -16, 0, 1)), 1) == -15
    assert poly_eval(IntPolynomial(), 7) == 0
    assert poly_eval(IntPolynomial((0, 4, 2, -6, 0, 1)), 1) == 1


def test_eval_matches_naive():
    for _ in range(30):
        p = random_poly(8, 1 << 16)
        x = rng.randint(-50, 50)
        assert p.eval(x) == sum(c * x**i for i, c in enumerate(p.coeffs))


def test_mod2_examples():
    assert poly_mod2(IntPolynomial((0, -2, 0, 1))) == GF2Polynomial.monomial(3)
    assert poly_mod2(IntPolynomial((0, -8, 12, 4, -8, 0, 1))) == GF2Polynomial.monomial(6)
    assert poly_mod2(IntPolynomial()) == GF2Polynomial(0)


def test_mod2_is_ring_morphism():
    for _ in range(30):
        a, b = random_poly(10, 1 << 20), random_poly(10, 1 << 20)
        assert poly_mod2(a + b) == poly_mod2(a) + poly_mod2(b)
        assert poly_mod2(a * b) == poly_mod2(a) * poly_mod2(b)


def test_interpolate_examples():
    assert interpolate([(0, 0), (1, -1), (2, 4), (-1, 1)]) == IntPolynomial(
        (0, -2, 0, 1)
    )
    assert interpolate([(5, 9)]) == IntPolynomial((9,))
    assert interpolate([(0, 1), (1, 1)]) == IntPolynomial((1,))
    assert interpolate([]) == IntPolynomial()


def test_interpolate_round_trip():
    for _ in range(40):
        p = random_poly(16)
        nodes = default_nodes(p.degree + 1 if p else 1)
        assert interpolate([(x, p.eval(x)) for x in nodes]) == p


def test_interpolate_rejects_duplicate_nodes():
    with pytest.raises(ValueError):
        interpolate([(1, 1), (1, 2)])


def test_interpolate_rejects_non_integer_data():
    # the line through (0,0) and (2,1) has slope 1/2
    with pytest.raises(ArithmeticError):
        interpolate([(0, 0), (2, 1)])


def test_default_nodes():
    assert default_nodes(5) == [0, 1, -1, 2, -2]
    assert default_nodes(0) == []


def test_divexact_int():
    for _ in range(25):
        a, b = random_poly(8, 1 << 12), random_poly(6, 1 << 12)
        if not b:
            continue
        assert (a * b).divexact(b) == a
    with pytest.raises(ArithmeticError):
        IntPolynomial((1, 1)).divexact(IntPolynomial((0, 0, 1)))
    with pytest.raises(ZeroDivisionError):
        IntPolynomial((1,)).divexact(IntPolynomial())


# --- GF(2) ---------------------------------------------------------------


def naive_gf2_mul(a: int, b: int) -> int:
    out = 0
    i = 0
    while a >> i:
        if (a >> i) & 1:
            out ^= b << i
        i += 1
    return out


def test_gf2_basics():
    p = GF2Polynomial.from_coeffs([1, 0, 1])
    assert p.degree == 2
    assert p.coeffs() == [1, 0, 1]
    assert p + p == GF2Polynomial(0)
    assert GF2Polynomial.monomial(3).bits == 8
    assert GF2Polynomial.from_coeffs([3, 2, 5]).coeffs() == [1, 0, 1]


def test_gf2_mul_matches_naive():
    for _ in range(60):
        a = rng.getrandbits(rng.randrange(1, 120))
        b = rng.getrandbits(rng.randrange(1, 120))
        assert (GF2Polynomial(a) * GF2Polynomial(b)).bits == naive_gf2_mul(a, b)


def test_gf2_mul_large_degree_fallback():
    # one factor beyond the byte-spread capacity of 255 terms
    for bits_a, bits_b in ((2100, 300), (300, 2100), (2100, 2100)):
        a = rng.getrandbits(bits_a) | (1 << bits_a)
        b = rng.getrandbits(bits_b) | (1 << bits_b)
        assert (GF2Polynomial(a) * GF2Polynomial(b)).bits == naive_gf2_mul(a, b)


def test_gf2_divexact():
    for _ in range(40):
        a = rng.getrandbits(60) | 1 << 60
        b = rng.getrandbits(40) | 1 << 40
        prod = GF2Polynomial(a) * GF2Polynomial(b)
        assert prod.divexact(GF2Polynomial(b)) == GF2Polynomial(a)
    with pytest.raises(ArithmeticError):
        GF2Polynomial(0b111).divexact(GF2Polynomial(0b110))
    with pytest.raises(ZeroDivisionError):
        GF2Polynomial(1).divexact(GF2Polynomial(0))


def test_spread_round_trip():
    for _ in range(40):
        bits = rng.getrandbits(rng.randrange(1, 400))
        assert _unspread(_spread(bits)) == bits
    assert _spread(0) == 0
    assert _unspread(0) == 0


def test_spread_mul_and_divide():
    for _ in range(40):
        a = rng.getrandbits(100) | 1 << 100
        b = rng.getrandbits(80) | 1 << 80
        sp = _smul(_spread(a), _spread(b))
        assert _unspread(sp) == naive_gf2_mul(a, b)
        assert _unspread(_sdivexact(sp, _spread(b))) == a


def test_text_and_pretty():
    p = IntPolynomial((0, -2, 0, 1))
    assert p.text() == "[0,-2,0,1]"
    assert p.pretty() == "t^3 - 2t"
    assert IntPolynomial((16, 12, -9)).pretty() == "-9t^2 + 12t + 16"
    assert IntPolynomial().pretty() == "0"
    assert IntPolynomial((7,)).pretty() == "7"
    g = GF2Polynomial.monomial(4)
    assert g.text() == "[0,0,0,0,1]"
    assert g.pretty() == "t^4"


def test_immutability():
    p = IntPolynomial((1, 2))
    with pytest.raises(AttributeError):
        p.coeffs = (3,)
    g = GF2Polynomial(5)
    with pytest.raises(AttributeError):
        g.bits = 9
