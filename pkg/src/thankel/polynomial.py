"""Exact univariate polynomial arithmetic in t.

Two coefficient domains:

* ``IntPolynomial`` -- dense list of unbounded Python ints, ascending by
  degree.  [1, 10, 5] is 1 + 10t + 5t^2; the zero polynomial stores no
  coefficients at all.
* ``GF2Polynomial`` -- coefficients mod 2, bit-packed into one int (bit i
  is the coefficient of t^i).

Multiplication over GF(2) uses a byte-spread trick: placing each bit in
its own byte makes one machine integer multiply compute all column sums
of the schoolbook product at once, and masking the low bit of every byte
reduces them mod 2.  Valid while no column sum reaches 256, i.e. while
one factor has fewer than 256 terms; larger inputs fall back to shifted
XOR accumulation.  The spread form is also used directly by the
determinant kernels, which is why the helpers below are module level.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence


class IntPolynomial:
    """Immutable integer-coefficient polynomial, normalized (no trailing
    zero coefficients)."""

    __slots__ = ("coeffs",)

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls((c,))

    @classmethod
    def variable(cls) -> "IntPolynomial":
        """The polynomial t."""
        return cls((0, 1))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("IntPolynomial", self.coeffs))

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return IntPolynomial(out)

    def scale(self, c: int) -> "IntPolynomial":
        return IntPolynomial(tuple(c * x for x in self.coeffs))

    def eval(self, x: int) -> int:
        """Exact Horner evaluation at an integer point."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def mod2(self) -> "GF2Polynomial":
        bits = 0
        for i, c in enumerate(self.coeffs):
            if c & 1:
                bits |= 1 << i
        return GF2Polynomial(bits)

    def divexact(self, other: "IntPolynomial") -> "IntPolynomial":
        """Quotient self/other when the division is exact; raises
        ArithmeticError otherwise."""
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        if not self:
            return IntPolynomial()
        rem = [Fraction(c) for c in self.coeffs]
        div = other.coeffs
        dq = len(rem) - len(div)
        if dq < 0:
            raise ArithmeticError("inexact polynomial division")
        lead = Fraction(div[-1])
        q = [Fraction(0)] * (dq + 1)
        for i in range(dq, -1, -1):
            factor = rem[i + len(div) - 1] / lead
            q[i] = factor
            if factor:
                for j, d in enumerate(div):
                    rem[i + j] -= factor * d
        if any(rem) or any(c.denominator != 1 for c in q):
            raise ArithmeticError("inexact polynomial division")
        return IntPolynomial(tuple(int(c) for c in q))

    def text(self) -> str:
        """Canonical serialization: ascending coefficient list."""
        return "[" + ",".join(str(c) for c in self.coeffs) + "]"

    def pretty(self) -> str:
        """Human form such as ``t^3 - 2t``; "0" for the zero polynomial."""
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                var = "t" if i == 1 else f"t^{i}"
                body = var if mag == 1 else f"{mag}{var}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"


class GF2Polynomial:
    """Polynomial over the two-element field, bit-packed into an int."""

    __slots__ = ("bits",)

    bits: int

    def __init__(self, bits: int = 0):
        if bits < 0:
            raise ValueError("bit pattern must be nonnegative")
        object.__setattr__(self, "bits", bits)

    def __setattr__(self, name, value):
        raise AttributeError("GF2Polynomial is immutable")

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int]) -> "GF2Polynomial":
        bits = 0
        for i, c in enumerate(coeffs):
            if c & 1:
                bits |= 1 << i
        return cls(bits)

    @classmethod
    def monomial(cls, k: int) -> "GF2Polynomial":
        """t^k."""
        return cls(1 << k)

    @property
    def degree(self) -> int:
        return self.bits.bit_length() - 1

    def coeffs(self) -> list[int]:
        return [(self.bits >> i) & 1 for i in range(self.bits.bit_length())]

    def __bool__(self) -> bool:
        return self.bits != 0

    def __eq__(self, other) -> bool:
        return isinstance(other, GF2Polynomial) and self.bits == other.bits

    def __hash__(self) -> int:
        return hash(("GF2Polynomial", self.bits))

    def __add__(self, other: "GF2Polynomial") -> "GF2Polynomial":
        return GF2Polynomial(self.bits ^ other.bits)

    __sub__ = __add__

    def __mul__(self, other: "GF2Polynomial") -> "GF2Polynomial":
        return GF2Polynomial(_unspread(_smul(_spread(self.bits), _spread(other.bits))))

    def divexact(self, other: "GF2Polynomial") -> "GF2Polynomial":
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        if not self:
            return GF2Polynomial(0)
        q = _sdivexact(_spread(self.bits), _spread(other.bits))
        result = GF2Polynomial(_unspread(q))
        if result * other != self:
            raise ArithmeticError("inexact polynomial division over GF(2)")
        return result

    def text(self) -> str:
        return "[" + ",".join(str(c) for c in self.coeffs()) + "]"

    def pretty(self) -> str:
        if not self.bits:
            return "0"
        parts = []
        for i in range(self.bits.bit_length() - 1, -1, -1):
            if (self.bits >> i) & 1:
                parts.append("1" if i == 0 else ("t" if i == 1 else f"t^{i}"))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"GF2Polynomial({list(self.coeffs())})"


# ---------------------------------------------------------------------------
# spec-named operation aliases

def poly_add(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    return a + b


def poly_mul(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    return a * b


def poly_neg(a: IntPolynomial) -> IntPolynomial:
    return -a


def poly_eval(p: IntPolynomial, x: int) -> int:
    return p.eval(x)


def poly_mod2(p: IntPolynomial) -> GF2Polynomial:
    return p.mod2()


def interpolate(points: Sequence[tuple[int, int]]) -> IntPolynomial:
    """Unique integer polynomial of degree < len(points) through the
    given (node, value) pairs.

    Exact rational arithmetic throughout; raises ValueError on repeated
    nodes and ArithmeticError if the data does not come from an
    integer-coefficient polynomial (a caller bug: too few nodes).
    """
    if not points:
        return IntPolynomial()
    xs = [x for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be pairwise distinct")
    n = len(points)
    acc = [Fraction(0)] * n
    for xi, yi in points:
        # expand the Lagrange basis polynomial for xi
        basis = [Fraction(1)]
        denom = Fraction(1)
        for xj, _ in points:
            if xj == xi:
                continue
            nxt = [Fraction(0)] * (len(basis) + 1)
            for m, c in enumerate(basis):
                nxt[m + 1] += c
                nxt[m] -= c * xj
            basis = nxt
            denom *= xi - xj
        weight = Fraction(yi) / denom
        for m, c in enumerate(basis):
            acc[m] += weight * c
    if any(c.denominator != 1 for c in acc):
        raise ArithmeticError(
            "interpolation data is not an integer polynomial of this degree"
        )
    return IntPolynomial(tuple(int(c) for c in acc))


def default_nodes(count: int) -> list[int]:
    """Evaluation nodes 0, 1, -1, 2, -2, ... keeping magnitudes small."""
    out = []
    v = 1
    while len(out) < count:
        if not out:
            out.append(0)
            continue
        out.append(v)
        if len(out) < count:
            out.append(-v)
        v += 1
    return out


# ---------------------------------------------------------------------------
# byte-spread representation of GF(2) polynomials
#
# Coefficient i lives in byte i (little endian).  XOR of spread values is
# coefficient-wise addition mod 2; a plain integer multiply of two spread
# values leaves the column sum sum(a_i * b_j, i+j=m) in byte m, exact as
# long as it stays below 256.

@lru_cache(maxsize=None)
def _ones_mask(nbytes: int) -> int:
    return int.from_bytes(b"\x01" * nbytes, "little")


def _spread(bits: int) -> int:
    if not bits:
        return 0
    return int.from_bytes(
        bytes((bits >> i) & 1 for i in range(bits.bit_length())), "little"
    )


def _unspread(s: int) -> int:
    if not s:
        return 0
    out = 0
    for i, b in enumerate(s.to_bytes(_sdeg(s) + 1, "little")):
        if b & 1:
            out |= 1 << i
    return out


def _sdeg(s: int) -> int:
    """Degree of a spread polynomial; -1 for zero."""
    return (s.bit_length() - 1) // 8 if s else -1


def _smul(a: int, b: int) -> int:
    if not a or not b:
        return 0
    da, db = _sdeg(a), _sdeg(b)
    if min(da, db) >= 255:
        # column sums could overflow a byte; accumulate shifted copies
        small, big = (a, b) if da <= db else (b, a)
        packed = _unspread(small)
        out = 0
        while packed:
            low = packed & -packed
            out ^= big << (8 * (low.bit_length() - 1))
            packed ^= low
        return out
    return (a * b) & _ones_mask(da + db + 1)


def _srev(s: int, deg: int) -> int:
    """Reverse the coefficients 0..deg of a spread polynomial."""
    return int.from_bytes(s.to_bytes(deg + 1, "little")[::-1], "little")


def _sinv_series(f: int, prec: int) -> int:
    """Inverse of f mod t^prec for spread f with constant coefficient 1.

    Newton lifting; in characteristic 2 the step is x -> f * x^2.
    """
    if f & 0xFF != 1:
        raise ArithmeticError("series inverse requires constant coefficient 1")
    x = 1
    have = 1
    while have < prec:
        have = min(2 * have, prec)
        mask = _ones_mask(have)
        x = (((x * x) & mask) * f) & mask
    return x


def _sdivexact(a: int, b: int) -> int:
    """Exact quotient a/b of spread polynomials (no divisibility check)."""
    if not a:
        return 0
    da, db = _sdeg(a), _sdeg(b)
    dq = da - db
    if dq < 0:
        raise ArithmeticError("inexact polynomial division over GF(2)")
    inv = _sinv_series(_srev(b, db), dq + 1)
    rq = (_srev(a, da) * inv) & _ones_mask(dq + 1)
    return _srev(rq, dq)
