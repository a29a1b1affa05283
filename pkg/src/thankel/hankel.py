"""Hankel windows and their exact determinants.

Four pipelines, deliberately redundant so they can cross-check each
other:

* integers           -- Bareiss fraction-free elimination (exact
                        divisions only), with row exchange and sign
                        tracking on zero pivots;
* polynomials in t   -- evaluate the diagonal-scaled window at the
                        integer nodes 0, 1, -1, 2, -2, ... and
                        interpolate, reusing the integer kernel;
* polynomials, again -- Bareiss directly over the integer-polynomial
                        ring (the independent cross-check path);
* mod 2              -- Bareiss over the GF(2)[t] ring on byte-spread
                        rows, where a multiply is one machine integer
                        multiply.  In characteristic 2 row swaps do not
                        touch the determinant.

Fraction-free elimination leaves every pivot equal to a leading
principal minor, so one pass over a kmax-order window yields the whole
tower of determinants k = 1..kmax; the batch helper exploits that and
falls back to per-order elimination after a vanishing minor.
"""

from __future__ import annotations

from dataclasses import dataclass

from .polynomial import (
    GF2Polynomial,
    IntPolynomial,
    _ones_mask,
    _sdeg,
    _sdivexact,
    _sinv_series,
    _smul,
    _spread,
    _srev,
    _unspread,
    default_nodes,
    interpolate,
)
from .sequences import SequenceId, term


@dataclass(frozen=True)
class HankelWindow:
    """Order-k window of a sequence starting at offset p:
    entry(i, j) = term(seq, p + i + j).  Symmetric, constant along
    anti-diagonals."""

    seq: SequenceId
    p: int
    k: int
    entries: tuple[tuple[int, ...], ...]

    @classmethod
    def build(cls, seq: SequenceId, p: int, k: int) -> "HankelWindow":
        if p < 0 or k < 0:
            raise ValueError("offset and order must be nonnegative")
        band = [term(seq, p + s) for s in range(max(2 * k - 1, 0))]
        rows = tuple(tuple(band[i + j] for j in range(k)) for i in range(k))
        return cls(seq, p, k, rows)

    def entry(self, i: int, j: int) -> int:
        return self.entries[i][j]

    def rows(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def scaled_rows(self, t_value: int) -> list[list[int]]:
        """Rows with every diagonal entry multiplied by t_value."""
        out = self.rows()
        for i in range(self.k):
            out[i][i] *= t_value
        return out


def bareiss_determinant(rows: list[list[int]]) -> int:
    """Exact integer determinant by fraction-free elimination.

    Mutates a copy; every division is exact.  Zero pivots are handled by
    row exchange (sign flip); an all-zero pivot column means 0.
    """
    k = len(rows)
    if k == 0:
        return 1
    if any(len(r) != k for r in rows):
        raise ValueError("determinant requires a square matrix")
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for r in range(k - 1):
        if m[r][r] == 0:
            for i in range(r + 1, k):
                if m[i][r] != 0:
                    m[r], m[i] = m[i], m[r]
                    sign = -sign
                    break
            else:
                return 0
        piv = m[r][r]
        for i in range(r + 1, k):
            mir = m[i][r]
            row_i = m[i]
            row_r = m[r]
            for j in range(r + 1, k):
                row_i[j] = (piv * row_i[j] - mir * row_r[j]) // prev
            row_i[r] = 0
        prev = piv
    return sign * m[k - 1][k - 1]


def hankel_det(seq: SequenceId, p: int, k: int) -> int:
    """Exact determinant of the (p, k) window; 1 for the empty window."""
    return bareiss_determinant(HankelWindow.build(seq, p, k).rows())


def hankel_det_parity(seq: SequenceId, p: int, k: int) -> int:
    """Determinant of the (p, k) window over the two-element field,
    by elimination on bit-packed rows.  Returns 0 or 1."""
    if p < 0 or k < 0:
        raise ValueError("offset and order must be nonnegative")
    band = [term(seq, p + s) & 1 for s in range(max(2 * k - 1, 0))]
    rows = []
    for i in range(k):
        bits = 0
        for j in range(k):
            if band[i + j]:
                bits |= 1 << j
        rows.append(bits)
    for r in range(k):
        pivot_bit = 1 << r
        pivot_row = None
        for i in range(r, k):
            if rows[i] & pivot_bit:
                pivot_row = i
                break
        if pivot_row is None:
            return 0
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        for i in range(r + 1, k):
            if rows[i] & pivot_bit:
                rows[i] ^= rows[r]
    return 1


def t_hankel_det(seq: SequenceId, p: int, k: int) -> IntPolynomial:
    """The window determinant with the diagonal scaled by t, as an exact
    integer polynomial (degree <= k), via evaluation and interpolation."""
    window = HankelWindow.build(seq, p, k)
    if k == 0:
        return IntPolynomial((1,))
    points = [
        (x, bareiss_determinant(window.scaled_rows(x))) for x in default_nodes(k + 1)
    ]
    return interpolate(points)


def t_hankel_det_elimination(seq: SequenceId, p: int, k: int) -> IntPolynomial:
    """Same polynomial by Bareiss elimination carried out directly over
    the integer-polynomial ring.  Cross-check path; slower."""
    window = HankelWindow.build(seq, p, k)
    if k == 0:
        return IntPolynomial((1,))
    t = IntPolynomial.variable()
    m = [
        [
            IntPolynomial((window.entry(i, j),)) * (t if i == j else IntPolynomial((1,)))
            for j in range(k)
        ]
        for i in range(k)
    ]
    sign = 1
    prev = IntPolynomial((1,))
    for r in range(k - 1):
        if not m[r][r]:
            for i in range(r + 1, k):
                if m[i][r]:
                    m[r], m[i] = m[i], m[r]
                    sign = -sign
                    break
            else:
                return IntPolynomial()
        piv = m[r][r]
        for i in range(r + 1, k):
            mir = m[i][r]
            for j in range(r + 1, k):
                m[i][j] = (piv * m[i][j] - mir * m[r][j]).divexact(prev)
            m[i][r] = IntPolynomial()
        prev = piv
    det = m[k - 1][k - 1]
    return det if sign == 1 else -det


def t_hankel_det_mod2(seq: SequenceId, p: int, k: int) -> GF2Polynomial:
    """The diagonal-scaled determinant reduced mod 2, computed natively
    over GF(2)[t]."""
    m = _spread_window(seq, p, k)
    return _gf2t_determinant(m)


def t_hankel_mod2_leading_minors(
    seq: SequenceId, p: int, kmax: int
) -> list[GF2Polynomial]:
    """[det of order 0, 1, ..., kmax] mod 2 in a single elimination pass.

    The fraction-free pivots of the kmax-order window are its leading
    principal minors.  The pass cannot continue across a vanishing
    minor (the needed row exchange would reorder the tower), so the
    remaining orders are finished one by one.
    """
    if kmax < 0:
        raise ValueError("order bound must be nonnegative")
    out: list[GF2Polynomial] = [GF2Polynomial(1)]
    m = _spread_window(seq, p, kmax)
    prev = 1
    prev_deg = 0
    for r in range(kmax):
        piv = m[r][r]
        if not piv:
            break
        out.append(GF2Polynomial(_unspread(piv)))
        if r == kmax - 1:
            break
        piv_deg = _sdeg(piv)
        inv_prev = None
        if r > 0:
            max_quot_deg = 2 * (r + 2) - prev_deg
            inv_prev = _sinv_series(_srev(prev, prev_deg), max_quot_deg + 1)
        for i in range(r + 1, kmax):
            mir = m[i][r]
            row_i = m[i]
            row_r = m[r]
            for j in range(r + 1, kmax):
                v = _smul(piv, row_i[j])
                if mir:
                    v ^= _smul(mir, row_r[j])
                if v and inv_prev is not None:
                    dv = _sdeg(v)
                    dq = dv - prev_deg
                    rq = (_srev(v, dv) * inv_prev) & _ones_mask(dq + 1)
                    v = _srev(rq, dq)
                row_i[j] = v
        prev = piv
        prev_deg = piv_deg
    for k in range(len(out), kmax + 1):
        out.append(t_hankel_det_mod2(seq, p, k))
    return out


def _spread_window(seq: SequenceId, p: int, k: int) -> list[list[int]]:
    """Diagonal-scaled window over GF(2)[t] in byte-spread form."""
    if p < 0 or k < 0:
        raise ValueError("offset and order must be nonnegative")
    band = [term(seq, p + s) & 1 for s in range(max(2 * k - 1, 0))]
    t_spread = 1 << 8
    return [
        [
            (t_spread if band[2 * i] else 0) if i == j else band[i + j]
            for j in range(k)
        ]
        for i in range(k)
    ]


def _gf2t_determinant(m: list[list[int]]) -> GF2Polynomial:
    """Fraction-free elimination over GF(2)[t] on byte-spread entries.

    Row swaps cost nothing in characteristic 2; an all-zero pivot column
    means determinant 0.  The divisor is fixed per elimination step, so
    its Newton series inverse is hoisted out of the inner loop.
    """
    k = len(m)
    if k == 0:
        return GF2Polynomial(1)
    prev = 1
    prev_deg = 0
    for r in range(k - 1):
        if not m[r][r]:
            for i in range(r + 1, k):
                if m[i][r]:
                    m[r], m[i] = m[i], m[r]
                    break
            else:
                return GF2Polynomial(0)
        piv = m[r][r]
        inv_prev = None
        if r > 0:
            max_quot_deg = 2 * (r + 2) - prev_deg
            inv_prev = _sinv_series(_srev(prev, prev_deg), max_quot_deg + 1)
        for i in range(r + 1, k):
            mir = m[i][r]
            row_i = m[i]
            row_r = m[r]
            for j in range(r + 1, k):
                v = _smul(piv, row_i[j])
                if mir:
                    v ^= _smul(mir, row_r[j])
                if v and inv_prev is not None:
                    dv = _sdeg(v)
                    dq = dv - prev_deg
                    rq = (_srev(v, dv) * inv_prev) & _ones_mask(dq + 1)
                    v = _srev(rq, dq)
                row_i[j] = v
            row_i[r] = 0
        prev = piv
        prev_deg = _sdeg(piv)
    return GF2Polynomial(_unspread(m[k - 1][k - 1]))
