"""Bounded machine verifiers, one per congruence/identity/counting claim.

Every verifier compares two independently computed sides (determinant
pipeline against involution oracle, exact counters on different domains,
closed-form membership against a series expansion, ...) over all
instances within its bounds, and reports either a pass or the first
counterexample in scan order.  Statements are checked, not proofs.

Claim registry:

    APWW        plain determinants of the period-doubling sequence are odd
    MAIN_TK     diagonal-scaled determinants of period-doubling are t^k mod 2
    GWW         paperfolding determinant parities repeat with period 10
    PF_DEG3     paperfolding t-polynomials have degree at most 3
    KEY         J-constrained involution counts: 1 at zero transpositions,
                even otherwise
    NPQ_A       counts on N with J equal counts on P with L
    NPQ_B       counts on P with J* equal counts on Q with J*
    HALVING     J*-counts on N|2n halve onto P|n mod 2
    SUMP        binomial-weighted J*-counts reproduce L-counts mod 2
    MUPP        J*-counts on N|2n split as a P x Q convolution
    MARKED      marked-involution double count (exact identity)
    BINO1       parity of sum C(n,2i)C(n,2j) over i+j=k
    BINO2       parity of sum C(n,2i)C(m,2j) for odd n+m
    LUCAS_FACT  C(2a, 2b+1) is even
    DK_J        period-doubling term is odd exactly on J
    RK_R        paperfolding term is 1 exactly on R
    R_EVEN4     even members of R are exactly the multiples of 4
    INV_DET     Leibniz sum collapses mod 2 to the fixed-point generating
                polynomial over J-involutions
    COONS_ODD   determinants of the coons-g00 series are odd
    TABLE_D     golden table of period-doubling t-polynomials, k <= 8
    TABLE_R     golden table of paperfolding t-polynomials, k <= 9
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional

from .congruence import binom, binom_parity
from .hankel import (
    hankel_det,
    hankel_det_parity,
    t_hankel_det,
    t_hankel_det_mod2,
    t_hankel_mod2_leading_minors,
)
from .involutions import (
    enumerate_involutions,
    fix_generating_polynomial,
    leibniz_t_det,
    odd_double_factorial,
    transposition_counts,
    transposition_counts2,
)
from .number_sets import SetId, membership, prefix
from .polynomial import GF2Polynomial
from .sequences import SequenceId, series_oracle


class ClaimId(Enum):
    APWW = "APWW"
    MAIN_TK = "MAIN_TK"
    GWW = "GWW"
    PF_DEG3 = "PF_DEG3"
    KEY = "KEY"
    NPQ_A = "NPQ_A"
    NPQ_B = "NPQ_B"
    HALVING = "HALVING"
    SUMP = "SUMP"
    MUPP = "MUPP"
    MARKED = "MARKED"
    BINO1 = "BINO1"
    BINO2 = "BINO2"
    LUCAS_FACT = "LUCAS_FACT"
    DK_J = "DK_J"
    RK_R = "RK_R"
    R_EVEN4 = "R_EVEN4"
    INV_DET = "INV_DET"
    COONS_ODD = "COONS_ODD"
    TABLE_D = "TABLE_D"
    TABLE_R = "TABLE_R"


@dataclass
class VerifyReport:
    claim: ClaimId
    bounds: dict[str, int]
    outcome: str  # "pass" or "fail"
    counterexample: Optional[dict] = None
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return self.outcome == "pass"

    def to_dict(self) -> dict:
        # elapsed deliberately excluded: serialized output stays
        # byte-identical across runs
        return {
            "claim": self.claim.value,
            "outcome": self.outcome,
            "bounds": dict(sorted(self.bounds.items())),
            "counterexample": self.counterexample,
        }


#: Golden rows of the diagonal-scaled determinants of the period-doubling
#: sequence, k = 0..8: ascending coefficients, the same reduced mod 2, and
#: the value at t = 1.
GOLDEN_TABLE_D: dict[int, tuple[tuple[int, ...], int]] = {
    0: ((1,), 1),
    1: ((0, 1), 1),
    2: ((0, 0, 1), 1),
    3: ((0, -2, 0, 1), -1),
    4: ((0, 0, -4, 0, 1), -3),
    5: ((0, 4, 2, -6, 0, 1), 1),
    6: ((0, -8, 12, 4, -8, 0, 1), 1),
    7: ((0, 0, -24, 24, 10, -12, 0, 1), -1),
    8: ((0, 0, 0, -64, 48, 16, -16, 0, 1), -15),
}

#: Golden rows for the paperfolding sequence, k = 0..9.
GOLDEN_TABLE_R: dict[int, tuple[int, ...]] = {
    0: (1,),
    1: (0, 1),
    2: (-1,),
    3: (0, -2),
    4: (1, 2, -1),
    5: (-2, 2, 2, -1),
    6: (-4, -2, 2),
    7: (6, -7, -6, 3),
    8: (16, 12, -9),
    9: (-40, 46, 20, -15),
}

#: Parity period of the paperfolding determinants.
GWW_PERIOD = (1, 1, 1, 0, 0, 1, 0, 0, 1, 1)


def _check_apww(b: dict) -> Optional[dict]:
    for k in range(b["kmax"] + 1):
        det = hankel_det(SequenceId.PERIOD_DOUBLING, 0, k)
        par = hankel_det_parity(SequenceId.PERIOD_DOUBLING, 0, k)
        if det % 2 != par:
            return {"k": k, "determinant": det, "gf2_determinant": par}
        if par != 1:
            return {"k": k, "determinant": det, "gf2_determinant": par}
    return None


def _check_main_tk(b: dict) -> Optional[dict]:
    minors = t_hankel_mod2_leading_minors(
        SequenceId.PERIOD_DOUBLING, 0, b["kmax_mod2"]
    )
    for k, got in enumerate(minors):
        if got != GF2Polynomial.monomial(k):
            return {"k": k, "path": "mod2", "coeffs": got.coeffs()}
    for k in range(b["kmax_exact"] + 1):
        poly = t_hankel_det(SequenceId.PERIOD_DOUBLING, 0, k)
        reduced = poly.mod2()
        if reduced != GF2Polynomial.monomial(k):
            return {"k": k, "path": "exact", "coeffs": list(poly.coeffs)}
        if k <= b["kmax_mod2"] and reduced != minors[k]:
            return {
                "k": k,
                "path": "exact-vs-mod2",
                "exact_mod2": reduced.coeffs(),
                "native_mod2": minors[k].coeffs(),
            }
    return None


def _check_gww(b: dict) -> Optional[dict]:
    for k in range(b["kmax"] + 1):
        det = hankel_det(SequenceId.PAPERFOLDING, 0, k)
        par = hankel_det_parity(SequenceId.PAPERFOLDING, 0, k)
        want = GWW_PERIOD[k % 10]
        if det % 2 != want or par != want:
            return {
                "k": k,
                "determinant": det,
                "gf2_determinant": par,
                "expected_parity": want,
            }
    return None


def _check_pf_deg3(b: dict) -> Optional[dict]:
    for k in range(b["kmax"] + 1):
        poly = t_hankel_det(SequenceId.PAPERFOLDING, 0, k)
        if poly.degree > 3:
            return {"k": k, "degree": poly.degree, "coeffs": list(poly.coeffs)}
        if poly.eval(1) != hankel_det(SequenceId.PAPERFOLDING, 0, k):
            return {"k": k, "coeffs": list(poly.coeffs), "side": "t=1 mismatch"}
    return None


def _check_key(b: dict) -> Optional[dict]:
    for m in range(1, b["mmax"] + 1):
        domain = prefix(SetId.N, m)
        counts = transposition_counts(domain, SetId.J)
        if m <= 8:
            # independent side: count by exhaustive streaming enumeration
            seen = [0] * (m // 2 + 1)
            for inv in enumerate_involutions(domain, SetId.J):
                seen[inv.transposition_count] += 1
            if list(counts) + [0] * (len(seen) - len(counts)) != seen:
                return {"m": m, "counter": list(counts), "enumerator": seen}
        if counts[0] != 1:
            return {"m": m, "k": 0, "count": counts[0]}
        for k in range(1, len(counts)):
            if counts[k] % 2 != 0:
                return {"m": m, "k": k, "count": counts[k]}
    return None


def _padded(counts, size):
    return list(counts) + [0] * (size - len(counts))


def _check_npq_a(b: dict) -> Optional[dict]:
    for m in range(1, b["mmax"] + 1):
        lhs = transposition_counts(prefix(SetId.N, m), SetId.J)
        rhs = transposition_counts(prefix(SetId.P, m), SetId.L)
        size = max(len(lhs), len(rhs))
        l, r = _padded(lhs, size), _padded(rhs, size)
        for k in range(size):
            if l[k] != r[k]:
                return {"m": m, "k": k, "count_N_J": l[k], "count_P_L": r[k]}
    return None


def _check_npq_b(b: dict) -> Optional[dict]:
    for m in range(1, b["mmax"] + 1):
        lhs = transposition_counts(prefix(SetId.P, m), SetId.JSTAR)
        rhs = transposition_counts(prefix(SetId.Q, m), SetId.JSTAR)
        size = max(len(lhs), len(rhs))
        l, r = _padded(lhs, size), _padded(rhs, size)
        for k in range(size):
            if l[k] != r[k]:
                return {"m": m, "k": k, "count_P_Jstar": l[k], "count_Q_Jstar": r[k]}
    return None


def _check_halving(b: dict) -> Optional[dict]:
    for n in range(1, b["nmax"] + 1):
        big = transposition_counts(prefix(SetId.N, 2 * n), SetId.JSTAR)
        half = transposition_counts(prefix(SetId.P, n), SetId.JSTAR)
        for k in range(len(big)):
            if k % 2 == 1:
                if big[k] % 2 != 0:
                    return {"n": n, "k": k, "count": big[k]}
            else:
                rhs = half[k // 2] if k // 2 < len(half) else 0
                if big[k] % 2 != rhs % 2:
                    return {"n": n, "k": k, "count_N2n": big[k], "count_Pn": rhs}
    return None


def _check_sump(b: dict) -> Optional[dict]:
    for m in range(1, b["mmax"] + 1):
        domain = prefix(SetId.P, m)
        star = transposition_counts(domain, SetId.JSTAR)
        loose = transposition_counts(domain, SetId.L)
        for k in range(1, m + 1):
            lhs = sum(
                (star[i] if i < len(star) else 0) * binom(m - 2 * i, 2 * k - 2 * i)
                for i in range(k + 1)
                if m - 2 * i >= 0
            )
            rhs = loose[k] if k < len(loose) else 0
            if lhs % 2 != rhs % 2:
                return {"m": m, "k": k, "weighted_sum": lhs, "count_P_L": rhs}
    return None


def _check_mupp(b: dict) -> Optional[dict]:
    for n in range(1, b["nmax"] + 1):
        full = transposition_counts(prefix(SetId.N, 2 * n), SetId.JSTAR)
        on_p = transposition_counts(prefix(SetId.P, n), SetId.JSTAR)
        on_q = transposition_counts(prefix(SetId.Q, n), SetId.JSTAR)
        for k in range(n + 1):
            lhs = full[k] if k < len(full) else 0
            conv = sum(
                (on_p[i] if i < len(on_p) else 0)
                * (on_q[k - i] if k - i < len(on_q) else 0)
                for i in range(k + 1)
            )
            if lhs != conv:
                return {"n": n, "k": k, "count_N2n": lhs, "convolution": conv}
    return None


def _check_marked(b: dict) -> Optional[dict]:
    for m in range(1, b["mmax"] + 1):
        domain = prefix(SetId.P, m)
        star = transposition_counts(domain, SetId.JSTAR)
        two_sided = transposition_counts2(domain, SetId.JSTAR, SetId.L)
        for k in range(b["kmax"] + 1):
            for i in range(k + 1):
                lhs = sum(
                    binom(j, i) * two_sided.get((j, k - j), 0)
                    for j in range(i, k + 1)
                )
                star_i = star[i] if i < len(star) else 0
                rhs = (
                    star_i
                    * binom(m - 2 * i, 2 * k - 2 * i)
                    * odd_double_factorial(k - i)
                    if m - 2 * i >= 0
                    else 0
                )
                if lhs != rhs:
                    return {"m": m, "k": k, "i": i, "marked": lhs, "direct": rhs}
    return None


def _check_bino1(b: dict) -> Optional[dict]:
    for n in range(b["nmax"] + 1):
        for k in range(b["kmax"] + 1):
            lhs = sum(binom(n, 2 * i) * binom(n, 2 * (k - i)) for i in range(k + 1))
            rhs = 0 if k % 2 == 1 else binom_parity(n, k)
            if lhs % 2 != rhs:
                return {"n": n, "k": k, "sum": lhs, "expected_parity": rhs}
    return None


def _check_bino2(b: dict) -> Optional[dict]:
    for n in range(b["nmax"] + 1):
        for m in range(b["nmax"] + 1):
            if (n + m) % 2 == 0:
                continue
            for k in range(b["kmax"] + 1):
                lhs = sum(
                    binom(n, 2 * i) * binom(m, 2 * (k - i)) for i in range(k + 1)
                )
                rhs = binom_parity(n + m, 2 * k)
                if lhs % 2 != rhs:
                    return {"n": n, "m": m, "k": k, "sum": lhs, "expected_parity": rhs}
    return None


def _check_lucas_fact(b: dict) -> Optional[dict]:
    for a in range(1, b["abmax"] + 1):
        for bb in range(1, b["abmax"] + 1):
            exact = binom(2 * a, 2 * bb + 1) % 2
            fast = binom_parity(2 * a, 2 * bb + 1)
            if exact != 0 or fast != 0:
                return {"a": a, "b": bb, "exact_parity": exact, "rule_parity": fast}
    return None


def _check_dk_j(b: dict) -> Optional[dict]:
    limit = b["prefix"]
    # independent route: period-doubling from the thue-morse difference
    e = [(-1 if n.bit_count() % 2 else 1) for n in range(limit + 1)]
    for k in range(limit):
        d_k = abs(e[k] - e[k + 1]) // 2
        if (d_k % 2 == 1) != membership(SetId.J, k):
            return {"k": k, "term": d_k, "in_J": membership(SetId.J, k)}
    return None


def _check_rk_r(b: dict) -> Optional[dict]:
    limit = b["prefix"]
    series = series_oracle(SequenceId.PAPERFOLDING, limit)
    for k in range(limit):
        if (series[k] == 1) != membership(SetId.R, k):
            return {"k": k, "term": series[k], "in_R": membership(SetId.R, k)}
    return None


def _check_r_even4(b: dict) -> Optional[dict]:
    for m in range(0, b["prefix"], 2):
        if membership(SetId.R, m) != (m % 4 == 0):
            return {"m": m, "in_R": membership(SetId.R, m), "mod4": m % 4}
    return None


def _check_inv_det(b: dict) -> Optional[dict]:
    for k in range(b["kmax"] + 1):
        via_leibniz = leibniz_t_det(SequenceId.PERIOD_DOUBLING, 0, k).mod2()
        via_involutions = fix_generating_polynomial(prefix(SetId.N, k), SetId.J).mod2()
        if via_leibniz != via_involutions:
            return {
                "k": k,
                "leibniz_mod2": via_leibniz.coeffs(),
                "involution_mod2": via_involutions.coeffs(),
            }
    return None


def _check_coons_odd(b: dict) -> Optional[dict]:
    for k in range(b["kmax"] + 1):
        det = hankel_det(SequenceId.COONS_G00, 0, k)
        par = hankel_det_parity(SequenceId.COONS_G00, 0, k)
        if det % 2 != par or par != 1:
            return {"k": k, "determinant": det, "gf2_determinant": par}
    return None


def _check_table_d(b: dict) -> Optional[dict]:
    for k in range(min(b["kmax"], 8) + 1):
        want_coeffs, want_at_1 = GOLDEN_TABLE_D[k]
        poly = t_hankel_det(SequenceId.PERIOD_DOUBLING, 0, k)
        if poly.coeffs != want_coeffs:
            return {"k": k, "coeffs": list(poly.coeffs), "golden": list(want_coeffs)}
        if poly.eval(1) != want_at_1:
            return {"k": k, "at_1": poly.eval(1), "golden": want_at_1}
        if t_hankel_det_mod2(SequenceId.PERIOD_DOUBLING, 0, k) != poly.mod2():
            return {"k": k, "side": "mod2 mismatch"}
    return None


def _check_table_r(b: dict) -> Optional[dict]:
    for k in range(min(b["kmax"], 9) + 1):
        want = GOLDEN_TABLE_R[k]
        poly = t_hankel_det(SequenceId.PAPERFOLDING, 0, k)
        if poly.coeffs != want:
            return {"k": k, "coeffs": list(poly.coeffs), "golden": list(want)}
        if t_hankel_det_mod2(SequenceId.PAPERFOLDING, 0, k) != poly.mod2():
            return {"k": k, "side": "mod2 mismatch"}
    return None


_CHECKS: dict[ClaimId, Callable[[dict], Optional[dict]]] = {
    ClaimId.APWW: _check_apww,
    ClaimId.MAIN_TK: _check_main_tk,
    ClaimId.GWW: _check_gww,
    ClaimId.PF_DEG3: _check_pf_deg3,
    ClaimId.KEY: _check_key,
    ClaimId.NPQ_A: _check_npq_a,
    ClaimId.NPQ_B: _check_npq_b,
    ClaimId.HALVING: _check_halving,
    ClaimId.SUMP: _check_sump,
    ClaimId.MUPP: _check_mupp,
    ClaimId.MARKED: _check_marked,
    ClaimId.BINO1: _check_bino1,
    ClaimId.BINO2: _check_bino2,
    ClaimId.LUCAS_FACT: _check_lucas_fact,
    ClaimId.DK_J: _check_dk_j,
    ClaimId.RK_R: _check_rk_r,
    ClaimId.R_EVEN4: _check_r_even4,
    ClaimId.INV_DET: _check_inv_det,
    ClaimId.COONS_ODD: _check_coons_odd,
    ClaimId.TABLE_D: _check_table_d,
    ClaimId.TABLE_R: _check_table_r,
}

#: Per-claim default bounds for the two profiles.
PROFILES: dict[str, dict[ClaimId, dict[str, int]]] = {
    "quick": {
        ClaimId.APWW: {"kmax": 8},
        ClaimId.MAIN_TK: {"kmax_exact": 8, "kmax_mod2": 8},
        ClaimId.GWW: {"kmax": 8},
        ClaimId.PF_DEG3: {"kmax": 8},
        ClaimId.KEY: {"mmax": 10},
        ClaimId.NPQ_A: {"mmax": 10},
        ClaimId.NPQ_B: {"mmax": 10},
        ClaimId.HALVING: {"nmax": 5},
        ClaimId.SUMP: {"mmax": 10},
        ClaimId.MUPP: {"nmax": 5},
        ClaimId.MARKED: {"mmax": 10, "kmax": 3},
        ClaimId.BINO1: {"nmax": 64, "kmax": 64},
        ClaimId.BINO2: {"nmax": 64, "kmax": 64},
        ClaimId.LUCAS_FACT: {"abmax": 64},
        ClaimId.DK_J: {"prefix": 4096},
        ClaimId.RK_R: {"prefix": 4096},
        ClaimId.R_EVEN4: {"prefix": 4096},
        ClaimId.INV_DET: {"kmax": 8},
        ClaimId.COONS_ODD: {"kmax": 8},
        ClaimId.TABLE_D: {"kmax": 8},
        ClaimId.TABLE_R: {"kmax": 9},
    },
    "thorough": {
        ClaimId.APWW: {"kmax": 20},
        ClaimId.MAIN_TK: {"kmax_exact": 20, "kmax_mod2": 20},
        ClaimId.GWW: {"kmax": 20},
        ClaimId.PF_DEG3: {"kmax": 20},
        ClaimId.KEY: {"mmax": 14},
        ClaimId.NPQ_A: {"mmax": 14},
        ClaimId.NPQ_B: {"mmax": 14},
        ClaimId.HALVING: {"nmax": 7},
        ClaimId.SUMP: {"mmax": 14},
        ClaimId.MUPP: {"nmax": 7},
        ClaimId.MARKED: {"mmax": 14, "kmax": 3},
        ClaimId.BINO1: {"nmax": 64, "kmax": 64},
        ClaimId.BINO2: {"nmax": 64, "kmax": 64},
        ClaimId.LUCAS_FACT: {"abmax": 64},
        ClaimId.DK_J: {"prefix": 65536},
        ClaimId.RK_R: {"prefix": 65536},
        ClaimId.R_EVEN4: {"prefix": 65536},
        ClaimId.INV_DET: {"kmax": 9},
        ClaimId.COONS_ODD: {"kmax": 20},
        ClaimId.TABLE_D: {"kmax": 8},
        ClaimId.TABLE_R: {"kmax": 9},
    },
}

#: Feasibility ceilings per claim; requests beyond these are refused
#: rather than silently clamped.
_CLAIM_CAPS: dict[ClaimId, dict[str, int]] = {
    ClaimId.KEY: {"mmax": 20},
    ClaimId.NPQ_A: {"mmax": 20},
    ClaimId.NPQ_B: {"mmax": 20},
    ClaimId.SUMP: {"mmax": 20},
    ClaimId.MARKED: {"mmax": 20},
    ClaimId.HALVING: {"nmax": 10},
    ClaimId.MUPP: {"nmax": 10},
    ClaimId.INV_DET: {"kmax": 10},
}


def _resolve_bounds(
    claim: ClaimId, bounds: Optional[dict[str, int]], profile: str
) -> dict[str, int]:
    try:
        defaults = dict(PROFILES[profile][claim])
    except KeyError:
        raise ValueError(f"unknown profile {profile!r}") from None
    if bounds:
        unknown = set(bounds) - set(defaults)
        if unknown:
            raise ValueError(
                f"claim {claim.value} takes bounds {sorted(defaults)}, "
                f"not {sorted(unknown)}"
            )
        defaults.update(bounds)
    for name, value in defaults.items():
        if value < 0:
            raise ValueError(f"bound {name} must be nonnegative")
    for name, cap in _CLAIM_CAPS.get(claim, {}).items():
        if defaults.get(name, 0) > cap:
            raise ValueError(
                f"{name} for claim {claim.value} exceeds its feasibility cap of {cap}"
            )
    return defaults


def verify(
    claim: ClaimId | str,
    bounds: Optional[dict[str, int]] = None,
    profile: str = "quick",
) -> VerifyReport:
    """Check one claim over all instances within bounds.

    ``bounds`` overrides the profile defaults for the claim's named
    limits.  Raises ValueError for unknown claims, unknown bound names,
    or bounds beyond the feasibility caps.
    """
    if isinstance(claim, str):
        try:
            claim = ClaimId(claim)
        except ValueError:
            raise ValueError(f"unknown claim {claim!r}") from None
    resolved = _resolve_bounds(claim, bounds, profile)
    start = time.perf_counter()
    counterexample = _CHECKS[claim](resolved)
    elapsed = time.perf_counter() - start
    return VerifyReport(
        claim=claim,
        bounds=resolved,
        outcome="pass" if counterexample is None else "fail",
        counterexample=counterexample,
        elapsed=elapsed,
    )


def verify_all(profile: str = "quick") -> list[VerifyReport]:
    """Run every claim with profile bounds, in registry order."""
    return [verify(claim, profile=profile) for claim in ClaimId]
