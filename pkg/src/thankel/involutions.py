"""Constrained involutions: enumeration, counting, and the full Leibniz
permutation-sum determinant oracle.

An involution on a finite integer set splits into fixed points and
transpositions (c, d); a transposition is admissible when c + d lies in
a prescribed integer set.  Counting is organized around the smallest
unresolved element: it is either fixed or paired with one admissible
larger partner, so the recursion visits each involution exactly once.
The counters memoize on the bitmask of unresolved elements, which keeps
the acceptance-scale domains (up to ~16 elements) instant; enumeration
itself streams lazily and never materializes the whole family.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Union

from .number_sets import FinitePrefix, SetId, membership
from .polynomial import IntPolynomial
from .sequences import SequenceId, term

#: Default ceiling on domain sizes for involution counting/enumeration.
#: Unconstrained involution counts pass 2.4e7 around 20 letters.
ENUMERATION_CAP = 20

#: Default ceiling on matrix order for the factorial-time Leibniz sum.
LEIBNIZ_CAP = 10

DomainLike = Union[FinitePrefix, Iterable[int]]


@dataclass(frozen=True)
class Involution:
    """An involution given by its fixed points and its transpositions."""

    domain: tuple[int, ...]
    fixed_points: tuple[int, ...]
    transpositions: tuple[tuple[int, int], ...]

    @property
    def transposition_count(self) -> int:
        return len(self.transpositions)

    @property
    def fixed_point_count(self) -> int:
        return len(self.fixed_points)


@dataclass(frozen=True)
class Permutation:
    """One-line form: images[i] = sigma(i) on {0, ..., k-1}."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError("images must be a permutation of 0..k-1")


def inversions(perm: Permutation) -> int:
    """Number of pairs i < j with sigma(i) > sigma(j)."""
    imgs = perm.images
    return sum(
        1
        for i in range(len(imgs))
        for j in range(i + 1, len(imgs))
        if imgs[i] > imgs[j]
    )


def fixed_points_count(perm: Permutation) -> int:
    return sum(1 for i, v in enumerate(perm.images) if v == i)


def _domain_elements(domain: DomainLike) -> tuple[int, ...]:
    if isinstance(domain, FinitePrefix):
        return domain.elements
    elems = tuple(sorted(domain))
    if len(set(elems)) != len(elems):
        raise ValueError("domain elements must be distinct")
    return elems


def _check_cap(size: int, cap: int | None) -> None:
    limit = ENUMERATION_CAP if cap is None else cap
    if size > limit:
        raise ValueError(
            f"domain of {size} elements exceeds the involution cap of {limit}"
        )


def enumerate_involutions(
    domain: DomainLike, allowed: SetId, cap: int | None = None
) -> Iterator[Involution]:
    """Yield every involution of the domain whose transpositions all sum
    into ``allowed``, in deterministic order (the smallest unresolved
    element is fixed first, then paired with partners in ascending
    order)."""
    elems = _domain_elements(domain)
    _check_cap(len(elems), cap)

    def walk(remaining: tuple[int, ...]):
        if not remaining:
            yield ()
            return
        c, rest = remaining[0], remaining[1:]
        for tail in walk(rest):
            yield tail
        for idx, d in enumerate(rest):
            if membership(allowed, c + d):
                for tail in walk(rest[:idx] + rest[idx + 1 :]):
                    yield ((c, d),) + tail

    for pairs in walk(elems):
        matched = {x for pair in pairs for x in pair}
        fixed = tuple(x for x in elems if x not in matched)
        yield Involution(elems, fixed, pairs)


def transposition_counts(
    domain: DomainLike, allowed: SetId, cap: int | None = None
) -> tuple[int, ...]:
    """counts[k] = number of admissible involutions with exactly k
    transpositions.  Same recursion as the enumerator, memoized on the
    bitmask of unresolved elements."""
    elems = _domain_elements(domain)
    _check_cap(len(elems), cap)
    n = len(elems)
    pair_ok = [
        [membership(allowed, elems[i] + elems[j]) for j in range(n)] for i in range(n)
    ]
    cache: dict[int, tuple[int, ...]] = {0: (1,)}

    def count(mask: int) -> tuple[int, ...]:
        hit = cache.get(mask)
        if hit is not None:
            return hit
        low = mask & -mask
        c_idx = low.bit_length() - 1
        rest = mask ^ low
        acc = list(count(rest))
        probe = rest
        while probe:
            dlow = probe & -probe
            probe ^= dlow
            d_idx = dlow.bit_length() - 1
            if pair_ok[c_idx][d_idx]:
                sub = count(rest ^ dlow)
                if len(acc) < len(sub) + 1:
                    acc.extend([0] * (len(sub) + 1 - len(acc)))
                for i, v in enumerate(sub):
                    acc[i + 1] += v
        result = tuple(acc)
        cache[mask] = result
        return result

    return count((1 << n) - 1)


def mu(domain: DomainLike, k: int, allowed: SetId, cap: int | None = None) -> int:
    """Number of involutions of the domain with exactly k transpositions,
    all summing into ``allowed``."""
    if k < 0:
        raise ValueError("transposition count must be nonnegative")
    counts = transposition_counts(domain, allowed, cap)
    return counts[k] if k < len(counts) else 0


def transposition_counts2(
    domain: DomainLike,
    allowed1: SetId,
    allowed2: SetId,
    cap: int | None = None,
) -> dict[tuple[int, int], int]:
    """counts[(k1, k2)] for involutions with k1 transpositions summing
    into ``allowed1`` and k2 into ``allowed2`` and none outside the
    union.  Callers must pass sum-disjoint sets (J* and L qualify)."""
    elems = _domain_elements(domain)
    _check_cap(len(elems), cap)
    n = len(elems)
    kind = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            s = elems[i] + elems[j]
            if membership(allowed1, s):
                kind[i][j] = 1
            elif membership(allowed2, s):
                kind[i][j] = 2
    cache: dict[int, dict[tuple[int, int], int]] = {0: {(0, 0): 1}}

    def count(mask: int) -> dict[tuple[int, int], int]:
        hit = cache.get(mask)
        if hit is not None:
            return hit
        low = mask & -mask
        c_idx = low.bit_length() - 1
        rest = mask ^ low
        acc = dict(count(rest))
        probe = rest
        while probe:
            dlow = probe & -probe
            probe ^= dlow
            d_idx = dlow.bit_length() - 1
            which = kind[c_idx][d_idx]
            if which:
                for (k1, k2), v in count(rest ^ dlow).items():
                    key = (k1 + 1, k2) if which == 1 else (k1, k2 + 1)
                    acc[key] = acc.get(key, 0) + v
        cache[mask] = acc
        return acc

    return count((1 << n) - 1)


def mu2(
    domain: DomainLike,
    k1: int,
    k2: int,
    allowed1: SetId,
    allowed2: SetId,
    cap: int | None = None,
) -> int:
    if k1 < 0 or k2 < 0:
        raise ValueError("transposition counts must be nonnegative")
    return transposition_counts2(domain, allowed1, allowed2, cap).get((k1, k2), 0)


def odd_double_factorial(j: int) -> int:
    """(2j - 1)!! = 1 * 3 * ... * (2j - 1); empty product 1 at j = 0.

    Counts the perfect matchings of 2j labeled points.
    """
    if j < 0:
        raise ValueError("double factorial index must be nonnegative")
    out = 1
    for x in range(1, 2 * j, 2):
        out *= x
    return out


def fix_generating_polynomial(
    domain: DomainLike, allowed: SetId, cap: int | None = None
) -> IntPolynomial:
    """Sum of t^(number of fixed points) over all admissible involutions
    of the domain."""
    elems = _domain_elements(domain)
    counts = transposition_counts(elems, allowed, cap)
    size = len(elems)
    coeffs = [0] * (size + 1)
    for i, c in enumerate(counts):
        coeffs[size - 2 * i] = c
    return IntPolynomial(coeffs)


def leibniz_t_det(
    seq: SequenceId, p: int, k: int, cap: int = LEIBNIZ_CAP
) -> IntPolynomial:
    """Diagonal-scaled Hankel determinant by full permutation summation:
    each permutation contributes sign * product of entries, landing on
    the power of t given by its number of fixed points.

    Factorial time; guarded by ``cap``.
    """
    if p < 0 or k < 0:
        raise ValueError("offset and order must be nonnegative")
    if k > cap:
        raise ValueError(f"order {k} exceeds the Leibniz factorial cap of {cap}")
    window = [term(seq, p + s) for s in range(2 * k)]
    coeffs = [0] * (k + 1)
    for images in itertools.permutations(range(k)):
        prod = 1
        for i, img in enumerate(images):
            prod *= window[i + img]
            if not prod:
                break
        if not prod:
            continue
        inv = sum(
            1
            for i in range(k)
            for j in range(i + 1, k)
            if images[i] > images[j]
        )
        fix = sum(1 for i, img in enumerate(images) if img == i)
        coeffs[fix] += -prod if inv & 1 else prod
    return IntPolynomial(coeffs)
