"""Membership tests and prefixes for the eight integer sets driving the
determinant congruences.

Every set is decided in O(1) from the 2-adic valuation v = v2(n+1):

    N      all nonnegative integers
    J      v even                      {0,2,3,4,6,8,10,11,12,14,...}
    J*     v even and v >= 2           {3,11,15,19,27,35,...}
    K      v odd  (complement of J)    {1,5,7,9,13,17,...}
    L      complement of J*            {0,1,2,4,6,8,10,13,14,16,...}
    P      n = 0 or 3 (mod 4)          {0,3,4,7,8,11,12,15,16,...}
    Q      n = 1 or 2 (mod 4)          {1,2,5,6,9,10,13,14,17,...}
    R      (n+1) / 2^v = 1 (mod 4)     {0,1,3,4,7,8,9,12,15,16,...}

The valuation-based forms are equivalent to the generating
parameterizations (2n+1)*2^(2k) - 1 and friends; the test suite checks
them against brute-force enumeration of those parameterizations.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator


class SetId(Enum):
    N = "N"
    J = "J"
    JSTAR = "JSTAR"
    K = "K"
    L = "L"
    P = "P"
    Q = "Q"
    R = "R"


def two_adic_valuation(n: int) -> int:
    """Largest e with 2^e dividing n; requires n > 0."""
    if n <= 0:
        raise ValueError("2-adic valuation requires a positive integer")
    return (n & -n).bit_length() - 1


def membership(set_id: SetId, n: int) -> bool:
    """True iff n lies in the named infinite set."""
    if n < 0:
        raise ValueError("set membership is defined on nonnegative integers")
    if set_id is SetId.N:
        return True
    if set_id is SetId.P:
        return n % 4 in (0, 3)
    if set_id is SetId.Q:
        return n % 4 in (1, 2)
    v = two_adic_valuation(n + 1)
    if set_id is SetId.J:
        return v % 2 == 0
    if set_id is SetId.K:
        return v % 2 == 1
    if set_id is SetId.JSTAR:
        return v >= 2 and v % 2 == 0
    if set_id is SetId.L:
        return not (v >= 2 and v % 2 == 0)
    if set_id is SetId.R:
        return ((n + 1) >> v) % 4 == 1
    raise ValueError(f"unknown set {set_id!r}")


def iter_members(set_id: SetId) -> Iterator[int]:
    """Stream the members of the set in ascending order."""
    n = 0
    while True:
        if membership(set_id, n):
            yield n
        n += 1


@dataclass(frozen=True)
class FinitePrefix:
    """The smallest ``size`` members of an infinite set, ascending."""

    set_id: SetId
    elements: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)


def prefix(set_id: SetId, m: int) -> FinitePrefix:
    """The m smallest members of the set, by streaming the predicate."""
    if m < 0:
        raise ValueError("prefix size must be nonnegative")
    out = []
    for n in iter_members(set_id):
        if len(out) == m:
            break
        out.append(n)
    return FinitePrefix(set_id, tuple(out))


def beta(n: int) -> int:
    """Doubling map sending the n-th nonnegative integer to the n-th
    member of P: even values go to 2n, odd values to 2n+1."""
    if n < 0:
        raise ValueError("beta is defined on nonnegative integers")
    return 2 * n if n % 2 == 0 else 2 * n + 1


def delta(n: int) -> int:
    """Pair map P -> Q: even members of P shift up, odd members shift
    down.  Raises on arguments outside P."""
    if n < 0 or not membership(SetId.P, n):
        raise ValueError(f"delta is only defined on members of P, got {n}")
    return n + 1 if n % 2 == 0 else n - 1


def transposition_in(c: int, d: int, set_id: SetId) -> bool:
    """A transposition (c, d) counts as "in" a set when c + d is a member.

    The two letters must be distinct.
    """
    if c == d:
        raise ValueError("a transposition has two distinct letters")
    return membership(set_id, c + d)
