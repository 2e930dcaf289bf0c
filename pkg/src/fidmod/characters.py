"""Symmetric-group character tables and induced-character decomposition.

This is the brute-force oracle for the strip-chain machinery: character
values come from the Murnaghan-Nakayama recursion, inductions from Young
subgroups use the cycle-type-splitting formula with multinomial weights,
and decomposition into irreducibles is the usual inner product.  All
arithmetic is exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cache
from typing import Mapping, Sequence

from .partitions import Partition, partitions_of
from .pieri import Decomposition

CycleType = Partition


class NotACharacter(ValueError):
    """Class function with a negative or non-integral irreducible multiplicity."""


@dataclass(frozen=True)
class ClassFunction:
    """Integer-valued class function of a symmetric group, keyed by cycle type."""

    n: int
    values: Mapping[CycleType, int]

    def __post_init__(self):
        expected = set(partitions_of(self.n))
        if set(self.values) != expected:
            missing = expected - set(self.values)
            raise ValueError(f"class function must cover every cycle type; missing {missing}")

    def __call__(self, rho: CycleType) -> int:
        return self.values[tuple(rho)]

    def identity_value(self) -> int:
        return self.values[(1,) * self.n]


def centralizer_order(rho: CycleType) -> int:
    """z_rho = prod k^{m_k} m_k! over cycle lengths k with multiplicity m_k."""
    z = 1
    mult: dict[int, int] = {}
    for k in rho:
        mult[k] = mult.get(k, 0) + 1
    for k, m in mult.items():
        z *= k**m * math.factorial(m)
    return z


def class_size(rho: CycleType) -> int:
    """Number of permutations with cycle type rho."""
    return math.factorial(sum(rho)) // centralizer_order(rho)


def _strip_removals(lam: Partition, t: int) -> list[tuple[Partition, int]]:
    """Border strips of size t removable from lam, as (rest, sign) pairs.

    Beta-set formulation: first-column hook lengths b_i = lam_i + h - i are
    distinct; removing a strip of size t replaces some b by b - t, and the
    sign is (-1)^(number of beta values jumped over).
    """
    h = len(lam)
    beta = [lam[i] + h - 1 - i for i in range(h)]
    bset = set(beta)
    out = []
    for b in beta:
        c = b - t
        if c < 0 or c in bset:
            continue
        height = sum(1 for x in beta if c < x < b)
        newbeta = [x for x in beta if x != b]
        newbeta.append(c)
        newbeta.sort(reverse=True)
        rest = tuple(nb - (h - 1 - i) for i, nb in enumerate(newbeta))
        while rest and rest[-1] == 0:
            rest = rest[:-1]
        out.append((rest, -1 if height % 2 else 1))
    return out


@cache
def character_value(lam: Partition, rho: CycleType) -> int:
    """chi^lam(rho) by the Murnaghan-Nakayama recursion."""
    if not lam:
        return 1 if not rho else 0
    if sum(lam) != sum(rho):
        raise ValueError(f"size mismatch: {lam} vs cycle type {rho}")
    total = 0
    for rest, sign in _strip_removals(lam, rho[0]):
        total += sign * character_value(rest, rho[1:])
    return total


def irreducible_character(lam: Partition) -> ClassFunction:
    """The character of the irreducible representation of shape lam."""
    n = sum(lam)
    return ClassFunction(n, {rho: character_value(lam, rho) for rho in partitions_of(n)})


def trivial_character(n: int) -> ClassFunction:
    return ClassFunction(n, {rho: 1 for rho in partitions_of(n)})


def _splitting_sum(
    factors: Sequence[ClassFunction],
    lengths: Sequence[int],
    counts: Sequence[int],
) -> int:
    """Induced-character value as a sum over distributions of the cycles of a
    class among the factors.  Each way of splitting the multiset of cycles is
    weighted by the number of ways to choose which actual cycles go where
    (a product of binomials per distinct length); the centralizer powers of
    the lengths cancel between the group and the subgroup.
    """
    k = len(factors)
    assigned: list[list[int]] = [[] for _ in range(k)]
    remaining = [f.n for f in factors]

    def over_lengths(idx: int) -> int:
        if idx == len(lengths):
            if any(remaining):
                return 0
            prod = 1
            for i, f in enumerate(factors):
                prod *= f(tuple(sorted(assigned[i], reverse=True)))
                if prod == 0:
                    return 0
            return prod
        c, m = lengths[idx], counts[idx]
        total = 0

        def distribute(fac: int, left: int, weight: int) -> None:
            nonlocal total
            if fac == k:
                if left == 0:
                    total += weight * over_lengths(idx + 1)
                return
            cap = min(left, remaining[fac] // c)
            for take in range(cap + 1):
                remaining[fac] -= take * c
                assigned[fac].extend([c] * take)
                distribute(fac + 1, left - take, weight * math.comb(left, take))
                if take:
                    del assigned[fac][-take:]
                remaining[fac] += take * c

        distribute(0, m, 1)
        return total

    return over_lengths(0)


def induce_product(factors: Sequence[ClassFunction]) -> ClassFunction:
    """Character of the induction of an exterior product of characters from
    the corresponding Young subgroup to the full symmetric group."""
    fs = [f for f in factors if f.n > 0]
    n = sum(f.n for f in fs)
    values: dict[CycleType, int] = {}
    for rho in partitions_of(n):
        lengths = sorted(set(rho), reverse=True)
        counts = [sum(1 for x in rho if x == c) for c in lengths]
        values[rho] = _splitting_sum(fs, lengths, counts)
    return ClassFunction(n, values)


def induce_trivial_product(mu: Partition, a: Sequence[int]) -> ClassFunction:
    """Character of S^mu x (trivial x ... x trivial) induced from the Young
    subgroup indexed by mu's size and the composition a.  Zero parts of a
    contribute trivial group factors and are skipped."""
    mu = tuple(mu)
    factors = []
    if sum(mu) > 0:
        factors.append(irreducible_character(mu))
    factors.extend(trivial_character(x) for x in a if x > 0)
    return induce_product(factors)


def decompose(chi: ClassFunction) -> Decomposition:
    """Decompose a genuine character into irreducibles by inner products.

    Raises NotACharacter when any inner product is negative or
    non-integral, or when the multiplicities fail to add up to the
    dimension chi(identity).
    """
    n = chi.n
    nfact = math.factorial(n)
    classes = list(partitions_of(n))
    sizes = {rho: class_size(rho) for rho in classes}
    terms: dict[Partition, int] = {}
    for lam in classes:
        s = sum(sizes[rho] * chi(rho) * character_value(lam, rho) for rho in classes)
        mult, rem = divmod(s, nfact)
        if rem or mult < 0:
            raise NotACharacter(f"inner product with {lam} is {s}/{nfact}")
        if mult:
            terms[lam] = mult
    dec = Decomposition(n, terms)
    if dec.total_dimension() != chi.identity_value():
        raise NotACharacter("multiplicities do not account for the dimension")
    return dec
