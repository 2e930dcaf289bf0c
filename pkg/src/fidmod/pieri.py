"""Horizontal-strip combinatorics: iterated Pieri products by chain counting.

The multiplicity of lam in the product over a composition a equals the
number of chains mu = mu(0) <= ... <= mu(h) = lam where step i adds a
horizontal strip of a_i boxes (at most one box per column).  Chains are
enumerated directly; a closed column-strict-filling count is provided as a
cross-check.
"""

from __future__ import annotations

from collections import Counter
from functools import cache
from typing import Mapping

from .partitions import Partition, contains, dim_irreducible


class Decomposition:
    """A semisimple symmetric-group representation up to isomorphism.

    Immutable map from partitions of n to positive big-integer
    multiplicities; absent partitions have multiplicity 0.
    """

    __slots__ = ("n", "_terms", "_items")

    def __init__(self, n: int, terms: Mapping[Partition, int]):
        clean: dict[Partition, int] = {}
        for lam, mult in terms.items():
            if mult == 0:
                continue
            if mult < 0:
                raise ValueError(f"negative multiplicity {mult} for {lam}")
            if sum(lam) != n:
                raise ValueError(f"partition {lam} does not have size {n}")
            clean[lam] = mult
        self.n = n
        self._terms = clean
        self._items = tuple(sorted(clean.items(), reverse=True))

    def multiplicity(self, lam: Partition) -> int:
        return self._terms.get(tuple(lam), 0)

    def items(self) -> tuple[tuple[Partition, int], ...]:
        """(partition, multiplicity) pairs in descending lexicographic order."""
        return self._items

    def support(self) -> tuple[Partition, ...]:
        return tuple(lam for lam, _ in self._items)

    def total_dimension(self) -> int:
        return sum(mult * dim_irreducible(lam) for lam, mult in self._items)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "terms": [
                {"partition": list(lam), "multiplicity": str(mult)}
                for lam, mult in self._items
            ],
        }

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Decomposition):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.n, self._items))

    def __repr__(self) -> str:
        body = ", ".join(f"{lam}: {mult}" for lam, mult in self._items)
        return f"Decomposition(n={self.n}, {{{body}}})"


def add_horizontal_strip(mu: Partition, boxes: int) -> tuple[Partition, ...]:
    """All partitions obtained from mu by adding `boxes` boxes, at most one
    per column.  Descending lexicographic order; multiplicity-free."""
    if boxes < 0:
        raise ValueError("strip size must be non-negative")
    results: list[Partition] = []
    h = len(mu)

    def build(row: int, remaining: int, acc: list[int]) -> None:
        if row > h:
            if remaining == 0:
                out = tuple(acc)
                while out and out[-1] == 0:
                    out = out[:-1]
                results.append(out)
            return
        low = mu[row] if row < h else 0
        # One box per column: the new row cannot pass the previous old row.
        high = mu[row - 1] if row > 0 else low + remaining
        high = min(high, low + remaining)
        for val in range(high, low - 1, -1):
            acc.append(val)
            build(row + 1, remaining - (val - low), acc)
            acc.pop()

    build(0, boxes, [])
    return tuple(sorted(results, reverse=True))


def remove_horizontal_strip(lam: Partition, boxes: int) -> tuple[Partition, ...]:
    """All partitions nu <= lam with lam/nu a horizontal strip of `boxes` boxes."""
    if boxes < 0:
        raise ValueError("strip size must be non-negative")
    results: list[Partition] = []
    h = len(lam)

    def build(row: int, remaining: int, acc: list[int]) -> None:
        if remaining < 0:
            return
        if row == h:
            if remaining == 0:
                out = tuple(acc)
                while out and out[-1] == 0:
                    out = out[:-1]
                results.append(out)
            return
        low = lam[row + 1] if row + 1 < h else 0
        for val in range(lam[row], low - 1, -1):
            acc.append(val)
            build(row + 1, remaining - (lam[row] - val), acc)
            acc.pop()

    build(0, boxes, [])
    return tuple(sorted(results, reverse=True))


@cache
def _chain_counts(mu: Partition, a: tuple[int, ...]) -> tuple[tuple[Partition, int], ...]:
    if not a:
        return ((mu, 1),)
    acc: Counter[Partition] = Counter()
    for nxt in add_horizontal_strip(mu, a[0]):
        for lam, count in _chain_counts(nxt, a[1:]):
            acc[lam] += count
    return tuple(sorted(acc.items(), reverse=True))


def pieri_product(mu: Partition, a: tuple[int, ...]) -> Decomposition:
    """Decomposition of the induction of (S^mu) x trivial over the Young
    subgroup indexed by a; multiplicities count strip chains."""
    a = tuple(int(x) for x in a)
    if any(x < 0 for x in a):
        raise ValueError(f"composition entries must be non-negative: {a}")
    n = sum(mu) + sum(a)
    return Decomposition(n, dict(_chain_counts(tuple(mu), a)))


@cache
def _chains_to(mu: Partition, a: tuple[int, ...], lam: Partition) -> int:
    if not a:
        return 1 if lam == mu else 0
    total = 0
    for nu in remove_horizontal_strip(lam, a[-1]):
        if contains(nu, mu):
            total += _chains_to(mu, a[:-1], nu)
    return total


def chain_multiplicity(mu: Partition, a: tuple[int, ...], lam: Partition) -> int:
    """Multiplicity of lam in pieri_product(mu, a); 0 on size mismatch or
    when lam does not contain mu."""
    mu, lam = tuple(mu), tuple(lam)
    a = tuple(int(x) for x in a)
    if sum(lam) != sum(mu) + sum(a) or not contains(lam, mu):
        return 0
    return _chains_to(mu, a, lam)


@cache
def _strip_predecessors(lam: Partition) -> tuple[Partition, ...]:
    """All nu with lam/nu a horizontal strip of any size (possibly empty)."""
    results: list[Partition] = []
    h = len(lam)

    def build(row: int, acc: list[int]) -> None:
        if row == h:
            out = tuple(acc)
            while out and out[-1] == 0:
                out = out[:-1]
            results.append(out)
            return
        low = lam[row + 1] if row + 1 < h else 0
        for val in range(lam[row], low - 1, -1):
            acc.append(val)
            build(row + 1, acc)
            acc.pop()

    build(0, [])
    return tuple(results)


@cache
def bounded_chain_count(mu: Partition, lam: Partition, steps: int) -> int:
    """Number of chains mu = mu(0) <= ... <= mu(steps) = lam where every step
    adds a horizontal strip of arbitrary (possibly zero) size.

    Equals the sum of chain_multiplicity(mu, a, lam) over all ordered
    length-`steps` compositions a of |lam| - |mu|, so it is the multiplicity
    of lam in the free-module level of a module with `steps` colors.
    """
    if not contains(lam, mu):
        return 0
    if steps == 0:
        return 1 if lam == mu else 0
    if lam == mu:
        return 1
    total = 0
    for nu in _strip_predecessors(lam):
        if contains(nu, mu):
            total += bounded_chain_count(mu, nu, steps - 1)
    return total


def skew_filling_count(outer: Partition, inner: Partition, content: tuple[int, ...]) -> int:
    """Count fillings of outer/inner with entries 1..h, weakly increasing
    along rows and strictly increasing down columns, entry i used content[i-1]
    times.  Equals chain_multiplicity(inner, content, outer); kept as an
    independent cross-check of the chain enumeration."""
    if not contains(outer, inner):
        return 0
    if sum(outer) - sum(inner) != sum(content):
        return 0
    cells = [
        (r, c)
        for r in range(len(outer))
        for c in range((inner[r] if r < len(inner) else 0), outer[r])
    ]
    if not cells:
        return 1
    h = len(content)
    remaining = list(content)
    entry: dict[tuple[int, int], int] = {}

    def fill(idx: int) -> int:
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        # Neighbours inside inner are absent from `entry` and impose nothing.
        left = entry.get((r, c - 1))
        above = entry.get((r - 1, c))
        lo = 1
        if left is not None:
            lo = max(lo, left)
        if above is not None:
            lo = max(lo, above + 1)
        total = 0
        for val in range(lo, h + 1):
            if remaining[val - 1] == 0:
                continue
            remaining[val - 1] -= 1
            entry[(r, c)] = val
            total += fill(idx + 1)
            del entry[(r, c)]
            remaining[val - 1] += 1
        return total

    return fill(0)


def clear_caches() -> None:
    """Drop internal memo tables (mainly for test isolation)."""
    _chain_counts.cache_clear()
    _chains_to.cache_clear()
    _strip_predecessors.cache_clear()
    bounded_chain_count.cache_clear()
