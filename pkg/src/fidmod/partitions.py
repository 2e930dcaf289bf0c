"""Integer partitions and Young-diagram arithmetic.

Partitions are canonical tuples of weakly decreasing positive integers;
the empty tuple is the empty partition.  Everything here is pure, exact
(Python big integers) and safe for concurrent use.
"""

from __future__ import annotations

import math
from typing import Iterable, Iterator, NamedTuple

Partition = tuple[int, ...]


class InvalidPartition(ValueError):
    """Sequence is not weakly decreasing or has non-positive entries."""


class BoxOutOfDiagram(ValueError):
    """Requested box (i, j) lies outside the Young diagram."""


class TooLarge(ValueError):
    """Partition exceeds the exhaustive-enumeration bound."""


class UnsortedPads(ValueError):
    """Padding lengths must be weakly decreasing."""


class TooFewRows(ValueError):
    """Partition has fewer rows than the requested number of pads."""


class NotPaddable(ValueError):
    """Recovered padding would violate the length bound (should not occur)."""


class ZeroLabel:
    """Sentinel for padded labels that denote the zero representation."""

    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "ZERO_LABEL"

    def __bool__(self) -> bool:
        return False


ZERO_LABEL = ZeroLabel()


class PaddedLabel(NamedTuple):
    """A core partition together with r row-padding lengths n_1 >= ... >= n_r."""

    core: Partition
    pads: tuple[int, ...]


def new_partition(parts: Iterable[int]) -> Partition:
    """Validate and canonicalize a partition given as any integer iterable."""
    t = tuple(int(p) for p in parts)
    for i, p in enumerate(t):
        if p <= 0:
            raise InvalidPartition(f"parts must be positive, got {p} in {t}")
        if i and t[i - 1] < p:
            raise InvalidPartition(f"parts must be weakly decreasing, got {t}")
    return t


def contains(outer: Partition, inner: Partition) -> bool:
    """True iff the diagram of inner fits inside the diagram of outer."""
    if len(inner) > len(outer):
        return False
    return all(inner[i] <= outer[i] for i in range(len(inner)))


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram (column lengths)."""
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def hook_length(lam: Partition, i: int, j: int) -> int:
    """Number of boxes in the hook at (i, j), 1-based."""
    if i < 1 or i > len(lam) or j < 1 or j > lam[i - 1]:
        raise BoxOutOfDiagram(f"box ({i}, {j}) not in {lam}")
    arm = lam[i - 1] - j
    leg = sum(1 for p in lam if p >= j) - i
    return arm + leg + 1


def dim_irreducible(lam: Partition) -> int:
    """Dimension of the irreducible symmetric-group representation of shape lam.

    Hook length formula, exact integer arithmetic.  The empty partition has
    dimension 1 (trivial representation of the trivial group).
    """
    n = sum(lam)
    conj = conjugate(lam)
    num = math.factorial(n)
    for i, row in enumerate(lam):
        for j in range(row):
            num //= row - j - 1 + conj[j] - i
    return num


#: Exhaustive tableau enumeration is kept below this many boxes; the count
#: grows like sqrt(n!) so 14 stays well under a second.
MAX_TABLEAU_BOXES = 14


def count_standard_tableaux(lam: Partition) -> int:
    """Count standard fillings of lam by explicit enumeration.

    Places the entries 1..n one at a time in every position that keeps rows
    and columns increasing, so each standard filling is visited exactly once.
    Independent of the hook length formula; serves as its oracle.
    """
    n = sum(lam)
    if n > MAX_TABLEAU_BOXES:
        raise TooLarge(f"|{lam}| = {n} exceeds enumeration bound {MAX_TABLEAU_BOXES}")
    if n == 0:
        return 1
    filled = [0] * len(lam)

    def place(remaining: int) -> int:
        if remaining == 0:
            return 1
        total = 0
        for r in range(len(lam)):
            if filled[r] < lam[r] and (r == 0 or filled[r - 1] > filled[r]):
                filled[r] += 1
                total += place(remaining - 1)
                filled[r] -= 1
        return total

    return place(n)


def pad(lam: Partition, pads: Iterable[int]) -> Partition | ZeroLabel:
    """Prefix lam with rows of lengths n_i - |lam|.

    Returns ZERO_LABEL when the shortest pad is below |lam| + lam_1 (the
    label then denotes the zero representation).  The first part of the
    empty partition counts as 0.
    """
    p = tuple(int(x) for x in pads)
    for i in range(1, len(p)):
        if p[i - 1] < p[i]:
            raise UnsortedPads(f"pads must be weakly decreasing, got {p}")
    if not p:
        return lam
    size = sum(lam)
    first = lam[0] if lam else 0
    if p[-1] < size + first:
        return ZERO_LABEL
    rows = tuple(x - size for x in p) + lam
    while rows and rows[-1] == 0:
        rows = rows[:-1]
    return rows


def unpad(mu: Partition, r: int) -> PaddedLabel:
    """Recover the unique (core, pads) with r pads whose padding is mu."""
    if len(mu) < r:
        raise TooFewRows(f"{mu} has fewer than {r} rows")
    core = mu[r:]
    size = sum(core)
    pads = tuple(mu[i] + size for i in range(r))
    first = core[0] if core else 0
    if pads and pads[-1] < size + first:
        # Unreachable for genuine partitions: mu_r >= mu_{r+1} always.
        raise NotPaddable(f"recovered pads {pads} violate the length bound")
    return PaddedLabel(core, pads)


def compositions(total: int, length: int) -> Iterator[tuple[int, ...]]:
    """All length-tuples of non-negative integers summing to total.

    Emitted in descending lexicographic order, each exactly once.
    """
    if length == 0:
        if total == 0:
            yield ()
        return
    if length == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, length - 1):
            yield (first,) + rest


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n (largest part at most max_part), descending lex order."""
    cap = n if max_part is None else min(max_part, n)
    if n == 0:
        yield ()
        return
    for first in range(cap, 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def partitions_in_box(rows: int, cols: int) -> Iterator[Partition]:
    """All partitions with at most `rows` rows and parts at most `cols`."""

    def grow(prefix: tuple[int, ...], depth: int, cap: int) -> Iterator[Partition]:
        yield prefix
        if depth == rows:
            return
        for part in range(cap, 0, -1):
            yield from grow(prefix + (part,), depth + 1, part)

    yield from grow((), 0, cols)


def multinomial(parts: Iterable[int]) -> int:
    """(sum parts)! / prod(part!) as an exact integer."""
    total = 0
    denom = 1
    for p in parts:
        total += p
        denom *= math.factorial(p)
    return math.factorial(total) // denom
