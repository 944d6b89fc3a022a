"""Lexicographic ranking/unranking of k-subsets and orbit-selection decoding.

This is the bridge between published rank integers and concrete sequences:
a rank addresses, per orbit-size class, a lex-ordered subset of that class's
orbits (orbits ordered by ascending minimal representative), and the chosen
orbits mark the positions of one polarity.  The residue 0 always takes the
opposite polarity, so decoded sequences sum to +1.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import comb
from typing import Sequence

from .nt import OrbitDecomposition
from .sequences import BinarySequence


def subset_unrank(rank: int, k: int, n: int) -> tuple[int, ...]:
    """The rank-th k-subset of {1..n} in lexicographic order (ranks from 0)."""
    total = comb(n, k)
    if not 0 <= rank < total:
        raise ValueError(f"rank {rank} out of range [0, {total})")
    out = []
    x = 1
    for i in range(k):
        while rank >= comb(n - x, k - i - 1):
            rank -= comb(n - x, k - i - 1)
            x += 1
        out.append(x)
        x += 1
    return tuple(out)


def subset_rank(subset: Sequence[int], n: int) -> int:
    """Lexicographic rank of a k-subset of {1..n}; inverse of subset_unrank."""
    s = sorted(subset)
    k = len(s)
    if s and (s[0] < 1 or s[-1] > n):
        raise ValueError(f"subset elements must lie in 1..{n}")
    if len(set(s)) != k:
        raise ValueError("subset elements must be distinct")
    rank = 0
    prev = 0
    for i, x in enumerate(s):
        for y in range(prev + 1, x):
            rank += comb(n - y, k - i - 1)
        prev = x
    return rank


#: orbit counts per size class, ascending size, e.g. ((1, 2), (3, 19))
Composition = tuple[tuple[int, int], ...]


def parse_composition(text: str) -> Composition:
    """Parse a composition such as ``2x1+19x3`` (count x orbit-size terms)."""
    terms = []
    for part in text.split("+"):
        count_str, _, size_str = part.strip().partition("x")
        terms.append((int(size_str), int(count_str)))
    terms.sort()
    if len({size for size, _ in terms}) != len(terms):
        raise ValueError(f"duplicate size class in composition {text!r}")
    return tuple(terms)


def format_composition(comp: Composition) -> str:
    return "+".join(f"{count}x{size}" for size, count in comp)


def composition_counts(decomp: OrbitDecomposition, comp: Composition) -> tuple[int, ...]:
    """Counts vector indexed by the decomposition's ascending size classes."""
    by_size = dict(comp)
    return tuple(by_size.get(size, 0) for size in decomp.sizes)


def coverage(comp: Composition) -> int:
    return sum(size * count for size, count in comp)


def space_size(decomp: OrbitDecomposition, comp: Composition) -> int:
    """Number of orbit selections addressed by the composition."""
    total = 1
    for size, count in comp:
        available = decomp.size_counts.get(size, 0)
        if count > available:
            raise ValueError(f"composition asks for {count} size-{size} orbits, only {available} exist")
        total *= comb(available, count)
    return total


def compositions_for(decomp: OrbitDecomposition, polarity: int) -> list[Composition]:
    """All compositions whose coverage matches the polarity's target size.

    The target is (l+1)/2 positions when the chosen orbits mark +1's and
    (l-1)/2 when they mark -1's, so that decoded sequences sum to +1.
    """
    length = decomp.modulus
    target = (length + 1) // 2 if polarity == 1 else (length - 1) // 2
    sizes = decomp.sizes
    ranges = [range(decomp.size_counts[s] + 1) for s in sizes]
    out = []
    for counts in product(*ranges):
        if sum(s * c for s, c in zip(sizes, counts)) == target:
            out.append(tuple((s, c) for s, c in zip(sizes, counts)))
    return out


@dataclass(frozen=True)
class OrbitSelection:
    """A choice of orbits marking the positions of one polarity value."""

    decomp: OrbitDecomposition
    chosen: tuple[int, ...]  # minimal representatives, sorted
    polarity: int  # +1 or -1: the value placed on the chosen orbits

    def __post_init__(self) -> None:
        if self.polarity not in (1, -1):
            raise ValueError("polarity must be +1 or -1")
        length = self.decomp.modulus
        reps = {orb[0]: orb for orb in self.decomp.nonzero_orbits}
        covered = 0
        for r in self.chosen:
            if r not in reps:
                raise ValueError(f"{r} is not a nonzero orbit representative")
            covered += len(reps[r])
        target = (length + 1) // 2 if self.polarity == 1 else (length - 1) // 2
        if covered != target:
            raise ValueError(
                f"chosen orbits cover {covered} positions, need {target} for polarity {self.polarity:+d}"
            )

    def covered_residues(self) -> set[int]:
        reps = {orb[0]: orb for orb in self.decomp.nonzero_orbits}
        out: set[int] = set()
        for r in self.chosen:
            out.update(reps[r])
        return out


def decode_orbits(
    decomp: OrbitDecomposition, chosen: Sequence[int], value: int
) -> BinarySequence:
    """Raw decoder: chosen orbits get ``value``, everything else the opposite.

    No coverage validation; flipping ``value`` negates the result.
    """
    length = decomp.modulus
    reps = {orb[0]: orb for orb in decomp.nonzero_orbits}
    covered: set[int] = set()
    for r in chosen:
        covered.update(reps[r])
    entries = []
    for position in range(1, length + 1):
        entries.append(value if position % length in covered else -value)
    return BinarySequence(tuple(entries))


def decode_selection(sel: OrbitSelection) -> BinarySequence:
    """Decode an orbit selection into a normalized {-1,+1} sequence."""
    return decode_orbits(sel.decomp, sel.chosen, sel.polarity)


def rank_to_selection(
    rank: int, decomp: OrbitDecomposition, comp: Composition, polarity: int
) -> OrbitSelection:
    """Decode a mixed-radix rank into an orbit selection.

    Size classes are taken in ascending size order with the first class most
    significant; within a class the rank addresses the lex-ordered subset of
    that class's orbits.
    """
    total = space_size(decomp, comp)
    if not 0 <= rank < total:
        raise ValueError(f"rank {rank} out of range [0, {total})")
    digits = []
    for size, count in reversed(comp):
        radix = comb(decomp.size_counts.get(size, 0), count)
        digits.append(rank % radix)
        rank //= radix
    digits.reverse()
    chosen: list[int] = []
    for (size, count), digit in zip(comp, digits):
        class_orbits = decomp.orbits_of_size(size)
        for idx in subset_unrank(digit, count, len(class_orbits)):
            chosen.append(class_orbits[idx - 1][0])
    return OrbitSelection(decomp, tuple(sorted(chosen)), polarity)


def selection_to_rank(sel: OrbitSelection, comp: Composition) -> int:
    """Mixed-radix rank of an orbit selection; inverse of rank_to_selection."""
    decomp = sel.decomp
    chosen = set(sel.chosen)
    rank = 0
    for size, count in comp:
        class_orbits = decomp.orbits_of_size(size)
        indices = [i + 1 for i, orb in enumerate(class_orbits) if orb[0] in chosen]
        if len(indices) != count:
            raise ValueError(
                f"selection has {len(indices)} size-{size} orbits, composition says {count}"
            )
        rank = rank * comb(len(class_orbits), count) + subset_rank(indices, len(class_orbits))
    return rank


def rank_to_sequence(
    rank: int, decomp: OrbitDecomposition, comp: Composition, polarity: int
) -> BinarySequence:
    """Deterministic bijection from [0, space size) to candidate sequences."""
    return decode_selection(rank_to_selection(rank, decomp, comp, polarity))


def indices_to_selection(
    decomp: OrbitDecomposition, indices: Sequence[int], polarity: int
) -> OrbitSelection:
    """Build a selection from explicit orbit representatives (published I sets)."""
    return OrbitSelection(decomp, tuple(sorted(indices)), polarity)
