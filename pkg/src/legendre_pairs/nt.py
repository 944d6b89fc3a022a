"""Unit groups mod l, orbit machinery, and the exact PSD spectrum algorithms.

The two central entry points are :func:`spectrum_mod3` (complete spectrum of
admissible PSD value pairs at lag l/3, via all-odd three-squares solutions)
and :func:`orbit_psd_values` (PSD values compatible with a chosen number of
orbits of a multiplier subgroup).  Their intersection is
:func:`admissible_psd_pairs`, the strongest exact pre-filter available to the
search engine.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations, product
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Subgroup:
    """A subgroup of the multiplicative group of units mod ``modulus``."""

    modulus: int
    elements: tuple[int, ...]

    def __post_init__(self) -> None:
        elems = set(self.elements)
        if 1 not in elems:
            raise ValueError("subgroup must contain 1")
        for x in elems:
            if math.gcd(x, self.modulus) != 1:
                raise ValueError(f"element {x} not coprime to {self.modulus}")
            for y in elems:
                if (x * y) % self.modulus not in elems:
                    raise ValueError("element set not closed under multiplication")
        object.__setattr__(self, "elements", tuple(sorted(elems)))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @classmethod
    def generated_by(cls, modulus: int, generators: Iterable[int]) -> "Subgroup":
        elems = {1}
        frontier = {g % modulus for g in generators}
        while frontier:
            elems |= frontier
            frontier = {
                (x * y) % modulus for x in elems for y in elems
            } - elems
        return cls(modulus, tuple(sorted(elems)))


def unit_group(modulus: int) -> list[int]:
    return [x for x in range(1, modulus) if math.gcd(x, modulus) == 1]


def element_order(x: int, modulus: int) -> int:
    order, acc = 1, x % modulus
    while acc != 1:
        acc = (acc * x) % modulus
        order += 1
    return order


def subgroups_of_order(modulus: int, k: int) -> list[Subgroup]:
    """All order-k subgroups of the units mod ``modulus``.

    Cyclic subgroups come from elements of order k; for k = 4 the subgroups
    generated by pairs of distinct involutions are added, which covers the
    non-cyclic (Klein) case.  Sorted by smallest non-identity element.
    """
    units = unit_group(modulus)
    found: set[tuple[int, ...]] = set()
    if k == 1:
        return [Subgroup(modulus, (1,))]
    for x in units:
        if x != 1 and element_order(x, modulus) == k:
            found.add(Subgroup.generated_by(modulus, [x]).elements)
    if k == 4:
        involutions = [x for x in units if x != 1 and (x * x) % modulus == 1]
        for u, v in permutations(involutions, 2):
            sub = Subgroup.generated_by(modulus, [u, v])
            if len(sub) == 4:
                found.add(sub.elements)
    groups = [Subgroup(modulus, e) for e in found]
    groups.sort(key=lambda g: g.elements[1] if len(g) > 1 else 0)
    return groups


@dataclass(frozen=True)
class OrbitDecomposition:
    """Orbits of a subgroup H acting on Z_l by multiplication.

    ``orbits`` partitions all of Z_l, zero orbit included, and is sorted by
    ascending minimal representative.  Size classes and residue counts follow
    the published convention and cover only the nonzero orbits; the orbit of
    0 is handled separately by the decoder (it always receives the polarity
    opposite to the chosen orbits).
    """

    subgroup: Subgroup
    orbits: tuple[tuple[int, ...], ...]
    #: distinct sizes of nonzero orbits, ascending
    sizes: tuple[int, ...] = field(init=False)
    #: size -> number of nonzero orbits of that size
    size_counts: dict[int, int] = field(init=False)
    #: (size, residue mod 3) -> orbit count; empty unless all h = 1 (mod 3)
    residue_counts: dict[tuple[int, int], int] = field(init=False)

    def __post_init__(self) -> None:
        counts: dict[int, int] = {}
        for orb in self.nonzero_orbits:
            counts[len(orb)] = counts.get(len(orb), 0) + 1
        object.__setattr__(self, "sizes", tuple(sorted(counts)))
        object.__setattr__(self, "size_counts", counts)
        rc: dict[tuple[int, int], int] = {}
        if self.modulus % 3 == 0 and all(h % 3 == 1 for h in self.subgroup):
            for orb in self.nonzero_orbits:
                residues = {x % 3 for x in orb}
                assert len(residues) == 1
                key = (len(orb), residues.pop())
                rc[key] = rc.get(key, 0) + 1
        object.__setattr__(self, "residue_counts", rc)

    @property
    def modulus(self) -> int:
        return self.subgroup.modulus

    @property
    def nonzero_orbits(self) -> tuple[tuple[int, ...], ...]:
        return tuple(orb for orb in self.orbits if orb != (0,))

    def orbits_of_size(self, size: int) -> list[tuple[int, ...]]:
        """Nonzero orbits of one size, ascending minimal representative."""
        return [orb for orb in self.nonzero_orbits if len(orb) == size]


@lru_cache(maxsize=256)
def orbit_decomposition(modulus: int, subgroup: Subgroup) -> OrbitDecomposition:
    """Decompose Z_l into orbits under multiplication by the subgroup."""
    if subgroup.modulus != modulus:
        raise ValueError("subgroup modulus mismatch")
    seen = [False] * modulus
    orbits = []
    for start in range(modulus):
        if seen[start]:
            continue
        orb = sorted({(start * h) % modulus for h in subgroup})
        for x in orb:
            seen[x] = True
        orbits.append(tuple(orb))
    orbits.sort(key=lambda o: o[0])
    return OrbitDecomposition(subgroup, tuple(orbits))


def is_multiplier(modulus: int, t: int, positions: Iterable[int]) -> tuple[bool, int | None]:
    """Whether t*I = I + g for some shift g; returns (flag, smallest g)."""
    if math.gcd(t, modulus) != 1:
        raise ValueError(f"{t} not coprime to {modulus}")
    base = frozenset(x % modulus for x in positions)
    mapped = frozenset((t * x) % modulus for x in base)
    for g in range(modulus):
        if mapped == frozenset((x + g) % modulus for x in base):
            return True, g
    return False, None


def three_squares_all_odd(n: int) -> list[tuple[int, int, int]]:
    """All-odd positive triples x <= y <= z with x^2 + y^2 + z^2 = n.

    Complete up to order and sign, by direct enumeration.  All-odd solutions
    require n = 3 (mod 8); for other n the list is empty.
    """
    out = []
    x = 1
    while 3 * x * x <= n:
        y = x
        while x * x + 2 * y * y <= n:
            rest = n - x * x - y * y
            z = math.isqrt(rest)
            if z * z == rest and z >= y and z % 2 == 1:
                out.append((x, y, z))
            y += 2
        x += 2
    return out


def signed_assignments(
    triple: Sequence[int], target: int = 1
) -> list[tuple[int, int, int]]:
    """All signed orderings of a triple whose entries sum to ``target``."""
    out = set()
    for perm in permutations(triple):
        for signs in product((1, -1), repeat=3):
            cand = tuple(s * v for s, v in zip(signs, perm))
            if sum(cand) == target:
                out.add(cand)
    return sorted(out)


@dataclass(frozen=True)
class SpectrumEntry:
    """An admissible pair of PSD values at lag l/3 with witness triples."""

    psd_pair: tuple[int, int]
    triples_a: tuple[tuple[int, int, int], ...]
    triples_b: tuple[tuple[int, int, int], ...]
    witnesses_a: tuple[tuple[int, int, int], ...]
    witnesses_b: tuple[tuple[int, int, int], ...]


@dataclass(frozen=True)
class SpectrumCandidate:
    """One candidate row of the spectrum computation, kept or discarded."""

    psd_pair: tuple[int, int]
    square_sum_a: int
    square_sum_b: int
    triples_a: tuple[tuple[int, int, int], ...]
    triples_b: tuple[tuple[int, int, int], ...]
    witnesses_a: tuple[tuple[int, int, int], ...]
    witnesses_b: tuple[tuple[int, int, int], ...]
    admissible: bool
    reason: str


def spectrum_candidates(length: int) -> list[SpectrumCandidate]:
    """All candidate PSD value pairs at lag l/3, each with its verdict.

    Candidates are [12s+4, 2l+2-(12s+4)] for ascending s, canonicalized so
    the smaller value comes first, each unordered pair reported once.
    """
    if length % 2 == 0 or length % 3 != 0:
        raise ValueError(f"length must be odd and divisible by 3, got {length}")
    rows = []
    seen = set()
    for s in range(0, (length - 1) // 6 + 1):
        a_hat = 12 * s + 4
        b_hat = 2 * length + 2 - a_hat
        pair = (min(a_hat, b_hat), max(a_hat, b_hat))
        if pair in seen:
            continue
        seen.add(pair)
        sq_a = (2 * pair[0] + 1) // 3
        sq_b = (2 * pair[1] + 1) // 3
        triples_a = tuple(three_squares_all_odd(sq_a))
        triples_b = tuple(three_squares_all_odd(sq_b))
        wit_a = tuple(w for t in triples_a for w in signed_assignments(t, 1))
        wit_b = tuple(w for t in triples_b for w in signed_assignments(t, 1))
        if not triples_a or not triples_b:
            admissible, reason = False, "no all-odd three-squares solution"
        elif not wit_a or not wit_b:
            admissible, reason = False, "no compatible assignments"
        else:
            admissible, reason = True, ""
        rows.append(
            SpectrumCandidate(pair, sq_a, sq_b, triples_a, triples_b, wit_a, wit_b, admissible, reason)
        )
    rows.sort(key=lambda r: r.psd_pair)
    return rows


def spectrum_mod3(length: int) -> list[SpectrumEntry]:
    """The complete admissible spectrum of PSD value pairs at lag l/3."""
    return [
        SpectrumEntry(r.psd_pair, r.triples_a, r.triples_b, r.witnesses_a, r.witnesses_b)
        for r in spectrum_candidates(length)
        if r.admissible
    ]


def orbit_psd_values(decomp: OrbitDecomposition, counts: Sequence[int]) -> list[int]:
    """PSD values at lag l/3 compatible with choosing counts[i] orbits per size.

    ``counts`` is indexed by the ascending nonzero orbit sizes of the
    decomposition.  Requires every subgroup element to be 1 (mod 3) so that
    each orbit contributes to a single residue class.  The result is the same
    whether the chosen orbits mark the +1 or the -1 positions.
    """
    length = decomp.modulus
    if length % 3 != 0:
        raise ValueError("length not divisible by 3")
    if not all(h % 3 == 1 for h in decomp.subgroup):
        raise ValueError("all subgroup elements must be 1 (mod 3)")
    sizes = decomp.sizes
    if len(counts) != len(sizes):
        raise ValueError(f"expected {len(sizes)} counts for sizes {sizes}")
    for c, size in zip(counts, sizes):
        if not 0 <= c <= decomp.size_counts[size]:
            raise ValueError(f"count {c} out of range for size-{size} orbits")
    m = length // 3
    n = {
        (i, j): decomp.residue_counts.get((size, j), 0)
        for i, size in enumerate(sizes)
        for j in (0, 1, 2)
    }
    per_class = []
    for i, c in enumerate(counts):
        choices = [
            (k1, k2)
            for k1 in range(min(c, n[(i, 1)]) + 1)
            for k2 in range(min(c, n[(i, 2)]) + 1)
            if 0 <= c - k1 - k2 <= n[(i, 0)]
        ]
        per_class.append(choices)
    values = set()
    for combo in product(*per_class):
        a1 = -m + 2 * sum(s * k1 for s, (k1, _) in zip(sizes, combo))
        a2 = -m + 2 * sum(s * k2 for s, (_, k2) in zip(sizes, combo))
        a3 = -m + 2 * sum(
            s * (c - k1 - k2) for s, c, (k1, k2) in zip(sizes, counts, combo)
        )
        values.add(a1 * a1 + a2 * a2 + a3 * a3 - a1 * a2 - a1 * a3 - a2 * a3)
    return sorted(values)


def admissible_psd_pairs(
    length: int, subgroup: Subgroup, counts: Sequence[int]
) -> list[SpectrumEntry]:
    """Spectrum entries whose both values are achievable with the given orbits."""
    decomp = orbit_decomposition(length, subgroup)
    achievable = set(orbit_psd_values(decomp, counts))
    return [
        e
        for e in spectrum_mod3(length)
        if e.psd_pair[0] in achievable and e.psd_pair[1] in achievable
    ]
