"""Shared decoding helpers for the test suite."""

from __future__ import annotations

from legendre_pairs import BinarySequence, Subgroup, orbit_decomposition
from legendre_pairs.ranking import (
    decode_selection,
    indices_to_selection,
    parse_composition,
    rank_to_selection,
)


def decomp_for(length: int, subgroup: tuple[int, ...]):
    return orbit_decomposition(length, Subgroup(length, subgroup))


def decode_indices(
    length: int, subgroup: tuple[int, ...], indices, polarity: int = 1
) -> BinarySequence:
    """Decode an index set of orbit representatives into a sequence."""
    decomp = decomp_for(length, subgroup)
    return decode_selection(indices_to_selection(decomp, sorted(indices), polarity))


def decode_rank(
    length: int,
    subgroup: tuple[int, ...],
    composition: str,
    rank: int,
    polarity: int = 1,
) -> BinarySequence:
    """Decode a mixed-radix rank into a sequence."""
    decomp = decomp_for(length, subgroup)
    comp = parse_composition(composition)
    return decode_selection(rank_to_selection(rank, decomp, comp, polarity))


def polarity_of(length: int, composition: str) -> int:
    """The polarity implied by a composition's coverage."""
    from legendre_pairs.ranking import coverage

    return 1 if coverage(parse_composition(composition)) == (length + 1) // 2 else -1


def rank_indices(
    length: int, subgroup: tuple[int, ...], composition: str, rank: int
) -> tuple[int, ...]:
    """The orbit representatives selected by a rank."""
    decomp = decomp_for(length, subgroup)
    comp = parse_composition(composition)
    return rank_to_selection(rank, decomp, comp, polarity_of(length, composition)).chosen
