"""Streaming union-of-orbits search with the two-stage PSD filter, hex
fingerprint records, and sort-merge candidate matching.

Stage 1 rejects candidates in exact integer arithmetic from the lag-l/3 PSD
value alone (when 3 | l); stage 2 runs the full floating-point PSD bound test
with early termination, evaluating one lag per orbit-equivalence class of
lags.  Survivors are written as ``<rank> <fp1> <fp2>`` record lines; a true
Legendre pair appears as two records whose fingerprints match crosswise.
"""

from __future__ import annotations

import heapq
import json
import math
import os
import tempfile
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Callable, Iterable, Iterator, Sequence

from . import ranking
from .nt import OrbitDecomposition, Subgroup, orbit_decomposition
from .ranking import Composition
from .sequences import EPS, BinarySequence, psd, psd_quadratic_form
from .verify import LegendrePairResult, verify_pair


def fingerprint_lags(length: int) -> list[int]:
    """Lags covered by the fingerprint: 1..(l-1)/2 minus l/3 when 3 | l."""
    excluded = length // 3 if length % 3 == 0 else None
    return [k for k in range(1, (length - 1) // 2 + 1) if k != excluded]


def _hex_digit(value: float) -> str:
    # round to nearest, ties away from zero (values are never negative
    # beyond float noise)
    return format(int(math.floor(value + 0.5)) % 16, "x")


def fingerprint(a: BinarySequence) -> tuple[str, str]:
    """Hex strings of the rounded PSD values and their complements, mod 16."""
    length = len(a)
    bound = 2 * length + 2
    digits1 = []
    digits2 = []
    for k in fingerprint_lags(length):
        v = psd(a, k)
        digits1.append(_hex_digit(v))
        digits2.append(_hex_digit(bound - v))
    return "".join(digits1), "".join(digits2)


@dataclass(frozen=True)
class CandidateRecord:
    rank: int
    fp1: str
    fp2: str

    def line(self) -> str:
        return f"{self.rank} {self.fp1} {self.fp2}\n"

    @classmethod
    def parse(cls, line: str) -> "CandidateRecord":
        parts = line.split()
        if len(parts) == 1:
            # zero-length fingerprints (tiny l) leave only the rank
            return cls(int(parts[0]), "", "")
        if len(parts) != 3:
            raise ValueError(f"malformed record line: {line!r}")
        return cls(int(parts[0]), parts[1], parts[2])


@dataclass(frozen=True)
class SearchPlan:
    """Everything needed to enumerate and filter one slice of a search space."""

    length: int
    subgroup: tuple[int, ...]
    composition: Composition
    polarity: int
    rank_range: tuple[int, int] | None = None  # None = full space
    allowed_third_psd: frozenset[int] | None = None
    eps: float = EPS

    @property
    def psd_bound(self) -> float:
        return 2 * self.length + 2 + self.eps

    def decomposition(self) -> OrbitDecomposition:
        return orbit_decomposition(self.length, Subgroup(self.length, self.subgroup))

    def space_size(self) -> int:
        return ranking.space_size(self.decomposition(), self.composition)

    def resolved_range(self) -> tuple[int, int]:
        if self.rank_range is None:
            return (0, self.space_size())
        lo, hi = self.rank_range
        size = self.space_size()
        if not 0 <= lo <= hi <= size:
            raise ValueError(f"rank range [{lo}, {hi}) outside space [0, {size})")
        return lo, hi

    def decode(self, rank: int) -> BinarySequence:
        return ranking.rank_to_sequence(rank, self.decomposition(), self.composition, self.polarity)

    def to_dict(self) -> dict:
        return {
            "length": self.length,
            "subgroup": list(self.subgroup),
            "composition": ranking.format_composition(self.composition),
            "polarity": "plus" if self.polarity == 1 else "minus",
            "rank_range": list(self.rank_range) if self.rank_range else None,
            "allowed_third_psd": sorted(self.allowed_third_psd) if self.allowed_third_psd else None,
            "eps": self.eps,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "SearchPlan":
        return cls(
            length=data["length"],
            subgroup=tuple(data["subgroup"]),
            composition=ranking.parse_composition(data["composition"]),
            polarity=1 if data["polarity"] == "plus" else -1,
            rank_range=tuple(data["rank_range"]) if data.get("rank_range") else None,
            allowed_third_psd=(
                frozenset(data["allowed_third_psd"]) if data.get("allowed_third_psd") else None
            ),
            eps=data.get("eps", EPS),
        )


@dataclass
class SearchStats:
    scanned: int = 0
    stage1_survivors: int = 0
    stage2_survivors: int = 0


def representative_lags(decomp: OrbitDecomposition) -> list[int]:
    """One lag per orbit of <H, -1> acting on 1..(l-1)/2.

    PSD is constant on these classes for orbit-closed sequences, so the
    bound test only needs the representatives.
    """
    length = decomp.modulus
    half = (length - 1) // 2
    seen = set()
    reps = []
    for k in range(1, half + 1):
        if k in seen:
            continue
        orbit = set()
        frontier = {k, length - k}
        while frontier:
            orbit |= frontier
            frontier = {
                (h * x) % length for h in decomp.subgroup for x in orbit
            } - orbit
        reps.append(k)
        seen |= {x if x <= half else length - x for x in orbit}
    return reps


def _orbit_residue_classes(decomp: OrbitDecomposition) -> list[tuple[int, int]]:
    """(size, residue mod 3) per nonzero orbit, in ascending-size class order."""
    out = []
    for size in decomp.sizes:
        for orb in decomp.orbits_of_size(size):
            out.append((size, orb[0] % 3))
    return out


def run_search(
    plan: SearchPlan,
    sink: Callable[[CandidateRecord], None],
    checkpoint: Callable[[int], None] | None = None,
    checkpoint_every: int = 100_000,
) -> SearchStats:
    """Scan the plan's rank range, filter, and emit survivor records.

    Deterministic: identical plans produce an identical record stream.
    ``checkpoint`` (if given) receives the last completed rank at regular
    intervals and once at the end.
    """
    decomp = plan.decomposition()
    comp = plan.composition
    lo, hi = plan.resolved_range()
    stats = SearchStats()
    mod3 = plan.length % 3 == 0
    allowed = plan.allowed_third_psd
    if allowed is not None and not mod3:
        raise ValueError("allowed_third_psd requires a length divisible by 3")

    m = plan.length // 3
    # per size class: list of residue classes of its orbits (stage-1 fast path)
    class_residues = {
        size: [orb[0] % 3 for orb in decomp.orbits_of_size(size)] for size in decomp.sizes
    }
    class_orbits = {size: decomp.orbits_of_size(size) for size in decomp.sizes}
    radices = [
        (size, count, math.comb(decomp.size_counts.get(size, 0), count))
        for size, count in comp
    ]
    rep_lags = representative_lags(decomp)
    bound = plan.psd_bound

    if allowed is not None and not allowed:
        # stage 1 annihilates the whole range without any decoding
        stats.scanned = hi - lo
        if checkpoint and hi > lo:
            checkpoint(hi - 1)
        return stats

    for rank in range(lo, hi):
        stats.scanned += 1
        # mixed-radix digits, first class most significant
        digits = []
        r = rank
        for _, _, radix in reversed(radices):
            digits.append(r % radix)
            r //= radix
        digits.reverse()
        chosen_per_class = [
            ranking.subset_unrank(d, count, len(class_orbits[size]))
            for (size, count, _), d in zip(radices, digits)
        ]
        if mod3:
            k = [0, 0, 0]
            for (size, count, _), subset in zip(radices, chosen_per_class):
                residues = class_residues[size]
                for idx in subset:
                    k[residues[idx - 1]] += size
            a1, a2, a3 = 2 * k[1] - m, 2 * k[2] - m, 2 * k[0] - m
            third = psd_quadratic_form(a1, a2, a3)
            if allowed is not None and third not in allowed:
                if checkpoint and (stats.scanned % checkpoint_every == 0 or rank == hi - 1):
                    checkpoint(rank)
                continue
            if third > bound:
                if checkpoint and (stats.scanned % checkpoint_every == 0 or rank == hi - 1):
                    checkpoint(rank)
                continue
        stats.stage1_survivors += 1
        chosen_reps = tuple(
            sorted(
                class_orbits[size][idx - 1][0]
                for (size, _, _), subset in zip(radices, chosen_per_class)
                for idx in subset
            )
        )
        seq = ranking.decode_selection(
            ranking.OrbitSelection(decomp, chosen_reps, plan.polarity)
        )
        ok = True
        for lag in rep_lags:
            if psd(seq, lag) > bound:
                ok = False
                break
        if ok:
            stats.stage2_survivors += 1
            fp1, fp2 = fingerprint(seq)
            sink(CandidateRecord(rank, fp1, fp2))
        if checkpoint and (stats.scanned % checkpoint_every == 0 or rank == hi - 1):
            checkpoint(rank)
    return stats


def split_ranges(space_size: int, chunks: int) -> list[tuple[int, int]]:
    """Contiguous disjoint covering ranges with sizes differing by at most 1."""
    if chunks < 1:
        raise ValueError("chunks must be >= 1")
    base, extra = divmod(space_size, chunks)
    out = []
    lo = 0
    for i in range(chunks):
        size = base + (1 if i < extra else 0)
        if size == 0:
            continue
        out.append((lo, lo + size))
        lo += size
    return out


@dataclass(frozen=True)
class MatchResult:
    plan_a: SearchPlan
    rank_a: int
    plan_b: SearchPlan
    rank_b: int
    verified: bool
    pair: LegendrePairResult | None = None


def _external_sort(
    items: Iterable[tuple[str, int, int]], chunk_size: int
) -> Iterator[tuple[str, int, int]]:
    """Sort (key, plan_index, rank) tuples, spilling chunks to disk."""
    chunk: list[tuple[str, int, int]] = []
    spill_files = []
    try:
        for item in items:
            chunk.append(item)
            if len(chunk) >= chunk_size:
                chunk.sort()
                f = tempfile.TemporaryFile("w+t")
                for key, pi, rank in chunk:
                    f.write(f"{key}\t{pi}\t{rank}\n")
                f.seek(0)
                spill_files.append(f)
                chunk = []
        chunk.sort()
        if not spill_files:
            yield from chunk
            return
        streams = [
            ((line.rstrip("\n").split("\t")) for line in f) for f in spill_files
        ]
        parsed = [
            ((key, int(pi), int(rank)) for key, pi, rank in s) for s in streams
        ]
        yield from heapq.merge(*parsed, iter(chunk))
    finally:
        for f in spill_files:
            f.close()


def match_candidates(
    record_sets: Sequence[tuple[SearchPlan, Iterable[CandidateRecord]]],
    verify: bool = True,
    sort_chunk_size: int = 1_000_000,
) -> list[MatchResult]:
    """Sort-merge join of records on fp1(x) = fp2(y), with exact re-verification.

    All record sets must come from plans of the same length (hence the same
    fingerprint lag set).  Each unordered candidate pair is reported once;
    hash collisions that fail the exact PAF check are kept with
    ``verified=False`` so callers can report and drop them.
    """
    lengths = {plan.length for plan, _ in record_sets}
    if len(lengths) > 1:
        raise ValueError(f"record sets mix lengths {sorted(lengths)}")
    plans = [plan for plan, _ in record_sets]

    def tagged(side: int) -> Iterator[tuple[str, int, int]]:
        for pi, (_, records) in enumerate(record_sets):
            for rec in records:
                yield (rec.fp1 if side == 0 else rec.fp2, pi, rec.rank)

    left = list(_external_sort(tagged(0), sort_chunk_size))
    right = list(_external_sort(tagged(1), sort_chunk_size))

    results = []
    seen = set()
    decoded: dict[tuple[int, int], BinarySequence] = {}

    def decode(pi: int, rank: int) -> BinarySequence:
        key = (pi, rank)
        if key not in decoded:
            decoded[key] = plans[pi].decode(rank)
        return decoded[key]

    i = j = 0
    while i < len(left) and j < len(right):
        key_l, key_r = left[i][0], right[j][0]
        if key_l < key_r:
            i += 1
        elif key_l > key_r:
            j += 1
        else:
            i2 = i
            while i2 < len(left) and left[i2][0] == key_l:
                i2 += 1
            j2 = j
            while j2 < len(right) and right[j2][0] == key_l:
                j2 += 1
            for _, pi_a, rank_a in left[i:i2]:
                for _, pi_b, rank_b in right[j:j2]:
                    ka, kb = (pi_a, rank_a), (pi_b, rank_b)
                    pair_key = (ka, kb) if ka <= kb else (kb, ka)
                    if pair_key in seen:
                        continue
                    seen.add(pair_key)
                    if verify:
                        res = verify_pair(decode(pi_a, rank_a), decode(pi_b, rank_b))
                        results.append(
                            MatchResult(
                                plans[pi_a], rank_a, plans[pi_b], rank_b,
                                bool(res), res if res else None,
                            )
                        )
                    else:
                        results.append(MatchResult(plans[pi_a], rank_a, plans[pi_b], rank_b, False))
            i, j = i2, j2
    return results


# ---------------------------------------------------------------------------
# on-disk layout: one directory per plan holding plan.json, part-*.rec and
# part-*.ckpt checkpoint sidecars


def write_plan(directory: Path, plan: SearchPlan) -> None:
    directory.mkdir(parents=True, exist_ok=True)
    (directory / "plan.json").write_text(json.dumps(plan.to_dict(), indent=2) + "\n")


def read_plan(directory: Path) -> SearchPlan:
    return SearchPlan.from_dict(json.loads((directory / "plan.json").read_text()))


def read_records(path: Path) -> list[CandidateRecord]:
    with open(path) as f:
        return [CandidateRecord.parse(line) for line in f if line.strip()]


def _checkpoint_path(record_path: Path) -> Path:
    return record_path.with_suffix(".ckpt")


def run_chunk(
    plan: SearchPlan,
    lo: int,
    hi: int,
    record_path: Path,
    checkpoint_every: int = 100_000,
) -> SearchStats:
    """Run one worker chunk, writing records and a resumable checkpoint.

    If a checkpoint sidecar exists, the scan resumes after the last completed
    rank, appending to the record file.
    """
    ckpt = _checkpoint_path(record_path)
    start = lo
    mode = "w"
    if ckpt.exists():
        last = int(ckpt.read_text().strip())
        start = max(lo, last + 1)
        mode = "a"
    if start >= hi:
        return SearchStats(scanned=0)
    chunk_plan = replace(plan, rank_range=(start, hi))
    with open(record_path, mode) as out:

        def sink(rec: CandidateRecord) -> None:
            out.write(rec.line())

        def checkpoint(rank: int) -> None:
            out.flush()
            tmp = ckpt.with_suffix(".ckpt.tmp")
            tmp.write_text(f"{rank}\n")
            os.replace(tmp, ckpt)

        return run_search(chunk_plan, sink, checkpoint, checkpoint_every)
