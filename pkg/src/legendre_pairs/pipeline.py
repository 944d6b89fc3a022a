"""End-to-end orchestration: plan construction, worker fan-out over rank
ranges, record matching, exact verification, and pairs/report emission.

A run directory holds one subdirectory per plan (a composition/polarity
combination), each with its plan.json, per-worker record files and
checkpoint sidecars; matching joins records across all plans of the run.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from . import ranking
from .nt import (
    Subgroup,
    orbit_decomposition,
    orbit_psd_values,
    spectrum_mod3,
)
from .ranking import Composition
from .search import (
    MatchResult,
    SearchPlan,
    SearchStats,
    match_candidates,
    read_plan,
    read_records,
    run_chunk,
    split_ranges,
    write_plan,
)
from .verify import LegendrePairResult


def third_psd_filter(
    length: int, subgroup: Subgroup, counts: tuple[int, ...]
) -> frozenset[int] | None:
    """Sound stage-1 filter set for one plan, or None when unavailable.

    A sequence of a true pair has its exact lag-l/3 PSD value both in the
    spectrum (as one component of some admissible pair) and among the values
    achievable with the plan's orbit counts, so the intersection never drops
    a true pair.  The orbit restriction applies only when every subgroup
    element is 1 (mod 3).
    """
    if length % 3 != 0:
        return None
    components = {v for e in spectrum_mod3(length) for v in e.psd_pair}
    if all(h % 3 == 1 for h in subgroup):
        decomp = orbit_decomposition(length, subgroup)
        components &= set(orbit_psd_values(decomp, counts))
    return frozenset(components)


def build_plans(
    length: int,
    subgroup: Subgroup,
    compositions: list[Composition] | None = None,
    polarities: tuple[int, ...] = (1, -1),
    use_third_filter: bool = True,
    eps: float | None = None,
) -> list[SearchPlan]:
    """Plans for the given compositions, or a full sweep when none are given."""
    decomp = orbit_decomposition(length, subgroup)
    plans = []
    for polarity in polarities:
        if compositions is None:
            comps = ranking.compositions_for(decomp, polarity)
        else:
            target = (length + 1) // 2 if polarity == 1 else (length - 1) // 2
            comps = [c for c in compositions if ranking.coverage(c) == target]
        for comp in comps:
            counts = ranking.composition_counts(decomp, comp)
            allowed = third_psd_filter(length, subgroup, counts) if use_third_filter else None
            kwargs = {"eps": eps} if eps is not None else {}
            plans.append(
                SearchPlan(
                    length=length,
                    subgroup=subgroup.elements,
                    composition=comp,
                    polarity=polarity,
                    allowed_third_psd=allowed,
                    **kwargs,
                )
            )
    return plans


@dataclass
class PipelineResult:
    plan_dirs: list[Path]
    stats: list[SearchStats]
    matches: list[MatchResult]
    pairs: list[LegendrePairResult]
    false_candidates: int


def run_plan_workers(
    plan: SearchPlan, directory: Path, workers: int = 1, checkpoint_every: int = 100_000
) -> list[SearchStats]:
    """Run one plan's rank range split across workers, one record file each."""
    write_plan(directory, plan)
    lo, hi = plan.resolved_range()
    ranges = split_ranges(hi - lo, workers)
    jobs = [
        (plan, lo + rlo, lo + rhi, directory / f"part-{i:04d}.rec")
        for i, (rlo, rhi) in enumerate(ranges)
    ]
    if workers == 1 or len(jobs) <= 1:
        return [run_chunk(p, a, b, path, checkpoint_every) for p, a, b, path in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [
            pool.submit(run_chunk, p, a, b, path, checkpoint_every)
            for p, a, b, path in jobs
        ]
        return [f.result() for f in futures]


def match_run(run_dir: Path) -> tuple[list[MatchResult], list[LegendrePairResult], int]:
    """Match and verify all records under a run directory."""
    record_sets = []
    for plan_dir in sorted(p for p in run_dir.iterdir() if (p / "plan.json").exists()):
        plan = read_plan(plan_dir)
        records = []
        for rec_file in sorted(plan_dir.glob("part-*.rec")):
            records.extend(read_records(rec_file))
        record_sets.append((plan, records))
    matches = match_candidates(record_sets)
    pairs = [m.pair for m in matches if m.verified and m.pair is not None]
    false_candidates = sum(1 for m in matches if not m.verified)
    return matches, pairs, false_candidates


def pair_record(match: MatchResult) -> dict:
    """JSON-serializable record of one verified pair."""
    assert match.pair is not None
    plan_a, plan_b = match.plan_a, match.plan_b
    decomp_a = plan_a.decomposition()
    decomp_b = plan_b.decomposition()
    sel_a = ranking.rank_to_selection(match.rank_a, decomp_a, plan_a.composition, plan_a.polarity)
    sel_b = ranking.rank_to_selection(match.rank_b, decomp_b, plan_b.composition, plan_b.polarity)
    return {
        "l": plan_a.length,
        "subgroup": list(plan_a.subgroup),
        "I_A": sorted(sel_a.chosen),
        "I_B": sorted(sel_b.chosen),
        "rank_a": match.rank_a,
        "rank_b": match.rank_b,
        "psd_third": list(match.pair.psd_third) if match.pair.psd_third else None,
        "composition_a": ranking.format_composition(plan_a.composition),
        "composition_b": ranking.format_composition(plan_b.composition),
        "polarity_a": "plus" if plan_a.polarity == 1 else "minus",
        "polarity_b": "plus" if plan_b.polarity == 1 else "minus",
    }


def write_pairs(path: Path, matches: list[MatchResult]) -> None:
    records = [pair_record(m) for m in matches if m.verified and m.pair is not None]
    path.write_text(json.dumps(records, indent=2) + "\n")


def load_pairs(path: Path) -> list[dict]:
    return json.loads(path.read_text())


def run_pipeline(
    run_dir: Path,
    plans: list[SearchPlan],
    workers: int = 1,
    checkpoint_every: int = 100_000,
) -> PipelineResult:
    """Search every plan, then match, verify and write pairs.json."""
    run_dir.mkdir(parents=True, exist_ok=True)
    plan_dirs = []
    stats = []
    for i, plan in enumerate(plans):
        plan_dir = run_dir / f"plan-{i:03d}"
        plan_dirs.append(plan_dir)
        stats.extend(run_plan_workers(plan, plan_dir, workers, checkpoint_every))
    matches, pairs, false_candidates = match_run(run_dir)
    write_pairs(run_dir / "pairs.json", matches)
    return PipelineResult(plan_dirs, stats, matches, pairs, false_candidates)
