"""Command-line front end.

Every command is a thin binding over the library; exit codes are 0 for
success, 2 for validation errors, 3 for verification failures and 4 for I/O
errors.  The LP_EPS environment variable overrides the float tolerance.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import nt, oracle, pipeline, ranking
from . import search as se
from . import sequences as sq
from . import verify as vf


class VerificationFailure(Exception):
    """A command-level verification failed (exit code 3)."""


def _parse_subgroup(length: int, text: str) -> nt.Subgroup:
    return nt.Subgroup(length, tuple(int(x) for x in text.split(",")))


def _parse_polarity(text: str) -> int:
    if text not in ("plus", "minus"):
        raise ValueError(f"polarity must be plus or minus, got {text!r}")
    return 1 if text == "plus" else -1


def _format_triples(triples) -> str:
    return ", ".join("[" + ", ".join(str(v) for v in t) + "]" for t in triples)


def cmd_spectrum(args) -> int:
    rows = nt.spectrum_candidates(args.l)
    for row in rows:
        lo, hi = row.psd_pair
        print(f"[{lo}, {hi}]")
        print(f"  A: sum of squares = {row.square_sum_a} -> {_format_triples(row.triples_a) or 'no all-odd solutions'}")
        print(f"  B: sum of squares = {row.square_sum_b} -> {_format_triples(row.triples_b) or 'no all-odd solutions'}")
        if row.admissible:
            wa, wb = row.witnesses_a[0], row.witnesses_b[0]
            print(f"  compatible assignments: (A1,A2,A3) = {wa}, (B1,B2,B3) = {wb}")
        else:
            print(f"  discarded: {row.reason}")
    kept = [r.psd_pair for r in rows if r.admissible]
    print(f"spectrum: {kept}")
    return 0


def cmd_subgroups(args) -> int:
    groups = nt.subgroups_of_order(args.l, args.order)
    for g in groups:
        print("{" + ", ".join(str(x) for x in g.elements) + "}")
    if not groups:
        print(f"no subgroups of order {args.order} in Z_{args.l}^*")
    return 0


def cmd_orbits(args) -> int:
    sub = _parse_subgroup(args.l, args.subgroup)
    decomp = nt.orbit_decomposition(args.l, sub)
    for orb in decomp.orbits:
        print("{" + ", ".join(str(x) for x in orb) + "}")
    counts = ", ".join(
        f"{decomp.size_counts[s]} of size {s}" for s in decomp.sizes
    )
    print(f"nonzero orbits: {counts}")
    if decomp.residue_counts:
        for (size, j), c in sorted(decomp.residue_counts.items()):
            print(f"  size {size}, elements = {j} (mod 3): {c} orbits")
    return 0


def cmd_alg2(args) -> int:
    sub = _parse_subgroup(args.l, args.subgroup)
    decomp = nt.orbit_decomposition(args.l, sub)
    counts = tuple(int(x) for x in args.counts.split(","))
    values = nt.orbit_psd_values(decomp, counts)
    print(f"compatible PSD values at lag {args.l // 3} for counts {counts}:")
    print(", ".join(str(v) for v in values))
    if args.admissible:
        entries = nt.admissible_psd_pairs(args.l, sub, counts)
        print(f"admissible spectrum pairs: {[e.psd_pair for e in entries]}")
    return 0


def cmd_decode(args) -> int:
    sub = _parse_subgroup(args.l, args.subgroup)
    decomp = nt.orbit_decomposition(args.l, sub)
    polarity = _parse_polarity(args.polarity)
    if args.indices:
        indices = [int(x) for x in args.indices.split(",")]
        sel = ranking.indices_to_selection(decomp, indices, polarity)
    else:
        if args.rank is None or args.composition is None:
            raise ValueError("need either --indices or both --rank and --composition")
        comp = ranking.parse_composition(args.composition)
        sel = ranking.rank_to_selection(args.rank, decomp, comp, polarity)
    seq = ranking.decode_selection(sel)
    print(seq.pm_string())
    print(f"entry sum: {sum(seq)}")
    if args.l % 3 == 0:
        a1, a2, a3 = sq.residue_sums_mod3(seq)
        print(f"residue sums mod 3: ({a1}, {a2}, {a3}); PSD at lag {args.l // 3}: {sq.psd_exact_third(seq)}")
    return 0


def cmd_search(args) -> int:
    sub = _parse_subgroup(args.l, args.subgroup)
    comp = ranking.parse_composition(args.composition)
    polarity = _parse_polarity(args.polarity)
    decomp = nt.orbit_decomposition(args.l, sub)
    counts = ranking.composition_counts(decomp, comp)
    allowed = None
    if not args.no_third_filter:
        allowed = pipeline.third_psd_filter(args.l, sub, counts)
    rank_range = None
    if args.range:
        lo, _, hi = args.range.partition(":")
        rank_range = (int(lo), int(hi))
    plan = se.SearchPlan(
        args.l, sub.elements, comp, polarity,
        rank_range=rank_range, allowed_third_psd=allowed,
    )
    out_dir = Path(args.out)
    stats = pipeline.run_plan_workers(plan, out_dir, args.workers, args.checkpoint_every)
    scanned = sum(s.scanned for s in stats)
    s1 = sum(s.stage1_survivors for s in stats)
    s2 = sum(s.stage2_survivors for s in stats)
    print(f"scanned {scanned} ranks; stage-1 survivors {s1}; stage-2 survivors {s2}")
    print(f"records in {out_dir}")
    return 0


def cmd_match(args) -> int:
    by_plan_dir: dict[Path, list[Path]] = {}
    for path_str in args.records:
        path = Path(path_str)
        by_plan_dir.setdefault(path.parent, []).append(path)
    record_sets = []
    for plan_dir, rec_files in sorted(by_plan_dir.items()):
        plan = se.read_plan(plan_dir)
        if plan.length != args.l:
            raise ValueError(f"plan in {plan_dir} has length {plan.length}, expected {args.l}")
        records = []
        for rec_file in sorted(rec_files):
            records.extend(se.read_records(rec_file))
        record_sets.append((plan, records))
    matches = se.match_candidates(record_sets, verify=args.verify)
    verified = [m for m in matches if m.verified]
    false_candidates = sum(1 for m in matches if not m.verified)
    print(f"{len(matches)} fingerprint matches; {len(verified)} verified pairs; "
          f"{false_candidates} false candidates dropped")
    if args.emit_pairs:
        pipeline.write_pairs(Path(args.emit_pairs), matches)
        print(f"pairs written to {args.emit_pairs}")
    return 0


def _decode_pair_record(rec: dict) -> tuple[sq.BinarySequence, sq.BinarySequence]:
    length = rec["l"]
    sub = nt.Subgroup(length, tuple(rec["subgroup"]))
    decomp = nt.orbit_decomposition(length, sub)
    pol_a = 1 if rec.get("polarity_a", "plus") == "plus" else -1
    pol_b = 1 if rec.get("polarity_b", "plus") == "plus" else -1
    a = ranking.decode_selection(ranking.indices_to_selection(decomp, rec["I_A"], pol_a))
    b = ranking.decode_selection(ranking.indices_to_selection(decomp, rec["I_B"], pol_b))
    return a, b


def cmd_verify(args) -> int:
    records = json.loads(Path(args.pairs).read_text())
    lines = []
    failures = 0
    for i, rec in enumerate(records):
        a, b = _decode_pair_record(rec)
        result = vf.verify_pair(a, b)
        if result:
            third = f" psd_third={result.psd_third}" if result.psd_third else ""
            lines.append(f"pair {i}: VERIFIED{third}")
        else:
            failures += 1
            lines.append(f"pair {i}: FAILED ({result.reason}, lag {result.lag})")
    report = "\n".join(lines) + "\n"
    if args.report:
        Path(args.report).write_text(report)
    print(report, end="")
    if failures:
        raise VerificationFailure(f"{failures} of {len(records)} pairs failed")
    return 0


def cmd_hadamard(args) -> int:
    records = json.loads(Path(args.pairs).read_text())
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    for i, rec in enumerate(records):
        a, b = _decode_pair_record(rec)
        result = vf.verify_pair(a, b)
        if not result:
            raise VerificationFailure(f"pair {i} is not a Legendre pair: {result.reason}")
        matrix, variant = vf.hadamard_from_pair(result)
        path = out_dir / f"hadamard-{rec['l']}-{i:03d}.txt"
        path.write_text(vf.format_matrix(matrix) + "\n")
        print(f"pair {i}: order-{matrix.shape[0]} matrix (template variant {variant}) -> {path}")
    return 0


def cmd_pipeline(args) -> int:
    sub = _parse_subgroup(args.l, args.subgroup)
    comps = None
    if args.compositions:
        comps = [ranking.parse_composition(c) for c in args.compositions.split(";")]
    if args.polarity == "both":
        polarities: tuple[int, ...] = (1, -1)
    else:
        polarities = (_parse_polarity(args.polarity),)
    plans = pipeline.build_plans(
        args.l, sub, comps, polarities, use_third_filter=not args.no_third_filter
    )
    if not plans:
        raise ValueError("no plans match the requested compositions and polarities")
    result = pipeline.run_pipeline(Path(args.out), plans, args.workers, args.checkpoint_every)
    scanned = sum(s.scanned for s in result.stats)
    print(f"{len(plans)} plans, {scanned} ranks scanned")
    print(f"{len(result.pairs)} verified pairs; {result.false_candidates} false candidates")
    print(f"artifacts in {args.out}")
    return 0


def cmd_oracle(args) -> int:
    sub = _parse_subgroup(args.l, args.subgroup) if args.subgroup else None
    pairs = oracle.brute_force_pairs(args.l, sub)
    qualifier = f" with multiplier subgroup {{{args.subgroup}}}" if args.subgroup else ""
    print(f"{len(pairs)} normalized Legendre pairs of length {args.l}{qualifier}")
    if args.show:
        for pair in sorted(tuple(sorted(p)) for p in pairs):
            for entries in pair:
                print("  " + "".join("+" if e == 1 else "-" for e in entries))
            print()
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lptool", description="Legendre pair search, decoding and verification toolkit"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="admissible PSD value pairs at lag l/3")
    p.add_argument("l", type=int)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("subgroups", help="subgroups of the units mod l")
    p.add_argument("l", type=int)
    p.add_argument("--order", type=int, required=True)
    p.set_defaults(func=cmd_subgroups)

    p = sub.add_parser("orbits", help="orbit decomposition of Z_l under a subgroup")
    p.add_argument("l", type=int)
    p.add_argument("--subgroup", required=True, help="comma-separated elements, e.g. 1,16,22")
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("alg2", help="PSD values compatible with chosen orbit counts")
    p.add_argument("l", type=int)
    p.add_argument("--subgroup", required=True)
    p.add_argument("--counts", required=True, help="orbits chosen per ascending size class, e.g. 2,19")
    p.add_argument("--admissible", action="store_true", help="also intersect with the spectrum")
    p.set_defaults(func=cmd_alg2)

    p = sub.add_parser("decode", help="decode an index set or rank into a sequence")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--subgroup", required=True)
    p.add_argument("--indices", help="orbit representatives, comma-separated")
    p.add_argument("--rank", type=int)
    p.add_argument("--composition", help="e.g. 2x1+19x3")
    p.add_argument("--polarity", default="plus", choices=("plus", "minus"))
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("search", help="run the two-stage filtered search over a rank range")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--subgroup", required=True)
    p.add_argument("--composition", required=True)
    p.add_argument("--polarity", default="plus", choices=("plus", "minus"))
    p.add_argument("--range", help="LO:HI rank range (default: full space)")
    p.add_argument("--out", required=True)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--checkpoint-every", type=int, default=100_000)
    p.add_argument("--no-third-filter", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("match", help="match candidate records and verify pairs")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("records", nargs="+", help="record files (plan.json read from their directories)")
    p.add_argument("--verify", action="store_true", default=True)
    p.add_argument("--emit-pairs", help="write verified pairs as JSON")
    p.set_defaults(func=cmd_match)

    p = sub.add_parser("verify", help="verify pairs from a pairs JSON file")
    p.add_argument("--l", type=int)
    p.add_argument("--pairs", required=True)
    p.add_argument("--report")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("hadamard", help="build Hadamard matrices from verified pairs")
    p.add_argument("--pairs", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_hadamard)

    p = sub.add_parser("pipeline", help="search + match + verify end to end")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--subgroup", required=True)
    p.add_argument("--compositions", help="semicolon-separated, e.g. '2x1+19x3'; default: full sweep")
    p.add_argument("--polarity", default="both", choices=("plus", "minus", "both"))
    p.add_argument("--out", required=True)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--checkpoint-every", type=int, default=100_000)
    p.add_argument("--no-third-filter", action="store_true")
    p.set_defaults(func=cmd_pipeline)

    p = sub.add_parser("oracle", help="brute-force reference pairs for small lengths")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--subgroup")
    p.add_argument("--show", action="store_true")
    p.set_defaults(func=cmd_oracle)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (vf.VerificationError, VerificationFailure) as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 3
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
