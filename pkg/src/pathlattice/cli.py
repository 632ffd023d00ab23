"""Command-line surface: enumerate, check, lattice, eco, construct, whitney.

Exit codes: 0 success, 1 domain errors (bad step sets, size limits,
unparseable flags), 2 internal verification failures (a machine-checked
structural claim did not hold).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import criterion, doubling, eco, posets, report, schroeder
from .dyck import FULL_LATTICE_LIMIT, dyck_lattice, whitney_dp
from .posets import VerificationError, is_unimodal, poset_from_json, poset_to_dot, poset_to_json
from .steps import enumerate_paths, make_step_set, profile_text, word_or_text

ENUMERATE_DEFAULT_MAX = 16
WHITNEY_DEFAULT_MAX = 200


def _parse_steps(text: str):
    try:
        return [int(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError:
        raise ValueError(f"cannot parse step list {text!r}; expected e.g. -1,0,2") from None


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def cmd_enumerate(args) -> int:
    gamma = make_step_set(_parse_steps(args.steps), args.unbounded_above)
    if args.length > ENUMERATE_DEFAULT_MAX and not args.force:
        raise ValueError(
            f"length {args.length} above the default guard "
            f"({ENUMERATE_DEFAULT_MAX}); pass --force to override"
        )
    paths = enumerate_paths(gamma, args.length)
    if args.format == "count":
        _emit(str(len(paths)), args.out)
    elif args.format == "json":
        payload = {"count": len(paths), "paths": [{"heights": list(p)} for p in paths]}
        _emit(json.dumps(payload, separators=(",", ":")), args.out)
    else:
        _emit("\n".join(f"{profile_text(p)}\t{word_or_text(p)}" for p in paths)
              if paths else "(no paths)", args.out)
    return 0


def cmd_check(args) -> int:
    gamma = make_step_set(_parse_steps(args.steps), args.unbounded_above)
    verdict = criterion.is_coordinatewise_lattice(gamma)
    window = criterion.difference_sum_window(
        gamma, -max(gamma.diameter, 1), max(gamma.diameter, 1)
    )
    closure_results = []
    for n in range(1, args.closure_upto + 1):
        ok, pair = criterion.brute_force_closure(gamma, n, threads=args.threads)
        closure_results.append({"n": n, "closed": ok,
                                "pair": [list(pair[0]), list(pair[1])] if pair else None})
    if args.format == "json":
        payload = {
            "holds": verdict.holds,
            "witness": verdict.witness,
            "shortcut": verdict.shortcut,
            "min_step": gamma.min_step,
            "max_step": gamma.max_step,
            "diameter": gamma.diameter,
            "unbounded_above": gamma.unbounded_above,
            "delta_window": sorted(window.members),
            "closure": closure_results,
        }
        _emit(json.dumps(payload, separators=(",", ":")), args.out)
        return 0
    lines = []
    tag = {
        "interval": " (interval)",
        "two_step": " (two_step)",
        "degenerate": " (degenerate)",
        "none": "",
    }[verdict.shortcut]
    lines.append(
        f"coordinatewise lattice: {'yes' if verdict.holds else 'no'}{tag}"
    )
    lines.append(f"steps: {gamma}")
    lines.append(
        f"min step {gamma.min_step}, max step {gamma.max_step}, diameter {gamma.diameter}"
    )
    lines.append("difference sums in window: "
                 + ",".join(str(d) for d in sorted(window.members)))
    if verdict.witness is not None:
        lines.append(f"witness step value: {verdict.witness}")
    for res in closure_results:
        if res["closed"]:
            lines.append(f"closure at length {res['n']}: ok")
        else:
            f, g = res["pair"]
            lines.append(
                f"closure at length {res['n']}: violated by "
                f"{profile_text(tuple(f))} and {profile_text(tuple(g))}"
            )
    _emit("\n".join(lines), args.out)
    return 0


def _lattice_for(args):
    if args.family == "dyck":
        if args.n is None:
            raise ValueError("--family dyck needs --n")
        if args.n > FULL_LATTICE_LIMIT:
            raise ValueError(f"dyck lattice limited to n <= {FULL_LATTICE_LIMIT}")
        if args.n > 7 and not args.force:
            raise ValueError("n > 7 is slow; pass --force to proceed")
        lat = dyck_lattice(args.n)
        lat.poset.labels = [word_or_text(p) for p in lat.paths]
        return lat.poset
    if args.family == "schroeder":
        if args.n is None:
            raise ValueError("--family schroeder needs --n")
        if args.n > 4 and not args.force:
            raise ValueError("n > 4 is slow; pass --force to proceed")
        poset, _ = schroeder.schroeder_lattice(args.n)
        return poset
    if args.family == "gamma":
        if not args.steps or args.length is None:
            raise ValueError("--family gamma needs --steps and --length")
        gamma = make_step_set(_parse_steps(args.steps), args.unbounded_above)
        paths = enumerate_paths(gamma, args.length)
        if len(paths) > posets.MATRIX_LIMIT:
            raise ValueError(f"{len(paths)} paths exceed the dense-poset limit")
        return posets.poset_from_profiles(paths, labels=[word_or_text(p) for p in paths])
    raise ValueError(f"unknown family {args.family!r}")


def cmd_lattice(args) -> int:
    poset = _lattice_for(args)
    if args.format == "dot":
        _emit(poset_to_dot(poset), args.out)
    elif args.format == "json":
        text = poset_to_json(poset)
        if args.verify_roundtrip:
            again = poset_from_json(text)
            if again.covers != poset.covers:
                raise VerificationError("roundtrip changed the cover relation")
        _emit(text, args.out)
        if args.verify_roundtrip:
            print("roundtrip: ok", file=sys.stderr)
    else:
        ok, _ = posets.is_lattice(poset)
        wh = posets.whitney_numbers(poset) if len(poset.minima()) == 1 else None
        lines = [
            f"elements: {poset.size}",
            f"cover edges: {len(poset.covers)}",
            f"lattice: {'yes' if ok else 'no'}",
        ]
        if wh is not None:
            lines.append("whitney numbers: " + ",".join(map(str, wh)))
        _emit("\n".join(lines), args.out)
    return 0


def cmd_eco(args) -> int:
    if args.partition:
        if args.n is None:
            raise ValueError("--partition needs --n")
        chains = eco.eco_partition(args.n)
        lines = []
        for chain in chains:
            father = eco.dyck_father(chain[0]) if len(chain[0]) >= 5 else None
            head = word_or_text(father) if father else "(root)"
            lines.append(f"{head}: " + " < ".join(word_or_text(p) for p in chain))
        lines.append(f"saturated chains: {len(chains)}")
        _emit("\n".join(lines), args.out)
        return 0
    if args.family == "motzkin":
        if args.n is None:
            raise ValueError("--family motzkin needs --n")
        rep = eco.motzkin_chain_report(args.n)
        lines = [
            f"path counts by length: {','.join(map(str, rep.counts))}",
            f"generation exact-once: {rep.exact_once}",
            f"all son classes are chains: {rep.all_classes_chains}",
            f"saturated classes: {rep.saturated_classes}/{rep.total_classes}",
        ]
        if rep.nonsaturated_witness:
            fa, a, b = rep.nonsaturated_witness
            lines.append(
                "non-saturated chain witness: father "
                f"{profile_text(fa)}, consecutive sons {profile_text(a)} < {profile_text(b)}"
            )
        _emit("\n".join(lines), args.out)
        return 0
    rule = {"catalan": eco.catalan_rule, "schroeder": eco.schroeder_rule}.get(args.rule)
    if rule is None:
        raise ValueError(f"unknown rule {args.rule!r}")
    counts = eco.level_counts(rule(), args.depth)
    _emit(",".join(map(str, counts)), args.out)
    return 0


def cmd_construct(args) -> int:
    if args.family != "dyck":
        raise ValueError("only --family dyck has a doubling construction")
    if args.n is None:
        raise ValueError("--family dyck needs --n")
    ok, mapping, steps = doubling.verify_recursive_construction(args.n)
    lines = []
    for step in steps:
        lines.append(
            f"step {step.k}: filter size {step.filter_size}, "
            f"lattice size {step.result.size}"
        )
    final_size = steps[-1].result.size
    verdict = "verified" if ok else "FALSIFIED"
    lines.append(
        f"β_{args.n - 1}(D_{args.n - 1}) ≅ D_{args.n}: {verdict} "
        f"({final_size} elements)"
    )
    if args.format == "dot":
        _emit(poset_to_dot(steps[-1].result.poset), args.out)
        print("\n".join(lines), file=sys.stderr)
    else:
        _emit("\n".join(lines), args.out)
    if not ok:
        raise VerificationError("doubling tower does not rebuild the Dyck lattice")
    return 0


def cmd_whitney(args) -> int:
    if args.family != "dyck":
        raise ValueError("only --family dyck is supported")
    if args.n is None:
        raise ValueError("--n is required")
    if args.n > WHITNEY_DEFAULT_MAX and not args.force:
        raise ValueError(f"n > {WHITNEY_DEFAULT_MAX}; pass --force to override")
    ns = range(1, args.n + 1) if args.upto else [args.n]
    rows = report.whitney_rows(ns)
    lines = []
    for row in rows:
        verdict = "unimodal" if row.unimodal else "NOT unimodal"
        lines.append(
            f"n={row.n}: {verdict}, peak rank {row.peak_rank}, total {row.total}"
        )
        if not args.upto:
            lines.append("counts: " + ",".join(map(str, row.counts)))
    _emit("\n".join(lines), args.out)
    if args.report:
        written = report.write_whitney_report(ns, args.report)
        for name, path in sorted(written.items()):
            print(f"wrote {name}: {path}", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pathlattice",
        description="Order theory of lattice paths: enumeration, lattice "
        "criteria, Dyck/Schroeder lattices, ECO partitions, doubling towers.",
    )
    parser.add_argument(
        "--threads",
        type=int,
        default=os.cpu_count() or 1,
        help="worker threads for the closure sweeps (default: all cores)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list paths over a step set")
    p.add_argument("--steps", required=True, help="comma-separated step values")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--unbounded-above", action="store_true")
    p.add_argument("--format", choices=["text", "json", "count"], default="text")
    p.add_argument("--out")
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("check", help="decide the coordinatewise-lattice criterion")
    p.add_argument("--steps", required=True)
    p.add_argument("--unbounded-above", action="store_true")
    p.add_argument("--closure-upto", type=int, default=0,
                   help="also run the enumeration closure oracle for lengths up to N")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("lattice", help="build a path lattice and export it")
    p.add_argument("--family", choices=["dyck", "schroeder", "gamma"], required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--steps")
    p.add_argument("--length", type=int)
    p.add_argument("--unbounded-above", action="store_true")
    p.add_argument("--format", choices=["text", "json", "dot"], default="text")
    p.add_argument("--verify-roundtrip", action="store_true")
    p.add_argument("--out")
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("eco", help="succession rules, level counts, chain partitions")
    p.add_argument("--rule", choices=["catalan", "schroeder"])
    p.add_argument("--depth", type=int, default=8)
    p.add_argument("--family", choices=["dyck", "motzkin"])
    p.add_argument("--n", type=int)
    p.add_argument("--partition", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_eco)

    p = sub.add_parser("construct", help="rebuild a Dyck lattice by filtered doubling")
    p.add_argument("--family", choices=["dyck"], default="dyck")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["text", "dot"], default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("whitney", help="rank distribution and unimodality experiment")
    p.add_argument("--family", choices=["dyck"], default="dyck")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--upto", action="store_true", help="report all n up to --n")
    p.add_argument("--report", metavar="DIR",
                   help="write CSV tables and PNG figures to DIR")
    p.add_argument("--out")
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=cmd_whitney)
    return parser


def _normalize_argv(argv):
    """Join `--steps -1,0,2` into `--steps=-1,0,2` so argparse does not read
    the negative step list as an option string."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok == "--steps" and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"--steps={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(_normalize_argv(list(argv)))
    except SystemExit as exc:
        return 1 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except VerificationError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
