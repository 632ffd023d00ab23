"""Succession rules, generating-tree level counts, and the recursive
son/father constructions for Dyck and Motzkin paths.

The Dyck construction inserts a peak at every point of the last descent;
the father map deletes the rightmost peak.  Son sets are saturated chains
of the next lattice and the father classes partition it.

The Motzkin construction grows length by one: append a floor-level
horizontal step, or replace any floor-level horizontal by a rise and
close with a fall at the end.  Son sets are chains but in general not
saturated; this module demonstrates both facts.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .posets import VerificationError
from .steps import (
    Profile,
    area,
    enumerate_paths,
    is_valid_profile,
    leq,
    make_step_set,
    profile_word,
)
from .dyck import DYCK_STEPS, is_dyck_cover

MOTZKIN_STEPS = make_step_set([-1, 0, 1])


@dataclass(frozen=True)
class SuccessionRule:
    """An axiom label and a production mapping labels to ordered son labels."""

    name: str
    axiom: int
    produce: Callable[[int], tuple[int, ...]]


def catalan_rule() -> SuccessionRule:
    """Axiom (2); a label (k) produces (2)(3)...(k)(k+1), one son per point
    of the last descent (label = descent length + 1)."""

    def produce(k: int) -> tuple[int, ...]:
        if k < 2:
            raise ValueError(f"label {k} not reachable from axiom (2)")
        return tuple(range(2, k + 2))

    return SuccessionRule("catalan", 2, produce)


def schroeder_rule() -> SuccessionRule:
    """Axiom (2); a label (2k) produces one (2), two each of (4)...(2k),
    and one (2k+2), for 2k sons in total."""

    def produce(label: int) -> tuple[int, ...]:
        if label < 2 or label % 2:
            raise ValueError(f"label {label} not reachable from axiom (2)")
        k = label // 2
        out = [2]
        for i in range(2, k + 1):
            out += [2 * i, 2 * i]
        out.append(2 * k + 2)
        return tuple(out)

    return SuccessionRule("schroeder", 2, produce)


@dataclass(frozen=True)
class GeneratingTreeLevel:
    depth: int
    label_multiset: dict[int, int] = field(compare=False)
    total: int = 0


def expand_levels(rule: SuccessionRule, depth: int) -> list[GeneratingTreeLevel]:
    """Levels 1..depth of the generating tree as label multisets; no tree is
    materialized, only counts evolve."""
    if depth < 1:
        raise ValueError("depth must be at least 1")
    levels = [GeneratingTreeLevel(1, {rule.axiom: 1}, 1)]
    for d in range(2, depth + 1):
        nxt: dict[int, int] = {}
        for label, count in levels[-1].label_multiset.items():
            for son in rule.produce(label):
                nxt[son] = nxt.get(son, 0) + count
        levels.append(GeneratingTreeLevel(d, nxt, sum(nxt.values())))
    return levels


def level_counts(rule: SuccessionRule, depth: int) -> list[int]:
    """Node counts at levels 1..depth."""
    return [lvl.total for lvl in expand_levels(rule, depth)]


# --- Dyck construction ---------------------------------------------------------


def dyck_sons(p: Profile) -> list[Profile]:
    """Sons of a Dyck path: insert a peak at each point of the last descent,
    ordered from the bottom of the descent upward (last-descent lengths
    1, 2, ..., k+1).  The empty path has the single son UD."""
    if p == (0,):
        return [(0, 1, 0)]
    if not is_valid_profile(DYCK_STEPS, p):
        raise ValueError(f"not a Dyck path: {p}")
    w = profile_word(p)
    k = len(w) - len(w.rstrip("D"))
    body = w[: len(w) - k]
    words = ["".join((body, "D" * i, "UD", "D" * (k - i))) for i in range(k, -1, -1)]
    return [_word_profile(s) for s in words]


def dyck_father(p: Profile) -> Profile:
    """Delete the rightmost peak; the unique path whose sons include p."""
    if len(p) < 5:
        raise ValueError("path too short to have a father (length < 4)")
    if not is_valid_profile(DYCK_STEPS, p):
        raise ValueError(f"not a Dyck path: {p}")
    w = profile_word(p)
    i = w.rfind("UD")
    return _word_profile(w[:i] + w[i + 2:])


def _word_profile(w: str) -> Profile:
    heights = [0]
    for c in w:
        heights.append(heights[-1] + (1 if c == "U" else -1))
    return tuple(heights)


def last_descent_length(p: Profile) -> int:
    w = profile_word(p)
    return len(w) - len(w.rstrip("D"))


def eco_partition(n: int, verify: bool = True) -> list[list[Profile]]:
    """Partition of the semilength-n Dyck paths into the classes of a common
    father, each sorted ascending.

    Classes are verified to be saturated chains: totally ordered with
    consecutive members cover pairs.  Ordered by father profile.
    """
    if not 2 <= n <= 10:
        raise ValueError("need semilength between 2 and 10")
    paths = enumerate_paths(DYCK_STEPS, 2 * n)
    classes: dict[Profile, list[Profile]] = {}
    for p in paths:
        classes.setdefault(dyck_father(p), []).append(p)
    out = []
    for father in sorted(classes):
        chain = sorted(classes[father], key=area)
        if verify:
            for a, b in zip(chain, chain[1:]):
                if not leq(a, b):
                    raise VerificationError(
                        f"sons of {father} are not totally ordered: {a} vs {b}"
                    )
                if not is_dyck_cover(a, b):
                    raise VerificationError(
                        f"son chain of {father} is not saturated at {a} -> {b}"
                    )
        out.append(chain)
    return out


# --- Motzkin construction -------------------------------------------------------


def motzkin_sons(p: Profile) -> list[Profile]:
    """Sons one step longer, ascending in the pointwise order: first the
    appended floor horizontal, then each floor-level horizontal replaced by
    a rise with a fall appended, rightmost replacement first."""
    if not is_valid_profile(MOTZKIN_STEPS, p):
        raise ValueError(f"not a Motzkin path: {p}")
    sons = [p + (0,)]
    floor_h = [i for i in range(len(p) - 1) if p[i] == 0 and p[i + 1] == 0]
    for i in reversed(floor_h):
        sons.append(p[: i + 1] + tuple(h + 1 for h in p[i + 1:]) + (0,))
    return sons


def motzkin_father(p: Profile) -> Profile:
    """Inverse of motzkin_sons: strip a trailing horizontal, or undo the
    rise/fall closure by lowering back past the last floor visit."""
    if not is_valid_profile(MOTZKIN_STEPS, p):
        raise ValueError(f"not a Motzkin path: {p}")
    if len(p) < 2:
        raise ValueError("empty path has no father")
    if p[-1] == p[-2]:
        return p[:-1]
    assert p[-2] == 1, "Motzkin path cannot end with a rise"
    i = max(k for k in range(len(p) - 1) if p[k] == 0)
    return p[: i + 1] + tuple(h - 1 for h in p[i + 1: len(p) - 1])


@dataclass(frozen=True)
class MotzkinChainReport:
    """What the Motzkin construction does and does not provide."""

    n: int
    counts: tuple[int, ...]  # path counts for lengths 0..n
    exact_once: bool
    all_classes_chains: bool
    saturated_classes: int
    total_classes: int
    nonsaturated_witness: tuple[Profile, Profile, Profile] | None
    # (father, consecutive son pair element a, element b) with a < b not a cover


def motzkin_chain_report(n: int) -> MotzkinChainReport:
    """Check the construction at every length up to n and exhibit a
    non-saturated son chain when one exists."""
    if n < 1:
        raise ValueError("need length at least 1")
    counts = [1]
    exact_once = True
    level: list[Profile] = [(0,)]
    for m in range(1, n + 1):
        produced: list[Profile] = []
        for p in level:
            produced.extend(motzkin_sons(p))
        reference = enumerate_paths(MOTZKIN_STEPS, m)
        exact_once &= len(produced) == len(set(produced)) == len(reference)
        exact_once &= set(produced) == set(reference)
        level = reference
        counts.append(len(reference))

    paths_n = enumerate_paths(MOTZKIN_STEPS, n)
    all_chains = True
    saturated = 0
    total = 0
    witness = None
    for father in enumerate_paths(MOTZKIN_STEPS, n - 1):
        sons = motzkin_sons(father)
        total += 1
        chain_ok = all(leq(a, b) for a, b in zip(sons, sons[1:]))
        all_chains &= chain_ok
        sat = True
        for a, b in zip(sons, sons[1:]):
            if _strictly_between_exists(paths_n, a, b):
                sat = False
                if witness is None:
                    witness = (father, a, b)
        saturated += sat
    return MotzkinChainReport(
        n=n,
        counts=tuple(counts),
        exact_once=exact_once,
        all_classes_chains=all_chains,
        saturated_classes=saturated,
        total_classes=total,
        nonsaturated_witness=witness,
    )


def _strictly_between_exists(paths: list[Profile], a: Profile, b: Profile) -> bool:
    lt = lambda x, y: x != y and leq(x, y)
    return any(lt(a, z) and lt(z, b) for z in paths)
