"""Deciding whether the pointwise min/max of same-length paths stay paths.

The symbolic test: with D the set of all signed sums sum(x_i - y_i) over
equal-count choices x_i, y_i from two disjoint subsets of the step set,
the paths of every length are closed under pointwise min/max (and then
form a distributive lattice) iff

    (D + steps) intersected with [min_step, max_step]  is inside  steps.

Only d with |d| <= diameter can contribute to that intersection, so the
check runs on a finite window.  `brute_force_closure` is the independent
enumeration-based oracle for the same question at a fixed length.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .steps import (
    Profile,
    StepSet,
    enumerate_paths,
    is_valid_profile,
    pointwise_max,
    pointwise_min,
)


@dataclass(frozen=True)
class DifferenceWindow:
    """Exact membership of the difference-sum set inside [lo, hi].

    `exploration_bound` is the padding added around the window during the
    reachability search; the result is exact, not a truncation (any
    multiset of single-pair differences with total in [lo, hi] can be
    reordered so every partial sum stays within the padded window).
    """

    gamma: StepSet
    lo: int
    hi: int
    members: frozenset[int]
    exploration_bound: int

    def __post_init__(self):
        assert all(self.lo <= d <= self.hi for d in self.members)


@dataclass(frozen=True)
class LatticeVerdict:
    """`shortcut` records what decided the verdict: `interval` or `two_step`
    for the fast paths, `degenerate` for step sets lacking a true up or
    down step (at most one path exists per length, so closure is trivial
    and the windowed criterion does not apply), `none` for the general
    windowed computation."""

    holds: bool
    witness: Optional[int] = None
    shortcut: str = "none"  # interval | two_step | degenerate | none

    def __post_init__(self):
        assert self.holds == (self.witness is None)


def difference_sum_window(gamma: StepSet, lo: int, hi: int) -> DifferenceWindow:
    """Difference-sum set members within [lo, hi].

    For each split of the steps into disjoint x-side / y-side subsets, the
    achievable totals are exactly the n-fold sums (n >= 1) of the single
    differences x - y, because equal-count selections can be paired
    arbitrarily.  Membership is decided by breadth-first reachability over
    the padded window.  The empty sum contributes 0 unconditionally.

    Unbounded step sets contain two consecutive integers in their tail, so
    every integer is a difference sum; the window is then full.
    """
    if lo > hi:
        raise ValueError(f"empty window [{lo}, {hi}]")
    if gamma.unbounded_above:
        return DifferenceWindow(gamma, lo, hi, frozenset(range(lo, hi + 1)), 0)

    steps = gamma.steps
    pad = max(gamma.diameter, 1)
    wlo, whi = min(lo, 0) - pad, max(hi, 0) + pad
    members: set[int] = set()
    if lo <= 0 <= hi:
        members.add(0)
    for r in range(1, len(steps)):
        for xs in itertools.combinations(steps, r):
            ys = tuple(s for s in steps if s not in xs)
            diffs = {x - y for x in xs for y in ys}
            seen: set[int] = set()
            frontier = {d for d in diffs if wlo <= d <= whi}
            while frontier:
                seen |= frontier
                frontier = {
                    v + d
                    for v in frontier
                    for d in diffs
                    if wlo <= v + d <= whi and (v + d) not in seen
                }
            members |= {v for v in seen if lo <= v <= hi}
    return DifferenceWindow(gamma, lo, hi, frozenset(members), pad)


def _general_verdict(gamma: StepSet) -> Optional[int]:
    """Smallest in-range value of (difference sums + steps) missing from the
    step set, or None when the closure condition holds."""
    if gamma.unbounded_above:
        # The condition reduces to "the step set is a contiguous run from its
        # minimum into the unbounded tail" (every integer is a difference sum).
        run = range(gamma.min_step, gamma.max_step + 1)
        missing = [v for v in run if v not in gamma.steps]
        return missing[0] if missing else None
    lo, hi = gamma.min_step, gamma.max_step
    window = difference_sum_window(gamma, -gamma.diameter, gamma.diameter)
    bad = sorted(
        d + s
        for d in window.members
        for s in gamma.steps
        if lo <= d + s <= hi and not gamma.contains(d + s)
    )
    return bad[0] if bad else None


def _is_integer_interval(gamma: StepSet) -> bool:
    # For unbounded sets the infinite tail is contiguous by construction, so
    # the whole set is an integer half-line iff the explicit part has no gap.
    return gamma.steps == tuple(range(gamma.min_step, gamma.max_step + 1))


def is_coordinatewise_lattice(gamma: StepSet) -> LatticeVerdict:
    """Decide pointwise meet/join closure for every path length at once.

    Fast paths: integer-interval step sets and two-element sets {-b, a}
    always close.  The general windowed computation always runs as well
    and any disagreement with a fast path is a hard internal error.

    Step sets without a positive or without a negative step admit at most
    one path per length, so closure holds trivially no matter what the
    windowed criterion says; they are answered separately.
    """
    has_up = gamma.unbounded_above or gamma.max_step > 0
    has_down = gamma.min_step < 0
    if not (has_up and has_down):
        return LatticeVerdict(True, None, "degenerate")
    shortcut = "none"
    if _is_integer_interval(gamma):
        shortcut = "interval"
    elif (
        not gamma.unbounded_above
        and len(gamma.steps) == 2
        and gamma.min_step <= 0 <= gamma.max_step
    ):
        shortcut = "two_step"
    witness = _general_verdict(gamma)
    if shortcut != "none":
        assert witness is None, (
            f"fast path {shortcut} disagrees with general computation on "
            f"{gamma}: witness {witness}"
        )
        return LatticeVerdict(True, None, shortcut)
    if witness is None:
        return LatticeVerdict(True, None, "none")
    return LatticeVerdict(False, witness, "none")


# --- enumeration oracle ------------------------------------------------------

_PAIRWISE_LIMIT = 2500


def _closure_by_pairs(gamma: StepSet, paths: list[Profile], threads: int = 1):
    n = len(paths[0]) - 1
    steps = gamma.realized(n)
    half = max(abs(steps[0]), abs(steps[-1]), 1)
    allowed = np.zeros(2 * half + 1, dtype=bool)
    for s in steps:
        allowed[s + half] = True
    P = np.asarray(paths, dtype=np.int16)
    m = len(paths)

    def first_violation(i):
        rows = P[i + 1:]
        mn = np.minimum(P[i], rows)
        mx = np.maximum(P[i], rows)
        ok = allowed[np.diff(mn, axis=1) + half].all(axis=1)
        ok &= allowed[np.diff(mx, axis=1) + half].all(axis=1)
        bad = np.nonzero(~ok)[0]
        return i + 1 + int(bad[0]) if bad.size else None

    def scan(lo, hi):
        for i in range(lo, hi):
            j = first_violation(i)
            if j is not None:
                return (i, j)
        return None

    if threads <= 1 or m < 512:
        hit = scan(0, m - 1)
    else:
        from concurrent.futures import ThreadPoolExecutor

        bounds = np.linspace(0, m - 1, threads + 1).astype(int)
        with ThreadPoolExecutor(max_workers=threads) as pool:
            hits = list(
                pool.map(lambda ab: scan(ab[0], ab[1]), zip(bounds, bounds[1:]))
            )
        found = [h for h in hits if h is not None]
        hit = min(found) if found else None  # lexicographically first: deterministic
    if hit is not None:
        i, j = hit
        return False, (paths[i], paths[j])
    return True, None


def _closure_by_crossings(gamma: StepSet, paths: list[Profile]):
    """Equivalent closure check, linear in the number of paths.

    The pointwise min/max of two paths is invalid iff at some position k
    the two realized transitions (h_k, h_{k+1}) cross strictly and the
    induced step is not in the step set; any two paths realizing those two
    transitions then witness the failure.
    """
    n = len(paths[0]) - 1
    steps = set(gamma.realized(n))
    # one representative path index per (position, transition)
    reps: list[dict[tuple[int, int], int]] = [dict() for _ in range(n)]
    for idx, p in enumerate(paths):
        for k in range(n):
            reps[k].setdefault((p[k], p[k + 1]), idx)
    for k in range(n):
        trans = sorted(reps[k])
        for (v, v2), (w, w2) in itertools.combinations(trans, 2):
            # sorted order gives v <= w; strict crossing needs v < w, v2 > w2
            if v == w or v2 <= w2:
                continue
            if (v2 - w) not in steps or (w2 - v) not in steps:
                f = paths[reps[k][(v, v2)]]
                g = paths[reps[k][(w, w2)]]
                return False, (f, g)
    return True, None


def brute_force_closure(gamma: StepSet, n: int, method: str = "auto",
                        threads: int = 1):
    """Enumerate all length-n paths and test closure under pointwise min/max.

    Returns (True, None) or (False, (f, g)) with a certified violating
    pair.  `method` is 'pairs' (literal all-pairs sweep), 'crossings'
    (exact transition-indexed equivalent, for large path sets), or 'auto'.
    """
    paths = enumerate_paths(gamma, n)
    if len(paths) <= 1:
        return True, None
    if method == "auto":
        method = "pairs" if len(paths) <= _PAIRWISE_LIMIT else "crossings"
    if method == "pairs":
        ok, pair = _closure_by_pairs(gamma, paths, threads=threads)
    elif method == "crossings":
        ok, pair = _closure_by_crossings(gamma, paths)
    else:
        raise ValueError(f"unknown method {method!r}")
    if pair is not None:
        f, g = pair
        assert not (
            is_valid_profile(gamma, pointwise_min(f, g))
            and is_valid_profile(gamma, pointwise_max(f, g))
        ), "reported pair does not violate closure"
    return ok, pair
