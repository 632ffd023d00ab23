"""Dyck path lattices: rank by area, block structure, join-irreducibles,
and the fast Whitney-number dynamic program.

Paths of semilength n are profiles of length 2n over unit rises and
falls.  The pointwise order makes them a distributive lattice; covers
raise exactly one interior valley to a peak (+2 at one index).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import posets
from .posets import FinitePoset, LatticeTables, VerificationError, poset_from_profiles
from .steps import (
    Profile,
    area,
    enumerate_paths,
    is_valid_profile,
    make_step_set,
    pointwise_max,
    pointwise_min,
    profile_word,
)

DYCK_STEPS = make_step_set([-1, 1])

FULL_LATTICE_LIMIT = 9  # Catalan(9) = 4862 keeps dense matrices desk-scale
TABLE_LIMIT = 8


def catalan_numbers(count: int) -> list[int]:
    """First `count` Catalan numbers by the convolution recurrence."""
    cs = [1]
    for n in range(1, count):
        cs.append(sum(cs[i] * cs[n - 1 - i] for i in range(n)))
    return cs[:count]


def dyck_paths(n: int) -> list[Profile]:
    """All Dyck paths of semilength n, lexicographic by profile."""
    if n < 0:
        raise ValueError("semilength must be nonnegative")
    return enumerate_paths(DYCK_STEPS, 2 * n)


def is_dyck_path(f: Profile, n: int | None = None) -> bool:
    if n is not None and len(f) != 2 * n + 1:
        return False
    return len(f) % 2 == 1 and is_valid_profile(DYCK_STEPS, f)


def rank_by_area(f: Profile, n: int) -> int:
    """Rank in the semilength-n lattice: (area - n) / 2, zero at the bottom
    sawtooth since every cover adds 2 to the area."""
    if not is_dyck_path(f, n):
        raise ValueError(f"not a Dyck path of semilength {n}: {f}")
    return (area(f) - n) // 2


def is_dyck_cover(f: Profile, g: Profile) -> bool:
    """True iff g covers f: profiles equal except one index where g is
    exactly 2 higher (a valley flipped to a peak)."""
    if len(f) != len(g):
        raise ValueError("length mismatch")
    diff = [k for k in range(len(f)) if f[k] != g[k]]
    return len(diff) == 1 and g[diff[0]] == f[diff[0]] + 2


def bottom_path(n: int) -> Profile:
    """The sawtooth: 0 at even positions, 1 at odd."""
    return tuple(k % 2 for k in range(2 * n + 1))


def top_path(n: int) -> Profile:
    """The pyramid: rises to n then falls."""
    return tuple(min(k, 2 * n - k) for k in range(2 * n + 1))


class DyckLattice:
    """The lattice of all Dyck paths of semilength n.

    Meet and join are pointwise; tables are built lazily by profile
    min/max plus index lookup (closure is guaranteed for a two-step set).
    """

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("semilength must be at least 1")
        if n > FULL_LATTICE_LIMIT:
            raise ValueError(
                f"full lattice construction limited to n <= {FULL_LATTICE_LIMIT}; "
                "use whitney_dp for counting at larger n"
            )
        self.n = n
        self.paths = dyck_paths(n)
        self.index = {p: i for i, p in enumerate(self.paths)}
        self.poset = poset_from_profiles(self.paths)
        self._tables: LatticeTables | None = None

    @property
    def size(self) -> int:
        return len(self.paths)

    @property
    def bottom(self) -> Profile:
        return bottom_path(self.n)

    @property
    def top(self) -> Profile:
        return top_path(self.n)

    @property
    def tables(self) -> LatticeTables:
        if self._tables is None:
            if self.n > TABLE_LIMIT:
                raise ValueError(f"meet/join tables limited to n <= {TABLE_LIMIT}")
            self._tables = _pointwise_tables(self.poset, self.paths)
        return self._tables

    def __repr__(self):
        return f"DyckLattice(n={self.n}, size={self.size})"


def _pointwise_tables(poset: FinitePoset, profiles) -> LatticeTables:
    m = len(profiles)
    P = np.asarray(profiles, dtype=np.int16)
    rowbytes = P.shape[1] * 2
    lookup = {P[i].tobytes(): i for i in range(m)}
    meet = np.empty((m, m), dtype=np.int32)
    join = np.empty((m, m), dtype=np.int32)
    for x in range(m):
        mn = np.minimum(P[x], P).tobytes()
        mx = np.maximum(P[x], P).tobytes()
        meet[x] = [lookup[mn[i * rowbytes:(i + 1) * rowbytes]] for i in range(m)]
        join[x] = [lookup[mx[i * rowbytes:(i + 1) * rowbytes]] for i in range(m)]
    return LatticeTables(poset, meet, join)


def dyck_lattice(n: int) -> DyckLattice:
    return DyckLattice(n)


# --- block structure by leading rises ----------------------------------------


def leading_rises(f: Profile) -> int:
    """Number of initial rise steps."""
    k = 0
    while k + 1 < len(f) and f[k + 1] == f[k] + 1:
        k += 1
    return k


@dataclass(frozen=True)
class RiseBlock:
    """All paths of semilength n starting with exactly k rises."""

    n: int
    k: int
    paths: tuple[Profile, ...]


def blocks_by_leading_rises(lattice: DyckLattice, verify: bool = True) -> list[RiseBlock]:
    """Partition of the lattice into blocks of equal leading-rise count,
    k = 1..n.  Each block is checked to be closed under pointwise min/max.
    """
    n = lattice.n
    grouped: dict[int, list[Profile]] = {k: [] for k in range(1, n + 1)}
    for p in lattice.paths:
        grouped[leading_rises(p)].append(p)
    blocks = [RiseBlock(n, k, tuple(grouped[k])) for k in range(1, n + 1)]
    if verify:
        for block in blocks:
            members = set(block.paths)
            for i, f in enumerate(block.paths):
                for g in block.paths[i + 1:]:
                    if pointwise_min(f, g) not in members or pointwise_max(f, g) not in members:
                        raise VerificationError(
                            f"block k={block.k} not closed under pointwise ops"
                        )
    return blocks


def delete_first_peak(f: Profile) -> Profile:
    """Remove the peak ending the initial run of rises, giving a path one
    semilength shorter with one fewer leading rise."""
    k = leading_rises(f)
    if k < 1:
        raise ValueError(f"not a nonempty Dyck path: {f}")
    return f[:k] + f[k + 2:]


def insert_peak_after(f: Profile, j: int) -> Profile:
    """Insert a peak after j leading rises (inverse of delete_first_peak on
    paths with at least j leading rises)."""
    if not 0 <= j <= leading_rises(f):
        raise ValueError(f"path has fewer than {j} leading rises: {f}")
    return f[:j + 1] + (j + 1,) + f[j:]


def leading_rises_filter(lattice: DyckLattice, j: int) -> list[int]:
    """Indices of paths with at least j leading rises.

    This is the principal filter generated by the least path starting
    with a height-j hill; the identity is verified on construction.
    """
    if not 0 <= j <= lattice.n:
        raise ValueError(f"need 0 <= j <= {lattice.n}, got {j}")
    idx = [i for i, p in enumerate(lattice.paths) if leading_rises(p) >= j]
    if j >= 1:
        gen = _least_with_hill(lattice.n, j)
        principal = posets.principal_filter(lattice.poset, lattice.index[gen])
        if set(idx) != principal:
            raise VerificationError(
                f"leading-rises filter j={j} is not the expected principal filter"
            )
    return idx


def _least_with_hill(n: int, j: int) -> Profile:
    """Least path starting with a height-j hill: up j, down j, then sawtooth."""
    ramp = tuple(range(j + 1)) + tuple(range(j - 1, -1, -1))
    tail = tuple((k % 2) for k in range(1, 2 * (n - j) + 1))
    return ramp + tail


def block_reduction_map(lattice: DyckLattice, k: int, verify: bool = True) -> dict[Profile, Profile]:
    """The delete-first-peak bijection from the k-th block onto the filter
    of (k-1)-leading-rise paths one semilength down.

    For k = 1 the image is the whole smaller lattice.  Verified to be a
    bijection preserving pointwise min and max.
    """
    n = lattice.n
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= {n}")
    block = [p for p in lattice.paths if leading_rises(p) == k]
    mapping = {p: delete_first_peak(p) for p in block}
    if verify:
        images = set(mapping.values())
        if len(images) != len(block):
            raise VerificationError("delete_first_peak not injective on block")
        expected = {p for p in dyck_paths(n - 1) if leading_rises(p) >= k - 1}
        if images != expected:
            raise VerificationError(
                f"image of block k={k} is not the leading-rises filter"
            )
        for i, f in enumerate(block):
            for g in block[i + 1:]:
                mn, mx = pointwise_min(f, g), pointwise_max(f, g)
                if (
                    delete_first_peak(mn) != pointwise_min(mapping[f], mapping[g])
                    or delete_first_peak(mx) != pointwise_max(mapping[f], mapping[g])
                ):
                    raise VerificationError("block reduction does not preserve meet/join")
    return mapping


def demote_first_peak(f: Profile, k: int | None = None) -> Profile:
    """Lower the peak after the leading rises by 2, moving a path with k+1
    leading rises into the k-rise block.

    The result is covered by the input (one index drops by 2, area drops
    by 2, rank drops by 1); its leading run has k rises.
    """
    rises = leading_rises(f)
    if k is None:
        k = rises - 1
    if k != rises - 1:
        raise ValueError(f"path has {rises} leading rises, cannot demote at k={k}")
    if k < 1:
        raise ValueError("path must have at least 2 leading rises")
    if f[k + 2] != k:
        raise ValueError(f"malformed block member: {f}")
    return f[:k + 1] + (k - 1,) + f[k + 2:]


# --- join-irreducibles --------------------------------------------------------


def join_irreducible_paths(n: int) -> list[Profile]:
    """Paths with exactly one hill higher than 1: a single elevated peak
    among floor-level peaks, i.e. (UD)^i U^h D^h (UD)^j with h >= 2."""
    if n < 2:
        return []
    out = []

    def saw(m):
        return tuple(k % 2 for k in range(2 * m + 1))

    for h in range(2, n + 1):
        for i in range(0, n - h + 1):
            j = n - h - i
            hump = tuple(range(1, h + 1)) + tuple(range(h - 1, -1, -1))
            out.append(saw(i) + hump + saw(j)[1:])
    return sorted(out)


def join_irreducible_poset(n: int) -> FinitePoset:
    """Induced subposet of the join-irreducible paths under pointwise order."""
    return poset_from_profiles(join_irreducible_paths(n))


def interval_poset_of_chain(m: int) -> FinitePoset:
    """Nonempty intervals [i, j] of the chain 1..m, ordered by inclusion."""
    if m < 0:
        raise ValueError("chain length must be nonnegative")
    intervals = [(i, j) for i in range(1, m + 1) for j in range(i, m + 1)]
    return posets.build_poset(
        intervals, lambda a, b: b[0] <= a[0] and a[1] <= b[1]
    )


# --- Whitney numbers by dynamic programming ------------------------------------


def whitney_dp(n: int) -> list[int]:
    """Counts of semilength-n Dyck paths by rank, without materializing the
    lattice.

    Walks positions left to right keeping, per height, the exact count of
    prefixes by accumulated area.  Ranks are (area - n) / 2; counts are
    exact Python integers.
    """
    if n < 1:
        raise ValueError("semilength must be at least 1")
    cur: dict[int, list[int]] = {0: [1]}  # height -> counts indexed by area so far
    for k in range(1, 2 * n + 1):
        maxh = min(k, 2 * n - k)
        nxt: dict[int, list[int]] = {}
        for h, counts in cur.items():
            for h2 in (h - 1, h + 1):
                if not 0 <= h2 <= maxh:
                    continue
                tgt = nxt.setdefault(h2, [])
                need = len(counts) + h2
                if len(tgt) < need:
                    tgt.extend([0] * (need - len(tgt)))
                for a, c in enumerate(counts):
                    if c:
                        tgt[a + h2] += c
        cur = nxt
    by_area = cur[0]
    ranks = [by_area[a] for a in range(n, len(by_area), 2)]
    while ranks and ranks[-1] == 0:
        ranks.pop()
    return ranks
