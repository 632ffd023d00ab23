"""Finite posets and lattices on dense boolean order matrices.

Everything is index-based: a poset is a validated n x n relation plus an
optional label per element.  Meet/join tables, distributivity/modularity,
rank and Whitney numbers, join-irreducibles, filters/ideals, isomorphism
search, and DOT/JSON emission all live here.

Sizes are desk scale: full matrices are restricted to a few thousand
elements; the O(n^3) law checks switch to a Birkhoff down-set count above
500 elements.
"""

from __future__ import annotations

import json
from typing import Callable, Iterable, Optional, Sequence

import numpy as np

MATRIX_LIMIT = 5000
TRIPLE_LOOP_LIMIT = 500


class VerificationError(AssertionError):
    """A machine-checked structural claim failed (not a usage error)."""


def _bool_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    # float32 matmul hits BLAS; exact for these sizes (counts < 2**24)
    return (a.astype(np.float32) @ b.astype(np.float32)) > 0.5


class FinitePoset:
    """Immutable finite poset over indices 0..size-1.

    `leq[i, j]` means element i is below-or-equal element j.  The relation
    is validated on construction; `covers` is the transitive reduction as
    a sorted list of (lower, upper) pairs.
    """

    def __init__(self, leq: np.ndarray, labels: Optional[Sequence] = None,
                 _validated: bool = False):
        leq = np.asarray(leq, dtype=bool)
        n = leq.shape[0]
        if leq.shape != (n, n):
            raise ValueError(f"order matrix must be square, got {leq.shape}")
        if n > MATRIX_LIMIT:
            raise ValueError(f"poset too large for dense storage: {n} > {MATRIX_LIMIT}")
        if labels is not None and len(labels) != n:
            raise ValueError("labels length does not match size")
        self.size = n
        self.leq = leq
        self.leq.flags.writeable = False
        self.labels = list(labels) if labels is not None else None
        if not _validated:
            self._validate()
        self._covers: Optional[np.ndarray] = None
        self._downmasks: Optional[list[int]] = None
        self._topo: Optional[np.ndarray] = None

    def _validate(self):
        leq = self.leq
        n = self.size
        if not leq[np.diag_indices(n)].all():
            i = int(np.nonzero(~leq[np.diag_indices(n)])[0][0])
            raise ValueError(f"relation not reflexive at element {i}")
        sym = leq & leq.T
        sym[np.diag_indices(n)] = False
        if sym.any():
            i, j = map(int, np.argwhere(sym)[0])
            raise ValueError(f"antisymmetry violated by pair ({i}, {j})")
        closure = _bool_matmul(leq, leq)
        missing = closure & ~leq
        if missing.any():
            i, k = map(int, np.argwhere(missing)[0])
            j = int(np.nonzero(leq[i] & leq[:, k])[0][0])
            raise ValueError(f"transitivity violated by triple ({i}, {j}, {k})")

    # -- derived structure ----------------------------------------------------

    @property
    def cover_matrix(self) -> np.ndarray:
        """cover_matrix[i, j] iff j covers i (transitive reduction)."""
        if self._covers is None:
            lt = self.leq.copy()
            lt[np.diag_indices(self.size)] = False
            self._covers = lt & ~_bool_matmul(lt, lt)
            self._covers.flags.writeable = False
        return self._covers

    @property
    def covers(self) -> list[tuple[int, int]]:
        lo, hi = np.nonzero(self.cover_matrix)
        return sorted(zip(lo.tolist(), hi.tolist()))

    def topo_order(self) -> np.ndarray:
        """A linear extension: indices sorted by down-set size (stable)."""
        if self._topo is None:
            self._topo = np.argsort(self.leq.sum(axis=0), kind="stable")
        return self._topo

    def _down_bitmasks(self) -> list[int]:
        """Per element, the bitmask of its down-set in topo positions."""
        if self._downmasks is None:
            topo = self.topo_order()
            pos = np.empty(self.size, dtype=np.int64)
            pos[topo] = np.arange(self.size)
            masks = []
            for x in range(self.size):
                below = np.nonzero(self.leq[:, x])[0]
                m = 0
                for b in pos[below]:
                    m |= 1 << int(b)
                masks.append(m)
            self._downmasks = masks
        return self._downmasks

    def minima(self) -> list[int]:
        return np.nonzero(self.leq.sum(axis=0) == 1)[0].tolist()

    def maxima(self) -> list[int]:
        return np.nonzero(self.leq.sum(axis=1) == 1)[0].tolist()

    def label_of(self, i: int):
        return self.labels[i] if self.labels is not None else i

    def dual(self) -> "FinitePoset":
        return FinitePoset(self.leq.T.copy(), self.labels, _validated=True)

    def induced(self, subset: Sequence[int]) -> "FinitePoset":
        idx = list(subset)
        sub = self.leq[np.ix_(idx, idx)].copy()
        labels = [self.label_of(i) for i in idx] if self.labels is not None else None
        return FinitePoset(sub, labels, _validated=True)

    def __repr__(self):
        return f"FinitePoset(size={self.size}, covers={len(self.covers)})"


def build_poset(elements: Sequence, leq_predicate: Callable) -> FinitePoset:
    """Poset from labeled elements and a comparison predicate.

    The predicate is evaluated on every ordered pair and the resulting
    relation is validated; axiom violations raise with the offending
    pair or triple.
    """
    n = len(elements)
    if n > MATRIX_LIMIT:
        raise ValueError(f"too many elements: {n} > {MATRIX_LIMIT}")
    leq = np.zeros((n, n), dtype=bool)
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            leq[i, j] = bool(leq_predicate(a, b))
    return FinitePoset(leq, labels=list(elements))


def poset_from_profiles(profiles: Sequence[tuple[int, ...]],
                        labels: Optional[Sequence] = None) -> FinitePoset:
    """Poset of equal-length integer tuples under the pointwise order
    (vectorized; profiles double as labels unless given)."""
    P = np.asarray(profiles, dtype=np.int16)
    n = len(profiles)
    leq = np.ones((n, n), dtype=bool)
    for col in range(P.shape[1]):
        leq &= P[:, col][:, None] <= P[:, col][None, :]
    return FinitePoset(leq, labels=labels if labels is not None else list(profiles),
                       _validated=True)


# --- lattice structure --------------------------------------------------------


class LatticeTables:
    """Meet and join tables of a finite lattice, with bottom and top."""

    def __init__(self, poset: FinitePoset, meet: np.ndarray, join: np.ndarray):
        self.poset = poset
        self.meet = meet
        self.join = join
        b, t = 0, 0
        for i in range(1, poset.size):
            b = int(meet[b, i])
            t = int(join[t, i])
        self.bottom = b
        self.top = t

    @property
    def size(self) -> int:
        return self.poset.size


def is_lattice(p: FinitePoset):
    """(True, None) when every pair has a lub and a glb, else (False, pair).

    Uses down-set bitmasks over a linear extension: the common lower
    bounds of a pair have a maximum iff they equal the down-set of their
    topologically last member.
    """
    n = p.size
    if n == 0:
        return True, None
    downs = p._down_bitmasks()
    topo = p.topo_order()
    for i in range(n):
        di = downs[i]
        for j in range(i + 1, n):
            common = di & downs[j]
            if common == 0:
                return False, (i, j)
            # topologically last common lower bound must dominate all of them
            z = int(topo[common.bit_length() - 1])
            if downs[z] != common:
                return False, (i, j)
    dual = p.dual()
    ups = dual._down_bitmasks()
    dual_topo = dual.topo_order()
    for i in range(n):
        ui = ups[i]
        for j in range(i + 1, n):
            common = ui & ups[j]
            if common == 0:
                return False, (i, j)
            z = int(dual_topo[common.bit_length() - 1])
            if ups[z] != common:
                return False, (i, j)
    return True, None


def lattice_tables(p: FinitePoset) -> LatticeTables:
    """Meet/join tables; raises VerificationError when p is not a lattice.

    Vectorized per element: for fixed x the candidate glb with every y is
    the topologically largest common lower bound, verified by comparing
    principal down-sets with the intersection column-wise.
    """
    n = p.size
    if n == 0:
        raise ValueError("empty poset has no lattice structure")
    leq = p.leq
    topo = p.topo_order()
    weight = np.empty(n, dtype=np.int64)
    weight[topo] = np.arange(1, n + 1)  # positive, respects linear extension

    meet = np.empty((n, n), dtype=np.int32)
    join = np.empty((n, n), dtype=np.int32)
    down = leq  # down[:, x] is the down-set indicator of x
    up = leq.T
    for x in range(n):
        commons = down[:, x][:, None] & down  # column y: lowers(x) & lowers(y)
        if not commons.any(axis=0).all():
            y = int(np.nonzero(~commons.any(axis=0))[0][0])
            raise VerificationError(f"pair ({x}, {y}) has no lower bound")
        cand = np.argmax(weight[:, None] * commons, axis=0)
        ok = (down[:, cand] == commons).all(axis=0)
        if not ok.all():
            y = int(np.nonzero(~ok)[0][0])
            raise VerificationError(f"pair ({x}, {y}) has no greatest lower bound")
        meet[x] = cand
        commons = up[:, x][:, None] & up
        if not commons.any(axis=0).all():
            y = int(np.nonzero(~commons.any(axis=0))[0][0])
            raise VerificationError(f"pair ({x}, {y}) has no upper bound")
        cand = np.argmax((n + 1 - weight)[:, None] * commons, axis=0)
        ok = (up[:, cand] == commons).all(axis=0)
        if not ok.all():
            y = int(np.nonzero(~ok)[0][0])
            raise VerificationError(f"pair ({x}, {y}) has no least upper bound")
        join[x] = cand
    return LatticeTables(p, meet, join)


def is_distributive(t: LatticeTables):
    """(True, None) or (False, witness triple) for the distributive law.

    Above TRIPLE_LOOP_LIMIT elements the direct check is replaced by the
    Birkhoff criterion (down-set count of the join-irreducible subposet
    equals the lattice size); no witness is produced on that route.
    """
    n = t.size
    meet, join = t.meet, t.join
    if n > TRIPLE_LOOP_LIMIT:
        ji = join_irreducibles(t)
        sub = t.poset.induced(sorted(ji))
        return (count_downsets(sub) == n), None
    for x in range(n):
        mx = meet[x]
        lhs = mx[join]  # x ^ (y v z)
        rhs = join[np.ix_(mx, mx)]  # (x^y) v (x^z)
        if not (lhs == rhs).all():
            y, z = map(int, np.argwhere(lhs != rhs)[0])
            return False, (x, y, z)
    return True, None


def is_modular(t: LatticeTables):
    """(True, None) or (False, witness triple (x, y, z) with x <= z)."""
    n = t.size
    meet, join = t.meet, t.join
    leq = t.poset.leq
    for x in range(n):
        zs = np.nonzero(leq[x])[0]
        if zs.size == 0:
            continue
        # x v (y ^ z) vs (x v y) ^ z for all y and z >= x
        for z in zs.tolist():
            lhs = join[x, meet[:, z]]
            rhs = meet[join[x], z]
            if not (lhs == rhs).all():
                y = int(np.nonzero(lhs != rhs)[0][0])
                return False, (x, y, int(z))
    return True, None


def rank_vector(p: FinitePoset) -> Optional[list[int]]:
    """Rank function (bottom at 0, +1 along covers) or None when unranked."""
    mins = p.minima()
    if len(mins) != 1:
        raise ValueError(f"poset has {len(mins)} minimal elements, need exactly one")
    bottom = mins[0]
    cov = p.cover_matrix
    order = p.topo_order()
    rank = np.full(p.size, -1, dtype=np.int64)
    rank[bottom] = 0
    for x in order:
        if rank[x] < 0:
            lowers = np.nonzero(cov[:, x])[0]
            rank[x] = rank[lowers].max() + 1 if lowers.size else 0
    lo, hi = np.nonzero(cov)
    if (rank[hi] != rank[lo] + 1).any():
        return None
    return rank.tolist()


def whitney_numbers(p: FinitePoset) -> Optional[list[int]]:
    """Sizes of the rank classes, or None when the poset is unranked."""
    ranks = rank_vector(p)
    if ranks is None:
        return None
    out = [0] * (max(ranks) + 1)
    for r in ranks:
        out[r] += 1
    return out


def is_unimodal(seq: Sequence[int]) -> bool:
    """True iff the sequence weakly increases then weakly decreases."""
    vals = list(seq)
    i = 0
    while i + 1 < len(vals) and vals[i] <= vals[i + 1]:
        i += 1
    while i + 1 < len(vals) and vals[i] >= vals[i + 1]:
        i += 1
    return i + 1 >= len(vals)


def join_irreducibles(t: LatticeTables) -> list[int]:
    """Elements with exactly one lower cover (bottom excluded)."""
    cov = t.poset.cover_matrix
    counts = cov.sum(axis=0)
    return [int(x) for x in np.nonzero(counts == 1)[0]]


def count_downsets(p: FinitePoset) -> int:
    """Number of down-sets, by splitting on a maximal element x: down-sets
    avoiding x live in P - {x}, down-sets containing x contain all of
    down(x), so D(P) = D(P - {x}) + D(P - down(x))."""
    leq = p.leq

    def rec(alive: frozenset[int], memo: dict) -> int:
        if not alive:
            return 1
        key = alive
        if key in memo:
            return memo[key]
        x = next(
            a for a in alive if not any(b != a and leq[a, b] for b in alive)
        )
        without_x = alive - {x}
        without_down = frozenset(a for a in alive if not leq[a, x])
        res = rec(without_x, memo) + rec(without_down, memo)
        memo[key] = res
        return res

    return rec(frozenset(range(p.size)), {})


# --- filters and ideals -------------------------------------------------------


def is_filter(p: FinitePoset, subset: Iterable[int],
              tables: Optional[LatticeTables] = None) -> bool:
    """Meet-closed up-set test.  Tables are computed on demand when absent."""
    s = set(int(i) for i in subset)
    if not s:
        return True
    if any(i < 0 or i >= p.size for i in s):
        raise ValueError("subset contains invalid element indices")
    idx = sorted(s)
    up_ok = all(
        j in s
        for i in idx
        for j in np.nonzero(p.leq[i])[0].tolist()
    )
    if not up_ok:
        return False
    t = tables if tables is not None else lattice_tables(p)
    return all(int(t.meet[i, j]) in s for i in idx for j in idx)


def is_ideal(p: FinitePoset, subset: Iterable[int],
             tables: Optional[LatticeTables] = None) -> bool:
    """Join-closed down-set test."""
    s = set(int(i) for i in subset)
    if not s:
        return True
    if any(i < 0 or i >= p.size for i in s):
        raise ValueError("subset contains invalid element indices")
    idx = sorted(s)
    down_ok = all(
        j in s
        for i in idx
        for j in np.nonzero(p.leq[:, i])[0].tolist()
    )
    if not down_ok:
        return False
    t = tables if tables is not None else lattice_tables(p)
    return all(int(t.join[i, j]) in s for i in idx for j in idx)


def principal_filter(p: FinitePoset, x: int) -> set[int]:
    """All elements above-or-equal x."""
    if x < 0 or x >= p.size:
        raise ValueError(f"element index {x} out of range")
    return set(np.nonzero(p.leq[x])[0].tolist())


def principal_ideal(p: FinitePoset, x: int) -> set[int]:
    if x < 0 or x >= p.size:
        raise ValueError(f"element index {x} out of range")
    return set(np.nonzero(p.leq[:, x])[0].tolist())


# --- isomorphism ----------------------------------------------------------------


def _initial_colors(p: FinitePoset) -> list[tuple]:
    cov = p.cover_matrix
    try:
        ranks = rank_vector(p) if len(p.minima()) == 1 else None
    except ValueError:
        ranks = None
    return [
        (
            ranks[x] if ranks is not None else -1,
            int(cov[:, x].sum()),
            int(cov[x].sum()),
        )
        for x in range(p.size)
    ]


def _joint_refine(p: FinitePoset, q: FinitePoset) -> tuple[list[int], list[int]]:
    """Cover-degree/rank color refinement run jointly on both posets so the
    integer color ids are comparable across them."""
    covs = (p.cover_matrix, q.cover_matrix)
    colors = (_initial_colors(p), _initial_colors(q))
    n_classes = len(set(colors[0]) | set(colors[1]))
    for _ in range(p.size + 1):
        new = []
        for side in (0, 1):
            cov = covs[side]
            cur = colors[side]
            step = []
            for x in range(len(cur)):
                lows = tuple(sorted(cur[j] for j in np.nonzero(cov[:, x])[0]))
                ups = tuple(sorted(cur[j] for j in np.nonzero(cov[x])[0]))
                step.append((cur[x], lows, ups))
            new.append(step)
        idmap = {c: i for i, c in enumerate(sorted(set(new[0]) | set(new[1])))}
        colors = ([idmap[c] for c in new[0]], [idmap[c] for c in new[1]])
        if len(idmap) == n_classes:
            break
        n_classes = len(idmap)
    return colors


def are_isomorphic(p: FinitePoset, q: FinitePoset):
    """(True, mapping) with mapping[i] the q-index of p-element i, or
    (False, None).  Backtracking over color classes from cover-degree and
    rank refinement; for lattices an order isomorphism is automatically
    meet- and join-preserving.
    """
    if p.size != q.size:
        return False, None
    n = p.size
    if n == 0:
        return True, []
    pc, qc = _joint_refine(p, q)
    if sorted(pc) != sorted(qc):
        return False, None
    by_color: dict = {}
    for j, c in enumerate(qc):
        by_color.setdefault(c, []).append(j)
    # order p-elements: rarest colors first, then by topo order for locality
    topo_pos = np.empty(n, dtype=np.int64)
    topo_pos[p.topo_order()] = np.arange(n)
    order = sorted(range(n), key=lambda x: (len(by_color[pc[x]]), topo_pos[x]))
    pcov = p.cover_matrix
    qcov = q.cover_matrix
    mapping = [-1] * n
    used = [False] * q.size

    def extend(k: int) -> bool:
        if k == n:
            return True
        x = order[k]
        for y in by_color[pc[x]]:
            if used[y]:
                continue
            ok = True
            for x2 in order[:k]:
                y2 = mapping[x2]
                if pcov[x, x2] != qcov[y, y2] or pcov[x2, x] != qcov[y2, y]:
                    ok = False
                    break
            if ok:
                mapping[x] = y
                used[y] = True
                if extend(k + 1):
                    return True
                mapping[x] = -1
                used[y] = False
        return False

    if extend(0):
        # cover-preservation both ways implies order-isomorphism; verify
        perm = np.asarray(mapping)
        if not (p.leq == q.leq[np.ix_(perm, perm)]).all():
            raise VerificationError("cover-consistent mapping is not an order isomorphism")
        return True, mapping
    return False, None


# --- emission -------------------------------------------------------------------


def poset_to_json(p: FinitePoset) -> str:
    """Stable JSON dump: {"size", "labels", "covers"}."""
    payload = {
        "size": p.size,
        "labels": [str(p.label_of(i)) for i in range(p.size)],
        "covers": [[lo, hi] for lo, hi in p.covers],
    }
    return json.dumps(payload, indent=None, separators=(",", ":"), sort_keys=False)


def poset_from_json(text: str) -> FinitePoset:
    data = json.loads(text)
    n = data["size"]
    leq = np.eye(n, dtype=bool)
    for lo, hi in data["covers"]:
        leq[lo, hi] = True
    # transitive closure by repeated squaring
    while True:
        closed = leq | _bool_matmul(leq, leq)
        if (closed == leq).all():
            break
        leq = closed
    return FinitePoset(leq, labels=data.get("labels"))


def poset_to_dot(p: FinitePoset, name: str = "hasse") -> str:
    """DOT digraph: one node per element, one edge per cover, rank layers."""
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=box];"]
    for i in range(p.size):
        lines.append(f'  {i} [label="{p.label_of(i)}"];')
    try:
        ranks = rank_vector(p) if len(p.minima()) == 1 else None
    except ValueError:
        ranks = None
    if ranks is not None:
        by_rank: dict[int, list[int]] = {}
        for i, r in enumerate(ranks):
            by_rank.setdefault(r, []).append(i)
        for r in sorted(by_rank):
            members = "; ".join(str(i) for i in by_rank[r])
            lines.append(f"  {{ rank=same; {members}; }}")
    for lo, hi in p.covers:
        lines.append(f"  {lo} -> {hi};")
    lines.append("}")
    return "\n".join(lines) + "\n"
