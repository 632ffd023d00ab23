"""Filter-based doubling of lattices and the recursive reconstruction of
Dyck lattices from one semilength down.

Doubling a lattice L along a filter F adjoins a raised copy of F: the
carrier is {(x, 0) : x in L} union {(x, 1) : x in F} with coordinatewise
order, a subdirect product of L with the two-element lattice.  Iterating
over the leading-rises filters of the semilength-(n-1) lattice rebuilds
the semilength-n lattice; every structural step is machine-verified.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import posets
from .posets import FinitePoset, LatticeTables, VerificationError
from .dyck import (
    DyckLattice,
    dyck_lattice,
    insert_peak_after,
    leading_rises,
    leading_rises_filter,
)
from .steps import Profile, word_or_text


class DoubledLattice:
    """Result of doubling a lattice along a filter.

    Elements are (base_index, bit) with bit = 1 only on the filter; labels
    carry the base label and the bit.  Meet and join are coordinatewise;
    the order is verified to agree with the coordinatewise tables and the
    carrier is verified to be a lattice.
    """

    def __init__(self, base_poset: FinitePoset, base_tables: LatticeTables,
                 filter_indices):
        fset = sorted(set(int(i) for i in filter_indices))
        if not posets.is_filter(base_poset, fset, base_tables):
            raise ValueError("subset is not a filter of the base lattice")
        m = base_poset.size
        self.base_poset = base_poset
        self.base_tables = base_tables
        self.filter_indices = fset
        self.elements: list[tuple[int, int]] = [(x, 0) for x in range(m)]
        self.elements += [(x, 1) for x in fset]
        n = len(self.elements)

        A = base_poset.leq
        F = np.asarray(fset, dtype=np.int64)
        leq = np.zeros((n, n), dtype=bool)
        leq[:m, :m] = A
        if fset:
            leq[:m, m:] = A[:, F]
            leq[m:, m:] = A[np.ix_(F, F)]
        labels = [(base_poset.label_of(x), b) for x, b in self.elements]
        self.poset = FinitePoset(leq, labels=labels, _validated=True)

        bidx = np.asarray([x for x, _ in self.elements], dtype=np.int64)
        bit = np.asarray([b for _, b in self.elements], dtype=np.int64)
        pos_in_f = np.full(m, -1, dtype=np.int64)
        for pos, x in enumerate(fset):
            pos_in_f[x] = pos
        meet_base = base_tables.meet[bidx[:, None], bidx[None, :]]
        join_base = base_tables.join[bidx[:, None], bidx[None, :]]
        bits_and = bit[:, None] & bit[None, :]
        bits_or = bit[:, None] | bit[None, :]
        if fset:
            assert (pos_in_f[meet_base[bits_and == 1]] >= 0).all(), \
                "filter not meet-closed"
            assert (pos_in_f[join_base[bits_or == 1]] >= 0).all(), \
                "filter not up-closed under join"
        self.meet = np.where(bits_and == 1, m + pos_in_f[meet_base], meet_base)
        self.join = np.where(bits_or == 1, m + pos_in_f[join_base], join_base)
        self.tables = LatticeTables(self.poset, self.meet, self.join)
        self._verify()

    def _verify(self):
        n = self.poset.size
        eye = np.arange(n)
        # order agrees with the coordinatewise meet: x <= y iff x ^ y = x
        if not ((self.meet == eye[:, None]) == self.poset.leq).all():
            raise VerificationError("coordinatewise meet disagrees with the order")
        if not ((self.join == eye[None, :]) == self.poset.leq).all():
            raise VerificationError("coordinatewise join disagrees with the order")
        ok, pair = posets.is_lattice(self.poset)
        if not ok:
            raise VerificationError(f"doubled carrier is not a lattice at pair {pair}")

    @property
    def size(self) -> int:
        return self.poset.size


def filtered_double(base_poset: FinitePoset, base_tables: LatticeTables,
                    filter_indices) -> DoubledLattice:
    """Double a lattice along a filter (checked); size grows by |filter|."""
    return DoubledLattice(base_poset, base_tables, filter_indices)


@dataclass
class DoublingStep:
    k: int
    filter_size: int
    result: DoubledLattice
    # element descriptors (base path, bit vector) aligned with result indices
    descriptors: list[tuple[Profile, tuple[int, ...]]]


def doubling_sequence(n: int) -> list[DoublingStep]:
    """The doubling tower over the semilength-(n-1) Dyck lattice.

    Step k doubles along the filter of paths with at least k leading
    rises, transported into the previous stage as its all-bits-one slice
    (the only order-embedding of the base that lands in an up-set);
    the transported set is re-verified to be a filter at every stage.
    """
    if not 2 <= n <= 8:
        raise ValueError("doubling tower supported for 2 <= n <= 8")
    base = dyck_lattice(n - 1)
    filter_sets = {
        k: {base.paths[i] for i in leading_rises_filter(base, k)}
        for k in range(1, n)
    }
    poset, tables = base.poset, base.tables
    descriptors: list[tuple[Profile, tuple[int, ...]]] = [
        (p, ()) for p in base.paths
    ]
    steps: list[DoublingStep] = []
    for k in range(1, n):
        transported = [
            i
            for i, (path, bits) in enumerate(descriptors)
            if path in filter_sets[k] and all(bits)
        ]
        if not posets.is_filter(poset, transported, tables):
            raise VerificationError(
                f"transported leading-rises filter k={k} is not a filter of stage {k - 1}"
            )
        doubled = DoubledLattice(poset, tables, transported)
        new_desc = [(path, bits + (0,)) for path, bits in descriptors]
        new_desc += [
            (descriptors[i][0], descriptors[i][1] + (1,)) for i in transported
        ]
        descriptors = new_desc
        steps.append(DoublingStep(k, len(transported), doubled, descriptors))
        poset, tables = doubled.poset, doubled.tables
    return steps


def verify_recursive_construction(n: int):
    """Rebuild the semilength-n lattice by doubling and exhibit the explicit
    isomorphism mapping (path, bits) to the path with a peak inserted after
    the leading ones.

    Returns (ok, mapping, steps): mapping[i] is the target profile of
    element i of the final stage; each doubling layer is checked to land
    on the block with the matching number of leading rises.
    """
    steps = doubling_sequence(n)
    final = steps[-1]
    target = dyck_lattice(n)

    mapping: list[Profile] = []
    for path, bits in final.descriptors:
        ones = sum(bits)
        if bits[:ones] != (1,) * ones or any(bits[ones:]):
            return False, None, steps
        mapping.append(insert_peak_after(path, ones))
    try:
        perm = np.asarray([target.index[p] for p in mapping], dtype=np.int64)
    except KeyError:
        return False, None, steps
    if sorted(perm.tolist()) != list(range(target.size)):
        return False, None, steps
    reordered = target.poset.leq[np.ix_(perm, perm)]
    if not (final.result.poset.leq == reordered).all():
        return False, None, steps
    # layer j (j leading ones) must land on the block with j+1 leading rises
    for (path, bits), image in zip(final.descriptors, mapping):
        if leading_rises(image) != sum(bits) + 1:
            return False, None, steps
    return True, mapping, steps


def describe_element(desc: tuple[Profile, tuple[int, ...]]) -> str:
    path, bits = desc
    return f"{word_or_text(path)}|{''.join(str(b) for b in bits)}"
