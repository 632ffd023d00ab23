"""Filtered doubling and the reconstruction of Dyck lattices."""

import numpy as np
import pytest

from pathlattice import (
    are_isomorphic,
    build_poset,
    catalan_numbers,
    dyck_lattice,
    filtered_double,
    is_distributive,
    lattice_tables,
    leading_rises,
    verify_recursive_construction,
)
from pathlattice.doubling import doubling_sequence
from pathlattice.dyck import blocks_by_leading_rises


def chain_lattice(m):
    p = build_poset(list(range(m)), lambda a, b: a <= b)
    return p, lattice_tables(p)


class TestFilteredDouble:
    def test_single_element_full_filter(self):
        p, t = chain_lattice(1)
        d = filtered_double(p, t, [0])
        assert d.size == 2
        ok, _ = are_isomorphic(d.poset, chain_lattice(2)[0])
        assert ok

    def test_two_chain_top_filter_gives_three_chain(self):
        p, t = chain_lattice(2)
        d = filtered_double(p, t, [1])
        assert d.size == 3
        assert are_isomorphic(d.poset, chain_lattice(3)[0])[0]

    def test_two_chain_full_filter_gives_grid(self):
        p, t = chain_lattice(2)
        d = filtered_double(p, t, [0, 1])
        assert d.size == 4
        grid = build_poset(
            [(0, 0), (0, 1), (1, 0), (1, 1)],
            lambda a, b: a[0] <= b[0] and a[1] <= b[1],
        )
        assert are_isomorphic(d.poset, grid)[0]

    def test_empty_filter(self):
        p, t = chain_lattice(3)
        d = filtered_double(p, t, [])
        assert d.size == 3

    def test_size_law(self):
        L = dyck_lattice(3)
        for j in range(0, 4):
            f = [i for i, p in enumerate(L.paths) if leading_rises(p) >= j]
            d = filtered_double(L.poset, L.tables, f)
            assert d.size == L.size + len(f)

    def test_non_filter_rejected(self):
        p, t = chain_lattice(3)
        with pytest.raises(ValueError):
            filtered_double(p, t, [0])  # down-set, not up-set

    def test_projections_are_homomorphisms(self):
        L = dyck_lattice(3)
        f = [i for i, p in enumerate(L.paths) if leading_rises(p) >= 2]
        d = filtered_double(L.poset, L.tables, f)
        base = [x for x, _ in d.elements]
        bits = [b for _, b in d.elements]
        assert set(base) == set(range(L.size))  # first projection surjective
        assert set(bits) == {0, 1}  # second projection surjective (F nonempty)
        for i in range(d.size):
            for j in range(d.size):
                mi = d.meet[i, j]
                assert base[mi] == L.tables.meet[base[i], base[j]]
                assert bits[mi] == (bits[i] & bits[j])
                ji = d.join[i, j]
                assert base[ji] == L.tables.join[base[i], base[j]]
                assert bits[ji] == (bits[i] | bits[j])

    def test_tables_match_generic_engine(self):
        L = dyck_lattice(3)
        for j in (1, 2, 3):
            f = [i for i, p in enumerate(L.paths) if leading_rises(p) >= j]
            d = filtered_double(L.poset, L.tables, f)
            generic = lattice_tables(d.poset)
            assert (generic.meet == d.meet).all()
            assert (generic.join == d.join).all()

    def test_doubling_preserves_distributivity(self):
        for n in (3, 4):
            L = dyck_lattice(n)
            for j in range(0, n + 1):
                f = [i for i, p in enumerate(L.paths) if leading_rises(p) >= j]
                d = filtered_double(L.poset, L.tables, f)
                assert is_distributive(d.tables)[0]

    def test_every_filter_of_small_lattices_doubles(self):
        # doubling needs no distributivity; try every filter of a
        # non-distributive lattice too
        import itertools

        from pathlattice import enumerate_paths, is_filter, make_step_set, poset_from_profiles

        pentagon = poset_from_profiles(
            enumerate_paths(make_step_set([-1, 0, 2]), 4)
        )
        fixtures = [chain_lattice(4), (pentagon, lattice_tables(pentagon))]
        for poset, tables in fixtures:
            n = poset.size
            for bits in itertools.product((0, 1), repeat=n):
                subset = [i for i in range(n) if bits[i]]
                if not is_filter(poset, subset, tables):
                    continue
                d = filtered_double(poset, tables, subset)
                assert d.size == n + len(subset)
                generic = lattice_tables(d.poset)
                assert (generic.meet == d.meet).all()
                assert (generic.join == d.join).all()


class TestDoublingSequence:
    def test_sizes_n3(self):
        steps = doubling_sequence(3)
        assert [s.result.size for s in steps] == [4, 5]
        assert [s.filter_size for s in steps] == [2, 1]

    def test_sizes_n2(self):
        steps = doubling_sequence(2)
        assert [s.result.size for s in steps] == [2]

    @pytest.mark.parametrize("n", range(2, 8))
    def test_final_size_is_catalan(self, n):
        steps = doubling_sequence(n)
        assert steps[-1].result.size == catalan_numbers(n + 1)[n]

    @pytest.mark.parametrize("n", range(2, 7))
    def test_size_bookkeeping(self, n):
        steps = doubling_sequence(n)
        size = dyck_lattice(n - 1).size
        for s in steps:
            size += s.filter_size
            assert s.result.size == size

    def test_layer_sizes_match_blocks(self, n=6):
        # the k-th doubling layer is as large as the (k+1)-rises block above
        steps = doubling_sequence(n)
        blocks = blocks_by_leading_rises(dyck_lattice(n))
        for s in steps:
            assert s.filter_size == len(blocks[s.k].paths)

    def test_bounds(self):
        with pytest.raises(ValueError):
            doubling_sequence(1)
        with pytest.raises(ValueError):
            doubling_sequence(9)

    def test_supported_maximum(self):
        # the largest supported tower still verifies as a lattice chain
        steps = doubling_sequence(8)
        assert [s.result.size for s in steps] == [858, 1155, 1320, 1395, 1422, 1429, 1430]
        assert steps[-1].result.size == catalan_numbers(9)[8]


class TestMainReconstruction:
    @pytest.mark.parametrize("n", range(2, 8))
    def test_verified(self, n):
        ok, mapping, steps = verify_recursive_construction(n)
        assert ok
        assert len(mapping) == dyck_lattice(n).size

    def test_explicit_mapping_is_order_iso(self):
        n = 5
        ok, mapping, steps = verify_recursive_construction(n)
        assert ok
        target = dyck_lattice(n)
        perm = np.array([target.index[p] for p in mapping])
        src = steps[-1].result.poset.leq
        assert (src == target.poset.leq[np.ix_(perm, perm)]).all()

    def test_layers_land_on_blocks(self):
        n = 5
        ok, mapping, steps = verify_recursive_construction(n)
        for (path, bits), image in zip(steps[-1].descriptors, mapping):
            assert leading_rises(image) == sum(bits) + 1

    def test_generic_isomorphism_search_agrees(self):
        for n in (3, 4, 5):
            _, _, steps = verify_recursive_construction(n)
            ok, _ = are_isomorphic(steps[-1].result.poset, dyck_lattice(n).poset)
            assert ok
