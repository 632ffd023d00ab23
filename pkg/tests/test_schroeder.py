"""Schroeder paths: enumeration, profile order, pointwise closure."""

import itertools

import pytest

from pathlattice import (
    VerificationError,
    enumerate_schroeder,
    is_distributive,
    is_lattice,
    lattice_tables,
    level_counts,
    parse_schroeder_word,
    schroeder_lattice,
    schroeder_meet_join,
    schroeder_rule,
    whitney_numbers,
)
from pathlattice.schroeder import (
    SchroederPath,
    is_schroeder_profile,
    profile_of_word,
    word_of_profile,
)

SCHROEDER = [1, 2, 6, 22, 90, 394, 1806, 8558]


class TestEnumeration:
    @pytest.mark.parametrize("n", range(0, 6))
    def test_counts(self, n):
        assert len(enumerate_schroeder(n)) == SCHROEDER[n]

    def test_n1_words(self):
        assert sorted(p.word for p in enumerate_schroeder(1)) == ["H", "RF"]

    def test_sorted_by_profile(self):
        profs = [p.profile for p in enumerate_schroeder(3)]
        assert profs == sorted(profs)

    def test_profiles_valid(self):
        for p in enumerate_schroeder(4):
            assert is_schroeder_profile(p.profile)
            assert p.semilength == 4

    def test_counts_match_rule_levels(self):
        for n in range(0, 8):
            assert len(enumerate_schroeder(n)) == level_counts(schroeder_rule(), n + 1)[-1]


class TestWords:
    def test_profile_of_word(self):
        assert profile_of_word("RHF") == (0, 1, 1, 1, 0)
        assert profile_of_word("H") == (0, 0, 0)

    def test_word_roundtrip(self):
        for p in enumerate_schroeder(3):
            assert word_of_profile(p.profile) == p.word

    def test_unpairable_profile_rejected(self):
        with pytest.raises(VerificationError):
            word_of_profile((0, 1, 1, 0, 0))  # lone flat segment at height 1

    def test_parse_checks_width(self):
        assert parse_schroeder_word("rf", 1).word == "RF"
        with pytest.raises(ValueError):
            parse_schroeder_word("RF", 2)

    def test_bad_letters(self):
        with pytest.raises(ValueError):
            SchroederPath("RXF")

    def test_negative_excursion_rejected(self):
        with pytest.raises(ValueError):
            SchroederPath("FR")


class TestMeetJoin:
    def test_join_example(self):
        h, rf = parse_schroeder_word("H"), parse_schroeder_word("RF")
        assert schroeder_meet_join(h, rf, "max").word == "RF"

    def test_meet_example(self):
        h, rf = parse_schroeder_word("H"), parse_schroeder_word("RF")
        assert schroeder_meet_join(h, rf, "min").word == "H"

    def test_idempotent(self):
        f = parse_schroeder_word("RHFH")
        assert schroeder_meet_join(f, f, "min").word == f.word

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            schroeder_meet_join(parse_schroeder_word("H"), parse_schroeder_word("HH"), "min")

    @pytest.mark.parametrize("n", range(0, 6))
    def test_pointwise_closure_exhaustive(self, n):
        paths = enumerate_schroeder(n)
        for f, g in itertools.combinations(paths, 2):
            mn = tuple(min(a, b) for a, b in zip(f.profile, g.profile))
            mx = tuple(max(a, b) for a, b in zip(f.profile, g.profile))
            assert is_schroeder_profile(mn), (f.word, g.word)
            assert is_schroeder_profile(mx), (f.word, g.word)


class TestLattice:
    def test_s3_matches_figure(self):
        poset, tables = schroeder_lattice(3)
        assert poset.size == 22
        assert len(poset.covers) == 34
        ok, _ = is_lattice(poset)
        assert ok

    def test_s1_two_chain(self):
        poset, tables = schroeder_lattice(1)
        assert poset.size == 2 and poset.covers == [(0, 1)]

    def test_s4_size(self):
        poset, _ = schroeder_lattice(4)
        assert poset.size == 90

    def test_tables_match_pointwise_ops(self):
        poset, tables = schroeder_lattice(2)
        paths = enumerate_schroeder(2)
        for i, f in enumerate(paths):
            for j, g in enumerate(paths):
                mn = schroeder_meet_join(f, g, "min")
                assert paths[tables.meet[i, j]].word == mn.word

    def test_tables_match_generic_engine(self):
        for n in (2, 3):
            poset, tables = schroeder_lattice(n)
            generic = lattice_tables(poset)
            assert (generic.meet == tables.meet).all()
            assert (generic.join == tables.join).all()

    @pytest.mark.parametrize("n", range(1, 6))
    def test_distributive_observation(self, n):
        # measured, not asserted by theory: closure under pointwise ops
        # embeds the lattice in a product of chains
        _, tables = schroeder_lattice(n)
        assert is_distributive(tables)[0]

    def test_ranked_with_unit_whitney_sum(self):
        poset, _ = schroeder_lattice(3)
        wh = whitney_numbers(poset)
        assert wh is not None and sum(wh) == 22

    def test_size_guard(self):
        with pytest.raises(ValueError):
            schroeder_lattice(7)
