"""Order theory of lattice paths.

Enumeration of step-set paths, the algebraic criterion for closure under
pointwise min/max, generic finite-lattice machinery, Dyck and Schroeder
lattices, ECO chain partitions, and the filtered-doubling reconstruction.
"""

from .steps import (
    StepSet,
    make_step_set,
    enumerate_paths,
    is_valid_profile,
    leq,
    area,
    pointwise_min,
    pointwise_max,
    pointwise_profile_op,
    profile_text,
    profile_word,
    parse_profile,
)
from .criterion import (
    DifferenceWindow,
    LatticeVerdict,
    difference_sum_window,
    is_coordinatewise_lattice,
    brute_force_closure,
)
from .posets import (
    FinitePoset,
    LatticeTables,
    VerificationError,
    build_poset,
    poset_from_profiles,
    is_lattice,
    lattice_tables,
    is_distributive,
    is_modular,
    rank_vector,
    whitney_numbers,
    is_unimodal,
    join_irreducibles,
    count_downsets,
    is_filter,
    is_ideal,
    principal_filter,
    principal_ideal,
    are_isomorphic,
    poset_to_dot,
    poset_to_json,
    poset_from_json,
)
from .dyck import (
    DyckLattice,
    dyck_lattice,
    dyck_paths,
    catalan_numbers,
    rank_by_area,
    is_dyck_cover,
    leading_rises,
    blocks_by_leading_rises,
    leading_rises_filter,
    block_reduction_map,
    delete_first_peak,
    insert_peak_after,
    demote_first_peak,
    join_irreducible_paths,
    join_irreducible_poset,
    interval_poset_of_chain,
    whitney_dp,
)
from .eco import (
    SuccessionRule,
    catalan_rule,
    schroeder_rule,
    level_counts,
    expand_levels,
    dyck_sons,
    dyck_father,
    eco_partition,
    motzkin_sons,
    motzkin_father,
    motzkin_chain_report,
)
from .doubling import (
    DoubledLattice,
    filtered_double,
    doubling_sequence,
    verify_recursive_construction,
)
from .schroeder import (
    SchroederPath,
    enumerate_schroeder,
    schroeder_meet_join,
    schroeder_lattice,
    parse_schroeder_word,
)

__version__ = "0.1.0"
