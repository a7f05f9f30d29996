"""Prefix/suffix duplication, square completion and square-structure tools
for words over integer alphabets."""
from .core_index import build_index, lcp_query, lz_factorize, occurrences
from .distances import (bpsd_distance, distance_tables, dup_distance_tables, max_repetitions,
                        pscd_table, pssc_distance, pssc_distance_table, sscd_table)
from .gapped_tables import (l_array, lpal_lrep, lpf_bounded, lpf_func, lprf_bounded, lprf_func,
                            maximal_long_armed)
from .languages import (Dfa, closure_automaton, is_finite, language_distance, minimal_generator,
                        one_step_image)
from .membership_ancestors import (bpsd_ancestors, common_ancestor, psd_ancestor_table,
                                   psd_membership, psdk_membership, pssc_ancestor_profile,
                                   pssc_membership, sd_pd_flags)
from .ops_kernel import OpKind, closure_upto, oracle_distance, oracle_member, verify_derivation
from .sequences import generate, psd_thue_morse_bounds, verify_omega
from .square_tables import compute_runs, square_tables
from .squarefree import (count_pssf, enumerate_pssf, factor_into_runs, factor_into_squares,
                         longest_pssf, max_square_factorization)
from .words import BudgetError, as_array, as_tuple

__version__ = "0.1.0"
