"""Exact crystal combinatorics and soliton cellular automata for type D4(3).

The package implements the coordinate crystals B_l and the vertex-2
crystal, the column-insertion construction of the combinatorial R matrix
with its energy function, an axiom-level graph oracle that re-derives
the same isomorphism from first principles, the reference automaton over
symmetric type-A crystals, and carrier-based time evolutions with
soliton detection and scattering analysis.
"""

from .core import (IsoInconsistency, TensorCrystal, classical_highest,
                   component, count_lowers, count_raises, graph_iso_r, to_dot,
                   weight)
from .insertion import (B1_SET, B10, B11, B112, B12, B121, classify, eta,
                        eta_inv, insert, render_bumps, render_tableau,
                        reverse_bump, star, xi, xi_inv)
from .rmatrix import (NATURAL_TABLE, UnsupportedState, comb_r, comb_r_affine,
                      comb_r_natural, energy, energy_natural, oracle, r_image,
                      verify_hwe_table, verify_natural_table,
                      verify_oracle_vs_insertion, verify_yang_baxter,
                      verify_yang_baxter_natural)
from .type_a import AnCrystal, an_r, an_r_affine, verify_yang_baxter_an
from .type_d43 import (BNatural, D43Crystal, LETTERS, PHI, coord_to_word,
                       is_word, letter_e, letter_f, s_value, word_to_coord)
from .automaton import (DetectResult, EvolutionRecord, ScatterReport, Soliton,
                        an_detect_solitons, an_evolve, an_make_state,
                        compose_scattering, detect_solitons, energies, evolve,
                        evolve_natural, make_state, parse_path, render_path,
                        scatter_experiment, trace_from_json, trace_json)

__version__ = "0.1.0"
