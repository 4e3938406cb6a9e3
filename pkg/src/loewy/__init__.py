"""Loewy lengths of tensor products of dihedral 2-group modules in
characteristic 2, computed by closed formulas and cross-checked against a
brute-force matrix oracle."""

from .binlucas import (back_diag_witness, binom_parity, hash_op, nu, perp,
                       q_count, q_parity, tau)
from .formulas import (BandSpec, LoewyReport, ModuleSpec, StringSpec,
                       UniserialA, UniserialB, loewy_band_band,
                       loewy_band_uniserial, loewy_general, loewy_uniserial,
                       projective_summand)
from .gf2e import GF2, GF4, FieldDesc, FieldMatrix, gf
from .modrep import (Representation, band_rep, check_dihedral, loewy_length,
                     radical_series, regular_rep, socle_dim, string_rep,
                     tensor_rep, top_dim)
from .verify import band_spec, oracle_loewy, run_verify
from .words import (BandShape, DirectedComponent, Word, a_word, b_word,
                    band_canonical, directed_components, eq_string,
                    in_w_prime, inverse, parse)

__version__ = "1.0.0"
