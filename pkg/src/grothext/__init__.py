"""Grothendieck groups of finitely presented extriangulated categories."""
from .model import (CategoryPresentation, Conflation, ValidationReport, cancel_split_summands,
                    direct_sum, opposite, relation_vector, split_conflation, validate)
from .lattice import IntLattice, AbelianGroup, hnf, snf, quotient, enumerate_subgroups
from .k0 import (K0Context, build_context, psi, check_ar_generation, decompose_into_ar,
                 l_vector, check_relative_generation, check_flag_consistency, check_corollary)
from .fileformat import load, loads, dump, dumps

__version__ = "0.1.0"
