"""Minimum-SWAP routing of quantum circuits on restricted couplings.

The pipeline: parse/decompose a circuit into two-qubit gates, build the
coupling graph and its automorphisms, quotient the layered search graph by
the combined qubit/location symmetry, solve the reduced model (shortest
path or LP), and reconstruct plus verify a concrete SWAP schedule.
"""

from .baseline import (LayeredGraphX, jt_distance, reynolds_check, solve_spp)
from .circuit import (Circuit, FixingPattern, RawGate, TwoQubitGate, decompose,
                      fixing_pattern, gate_graph, parse_real)
from .coupling import (AutGroup, CouplingGraph, TranspositionSet,
                       canonical_right, coupling_from_descriptor, make,
                       transposition_set)
from .dp import DpTable, solve_star_dp, star_solution
from .errors import (CapError, NncpError, ParseError, SolverError,
                     VerificationError)
from .generate import random_class_i, random_class_ii, to_real
from .lp import (GnfpModel, LinearProgram, LpSolution, ReducedPath,
                 build_gnfp, build_rspp_scaled, gnfp_lp, simplex_solve,
                 solve_reduced, write_lp)
from .perm import (Permutation, Transposition, all_permutations, compose,
                   conjugate_transposition, cycle_str, identity, inverse,
                   one_line_str)
from .reconstruct import NncpSolution, reconstruct, verify
from .symmetry import (BTau, OrbitNode, OrbitalArc, QuotientGraph, b_tau,
                       canonical_form, layer_orbitals, layer_orbits,
                       quotient_graph, reduction_stats)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
