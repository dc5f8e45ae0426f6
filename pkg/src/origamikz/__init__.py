"""Exact arithmetic toolkit for origamis (square-tiled surfaces): SL(2,Z)
orbits, Veech groups, cylinder decompositions, the Kontsevich-Zorich cocycle
on the zero part of homology, and the positivity and simplicity tests used to
certify counterexamples to the converse of the positivity criterion."""

__version__ = "0.1.0"

from .origami import Origami, commutator, one_turn, stratum, genus, \
    canonical_form, automorphisms, block_systems
from .orbit import sl2_orbit, veech_data, membership, parse_word, \
    word_string, word_to_matrix, decompose, cusps, CapExceeded
from .cylinders import horizontal_cylinders, core_classes, isotropic_rank, \
    cusp_analysis, forni_hypothesis
from .homology import ChainComplex, zero_part_basis, homology_split, \
    kz_matrix, char_poly, intersection_matrix
from .criterion import AffineWord, OrbitKZ, mmy_check, recheck_certificate, \
    search_hyperbolic_pair, counterexample_report, is_direct_hyperbolic
from .numtheory import reciprocal_analysis
from .lyapunov import estimate_exponents, convergence_diagnostics
from .enumeration import SearchSpec, enumerate_origamis, group_orbits, \
    filter_candidates, run_search
