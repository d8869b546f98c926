"""Line schemes of 6-dimensional subspaces of 4x4 matrices.

Given R ⊆ V⊗V with dim V = 4 and dim R = 6, build the ideal in Plücker P^5
of the 2-planes Q ⊆ V with (Q⊗V) ∩ R ≠ 0, and read off its projective
dimension and degree from a Groebner basis.
"""
__version__ = "0.1.0"

from .exactfield import ExactMatrix, FieldSpec, rank_of, rref, solve_particular
from .families import (
    SklyaninParams,
    elliptic_quadrics,
    planted_instance,
    random_R,
    skew,
    sklyanin,
    theta_twist,
    twisted_sklyanin,
)
from .grassmann import PluckerPoint, plucker_from_span, plucker_quadric, rewrite_to_plucker
from .groebner import GroebnerBasis, HilbertData, Ideal, buchberger, dim_degree, hilbert_numerator
from .linescheme import (
    LineSchemeReport,
    RelationSpace,
    compute_line_scheme,
    line_scheme_ideal,
    phi_map,
    point_scheme_ideal,
    psi_map,
    rank_loci_ideals,
    scheme_invariants,
    transpose_relations,
)
from .multipoly import MultiPoly, PolyRing, sym_det
from .oracle import brute_force_lines, cross_validate, enumerate_g24

__all__ = [
    "brute_force_lines",
    "buchberger",
    "compute_line_scheme",
    "cross_validate",
    "dim_degree",
    "elliptic_quadrics",
    "enumerate_g24",
    "ExactMatrix",
    "FieldSpec",
    "GroebnerBasis",
    "hilbert_numerator",
    "HilbertData",
    "Ideal",
    "line_scheme_ideal",
    "LineSchemeReport",
    "MultiPoly",
    "phi_map",
    "planted_instance",
    "plucker_from_span",
    "plucker_quadric",
    "PluckerPoint",
    "point_scheme_ideal",
    "PolyRing",
    "psi_map",
    "random_R",
    "rank_loci_ideals",
    "rank_of",
    "RelationSpace",
    "rewrite_to_plucker",
    "rref",
    "scheme_invariants",
    "skew",
    "sklyanin",
    "SklyaninParams",
    "solve_particular",
    "sym_det",
    "theta_twist",
    "transpose_relations",
    "twisted_sklyanin",
]
