"""Partially Steenrod-annihilated subalgebras of the free algebra F_2<g_1, g_2, ...>."""

from .algebra import (
    Element,
    bidegree_components,
    format_element,
    multiply,
    parse_element,
    resolve_relation,
    transduce,
    weight,
    weight_component,
)
from .annihilated import delta_basis, enumerate_basis, full_annihilated_basis, image_sq1_basis
from .delta0 import c_table, closed_c, enumerate_sigma, eta, sigma, verify_S0
from .freeness import certify_free, decomposables, hilbert_inversion, minimal_generators
from .gf2 import Matrix, SubspaceBasis, kernel, member, rref, span_dimension, stack
from .steenrod import sq, sq_generator, sq_matrix

__version__ = "0.1.0"
