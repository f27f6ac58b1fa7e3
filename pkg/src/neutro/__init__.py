"""Finite neutrosophic algebra: scalars a + bI, magmas with I adjoined, rings,
polynomials, matrices and formal-sum algebras over them."""

from .scalars import QQ, ZZ, BaseRing, NeutroScalar, Zmod, classify_zero_divisor, parse_scalar
from .magma import (
    FiniteMagma, build_standard, cyclic, dihedral, direct_product, full_neutro_magma, generated_transformations,
    multiplicative_mod, neutrosophify_ambient, neutrosophify_tagged, symmetric, transformation_semigroup,
)
from .groups import analyze_group, classify_subset, cosets
from .rings import ZnNeutroRing, TabularRing, analyze_ring, ideals, quotient, zn_neutro
from .poly import UNKNOWN, NeutroPoly, parse_poly
from .matrix import NeutroMatrix, parse_matrix
from .algebra import Algebra, FormalSum, Neutro, Plain, ScalarRing

__version__ = "0.1.0"

__all__ = [
    "QQ", "ZZ", "BaseRing", "NeutroScalar", "Zmod", "classify_zero_divisor", "parse_scalar",
    "FiniteMagma", "build_standard", "cyclic", "dihedral", "direct_product", "full_neutro_magma",
    "generated_transformations", "multiplicative_mod", "neutrosophify_ambient", "neutrosophify_tagged",
    "symmetric", "transformation_semigroup", "analyze_group", "classify_subset", "cosets",
    "ZnNeutroRing", "TabularRing", "analyze_ring", "ideals", "quotient", "zn_neutro",
    "UNKNOWN", "NeutroPoly", "parse_poly", "NeutroMatrix", "parse_matrix",
    "Algebra", "FormalSum", "Neutro", "Plain", "ScalarRing",
]
