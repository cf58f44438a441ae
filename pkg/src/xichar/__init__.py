"""Exact character-theoretic analysis of Xi(g) = |G| o(g) for small finite groups."""

from .artin import ArtinDecomposition, artin_decompose, induce_trivial
from .catalog import build_group, default_catalog, parse_specifier
from .chartable import CharacterTable, ClassFunction, character_table, inner_product
from .cyclotomic import Cyclotomic, mobius, root_of_unity, trace_over_q
from .permgroup import FiniteGroup, Permutation, close_group, psi
from .xi import (
    linear_moebius_multiplicity,
    minimal_m,
    sylow_witness,
    theorem_b_multiplicity,
    xi_class_function,
    xi_multiplicities,
)

__version__ = "0.1.0"

__all__ = [
    "ArtinDecomposition",
    "CharacterTable",
    "ClassFunction",
    "Cyclotomic",
    "FiniteGroup",
    "Permutation",
    "artin_decompose",
    "build_group",
    "character_table",
    "close_group",
    "default_catalog",
    "induce_trivial",
    "inner_product",
    "linear_moebius_multiplicity",
    "minimal_m",
    "mobius",
    "parse_specifier",
    "psi",
    "root_of_unity",
    "sylow_witness",
    "theorem_b_multiplicity",
    "trace_over_q",
    "xi_class_function",
    "xi_multiplicities",
]
