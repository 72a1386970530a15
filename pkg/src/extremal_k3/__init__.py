"""Exact-arithmetic classification of extremal elliptic K3 surface data
triples (Sigma, MW, T) and the companion curve-configuration checks."""

from .binforms import BinaryEvenForm, enumerate_even_forms, reduce_gl2, reduce_sl2
from .discform import DiscriminantForm, discriminant_form, enumerate_isotropic
from .exact import IntegralLattice, count_roots, overlattice_gram, smith_normal_form
from .pipeline import DataTriple, classify_all, classify_one
from .roottypes import RootType, check_N2, enumerate_list_L, enumerate_N_lists

__version__ = "1.0.0"

__all__ = [
    "BinaryEvenForm", "enumerate_even_forms", "reduce_gl2", "reduce_sl2",
    "DiscriminantForm", "discriminant_form", "enumerate_isotropic",
    "IntegralLattice", "count_roots", "overlattice_gram", "smith_normal_form",
    "DataTriple", "classify_all", "classify_one",
    "RootType", "check_N2", "enumerate_list_L", "enumerate_N_lists",
    "__version__",
]
