"""Exact Pfaffian, Groebner and unprojection computations over the rationals."""

from .dsl import DslError, Workspace, parse, serialize
from .groebner import (
    GroebnerBasis,
    Ideal,
    MonomialOrder,
    buchberger,
    eliminate,
    ideals_equal,
    is_member,
    normal_form,
    saturate,
)
from .pfaffian import SkewMatrix, maximal_pfaffians, pfaffian
from .ring import Polynomial, Ring, VarMap

__version__ = "0.1.0"

__all__ = [
    "DslError", "GroebnerBasis", "Ideal", "MonomialOrder", "Polynomial", "Ring", "SkewMatrix", "VarMap",
    "Workspace", "buchberger", "eliminate", "ideals_equal", "is_member", "maximal_pfaffians", "normal_form",
    "parse", "pfaffian", "saturate", "serialize",
]
