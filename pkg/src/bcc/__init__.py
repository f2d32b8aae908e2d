"""Brauer configuration algebras and the dimension of their center."""

from .algebra import AlgebraTable, Element, build_table
from .center import (
    CenterReport,
    HypothesisError,
    center_basis_candidates,
    center_dim_bruteforce,
    center_dim_formula,
    center_dim_tree_corollary,
    verify_theorem,
)
from .configuration import BrauerConfig, parse_config, serialize, validate
from .exactla import QQ, FieldSpec
from .families import example
from .quiver import Quiver, build_quiver

__version__ = "0.1.0"

__all__ = [
    "AlgebraTable",
    "BrauerConfig",
    "CenterReport",
    "Element",
    "FieldSpec",
    "HypothesisError",
    "QQ",
    "Quiver",
    "build_quiver",
    "build_table",
    "center_basis_candidates",
    "center_dim_bruteforce",
    "center_dim_formula",
    "center_dim_tree_corollary",
    "example",
    "parse_config",
    "serialize",
    "validate",
    "verify_theorem",
]
