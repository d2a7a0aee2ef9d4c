"""Exact computations with vertex algebroids over small cyclic Leibniz algebras."""

from .algebra import FiniteAlgebra, local_profile, new_algebra, profile_matches, radical, residue
from .algebroid import (
    VertexAlgebroid,
    check_axioms,
    derive_dim3_constraints,
    lie_algebroid_quotient,
    one_dim_modules,
)
from .families import FAMILIES, construct
from .heisenberg import build_m1, heisenberg_check, partition_count
from .leibniz import LeibnizAlgebra, check_left_leibniz, classify_cyclic, new_leibniz
from .modules import induced_module
from .scalars import GaussianRational, Q, parse_scalar
from .vertex import GradedVA, build_vb

__all__ = [
    "FAMILIES",
    "FiniteAlgebra",
    "GaussianRational",
    "GradedVA",
    "LeibnizAlgebra",
    "Q",
    "VertexAlgebroid",
    "build_m1",
    "build_vb",
    "check_axioms",
    "check_left_leibniz",
    "classify_cyclic",
    "construct",
    "derive_dim3_constraints",
    "heisenberg_check",
    "induced_module",
    "lie_algebroid_quotient",
    "local_profile",
    "new_algebra",
    "new_leibniz",
    "one_dim_modules",
    "parse_scalar",
    "partition_count",
    "profile_matches",
    "radical",
    "residue",
]
