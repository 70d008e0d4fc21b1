"""Exact intersection numbers on spaces of stable maps to P^r."""

from .charnum import (
    CharNumQuery,
    boundary_point_oracle,
    characteristic_number,
    conic_tangency_count,
    cuspidal_count,
)
from .evaluate import IntersectionEvaluator, psi_degree
from .gw import GWKey, GromovWittenSolver, gw_invariant, nd
from .memo import MemoStore, cache_load, cache_save
from .moduli import SpaceId, dim_space, enumerate_boundary, picard_rank
from .tables import TableId, reproduce_table

__all__ = [
    "CharNumQuery",
    "GWKey",
    "GromovWittenSolver",
    "IntersectionEvaluator",
    "MemoStore",
    "SpaceId",
    "TableId",
    "boundary_point_oracle",
    "cache_load",
    "cache_save",
    "characteristic_number",
    "conic_tangency_count",
    "cuspidal_count",
    "dim_space",
    "enumerate_boundary",
    "gw_invariant",
    "nd",
    "picard_rank",
    "psi_degree",
    "reproduce_table",
]
