"""Exact W-graphs from W-graph ideals in finite Coxeter groups."""

from .coxeter import CoxeterSystem, build_system, cached_system
from .laurent import LaurentPoly
from .ideals import Ideal, EdgeClass, ideal_from_generators, full_ideal, coset_ideal
from .hecke import canonical_basis_oracle
from .wgraph import (QTable, WGraph, NotWGraphIdeal, kl_recursion, build_wgraph,
                     wgraph_of_ideal, regular_wgraph, module_matrices, verify_wgraph,
                     verify_ideal)
from .cells import cells, extract_subideal, is_closed, up_set_ideals
from .parabolic import parabolic_wgraph, run_checks
from .typea import Tableau, specht_wgraph, specht_basis_action, rs

__version__ = "0.1.0"

__all__ = [
    "CoxeterSystem", "build_system", "cached_system", "LaurentPoly", "Ideal", "EdgeClass",
    "ideal_from_generators", "full_ideal", "coset_ideal", "canonical_basis_oracle",
    "QTable", "WGraph", "NotWGraphIdeal", "kl_recursion", "build_wgraph", "wgraph_of_ideal",
    "regular_wgraph", "module_matrices", "verify_wgraph", "verify_ideal", "cells",
    "extract_subideal", "is_closed", "up_set_ideals", "parabolic_wgraph", "run_checks",
    "Tableau", "specht_wgraph", "specht_basis_action", "rs",
]
