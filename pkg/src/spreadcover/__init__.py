"""Spreading numbers alpha_n(d) and covering numbers rho_n(d) of monomial graphs."""

from .bounds import alpha4_exact, bound_report, ggr_bounds, hw_upper, small_n_exact, v
from .cover import CliqueCover, UpwardClique, greedy_cover, is_minimal, prune, verify_cover
from .exact import SearchLimits, max_independent_set, min_upward_clique_cover
from .monomials import Monomial, build_graph, enumerate_monomials
from .orbits import OrbitClass, Permutation, classify_orbit, partitions

__version__ = "0.1.0"
