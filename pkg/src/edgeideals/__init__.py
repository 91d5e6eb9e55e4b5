"""Homological and enumerative invariants of edge ideals of finite simple graphs."""
from .graphs import Graph, make_graph, family, join, disjoint_union, self_join, complement
from .ideals import MonomialIdeal, edge_ideal, symbolic_power, power
from .linalg import QQ, GF2, Field
from .betti import (BettiTable, HilbertSeries, betti_hochster, betti_koszul, graded_betti,
                    hilbert, invariant_report, regularity, pd_depth)

__version__ = "0.1.0"
