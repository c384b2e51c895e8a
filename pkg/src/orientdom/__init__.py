"""Total domination in orientations of graphs.

Exact gamma_t / gamma of a fixed orientation, extremal values over all
orientations (dom_t, DOM_t, DOM, the gamma_t spectrum), explicit
orientations for standard families, and a harness that checks stated
bounds against exhaustive corpora.
"""

from __future__ import annotations

__version__ = "0.1.0"

from .errors import *  # noqa: F401,F403
from .graph import Graph, Orientation, build_graph, cartesian_product, girth, is_valid, orient, orientation_from_arcs
from .graph6 import encode_graph6, parse_graph6
from .families import make_family, parse_family
from .solver import TDCertificate, gamma, gamma_t, is_dominating, is_total_dominating, private_neighbors
from .optimizer import DOM, DOM_t, ExtremumReport, Spectrum, dom_t, td_spectrum
from .constructions import ConstructionResult, PredictedQuantity, construct, predicted

__all__ = [
    "Graph", "Orientation", "build_graph", "cartesian_product", "girth", "is_valid", "orient",
    "orientation_from_arcs", "encode_graph6", "parse_graph6", "make_family", "parse_family",
    "TDCertificate", "gamma", "gamma_t", "is_dominating", "is_total_dominating", "private_neighbors",
    "DOM", "DOM_t", "ExtremumReport", "Spectrum", "dom_t", "td_spectrum",
    "ConstructionResult", "PredictedQuantity", "construct", "predicted",
]
