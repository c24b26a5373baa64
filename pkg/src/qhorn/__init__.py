"""Multiplicative Horn inequalities via quantum Schubert calculus.

Exact rational arithmetic throughout.  Entry points::

    from qhorn import parse_group, generate, Mode, to_hrep, vertices, facets
    ineqs = generate(parse_group("G2"), Mode.TH3)
"""

from .horn import Inequality, Kind, Mode, check_pw_lift, generate, membership, to_hrep
from .parabolic import maximal_parabolic, parabolic
from .polytope import HRep, VRep, facets, vertices
from .quantum import gw_gb, gw_gp, quantum_product
from .rootsys import build_root_system, parse_group
from .schubert import triple_number

__version__ = "0.1.0"

__all__ = [
    "HRep",
    "Inequality",
    "Kind",
    "Mode",
    "VRep",
    "build_root_system",
    "check_pw_lift",
    "facets",
    "generate",
    "gw_gb",
    "gw_gp",
    "maximal_parabolic",
    "membership",
    "parabolic",
    "parse_group",
    "quantum_product",
    "to_hrep",
    "triple_number",
    "vertices",
]
