"""Equivariant Groebner bases for polynomial rings with indexed variables.

Computes Groebner bases of ideals invariant under the monoid of strictly
increasing index maps, with a direct orbit Buchberger engine, a truncated
incremental engine, and a signature-based engine, plus a classical
finite-variable Buchberger engine used as a subroutine and cross-check.
"""

from .buchberger import (
    EgbResult,
    EngineLimits,
    autoreduce,
    classical_buchberger,
    egb_buchberger,
    egb_incremental,
    is_egb,
    orbit_truncate,
)
from .incmaps import IncMap, increasing_maps, map_to_tau, standard_form, tau_to_map
from .poly import Polynomial, act, lc, lm, normal_form
from .problems import parse, serialize
from .rings import FamilySpec, Monomial, Ring, compare, pi_div_witnesses, pi_divides
from .signature import SignatureOptions, egb_signature, strong_buchberger
from .spairs import interlacings, spair_generators

__all__ = [
    "EgbResult",
    "EngineLimits",
    "FamilySpec",
    "IncMap",
    "Monomial",
    "Polynomial",
    "Ring",
    "SignatureOptions",
    "act",
    "autoreduce",
    "classical_buchberger",
    "compare",
    "egb_buchberger",
    "egb_incremental",
    "egb_signature",
    "increasing_maps",
    "interlacings",
    "is_egb",
    "lc",
    "lm",
    "map_to_tau",
    "normal_form",
    "orbit_truncate",
    "parse",
    "pi_div_witnesses",
    "pi_divides",
    "serialize",
    "spair_generators",
    "standard_form",
    "strong_buchberger",
    "tau_to_map",
]

__version__ = "0.1.0"
