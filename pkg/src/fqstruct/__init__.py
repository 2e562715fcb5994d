"""Orbit structure of odd-order finite fields, Dickson and Chebyshev
factorizations, and Wilson-like product identities, with an exhaustive verifier."""

from . import dickson, errors, orbits, wilson
from .dickson import Poly, chebyshev, dickson_first, dickson_second
from .field import Field, field_for_q, make_field, odd_prime_powers
from .kernel import BACKEND
from .orbits import Orbit, enumerate_orbits, orbit_from_tau, orbit_of, quadrant_signs, tau_of
from .wilson import ProductReport

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Field",
    "Orbit",
    "Poly",
    "ProductReport",
    "chebyshev",
    "dickson",
    "dickson_first",
    "dickson_second",
    "enumerate_orbits",
    "errors",
    "field_for_q",
    "make_field",
    "odd_prime_powers",
    "orbit_from_tau",
    "orbit_of",
    "orbits",
    "quadrant_signs",
    "tau_of",
    "wilson",
]
