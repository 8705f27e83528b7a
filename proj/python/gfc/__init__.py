"""Generalized Fermat curves: cone-point symmetries, automorphism lifts, and
real fields of moduli.

Thin wrapper over the C++ core; the *_json entry points are re-exposed here
as functions returning plain dicts/lists.
"""

import json as _json

from ._gfc import (
    GfcError,
    format_complex,
    genus,
    orbit_type_solutions,
    parse_complex,
    solve_lift_constants,
)
from ._gfc import classify_json as _classify_json
from ._gfc import symmetries_json as _symmetries_json
from ._gfc import verify_suite_json as _verify_suite_json


def symmetries(points, orientation="both", epsilon=1e-9):
    """Extended Mobius maps preserving the point set, as a list of dicts."""
    return _json.loads(_symmetries_json(points, orientation, epsilon))


def classify(k, lambdas, epsilon=1e-9, lift_cap=1000000, order_cap=0):
    """Field-of-moduli report for the curve of type (k, n) with these lambdas."""
    return _json.loads(_classify_json(k, lambdas, epsilon, lift_cap, order_cap))


def verify_suite(suite, k=3, epsilon=1e-9):
    """Run a committed theorem suite; returns one dict per case."""
    return _json.loads(_verify_suite_json(suite, k, epsilon))


__all__ = [
    "GfcError",
    "classify",
    "format_complex",
    "genus",
    "orbit_type_solutions",
    "parse_complex",
    "solve_lift_constants",
    "symmetries",
    "verify_suite",
]
