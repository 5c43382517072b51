"""Jack polynomials at beta = -(r-1)/(k+1) and the ideals they span."""

import json

from . import _core
from ._core import DegreeOverflow, InvalidParameters, beta_kr, character, is_admissible, wheel_dimension

__all__ = [
    "DegreeOverflow",
    "InvalidParameters",
    "admissible",
    "beta_kr",
    "character",
    "is_admissible",
    "jack",
    "membership",
    "principal_specialization",
    "verify",
    "wheel_dimension",
]


def admissible(k, r, n, dmax):
    return json.loads(_core.admissible_json(k, r, n, dmax))


def jack(lam, n, k=None, r=None):
    """Symbolic P_lambda over Q(beta), or its specialization when k and r are given."""
    if k is None and r is None:
        return json.loads(_core.jack_symbolic_json(list(lam), n))
    return json.loads(_core.jack_specialized_json(list(lam), n, k, r))


def principal_specialization(lam, n):
    return _core.principal_specialization(list(lam), n)


def membership(poly, k, r, dmax):
    """poly is a dict in the msym JSON layout."""
    return json.loads(_core.membership_json(json.dumps(poly), k, r, dmax))


def verify(suite, **params):
    runners = {
        "phi3": lambda: _core.verify_phi3_json(params["r"]),
        "wheel": lambda: _core.verify_wheel_json(params["k"], params["n"], params["dmax"]),
        "commutators": lambda: _core.verify_commutators_json(
            params.get("n", 3), params.get("degree", 5), params.get("trials", 25), params.get("seed", 20240601)
        ),
    }
    if suite not in runners:
        raise ValueError(f"unknown suite {suite!r}; expected one of {sorted(runners)}")
    return json.loads(runners[suite]())
