# Copyright (c) 2026 The eqsing Authors
# SPDX-License-Identifier: Apache-2.0

"""Exact invariants and equisingular stratum germs of quasihomogeneous
hypersurface singularities.

Thin wrapper over the compiled module: scalar operations pass through,
structured results arrive as dicts decoded from the JSON records the
command-line driver also emits.
"""

import json as _json

try:
    from . import _eqsing as _core
except ImportError:  # build-tree layout: module sits on sys.path directly
    import _eqsing as _core

__all__ = [
    "h1",
    "milnor",
    "tjurina",
    "expected_dimension",
    "castelnuovo",
    "polytope",
    "nf",
    "classify",
    "system",
    "stabilize",
    "witness",
    "presets",
    "DomainError",
    "PolynomialParseError",
]

DomainError = _core.DomainError
PolynomialParseError = _core.PolynomialParseError

h1 = _core.h1
milnor = _core.milnor
tjurina = _core.tjurina
expected_dimension = _core.expected_dimension
nf = _core.nf


def castelnuovo(alpha, degree=None):
    """Castelnuovo function profile of the pure-power singularity."""
    return _json.loads(_core.castelnuovo_json(alpha, degree))


def polytope(poly, nvars):
    """Newton polytope vertices and quasihomogeneous weights, if any."""
    return _json.loads(_core.polytope_json(poly, nvars))


def classify(alpha, degree=None, cap=None):
    """Equisingular stratum classification with certificates."""
    return _json.loads(_core.classify_json(alpha, degree, cap))


def system(alpha, degree=None, cap=None, include_rows=True):
    """Derived stratum equation system."""
    return _json.loads(_core.system_json(alpha, degree, cap, include_rows))


def stabilize(alpha, squares, degree=None, suspension_degree=None,
              unisingular=False, cap=None):
    """Suspension invariants and per-block quadratic ranks."""
    return _json.loads(
        _core.stabilize_json(alpha, squares, degree, suspension_degree,
                             unisingular, cap))


def witness(alpha, squares, degree=None, height_budget=8, cap=None):
    """Reduced-component witness certificate for a suspended base."""
    return _json.loads(
        _core.witness_json(alpha, squares, degree, height_budget, cap))


def presets():
    """The named example inputs shipped with the toolkit."""
    return _json.loads(_core.presets_json())
