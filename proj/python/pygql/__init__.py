"""Python bindings for gql.

Results are plain dicts and lists with the same layout as the CLI's JSON
output.
"""

import json

from . import _gql
from ._gql import (
    GqlError,
    InvariantError,
    ParseError,
    PreconditionError,
    contains,
    genus_from_cover,
    ramification_degree,
    sym_power_kind,
)

__all__ = [
    "GqlError",
    "InvariantError",
    "ParseError",
    "PreconditionError",
    "census",
    "certify_irreducible",
    "classify",
    "contains",
    "genus_from_cover",
    "group_info",
    "quartic_eliminant",
    "quartic_flexes",
    "ramification_degree",
    "sym_power_kind",
]


def _text(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def classify(group, genus, degree=None):
    return json.loads(_gql.classify(group, genus, degree))


def group_info(group, degree=None):
    return json.loads(_gql.group_info(group, degree))


def census(fixtures):
    """Census records for a fixtures document (dict or JSON text)."""
    return json.loads(_gql.census(_text(fixtures)))


def quartic_flexes(curve, prime=None, ext=None, seed=0, residuals=False):
    return json.loads(_gql.quartic_flexes(_text(curve), prime, ext, seed, residuals))


def quartic_eliminant(curve, seed=0):
    return json.loads(_gql.quartic_eliminant(_text(curve), seed))


def certify_irreducible(coeffs, bound=300):
    """Coefficients ascending, as ints or decimal strings."""
    return json.loads(_gql.certify_irreducible([str(c) for c in coeffs], bound))
