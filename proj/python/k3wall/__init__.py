"""Python access to the k3wall C++ core.

Exact values come back as dicts with an "exact" string and a "decimal" string,
the same schema the command-line tool emits with --format json.
"""

import json
from fractions import Fraction

from . import _core

__all__ = ["certify", "min_genus", "diagram", "polygon", "compute_s", "mukai_pairing", "rational"]


def certify(r, k, g):
    return json.loads(_core.certify(r, k, g))


def min_genus(r, k, g_max=200, horizon=50, jobs=1):
    return json.loads(_core.min_genus(r, k, g_max, horizon, jobs))


def diagram(r, k, g, digits=6, samples=200):
    return json.loads(_core.diagram(r, k, g, digits, samples))


def polygon(r, k, g, digits=6):
    return json.loads(_core.polygon(r, k, g, digits))


def rational(value):
    """Fraction from a serialized rational ({"num", "den", ...})."""
    return Fraction(int(value["num"]), int(value["den"]))


compute_s = _core.compute_s
mukai_pairing = _core.mukai_pairing
