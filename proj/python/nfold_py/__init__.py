"""Finite n-fold categories, subdivisions of simplices and their nerves.

Objects and reports are exchanged as the JSON documents the `nfold` CLI reads
and writes; the functions here return them already parsed.
"""

import json

from . import _core
from ._core import Error, PreconditionError, UnsupportedInput

__all__ = [
    "Error",
    "PreconditionError",
    "UnsupportedInput",
    "sd_delta",
    "boundary",
    "horn",
    "psd_delta",
    "sd_dot",
    "homology",
    "pushout_axiom",
    "decomposition",
    "multi_ez",
    "unit_counit",
    "grid",
    "run_grid",
]


def _dump(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def sd_delta(m, iterate=1):
    """Sd^iterate Δ[m] as a simplicial set document."""
    return json.loads(_core.sd_delta(m, iterate))


def boundary(m):
    return json.loads(_core.boundary(m))


def horn(m, k):
    return json.loads(_core.horn(m, k))


def psd_delta(m):
    """P Sd Δ[m] as a poset document."""
    return json.loads(_core.psd_delta(m))


def sd_dot(m, k=0):
    return _core.sd_dot(m, k)


def homology(doc):
    """Integral homology of a simplicial set, poset, category, multisimplicial
    set (through the diagonal) or n-fold category (diagonal of its nerve)."""
    return json.loads(_core.homology(_dump(doc)))


def pushout_axiom(n, m, k, fixture="terminal"):
    return json.loads(_core.pushout_axiom(n, m, k, fixture))


def decomposition(m, k):
    return json.loads(_core.decomposition(m, k))


def multi_ez(trials=1000, seed=0):
    return json.loads(_core.multi_ez(trials, seed))


def unit_counit(doc, n):
    return json.loads(_core.unit_counit(_dump(doc), n))


def grid(seed=0):
    """(criterion, id, n, m, k, fixture) for every entry of the default grid."""
    return _core.grid(seed)


def run_grid(criteria=(), seed=0, threads=0):
    return json.loads(_core.run_grid(list(criteria), seed, threads))
