"""Block combinatorics of Ariki-Koike algebras.

Multipartitions are passed as lists of lists of ints, e.g. ``[[2, 1], []]``,
or as text such as ``"((2,1),-)"``. A multicharge is given by ``e`` and a
list of integers, one per component.
"""

import json

from ._core import (
    HypothesisError,
    InputError,
    VerificationError,
    abacus,
    base_tuples,
    beta_window,
    hub,
    is_kleshchev,
    k_value,
    lowest_levels,
    mahonian,
    phi,
    residue_counts,
    residues,
    run_cli,
    same_block,
    weight,
)
from . import _core

__all__ = [
    "HypothesisError",
    "InputError",
    "VerificationError",
    "abacus",
    "base_tuples",
    "beta_window",
    "branching_polynomial",
    "certify",
    "hub",
    "is_kleshchev",
    "k_value",
    "lowest_levels",
    "mahonian",
    "phi",
    "residue_counts",
    "residues",
    "run_cli",
    "same_block",
    "scopes_condition",
    "weight",
]


def scopes_condition(lam, e, charge, i):
    """Report on w(B) <= w(C) + K_i r for the block of ``lam``."""
    return json.loads(_core._scopes_condition(lam, e, charge, i))


def branching_polynomial(lam, e, charge, i, max_delta=6):
    """Graded restriction over every removal order of the i-nodes.

    Returns a dict with ``delta``, ``target`` and ``polynomial``; the
    polynomial maps integer degrees to multiplicities.
    """
    doc = json.loads(_core._branching_polynomial(lam, e, charge, i, max_delta))
    doc["polynomial"] = {int(d): c for d, c in doc["polynomial"].items()}
    return doc


def certify(lam, e, charge, i, max_n=8, max_delta=6):
    """Certificate for the block of ``lam`` under the map for residue ``i``."""
    return json.loads(_core._certify(lam, e, charge, i, max_n, max_delta))
