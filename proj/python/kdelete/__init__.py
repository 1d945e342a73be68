"""Python bindings for the kdelete partitioning library."""

import json

from ._core import (
    CapabilityError,
    Graph,
    PreconditionViolation,
    blow_up,
    contains_clique,
    exact_h,
    odd_girth,
    parse_edge_list,
)
from . import _core

__all__ = [
    "CapabilityError",
    "Graph",
    "PreconditionViolation",
    "blow_up",
    "contains_clique",
    "cover",
    "exact_h",
    "generate",
    "maxcut",
    "odd_girth",
    "parse_edge_list",
    "partition",
    "scrub",
    "spectral",
]


def generate(kind, seed=0, **params):
    """Build a graph from a construction spec, e.g. generate("cycle", n=5)."""
    return _core.generate_json(json.dumps({"kind": kind, "params": params, "seed": seed}))


def partition(g, method, k, r=2, verify=False, seed=0):
    return json.loads(_core.partition_json(g, method, k, r, verify, seed))


def maxcut(g, method="local", l=2, r=2, restarts=8, seed=0):
    return json.loads(_core.maxcut_json(g, method, l, r, restarts, seed))


def cover(g, k, method="greedy", trials=0, seed=0):
    return json.loads(_core.cover_json(g, k, method, trials, seed))


def scrub(g, r, verify=False):
    return json.loads(_core.scrub_json(g, r, verify))


def spectral(g, k=2, seed=0):
    return json.loads(_core.spectral_json(g, k, seed))
