"""Exact Lie-algebra cohomology and CR quadric computations.

Thin convenience layer over the C++ core: JSON payloads are decoded into
plain Python objects, everything else passes through unchanged.
"""

import json

from . import _core
from ._core import (
    affine_action,
    cohomology_dim,
    harmonic_dim,
    kostant_dim,
    kostant_weights,
    on_quadric,
    slice_homogeneities,
)

__all__ = [
    "affine_action",
    "algebra",
    "classify",
    "cohomology_dim",
    "harmonic_dim",
    "heisenberg_translate",
    "kostant_dim",
    "kostant_weights",
    "normal_form_report",
    "on_quadric",
    "one_chain",
    "slice_homogeneities",
    "table",
]


def table(which):
    """Tables 1/2 (classified real components) and 3/4 (weight tables)."""
    return json.loads(_core.table_json(which))


def classify(kind):
    return json.loads(_core.classify_json(kind))


def algebra(kind):
    return json.loads(_core.algebra_json(kind))


def heisenberg_translate(kind, param, point):
    return json.loads(_core.heisenberg_translate_json(kind, json.dumps(param), json.dumps(point)))


def one_chain(kind, alpha, beta, samples):
    return [json.loads(p) for p in _core.one_chain_json(kind, str(alpha), str(beta), samples)]


def normal_form_report(kind, series_text):
    return json.loads(_core.normal_form_report_json(kind, series_text))
