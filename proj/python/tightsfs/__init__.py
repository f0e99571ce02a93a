"""Tight contact structures with zero Giroux torsion on Seifert fibered
spaces M(0; -q1/p1, -q2/p2, -q3/p3, -q4/p4) with e0 <= -4."""

import json

from ._core import (
    TightsfsError,
    UnsupportedRegime,
    act,
    convergents,
    eval_cf,
    euler_number,
    fiber_data,
    gluing_counts,
    h1_order,
    neg_cf,
    shirt_count,
    solid_torus_count,
    toric_annulus_count,
)
from . import _core

__all__ = [
    "TightsfsError",
    "UnsupportedRegime",
    "act",
    "classify",
    "convergents",
    "diagram",
    "eval_cf",
    "euler_number",
    "fiber_data",
    "gluing_counts",
    "h1_order",
    "neg_cf",
    "shirt_count",
    "shirt_count_audit",
    "solid_torus_count",
    "toric_annulus_count",
    "verify_sweep",
]


def classify(fibers, enumerate=True):
    """Classification report for a fiber string such as "-1/2,-1/2,-1/2,-3/5"."""
    return json.loads(_core._classify_json(fibers, enumerate))


def diagram(fibers):
    return json.loads(_core._diagram_json(fibers))


def shirt_count_audit(s):
    return json.loads(_core._shirt_count_audit_json(s))


def verify_sweep(max_p, q_factor=2):
    return json.loads(_core._verify_json(max_p, q_factor))
