"""Quaternary generalized cyclotomic sequences of period 2 p^m q^n."""

import json

from . import _core
from ._core import (
    CapExceeded,
    Error,
    InvalidMapping,
    InvalidParams,
    MalformedSequence,
    MethodDisagreement,
    PartitionViolation,
    __version__,
    attains_full_complexity,
    degenerate_lower_bound,
    generate,
    validate_mapping,
)

DEFAULT_MAPPING = "2,3,1,0,1"


def constants(p, q, m, n, cap=_core.DEFAULT_PERIOD_CAP):
    return json.loads(_core.constants_json(p, q, m, n, cap))


def classes(p, q, m, n, cap=_core.DEFAULT_PERIOD_CAP):
    return json.loads(_core.classes_json(p, q, m, n, cap))


def linear_complexity(digits):
    """Linear complexity of the periodic sequence given by one period of digits."""
    return json.loads(_core.linear_complexity_json(digits))


def analyze(p, q, m, n, mapping="", degenerate=False, cap=_core.DEFAULT_PERIOD_CAP):
    return json.loads(_core.analyze_json(p, q, m, n, mapping, degenerate, cap))


def structural_lemmas(p, q, m, n):
    return json.loads(_core.structural_lemmas_json(p, q, m, n))


def root_evaluations(p, q, m, n, mapping=""):
    return json.loads(_core.root_evaluations_json(p, q, m, n, mapping))


__all__ = [
    "CapExceeded",
    "DEFAULT_MAPPING",
    "Error",
    "InvalidMapping",
    "InvalidParams",
    "MalformedSequence",
    "MethodDisagreement",
    "PartitionViolation",
    "analyze",
    "attains_full_complexity",
    "classes",
    "constants",
    "degenerate_lower_bound",
    "generate",
    "linear_complexity",
    "root_evaluations",
    "structural_lemmas",
    "validate_mapping",
]
