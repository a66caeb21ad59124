"""Exact normal forms and verification checks for the Hopf algebra A on y^2 = x^2 + x^3."""

import json

from ._core import (
    Algebra,
    CurveformError,
    ParameterOffCurve,
    ParseError,
    basis_index,
    growth_json,
    suite_names,
)

__all__ = [
    "Algebra",
    "CurveformError",
    "ParameterOffCurve",
    "ParseError",
    "basis_index",
    "census",
    "growth",
    "rules",
    "run_suite",
    "suite_names",
]


def run_suite(alg, name, seed=42, max_len=None, max_deg=None):
    """Run a named suite (or "all") on `alg` and return the JSON report as a dict."""
    return json.loads(alg.run_suite_json(name, seed, max_len, max_deg))


def census(alg, max_len=8):
    return json.loads(alg.census_json(max_len))


def growth(max_len=200):
    return json.loads(growth_json(max_len))


def rules(alg):
    return json.loads(alg.rules_json())
