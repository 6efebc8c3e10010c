"""Dimensions and Ziegler spectra of Bezout domains, computed from their value groups."""

import json
import time

from . import _valdim
from ._valdim import (
    DEFAULT_ITERATION_BUDGET,
    SCHEMA_VERSION,
    ValdimError,
    ValdimSyntaxError,
    canonical_gamma,
    canonical_ordinal,
    natural_sum,
)

__all__ = [
    "DEFAULT_ITERATION_BUDGET",
    "SCHEMA_VERSION",
    "ValdimError",
    "ValdimSyntaxError",
    "breadth",
    "canonical_gamma",
    "canonical_ordinal",
    "cbrank_space",
    "chain",
    "check",
    "classify",
    "leq",
    "mdim",
    "natural_sum",
    "report",
    "render_table",
    "spec_star",
    "zg",
]


def _call(name, *args, **kwargs):
    return json.loads(getattr(_valdim, name)(*args, **kwargs))


def mdim(gamma, budget=DEFAULT_ITERATION_BUDGET):
    return _call("mdim", gamma, budget)


def breadth(gamma, budget=DEFAULT_ITERATION_BUDGET):
    return _call("breadth", gamma, budget)


def chain(gamma, cls="two", budget=DEFAULT_ITERATION_BUDGET):
    return _call("chain", gamma, cls, budget)


def cbrank_space(top, budget=DEFAULT_ITERATION_BUDGET):
    return _call("cbrank_space", top, budget)


def zg(gamma, bound=4, stratify=False):
    return _call("zg", gamma, bound, stratify)


def leq(gamma, lhs, rhs):
    return _call("leq", gamma, lhs, rhs)


def classify(gamma):
    return _call("classify", gamma)


def spec_star(gamma):
    return _call("spec_star", gamma)


def check(tag=None):
    return _call("check", tag)


_COMMANDS = {
    "mdim": (mdim, "method"),
    "breadth": (breadth, "method"),
    "classify": (classify, None),
    "spec-star": (spec_star, None),
}


def report(command, gamma):
    """Full report envelope for a gamma-only command, as the CLI prints it."""
    fn, method_key = _COMMANDS[command]
    t0 = time.perf_counter()
    result = fn(gamma)
    seconds = time.perf_counter() - t0
    method = result[method_key] if method_key else "closed_form"
    return json.loads(
        _valdim.make_report(command, result["gamma"], method, json.dumps(result), seconds)
    )


def render_table(rep):
    return _valdim.render_table(json.dumps(rep))
