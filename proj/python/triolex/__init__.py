"""Exact calculus on triole algebras.

Reports and operators travel as JSON; this module decodes them into Python
objects. Operators are lists of ``{"dexp": [...], "coeff": poly}`` terms, where a
poly is either a term list or a string such as ``"3/2*x0^2 - x1"``.
"""

import json
from dataclasses import dataclass

from . import _core
from ._core import SchemaError, parse_poly

__all__ = [
    "Result",
    "SchemaError",
    "analyze",
    "apply",
    "commutator",
    "compose",
    "delta",
    "normalize_workspace",
    "order",
    "parse_poly",
    "poly_terms",
    "principal_symbol",
    "validate",
    "validate_workspace",
]


@dataclass
class Result:
    exit_code: int
    report: dict
    diagnostic: str

    @property
    def ok(self):
        return self.exit_code == 0


def _result(raw):
    code, report, diag = raw
    return Result(code, json.loads(report), diag)


def _dump(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def validate(path):
    return _result(_core.validate(str(path)))


def analyze(path, cmd, target, dmax=3):
    return _result(_core.analyze(str(path), cmd, target, dmax))


def validate_workspace(workspace):
    """Validate a workspace given as a dict or JSON text."""
    return _result(_core.validate_text(_dump(workspace)))


def normalize_workspace(workspace):
    return json.loads(_core.normalize_workspace(_dump(workspace)))


def poly_terms(text, n_vars):
    """Canonical term-list form of a polynomial string."""
    return json.loads(_core.poly_terms(text, n_vars))


def compose(a, b, n_vars):
    return json.loads(_core.compose(_dump(a), _dump(b), n_vars))


def commutator(a, b, n_vars):
    return json.loads(_core.commutator(_dump(a), _dump(b), n_vars))


def delta(op, f, n_vars):
    """a o D - D o a for the multiplication a = f."""
    return json.loads(_core.delta(_dump(op), f, n_vars))


def apply(op, f, n_vars):
    return _core.apply(_dump(op), f, n_vars)


def order(op, n_vars):
    return _core.order(_dump(op), n_vars)


def principal_symbol(op, n_vars, k):
    return json.loads(_core.principal_symbol(_dump(op), n_vars, k))
