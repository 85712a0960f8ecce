"""Exact multivariate Bell polynomials and derivatives of composed maps.

Thin wrapper over the compiled core: structured results cross the boundary as
JSON and are decoded here into plain dicts, tuples and fractions.Fraction.
Series arguments are accepted as dicts (the JSON document form) or as JSON
strings; use load_series() to read one from a file.
"""

import json
from fractions import Fraction

from ._core import (
    ContractError,
    DomainError,
    IntegralityError,
    MissingVariableError,
    ParseError,
    TruncationError,
    bell_complete_text,
    bell_partial_text,
    bell_table,
)
from . import _core

__all__ = [
    "ContractError",
    "DomainError",
    "IntegralityError",
    "MissingVariableError",
    "ParseError",
    "TruncationError",
    "bell_complete",
    "bell_complete_text",
    "bell_partial",
    "bell_partial_text",
    "bell_table",
    "compose_all",
    "compose_derivative",
    "compose_series",
    "generating_identity",
    "load_series",
    "series",
    "solutions_complete",
    "solutions_partial",
    "verify_suite",
]


def _series_json(s):
    if isinstance(s, str):
        return s
    return json.dumps(s)


def _rational(text):
    return Fraction(text)


def _decode_poly(text):
    terms = []
    for term in json.loads(text):
        monomial = tuple(
            (tuple(j), comp, exp) for j, comp, exp in term["monomial"]
        )
        terms.append({"coeff": _rational(term["coeff"]), "monomial": monomial})
    return terms


def _decode_assignments(text):
    return [
        [(tuple(j), tuple(kj)) for j, kj in assignment]
        for assignment in json.loads(text)
    ]


def bell_partial(n, k):
    """Partial Bell polynomial B_{n,k} as a list of terms.

    Each term is {"coeff": Fraction, "monomial": (((j...), component, exponent), ...)}.
    """
    return _decode_poly(_core.bell_partial_json(list(n), list(k)))


def bell_complete(n, d2):
    """Complete Bell polynomial B_n over inner dimension d2, as terms."""
    return _decode_poly(_core.bell_complete_json(list(n), d2))


def solutions_partial(n, k):
    """The solution set K_{n,k}: assignments as [((j...), (k_j...)), ...] lists."""
    return _decode_assignments(_core.solutions_partial_json(list(n), list(k)))


def solutions_complete(n, d2):
    """The solution set K_n over inner dimension d2."""
    return _decode_assignments(_core.solutions_complete_json(list(n), d2))


def series(d_in, d_out, order, center, coeffs):
    """Builds the series document consumed by the compose functions.

    center: sequence of rationals (anything Fraction accepts).
    coeffs: mapping from multi-index tuple to value, scalar for d_out == 1 or a
    sequence of d_out values. Values are derivatives at the center, not
    monomial coefficients.
    """
    doc = {
        "d_in": d_in,
        "d_out": d_out,
        "order": order,
        "center": [str(Fraction(c)) for c in center],
        "coeffs": [],
    }
    for n, value in coeffs.items():
        if d_out == 1 and not isinstance(value, (list, tuple)):
            value = [value]
        doc["coeffs"].append(
            {"n": list(n), "v": [str(Fraction(v)) for v in value]}
        )
    return doc


def load_series(path):
    """Reads a series document from a JSON file."""
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)


def compose_derivative(f, g, n):
    """d^n (f o g) at g's center, one Fraction per component of f."""
    out = _core.compose_derivative(_series_json(f), _series_json(g), list(n))
    return [_rational(v) for v in out]


def compose_all(f, g, order):
    """All derivatives of f o g with |n| <= order, keyed by multi-index tuple."""
    doc = json.loads(_core.compose_all_json(_series_json(f), _series_json(g), order))
    return {
        tuple(entry["n"]): [_rational(v) for v in entry["v"]]
        for entry in doc["values"]
    }


def compose_series(f, g):
    """The truncated series of f o g, by direct substitution (no Bell polynomials)."""
    return json.loads(_core.compose_series_json(_series_json(f), _series_json(g)))


def generating_identity(g, weights, max_abs_n):
    """Checks the Bell generating identity against series exponentiation.

    Returns {"max_abs_n": int, "mismatches": [...]}; empty mismatches means the
    identity held for every coefficient up to the bound.
    """
    weight_texts = [str(Fraction(w)) for w in weights]
    return json.loads(
        _core.generating_identity_json(_series_json(g), weight_texts, max_abs_n)
    )


def verify_suite(suite, seed=0, trials=20):
    """Runs one of the randomized suites: "oracle", "genfun" or "props"."""
    return json.loads(_core.verify_suite_json(suite, seed, trials))
