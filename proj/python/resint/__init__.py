"""Exact verification of residual intersections of two-row minor ideals."""

try:
    from ._resint import (
        Session,
        canonical_form,
        grassmann_hf,
        groebner_basis,
        hilbert_series,
        predicted_depth,
        verify_json,
        __version__,
    )
except ImportError:  # build-tree layout: extension next to the package
    from _resint import (
        Session,
        canonical_form,
        grassmann_hf,
        groebner_basis,
        hilbert_series,
        predicted_depth,
        verify_json,
        __version__,
    )

import json as _json


def verify(**kwargs):
    """Run verification suites and return the report as a dict."""
    return _json.loads(verify_json(**kwargs))


__all__ = [
    "Session",
    "canonical_form",
    "grassmann_hf",
    "groebner_basis",
    "hilbert_series",
    "predicted_depth",
    "verify",
    "verify_json",
    "__version__",
]
