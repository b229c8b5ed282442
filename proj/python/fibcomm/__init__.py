"""Fibered-face norms, normalized entropy and commensurability tests."""

import json as _json

from . import _fibcomm
from ._fibcomm import FibcommError, bundled_names

__all__ = [
    "FibcommError",
    "analyze_cover",
    "bundled_names",
    "classify",
    "descriptor",
    "entropy",
    "norm",
    "run",
    "smith_normal_form",
    "volume_gate",
]

__version__ = "0.1.0"


def run(*args):
    """Run a CLI command in-process; returns (exit_code, stdout, stderr)."""
    return _fibcomm.run([str(a) for a in args])


def descriptor(manifold="six22"):
    return _json.loads(_fibcomm.descriptor_json(manifold))


def norm(cls, manifold="six22"):
    """Thurston norm as a fractions-style string, e.g. '2' or '3/2'."""
    return _fibcomm.norm(manifold, list(cls))


def entropy(cls, manifold="six22"):
    return _json.loads(_fibcomm.entropy(manifold, list(cls)))


def classify(a, b, manifold="six22"):
    return _json.loads(_fibcomm.classify(manifold, list(a), list(b)))


def volume_gate(volume, cusps, degree):
    return _json.loads(_fibcomm.volume_gate(float(volume), int(cusps), int(degree)))


def analyze_cover(w1, w2, chi1, chi2, n, conjugate=False):
    return _json.loads(_fibcomm.analyze_cover(list(w1), list(w2), chi1, chi2, n, conjugate))


def smith_normal_form(rows):
    """(left, diag, right) with rows == left @ diag @ right, entries as Python ints."""
    left, diag, right = _fibcomm.smith_normal_form([list(r) for r in rows])
    conv = lambda m: [[int(x) for x in r] for r in m]
    return conv(left), conv(diag), conv(right)
