"""Charge-conserving Yang-Baxter operators: build, verify, classify."""

import json

from . import _core
from ._core import IrrationalSpectrum, NotASolution, SingularMatrix

__all__ = [
    "IrrationalSpectrum",
    "NotASolution",
    "SingularMatrix",
    "build",
    "classify",
    "enumerate",
    "euler_count",
    "fibre",
    "signature",
    "verify",
]


def _dump(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def euler_count(n):
    return int(_core.euler_count(n))


def enumerate(n):
    return json.loads(_core.enumerate(n))


def build(germ, seed=None):
    """Matrix for a configuration (dict or JSON text), with optional parameters."""
    return json.loads(_core.build(_dump(germ), seed))


def verify(matrix, method="direct"):
    return json.loads(_core.verify(_dump(matrix), method))


def classify(matrix):
    return json.loads(_core.classify(_dump(matrix)))


def signature(config, seed=None):
    return json.loads(_core.signature(_dump(config), seed))


def fibre(type, prime=11, keep=8):
    return json.loads(_core.fibre(type, prime, keep))
