"""Combinatorial Kakimizu complexes of special alternating links.

Inputs are JSON documents (text, dicts, or paths to files): a diagram
``{"crossings": [...]}`` or a theta graph ``{"components": [...]}``.
Results are plain dicts and lists.
"""

import json
import os

from . import _core
from ._core import Error, InvariantError, ParseError, PreconditionError

__all__ = [
    "Error",
    "InvariantError",
    "ParseError",
    "PreconditionError",
    "ball",
    "complex",
    "distance",
    "esd",
    "homology",
    "is_fibred",
    "seifert",
    "surface",
    "theta",
    "validate",
]


def _text(source):
    if isinstance(source, (dict, list)):
        return json.dumps(source)
    if isinstance(source, os.PathLike) or (isinstance(source, str) and not source.lstrip().startswith(("{", "["))):
        with open(source, encoding="utf-8") as f:
            return f.read()
    return source


def validate(diagram):
    return json.loads(_core.validate(_text(diagram)))


def seifert(diagram):
    return json.loads(_core.seifert(_text(diagram)))


def theta(source):
    return json.loads(_core.theta(_text(source)))


def complex(source):
    return json.loads(_core.complex(_text(source)))


def homology(source):
    return json.loads(_core.homology(_text(source)))


def ball(source):
    return json.loads(_core.ball(_text(source)))


def esd(n, m):
    return json.loads(_core.esd(n, m))


def is_fibred(diagram):
    return _core.is_fibred(_text(diagram))


def distance(source, u, v):
    return _core.distance(_text(source), list(u), list(v))


def surface(diagram, vertex=None, negative=False):
    return json.loads(_core.surface(_text(diagram), None if vertex is None else list(vertex), negative))
