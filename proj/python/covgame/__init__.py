# Copyright 2026 The covgame Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Coverage problems on labeled graphs and two-player game graphs.

Models are dicts (or JSON strings) in the interchange format used by the
``covgame`` command line tool. Results are dicts with the same fields as
``covgame solve --json``.
"""

import json as _json

from . import _core
from ._core import CovgameError

__all__ = [
    "CovgameError",
    "solve",
    "coverage_value",
    "bounded",
    "recurrent",
    "certify",
    "compile_system",
    "gadget",
    "to_dot",
    "validate",
    "brute_force",
    "random_model",
]


def _text(model):
    return model if isinstance(model, str) else _json.dumps(model)


def solve(model, m):
    """Can at least ``m`` propositions be covered (by a path, or against every adversary)?"""
    return _json.loads(_core.solve(_text(model), m=m))


def coverage_value(model):
    """Largest coverable ``m`` with its witness path or strategy."""
    return _json.loads(_core.solve(_text(model), value=True))


def bounded(model, m, k, low_memory=False):
    """Coverage of ``m`` propositions within ``k`` steps."""
    return _json.loads(_core.bounded(_text(model), m, k, low_memory))


def recurrent(model):
    return _json.loads(_core.recurrent(_text(model)))


def certify(model, result):
    """Re-check the certificate carried by a result dict."""
    return _json.loads(_core.certify(_text(model), _text(result)))


def compile_system(system):
    return _json.loads(_core.compile_system(_text(system)))


def gadget(kind, text, start=None):
    """Reduction instance from DIMACS (``sat``), QDIMACS (``qbf``) or edge-list (``vc``, ``hampath``) text."""
    return _json.loads(_core.gadget(kind, text, start))


def to_dot(model):
    return _core.to_dot(_text(model))


def validate(model):
    """List of invariant violations; empty when the model is valid."""
    return _core.validate(_text(model))


def brute_force(model, m, k=None):
    """Exhaustive reference answer, for spot checks on small models."""
    return _core.brute_force(_text(model), m, k)


def random_model(kind, seed, vertices=6, props=3, out_degree=3):
    return _json.loads(_core.random_model(kind, seed, vertices, props, out_degree))
