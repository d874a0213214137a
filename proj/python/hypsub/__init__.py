# Copyright 2026 The hypsub Authors
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

"""Hypersubstitutions, rho-mappings and semigroup variety verdicts.

Variety queries return the same structured reports as the ``--json`` output
of the command-line tool: dictionaries with ``status``, ``witness`` and
``budget_used`` keys.
"""

import json

from ._hypsub import (
    CapExceeded,
    Hypersubstitution,
    ParseError,
    Signature,
    ValidationError,
    _criteria,
    _decide,
    _gamma_solid,
    _rho_solid,
    compose,
    enumerate_bijective,
    enumerate_hypersubstitutions,
    enumerate_terms,
    flatten,
    identity_hyp,
    invert,
    model_counts,
    run,
)

__all__ = [
    "CapExceeded",
    "Hypersubstitution",
    "ParseError",
    "Signature",
    "ValidationError",
    "compose",
    "decide",
    "enumerate_bijective",
    "enumerate_hypersubstitutions",
    "enumerate_terms",
    "fa_criteria",
    "flatten",
    "gamma_solid",
    "identity_hyp",
    "invert",
    "model_counts",
    "rho_solid",
    "run",
    "sa_criteria",
]


def decide(presentation, goal, **limits):
    """Proved, Disproved or Unknown for ``goal`` in the variety."""
    return json.loads(_decide(presentation, goal, **limits))


def gamma_solid(presentation, n, **limits):
    return json.loads(_gamma_solid(presentation, n, **limits))


def sa_criteria(presentation, **limits):
    return json.loads(_criteria(presentation, "sa", **limits))


def fa_criteria(presentation, **limits):
    return json.loads(_criteria(presentation, "fa", **limits))


def rho_solid(presentation, rho, hyps, sample=(), **limits):
    """Checks rho-solidity over ``hyps``; associativity is always sampled."""
    return json.loads(_rho_solid(presentation, rho, list(hyps), list(sample), **limits))
