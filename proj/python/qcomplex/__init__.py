# Copyright 2026 The qcomplex Authors
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
"""Quantum complexity of states and Hamiltonians.

States are 1-D complex numpy arrays and operators are square 2-D ones; qubit 0
is the most significant bit of a basis index. Errors raise ``QcomplexError``
with ``args == (code, message, context)``.
"""

from ._qcomplex import (
    QcomplexError,
    accuracy_budget,
    build_connected_state,
    cnot,
    commutant,
    consistency_error,
    cross_norm,
    epsilon_from_q,
    estimate_q,
    evolution_operator,
    ghz,
    gsa_state,
    is_connected,
    is_equilibrium,
    lemma_check,
    naive_complexity_h,
    naive_complexity_state,
    optimal_iterations,
    h4,
    hq,
    permute_state,
    quantize,
    quantum_complexity_h,
    quantum_complexity_state,
    run_gsa,
    tavis_cummings,
    uniform,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
