# Copyright 2026 The qgd Authors
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
"""Two-qubit gate design toolkit."""

from ._core import (
    QgdError,
    canonical_entangler,
    compile_cnot,
    controlled_phase,
    distance,
    expm_hermitian,
    haar_unitary,
    kak_decompose,
    locally_equivalent,
    makhlin_invariants,
    named_gate,
    reduce_coupling,
    rot_frame_matrix,
    rwa_infidelity,
    simulate,
    trajectory,
    weyl_canonicalize,
)

__all__ = [
    "QgdError",
    "canonical_entangler",
    "compile_cnot",
    "controlled_phase",
    "distance",
    "expm_hermitian",
    "haar_unitary",
    "kak_decompose",
    "locally_equivalent",
    "makhlin_invariants",
    "named_gate",
    "reduce_coupling",
    "rot_frame_matrix",
    "rwa_infidelity",
    "simulate",
    "trajectory",
    "weyl_canonicalize",
]
