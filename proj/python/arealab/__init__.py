# Copyright 2026 The arealab Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Sparse strong area-law states, Schmidt spectra and fingerprint protocols."""

from ._core import (
    FingerprintCode,
    InfeasibleError,
    Lattice,
    Region,
    SparseState,
    area_law_audit,
    area_law_state,
    build_fingerprint,
    connected_correlator,
    cost_report,
    counting_report,
    enumerate_cubic_regions,
    equality_protocol,
    ghz_hyperplane_state,
    inner_product,
    invariance_check,
    isotropic_area_law_state,
    minimal_repetitions,
    parse_region,
    renyi_entropy,
    run_cli,
    schmidt_spectrum,
    swap_test_accept,
    ti_basis_size,
    ti_basis_state,
    ti_random_state,
)

__version__ = "0.1.0"

__all__ = [
    "FingerprintCode",
    "InfeasibleError",
    "Lattice",
    "Region",
    "SparseState",
    "area_law_audit",
    "area_law_state",
    "build_fingerprint",
    "connected_correlator",
    "cost_report",
    "counting_report",
    "enumerate_cubic_regions",
    "equality_protocol",
    "ghz_hyperplane_state",
    "inner_product",
    "invariance_check",
    "isotropic_area_law_state",
    "minimal_repetitions",
    "parse_region",
    "renyi_entropy",
    "run_cli",
    "schmidt_spectrum",
    "swap_test_accept",
    "ti_basis_size",
    "ti_basis_state",
    "ti_random_state",
]
