# Copyright 2026 The ndpo Authors
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

"""Squeezed-reservoir two-mode parametric oscillator: closed forms and Fock-space checks."""

from ._core import (
    DomainError,
    GaussianWidths,
    LambdaCoeffs,
    ModelParams,
    PhysicalityError,
    Regime,
    RegimeTag,
    ReservoirStats,
    UnsupportedConfiguration,
    VarianceReport,
    __version__,
    gaussian_widths,
    husimi_q,
    husimi_q_single_mode,
    limit_suite,
    limit_tags,
    numeric_evolve,
    numeric_steady_state,
    reservoir_stats,
    squeezing_onset_r,
    squeezing_percent,
    validate,
    variance_single_mode,
    variance_two_mode,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
