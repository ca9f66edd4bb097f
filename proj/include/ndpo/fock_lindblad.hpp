// Copyright 2026 The ndpo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "ndpo/fock/density_matrix.hpp"
#include "ndpo/fock/evolve.hpp"
#include "ndpo/fock/io.hpp"
#include "ndpo/fock/liouvillian.hpp"
#include "ndpo/fock/normal_modes.hpp"
#include "ndpo/fock/observables.hpp"
