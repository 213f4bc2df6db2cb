// Copyright 2026 The qht authors
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

// entropy.hpp — Von Neumann entropy in natural-log units (nats).

#pragma once

#include "qht/channels.hpp"
#include "qht/linalg.hpp"

namespace qht {

// S(rho) = -sum_i lambda_i ln lambda_i over the eigenvalues, with
// 0 ln 0 = 0. Eigenvalues in [-tol, 0) are clamped to 0 (roundoff);
// anything below -tol signals an invalid state and throws. The result
// lies in [0, ln dim].
double von_neumann_entropy(const DensityMatrix& rho);

// S(Phi(rho)) - S(rho). Non-negative for unital channels.
double entropy_change(const QuantumChannel& channel, const DensityMatrix& rho);

}  // namespace qht
