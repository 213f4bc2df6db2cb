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

#include "qht/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qht {

double von_neumann_entropy(const DensityMatrix& rho) {
  const double tol = rho.tol();
  double s = 0.0;
  for (double lambda : hermitian_eigenvalues(rho.matrix(), tol)) {
    if (lambda < -tol) {
      std::ostringstream os;
      os << "von_neumann_entropy: eigenvalue " << lambda
         << " below -tol, state is invalid";
      throw validation_error(os.str());
    }
    if (lambda <= 0.0) continue;  // clamp [-tol, 0) to 0; 0 ln 0 = 0
    s -= lambda * std::log(lambda);
  }
  // Eigenvalues a hair above 1 would otherwise push a pure state to -0.
  return std::max(s, 0.0);
}

double entropy_change(const QuantumChannel& channel,
                      const DensityMatrix& rho) {
  if (channel.dim() != rho.dim())
    throw std::invalid_argument("entropy_change: dimension mismatch");
  return von_neumann_entropy(apply(channel, rho)) - von_neumann_entropy(rho);
}

}  // namespace qht
