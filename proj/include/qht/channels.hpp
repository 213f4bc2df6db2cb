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

// channels.hpp — Quantum channels in Kraus form: Stinespring and
// measurement-feedback construction, application, and classification.
// Unitality is decided by two independent routes that must agree:
//
//   direct:      Phi(1) - 1 = sum_m K_m K_m† - 1
//   commutator:  [Phi(1)]_{jj'} - [1]_{jj'}
//                  = sum_i Tr_res{ pi0 (F†_{j'i} F_{ji} - F_{ji} F†_{j'i}) }
//
// where F_{ji} are the reservoir-space blocks of the joint unitary in a
// fixed system basis, U = sum_{ij} |psi_j><psi_i| ⊗ F_{ji}.

#pragma once

#include "qht/linalg.hpp"

#include <functional>
#include <vector>

namespace qht {

// Kraus weight below which a reservoir eigenvector contributes no Kraus
// operator; avoids zero-weight noise without changing the channel.
inline constexpr double kKrausWeightCutoff = 1e-14;

// Kraus family {K_m} defining rho -> sum_m K_m rho K_m†. All operators are
// square and share one dimension; trace preservation (sum K†K = 1) is part
// of the type's contract and enforced at construction. unchecked() skips
// only the trace-preservation check so that externally supplied families
// can be diagnosed instead of rejected.
class QuantumChannel {
 public:
  explicit QuantumChannel(std::vector<Matrix> kraus_ops,
                          double tol = kDefaultTol);
  static QuantumChannel unchecked(std::vector<Matrix> kraus_ops);

  const std::vector<Matrix>& kraus_ops() const { return kraus_; }
  Index dim() const { return dim_; }

 private:
  QuantumChannel() = default;

  std::vector<Matrix> kraus_;
  Index dim_ = 0;
};

// Reservoir-space blocks F_{ji} of a bipartite unitary in a fixed system
// basis; i indexes the initial system state, j the final one. Every (j,i)
// pair is present and the family reconstructs its source unitary.
struct FOperatorFamily {
  Index sys_dim = 0;
  Index res_dim = 0;
  Matrix sys_basis;          // columns = |psi_i>
  std::vector<Matrix> ops;   // (j,i) row-major, each res_dim x res_dim

  const Matrix& f(Index j, Index i) const { return ops[j * sys_dim + i]; }
  Matrix& f(Index j, Index i) { return ops[j * sys_dim + i]; }
};

enum class UnitalityMethod { Direct, Commutator };

struct UnitalityReport {
  Matrix defect;               // Phi(1) - 1
  double max_abs_defect = 0.0;
  bool is_unital = false;
  UnitalityMethod method = UnitalityMethod::Direct;
};

struct TracePreservationReport {
  bool preserved = false;
  double defect = 0.0;  // max|sum K†K - 1|
};

// --------------------------- construction -----------------------------------

// Channel Phi(rho) = Tr_res{ U (rho ⊗ pi0) U† } generated by the joint
// unitary u and the initial reservoir state pi0. Kraus operators are
// K_{m,k} = sqrt(lambda_k) <m|U|k> over reservoir eigenvectors |k> of pi0
// (eigenvalue above weight_cutoff) and reservoir basis vectors |m>.
QuantumChannel stinespring_channel(const UnitaryOperator& u,
                                   const DensityMatrix& pi0,
                                   double weight_cutoff = kKrausWeightCutoff);

// Projective measurement followed by an outcome-conditioned unitary:
// Phi(rho) = sum_a U_a P_a rho P_a† U_a†. The projectors must form a
// complete orthogonal family (sum P = 1, P_a P_b = delta_ab P_a).
QuantumChannel measurement_feedback_channel(
    const std::vector<Matrix>& projectors,
    const std::vector<UnitaryOperator>& feedbacks);

// --------------------------- application ------------------------------------

// Phi(rho) = sum K rho K†, re-validated as a density matrix. A validation
// failure signals a broken channel, not a caller error.
DensityMatrix apply(const QuantumChannel& channel, const DensityMatrix& rho);

// Same sum without the density validation, for probing arbitrary operators
// (e.g. Phi(1)).
Matrix apply_to_operator(const QuantumChannel& channel, const Matrix& m);

// --------------------------- classification ---------------------------------

// F_{ji}[m,k] = <psi_j, m| U |psi_i, k>. The system basis is given as the
// columns of sys_basis (defaults to the computational basis) and must be
// orthonormal.
FOperatorFamily extract_f_operators(const UnitaryOperator& u);
FOperatorFamily extract_f_operators(const UnitaryOperator& u,
                                    const Matrix& sys_basis);

// Commutator route: defect(j,j') = sum_i Tr{ pi0 (F†_{j'i} F_{ji} -
// F_{ji} F†_{j'i}) }, evaluated without constructing the channel.
UnitalityReport unitality_defect_commutator(const FOperatorFamily& f,
                                            const DensityMatrix& pi0,
                                            double tol = kDefaultTol);

// Direct route: defect = sum_m K_m K_m† - 1.
UnitalityReport unitality_defect_direct(const QuantumChannel& channel,
                                        double tol = kDefaultTol);

// Image of the unnormalized maximally entangled projector under 1 ⊗ Phi;
// PSD iff the map is completely positive. The map-level overload exists so
// that non-CP linear maps can be certified negative as well.
Matrix choi_matrix(const QuantumChannel& channel);
Matrix choi_matrix(const std::function<Matrix(const Matrix&)>& map, Index dim);

TracePreservationReport is_trace_preserving(const QuantumChannel& channel,
                                            double tol = kDefaultTol);

}  // namespace qht
