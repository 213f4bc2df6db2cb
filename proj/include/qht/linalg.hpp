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

// linalg.hpp — Dense complex linear algebra for small Hilbert spaces:
// tensor products, partial traces, Hermitian spectra, and the validated
// state/operator value types everything else is built on.
//
// Basis convention used throughout the library: a bipartite system ⊗
// reservoir space is indexed by composite = i_sys * res_dim + i_res
// (system is the slow index).

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace qht {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Index = Eigen::Index;

// Default tolerance for structural validations (hermiticity, trace,
// positivity, unitarity). Well above double-precision accumulation error
// at dimensions <= ~64.
inline constexpr double kDefaultTol = 1e-10;

// Thrown when a computed object breaks a structural invariant: an evolved
// state fails density validation, a constructed channel is not trace
// preserving, cross-checked verdicts disagree.
class validation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// --------------------------- elementary operators ---------------------------

Matrix identity(Index dim);
Vector basis_ket(Index dim, Index i);          // |i>
Matrix basis_op(Index dim, Index i, Index j);  // |i><j|

Matrix sigma_x();
Matrix sigma_y();
Matrix sigma_z();

// --------------------------- entrywise measures -----------------------------

double max_abs(const Matrix& m);
bool all_finite(const Matrix& m);
double hermiticity_defect(const Matrix& m);  // max|M - M†|
double unitarity_defect(const Matrix& m);    // max|U†U - 1|

// --------------------------- core operations --------------------------------

// Conjugate transpose.
Matrix dagger(const Matrix& m);

// Kronecker product; entry ((i*db + k), (j*db + l)) = a(i,j) * b(k,l).
Matrix kron(const Matrix& a, const Matrix& b);

enum class Keep { System, Reservoir };

// Reduce a (sys_dim*res_dim)-dimensional operator to one factor by summing
// over a basis of the other. Trace preserving: Tr result = Tr m.
Matrix partial_trace(const Matrix& m, Index sys_dim, Index res_dim, Keep keep);

// Reorder a bipartite operator from a ⊗ b factor ordering to b ⊗ a.
Matrix swap_factors(const Matrix& m, Index dim_a, Index dim_b);

// Real eigenvalues of a Hermitian matrix, ascending. Rejects inputs whose
// hermiticity defect exceeds tol.
std::vector<double> hermitian_eigenvalues(const Matrix& m,
                                          double tol = kDefaultTol);

// --------------------------- validated value types --------------------------

// Outcome of checking the density-matrix invariants. At most one violation
// is reported, in the order hermiticity, trace, positivity, together with
// the measured defect.
struct DensityDiagnostic {
  enum class Violation { None, Hermiticity, Trace, Positivity };
  Violation violation = Violation::None;
  double defect = 0.0;

  bool ok() const { return violation == Violation::None; }
  std::string describe() const;
};

DensityDiagnostic diagnose_density(const Matrix& m, double tol = kDefaultTol);

// Hermitian, PSD, unit-trace state of a finite system. Immutable value;
// construct through validate_density().
class DensityMatrix {
 public:
  const Matrix& matrix() const { return mat_; }
  Index dim() const { return mat_.rows(); }
  double tol() const { return tol_; }

 private:
  DensityMatrix(Matrix m, double tol) : mat_(std::move(m)), tol_(tol) {}
  friend DensityMatrix validate_density(const Matrix& m, double tol);

  Matrix mat_;
  double tol_;
};

// Returns the validated state or throws validation_error with the
// violated invariant and the measured defect (see diagnose_density for
// the non-throwing variant).
DensityMatrix validate_density(const Matrix& m, double tol = kDefaultTol);

// Joint system ⊗ reservoir evolution. Without a declared bipartition the
// whole matrix is treated as the system (res_dim = 1).
class UnitaryOperator {
 public:
  explicit UnitaryOperator(Matrix m, double tol = kDefaultTol);
  UnitaryOperator(Matrix m, Index sys_dim, Index res_dim,
                  double tol = kDefaultTol);

  const Matrix& matrix() const { return mat_; }
  Index dim() const { return mat_.rows(); }
  Index sys_dim() const { return sys_dim_; }
  Index res_dim() const { return res_dim_; }

 private:
  Matrix mat_;
  Index sys_dim_;
  Index res_dim_;
};

}  // namespace qht
