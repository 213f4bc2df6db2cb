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

#include "qht/linalg.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <sstream>

namespace qht {

namespace {

void require_square(const Matrix& m, const char* who) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    std::ostringstream os;
    os << who << ": matrix must be square with dim >= 1, got " << m.rows()
       << "x" << m.cols();
    throw std::invalid_argument(os.str());
  }
}

void require_finite(const Matrix& m, const char* who) {
  if (!all_finite(m)) {
    throw std::invalid_argument(std::string(who) +
                                ": matrix has non-finite entries");
  }
}

}  // namespace

// --------------------------- elementary operators ---------------------------

Matrix identity(Index dim) {
  if (dim < 1) throw std::invalid_argument("identity: dim must be >= 1");
  return Matrix::Identity(dim, dim);
}

Vector basis_ket(Index dim, Index i) {
  if (dim < 1) throw std::invalid_argument("basis_ket: dim must be >= 1");
  if (i < 0 || i >= dim)
    throw std::out_of_range("basis_ket: index out of range");
  Vector v = Vector::Zero(dim);
  v(i) = 1.0;
  return v;
}

Matrix basis_op(Index dim, Index i, Index j) {
  if (dim < 1) throw std::invalid_argument("basis_op: dim must be >= 1");
  if (i < 0 || i >= dim || j < 0 || j >= dim)
    throw std::out_of_range("basis_op: index out of range");
  Matrix m = Matrix::Zero(dim, dim);
  m(i, j) = 1.0;
  return m;
}

Matrix sigma_x() {
  Matrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

Matrix sigma_y() {
  Matrix m(2, 2);
  m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
  return m;
}

Matrix sigma_z() {
  Matrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

// --------------------------- entrywise measures -----------------------------

double max_abs(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

bool all_finite(const Matrix& m) { return m.allFinite(); }

double hermiticity_defect(const Matrix& m) {
  return max_abs(m - m.adjoint());
}

double unitarity_defect(const Matrix& m) {
  return max_abs(m.adjoint() * m - Matrix::Identity(m.cols(), m.cols()));
}

// --------------------------- core operations --------------------------------

Matrix dagger(const Matrix& m) { return m.adjoint(); }

Matrix kron(const Matrix& a, const Matrix& b) {
  require_square(a, "kron");
  require_square(b, "kron");
  require_finite(a, "kron");
  require_finite(b, "kron");
  const Index da = a.rows();
  const Index db = b.rows();
  Matrix out(da * db, da * db);
  for (Index i = 0; i < da; ++i)
    for (Index j = 0; j < da; ++j)
      out.block(i * db, j * db, db, db) = a(i, j) * b;
  return out;
}

Matrix partial_trace(const Matrix& m, Index sys_dim, Index res_dim,
                     Keep keep) {
  if (sys_dim < 1 || res_dim < 1)
    throw std::invalid_argument("partial_trace: dims must be >= 1");
  require_square(m, "partial_trace");
  if (m.rows() != sys_dim * res_dim) {
    std::ostringstream os;
    os << "partial_trace: matrix dim " << m.rows() << " != sys_dim*res_dim = "
       << sys_dim * res_dim;
    throw std::invalid_argument(os.str());
  }
  if (keep == Keep::System) {
    Matrix out = Matrix::Zero(sys_dim, sys_dim);
    for (Index i = 0; i < sys_dim; ++i)
      for (Index j = 0; j < sys_dim; ++j) {
        Complex sum = 0.0;
        for (Index r = 0; r < res_dim; ++r)
          sum += m(i * res_dim + r, j * res_dim + r);
        out(i, j) = sum;
      }
    return out;
  }
  Matrix out = Matrix::Zero(res_dim, res_dim);
  for (Index i = 0; i < res_dim; ++i)
    for (Index j = 0; j < res_dim; ++j) {
      Complex sum = 0.0;
      for (Index s = 0; s < sys_dim; ++s)
        sum += m(s * res_dim + i, s * res_dim + j);
      out(i, j) = sum;
    }
  return out;
}

Matrix swap_factors(const Matrix& m, Index dim_a, Index dim_b) {
  if (dim_a < 1 || dim_b < 1)
    throw std::invalid_argument("swap_factors: dims must be >= 1");
  require_square(m, "swap_factors");
  if (m.rows() != dim_a * dim_b)
    throw std::invalid_argument("swap_factors: matrix dim != dim_a*dim_b");
  Matrix out(m.rows(), m.cols());
  for (Index a1 = 0; a1 < dim_a; ++a1)
    for (Index b1 = 0; b1 < dim_b; ++b1)
      for (Index a2 = 0; a2 < dim_a; ++a2)
        for (Index b2 = 0; b2 < dim_b; ++b2)
          out(b1 * dim_a + a1, b2 * dim_a + a2) =
              m(a1 * dim_b + b1, a2 * dim_b + b2);
  return out;
}

std::vector<double> hermitian_eigenvalues(const Matrix& m, double tol) {
  require_square(m, "hermitian_eigenvalues");
  require_finite(m, "hermitian_eigenvalues");
  const double defect = hermiticity_defect(m);
  if (defect > tol) {
    std::ostringstream os;
    os << "hermitian_eigenvalues: non-Hermitian input, defect " << defect;
    throw std::invalid_argument(os.str());
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m,
                                               Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("hermitian_eigenvalues: eigensolver failed");
  const auto& evs = solver.eigenvalues();
  return std::vector<double>(evs.data(), evs.data() + evs.size());
}

// --------------------------- validated value types --------------------------

std::string DensityDiagnostic::describe() const {
  std::ostringstream os;
  switch (violation) {
    case Violation::None:
      os << "valid density matrix";
      break;
    case Violation::Hermiticity:
      os << "hermiticity violation, defect " << defect;
      break;
    case Violation::Trace:
      os << "trace violation, defect " << defect;
      break;
    case Violation::Positivity:
      os << "positivity violation, defect " << defect;
      break;
  }
  return os.str();
}

DensityDiagnostic diagnose_density(const Matrix& m, double tol) {
  require_square(m, "diagnose_density");
  require_finite(m, "diagnose_density");

  const double herm = hermiticity_defect(m);
  if (herm > tol)
    return {DensityDiagnostic::Violation::Hermiticity, herm};

  const double trace_defect = std::abs(m.trace() - Complex(1.0));
  if (trace_defect > tol)
    return {DensityDiagnostic::Violation::Trace, trace_defect};

  // Hermitize before the spectral check so roundoff in the off-diagonal
  // entries cannot trip the eigensolver's input contract.
  const Matrix h = 0.5 * (m + m.adjoint());
  const auto evs = hermitian_eigenvalues(h, tol);
  const double min_ev = evs.front();
  if (min_ev < -tol)
    return {DensityDiagnostic::Violation::Positivity, -min_ev};

  return {};
}

DensityMatrix validate_density(const Matrix& m, double tol) {
  const DensityDiagnostic diag = diagnose_density(m, tol);
  if (!diag.ok())
    throw validation_error("validate_density: " + diag.describe());
  return DensityMatrix(m, tol);
}

namespace {

void check_unitary(const Matrix& m, double tol) {
  require_square(m, "UnitaryOperator");
  require_finite(m, "UnitaryOperator");
  const double defect = unitarity_defect(m);
  if (defect > tol) {
    std::ostringstream os;
    os << "UnitaryOperator: unitarity violation, defect " << defect;
    throw validation_error(os.str());
  }
}

}  // namespace

UnitaryOperator::UnitaryOperator(Matrix m, double tol)
    : mat_(std::move(m)), sys_dim_(0), res_dim_(1) {
  check_unitary(mat_, tol);
  sys_dim_ = mat_.rows();
}

UnitaryOperator::UnitaryOperator(Matrix m, Index sys_dim, Index res_dim,
                                 double tol)
    : mat_(std::move(m)), sys_dim_(sys_dim), res_dim_(res_dim) {
  if (sys_dim_ < 1 || res_dim_ < 1)
    throw std::invalid_argument("UnitaryOperator: dims must be >= 1");
  if (mat_.rows() != sys_dim_ * res_dim_)
    throw std::invalid_argument(
        "UnitaryOperator: matrix dim != sys_dim*res_dim");
  check_unitary(mat_, tol);
}

}  // namespace qht
