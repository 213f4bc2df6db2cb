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

#include "qht/channels.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <sstream>
#include <utility>

namespace qht {

namespace {

void check_kraus_shape(const std::vector<Matrix>& kraus) {
  if (kraus.empty())
    throw std::invalid_argument("QuantumChannel: empty Kraus family");
  const Index dim = kraus.front().rows();
  for (const Matrix& k : kraus) {
    if (k.rows() != k.cols())
      throw std::invalid_argument("QuantumChannel: non-square Kraus operator");
    if (k.rows() != dim)
      throw std::invalid_argument(
          "QuantumChannel: inconsistent Kraus dimensions");
    if (!all_finite(k))
      throw std::invalid_argument(
          "QuantumChannel: Kraus operator has non-finite entries");
  }
}

double completeness_defect(const std::vector<Matrix>& kraus) {
  const Index dim = kraus.front().rows();
  Matrix sum = Matrix::Zero(dim, dim);
  for (const Matrix& k : kraus) sum += k.adjoint() * k;
  return max_abs(sum - Matrix::Identity(dim, dim));
}

UnitalityReport make_report(Matrix defect, UnitalityMethod method,
                            double tol) {
  const double max_defect = max_abs(defect);
  return {std::move(defect), max_defect, max_defect <= tol, method};
}

}  // namespace

QuantumChannel::QuantumChannel(std::vector<Matrix> kraus_ops, double tol) {
  check_kraus_shape(kraus_ops);
  const double defect = completeness_defect(kraus_ops);
  if (defect > tol) {
    std::ostringstream os;
    os << "QuantumChannel: not trace preserving, defect " << defect;
    throw validation_error(os.str());
  }
  kraus_ = std::move(kraus_ops);
  dim_ = kraus_.front().rows();
}

QuantumChannel QuantumChannel::unchecked(std::vector<Matrix> kraus_ops) {
  check_kraus_shape(kraus_ops);
  QuantumChannel channel;
  channel.dim_ = kraus_ops.front().rows();
  channel.kraus_ = std::move(kraus_ops);
  return channel;
}

// --------------------------- construction -----------------------------------

QuantumChannel stinespring_channel(const UnitaryOperator& u,
                                   const DensityMatrix& pi0,
                                   double weight_cutoff) {
  const Index ds = u.sys_dim();
  const Index dr = u.res_dim();
  if (pi0.dim() != dr) {
    std::ostringstream os;
    os << "stinespring_channel: reservoir state dim " << pi0.dim()
       << " != unitary res_dim " << dr;
    throw std::invalid_argument(os.str());
  }

  Eigen::SelfAdjointEigenSolver<Matrix> solver(pi0.matrix());
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("stinespring_channel: eigensolver failed");

  std::vector<Matrix> kraus;
  for (Index k = 0; k < dr; ++k) {
    const double weight = solver.eigenvalues()(k);
    if (weight < weight_cutoff) continue;
    const Vector ket = solver.eigenvectors().col(k);
    const double scale = std::sqrt(weight);
    for (Index m = 0; m < dr; ++m) {
      // <m|U|k> as a sys_dim x sys_dim block.
      Matrix block = Matrix::Zero(ds, ds);
      for (Index a = 0; a < ds; ++a)
        for (Index b = 0; b < ds; ++b) {
          Complex sum = 0.0;
          for (Index r = 0; r < dr; ++r)
            sum += u.matrix()(a * dr + m, b * dr + r) * ket(r);
          block(a, b) = scale * sum;
        }
      kraus.push_back(std::move(block));
    }
  }
  if (kraus.empty())
    throw validation_error(
        "stinespring_channel: all reservoir weights below cutoff");
  return QuantumChannel(std::move(kraus));
}

QuantumChannel measurement_feedback_channel(
    const std::vector<Matrix>& projectors,
    const std::vector<UnitaryOperator>& feedbacks) {
  if (projectors.empty())
    throw std::invalid_argument(
        "measurement_feedback_channel: empty projector family");
  if (projectors.size() != feedbacks.size())
    throw std::invalid_argument(
        "measurement_feedback_channel: projector/feedback count mismatch");

  const Index dim = projectors.front().rows();
  Matrix completeness = Matrix::Zero(dim, dim);
  for (std::size_t a = 0; a < projectors.size(); ++a) {
    const Matrix& p = projectors[a];
    if (p.rows() != dim || p.cols() != dim)
      throw std::invalid_argument(
          "measurement_feedback_channel: inconsistent projector dims");
    if (feedbacks[a].dim() != dim)
      throw std::invalid_argument(
          "measurement_feedback_channel: feedback dim mismatch");
    completeness += p;
    for (std::size_t b = 0; b < projectors.size(); ++b) {
      const Matrix product = p * projectors[b];
      const Matrix expected = (a == b) ? p : Matrix::Zero(dim, dim);
      if (max_abs(product - expected) > kDefaultTol)
        throw std::invalid_argument(
            "measurement_feedback_channel: projectors not orthogonal");
    }
  }
  if (max_abs(completeness - Matrix::Identity(dim, dim)) > kDefaultTol)
    throw std::invalid_argument(
        "measurement_feedback_channel: projector family incomplete");

  std::vector<Matrix> kraus;
  kraus.reserve(projectors.size());
  for (std::size_t a = 0; a < projectors.size(); ++a)
    kraus.push_back(feedbacks[a].matrix() * projectors[a]);
  return QuantumChannel(std::move(kraus));
}

// --------------------------- application ------------------------------------

Matrix apply_to_operator(const QuantumChannel& channel, const Matrix& m) {
  if (m.rows() != channel.dim() || m.cols() != channel.dim())
    throw std::invalid_argument("apply_to_operator: dimension mismatch");
  Matrix out = Matrix::Zero(channel.dim(), channel.dim());
  for (const Matrix& k : channel.kraus_ops()) out += k * m * k.adjoint();
  return out;
}

DensityMatrix apply(const QuantumChannel& channel, const DensityMatrix& rho) {
  if (rho.dim() != channel.dim())
    throw std::invalid_argument("apply: channel/state dimension mismatch");
  const Matrix out = apply_to_operator(channel, rho.matrix());
  const DensityDiagnostic diag = diagnose_density(out, rho.tol());
  if (!diag.ok())
    throw validation_error("apply: channel output is not a density matrix (" +
                           diag.describe() + ")");
  return validate_density(out, rho.tol());
}

// --------------------------- classification ---------------------------------

FOperatorFamily extract_f_operators(const UnitaryOperator& u) {
  return extract_f_operators(u, identity(u.sys_dim()));
}

FOperatorFamily extract_f_operators(const UnitaryOperator& u,
                                    const Matrix& sys_basis) {
  const Index ds = u.sys_dim();
  const Index dr = u.res_dim();
  if (sys_basis.rows() != ds || sys_basis.cols() != ds)
    throw std::invalid_argument("extract_f_operators: basis shape mismatch");
  if (max_abs(sys_basis.adjoint() * sys_basis - Matrix::Identity(ds, ds)) >
      kDefaultTol)
    throw std::invalid_argument("extract_f_operators: basis not orthonormal");

  FOperatorFamily family;
  family.sys_dim = ds;
  family.res_dim = dr;
  family.sys_basis = sys_basis;
  family.ops.resize(static_cast<std::size_t>(ds) * ds);
  for (Index j = 0; j < ds; ++j) {
    // <psi_j| ⊗ 1_res as a res_dim x (ds*dr) map.
    Matrix bra = Matrix::Zero(dr, ds * dr);
    for (Index a = 0; a < ds; ++a)
      bra.block(0, a * dr, dr, dr) =
          std::conj(sys_basis(a, j)) * Matrix::Identity(dr, dr);
    for (Index i = 0; i < ds; ++i) {
      Matrix ket = Matrix::Zero(ds * dr, dr);
      for (Index b = 0; b < ds; ++b)
        ket.block(b * dr, 0, dr, dr) =
            sys_basis(b, i) * Matrix::Identity(dr, dr);
      family.f(j, i) = bra * u.matrix() * ket;
    }
  }

  // Reconstruction invariant: sum_{ij} |psi_j><psi_i| ⊗ F_ji = U.
  Matrix rebuilt = Matrix::Zero(ds * dr, ds * dr);
  for (Index j = 0; j < ds; ++j)
    for (Index i = 0; i < ds; ++i)
      rebuilt += kron(sys_basis.col(j) * sys_basis.col(i).adjoint(),
                      family.f(j, i));
  if (max_abs(rebuilt - u.matrix()) > 1e-12)
    throw validation_error(
        "extract_f_operators: family does not reconstruct the unitary");
  return family;
}

UnitalityReport unitality_defect_commutator(const FOperatorFamily& f,
                                            const DensityMatrix& pi0,
                                            double tol) {
  if (pi0.dim() != f.res_dim)
    throw std::invalid_argument(
        "unitality_defect_commutator: reservoir dimension mismatch");
  Matrix defect = Matrix::Zero(f.sys_dim, f.sys_dim);
  for (Index j = 0; j < f.sys_dim; ++j)
    for (Index jp = 0; jp < f.sys_dim; ++jp) {
      Complex entry = 0.0;
      for (Index i = 0; i < f.sys_dim; ++i) {
        const Matrix& fji = f.f(j, i);
        const Matrix fjpi_dag = f.f(jp, i).adjoint();
        entry += (pi0.matrix() * (fjpi_dag * fji - fji * fjpi_dag)).trace();
      }
      defect(j, jp) = entry;
    }
  return make_report(std::move(defect), UnitalityMethod::Commutator, tol);
}

UnitalityReport unitality_defect_direct(const QuantumChannel& channel,
                                        double tol) {
  Matrix sum = Matrix::Zero(channel.dim(), channel.dim());
  for (const Matrix& k : channel.kraus_ops()) sum += k * k.adjoint();
  sum -= Matrix::Identity(channel.dim(), channel.dim());
  return make_report(std::move(sum), UnitalityMethod::Direct, tol);
}

Matrix choi_matrix(const std::function<Matrix(const Matrix&)>& map,
                   Index dim) {
  if (dim < 1) throw std::invalid_argument("choi_matrix: dim must be >= 1");
  Matrix choi = Matrix::Zero(dim * dim, dim * dim);
  for (Index i = 0; i < dim; ++i)
    for (Index j = 0; j < dim; ++j) {
      const Matrix image = map(basis_op(dim, i, j));
      if (image.rows() != dim || image.cols() != dim)
        throw std::invalid_argument("choi_matrix: map changes dimension");
      choi.block(i * dim, j * dim, dim, dim) = image;
    }
  return choi;
}

Matrix choi_matrix(const QuantumChannel& channel) {
  return choi_matrix(
      [&channel](const Matrix& m) { return apply_to_operator(channel, m); },
      channel.dim());
}

TracePreservationReport is_trace_preserving(const QuantumChannel& channel,
                                            double tol) {
  const double defect = completeness_defect(channel.kraus_ops());
  return {defect <= tol, defect};
}

}  // namespace qht
