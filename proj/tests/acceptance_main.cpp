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

// Acceptance suite: every release-gating claim as one pass/fail line.
// Returns the number of failed criteria.

#include "qht/entropy.hpp"
#include "qht/io.hpp"
#include "qht/scenarios.hpp"

#include "json.hpp"
#include "support/generators.hpp"
#include "support/run_cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace qht;
using qht::testing::Rng;
using qht::testing::run_cli;

namespace {

constexpr double kLn2 = 0.6931471805599453;

double shannon2(double p0) {
  double s = 0.0;
  if (p0 > 0.0) s -= p0 * std::log(p0);
  if (p0 < 1.0) s -= (1.0 - p0) * std::log(1.0 - p0);
  return s;
}

Matrix diag2(double a, double b) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

ScenarioParams params_with(double p0, double q0 = 0.5, double eps = 0.0) {
  ScenarioParams params;
  params.p0 = p0;
  params.q0 = q0;
  params.eps = eps;
  return params;
}

Matrix json_to_matrix(const nlohmann::json& rows) {
  const auto n = static_cast<Index>(rows.size());
  Matrix m(n, static_cast<Index>(rows[0].size()));
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      m(i, j) = Complex(rows[i][j][0].get<double>(),
                        rows[i][j][1].get<double>());
  return m;
}

// Failure accumulator: criteria append one explanation per violated check.
struct Check {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      detail << (detail.str().empty() ? "" : "; ") << what;
    }
  }
  void expect_near(double value, double target, double tol,
                   const std::string& what) {
    std::ostringstream os;
    os << what << " = " << value << ", want " << target << " +- " << tol;
    expect(std::abs(value - target) <= tol, os.str());
  }
  void expect_matrix(const Matrix& value, const Matrix& target, double tol,
                     const std::string& what) {
    std::ostringstream os;
    os << what << " deviates by " << max_abs(value - target);
    expect(max_abs(value - target) <= tol, os.str());
  }
};

// 1. Both demon realizations produce Phi(1) = 2|g><g|: defect diag(1,-1)
// through the direct and the commutator route, and the routes agree.
bool criterion_demon_nonunitality(Check& check) {
  const Matrix expected = diag2(1.0, -1.0);
  for (const ExperimentReport& report :
       {semiclassical_demon(params_with(0.5)),
        quantum_demon(params_with(0.5))}) {
    const std::string name(scenario_name(report.scenario_id));
    check.expect_matrix(report.unitality_direct.defect, expected, 1e-12,
                        name + " direct defect");
    check.expect_matrix(report.unitality_commutator.defect, expected, 1e-12,
                        name + " commutator defect");
    check.expect_matrix(report.unitality_direct.defect,
                        report.unitality_commutator.defect, 1e-12,
                        name + " route agreement");
    check.expect(!report.unitality_direct.is_unital &&
                     !report.unitality_commutator.is_unital,
                 name + " must be non-unital");
  }
  return check.ok;
}

// 2. Quantum demon: joint final state |g><g| ⊗ (p0|0><0| + p1|1><1|) and
// the system entropy drops from the initial mixing entropy to zero.
bool criterion_demon_final_state(Check& check) {
  for (double p0 : {0.0, 0.3, 0.5, 0.7, 1.0}) {
    const ExperimentReport report = quantum_demon(params_with(p0));
    const Matrix expected =
        kron(basis_op(2, 0, 0), diag2(p0, 1.0 - p0));
    std::ostringstream tag;
    tag << "p0=" << p0;
    check.expect_matrix(report.joint_final.matrix(), expected, 1e-12,
                        tag.str() + " joint final");
    check.expect_near(report.s_initial, shannon2(p0), 1e-10,
                      tag.str() + " initial entropy");
    check.expect_near(report.s_final, 0.0, 1e-10,
                      tag.str() + " final entropy");
  }
  return check.ok;
}

// 3. Two-qubit exchange: cooling channel non-unital with defect diag(1,-1),
// heating channel unital; entropy changes -ln2/+ln2; joint final state
// |g1><g1| ⊗ (1/2)(|g2><g2| + |e2><e2|).
bool criterion_cool_heat(Check& check) {
  const auto [cooling, heating] = cool_heat();
  check.expect_matrix(cooling.unitality_direct.defect, diag2(1.0, -1.0),
                      1e-12, "cooling direct defect");
  check.expect_matrix(cooling.unitality_commutator.defect, diag2(1.0, -1.0),
                      1e-12, "cooling commutator defect");
  check.expect_matrix(heating.unitality_direct.defect, Matrix::Zero(2, 2),
                      1e-12, "heating direct defect");
  check.expect_matrix(heating.unitality_commutator.defect,
                      Matrix::Zero(2, 2), 1e-12,
                      "heating commutator defect");
  check.expect_near(cooling.delta_s, -kLn2, 1e-10, "cooling delta_s");
  check.expect_near(heating.delta_s, kLn2, 1e-10, "heating delta_s");
  check.expect_matrix(cooling.joint_final.matrix(),
                      kron(basis_op(2, 0, 0), 0.5 * identity(2)), 1e-12,
                      "joint final");
  return check.ok;
}

// 4. Uncorrelated baseline: the system ends in the reservoir populations
// diag(q0, q1) and gains entropy whenever it starts purer.
bool criterion_uncorrelated_baseline(Check& check) {
  for (const auto& [p0, q0] :
       std::vector<std::pair<double, double>>{{0.9, 0.5},
                                              {0.8, 0.6},
                                              {0.1, 0.4}}) {
    const CorrelatedEntropyResult result =
        correlated_entropy_experiment(params_with(p0, q0, 0.0));
    std::ostringstream tag;
    tag << "(p0,q0)=(" << p0 << "," << q0 << ")";
    check.expect_matrix(result.uncorrelated.final_state.matrix(),
                        diag2(q0, 1.0 - q0), 1e-12,
                        tag.str() + " final state");
    check.expect(result.uncorrelated.delta_s > 0.0,
                 tag.str() + " baseline entropy gain must be positive");
  }
  return check.ok;
}

// 5. Second-order expansion: the residual against c1 eps + c2 eps^2 drops
// by ~10^3 per decade of eps, and weak correlations reduce the entropy
// gain on both entropy-ordered parameter grids.
bool criterion_expansion(Check& check) {
  const double r2 = std::abs(
      correlated_entropy_experiment(params_with(0.8, 0.6, 1e-2))
          .expansion.residual);
  const double r3 = std::abs(
      correlated_entropy_experiment(params_with(0.8, 0.6, 1e-3))
          .expansion.residual);
  const double r4 = std::abs(
      correlated_entropy_experiment(params_with(0.8, 0.6, 1e-4))
          .expansion.residual);
  for (const auto& [hi, lo, tag] :
       std::vector<std::tuple<double, double, const char*>>{
           {r2, r3, "r(1e-2)/r(1e-3)"}, {r3, r4, "r(1e-3)/r(1e-4)"}}) {
    std::ostringstream os;
    os << tag << " = " << hi / lo << ", want within [500, 2000]";
    check.expect(hi / lo >= 500.0 && hi / lo <= 2000.0, os.str());
  }

  const std::vector<std::pair<double, double>> grids = {
      {0.7, 0.5},  {0.8, 0.6}, {0.9, 0.5}, {0.95, 0.7},  // p0 > q0 >= 1/2
      {0.3, 0.5},  {0.2, 0.4}, {0.1, 0.5}, {0.05, 0.3}};  // p0 < q0 <= 1/2
  for (const auto& [p0, q0] : grids) {
    for (double eps : {1e-2, 1e-3, 1e-4}) {
      const double diff =
          correlated_entropy_experiment(params_with(p0, q0, eps))
              .expansion.exact_diff;
      std::ostringstream os;
      os << "exact_diff(" << p0 << "," << q0 << "," << eps << ") = " << diff
         << ", want < 0";
      check.expect(diff < 0.0, os.str());
    }
  }
  return check.ok;
}

// 6. eps = 0 degeneracy: the correlated branch collapses onto the
// uncorrelated one in every numeric field.
bool criterion_eps_zero(Check& check) {
  for (const auto& [p0, q0] :
       std::vector<std::pair<double, double>>{{0.8, 0.6}, {0.3, 0.5}}) {
    const CorrelatedEntropyResult result =
        correlated_entropy_experiment(params_with(p0, q0, 0.0));
    const ExperimentReport& unc = result.uncorrelated;
    const ExperimentReport& cor = result.correlated;
    std::ostringstream tag;
    tag << "(p0,q0)=(" << p0 << "," << q0 << ") ";
    check.expect_near(cor.s_initial, unc.s_initial, 1e-14,
                      tag.str() + "s_initial");
    check.expect_near(cor.s_final, unc.s_final, 1e-14, tag.str() + "s_final");
    check.expect_near(cor.delta_s, unc.delta_s, 1e-14, tag.str() + "delta_s");
    check.expect_matrix(cor.initial_state.matrix(),
                        unc.initial_state.matrix(), 1e-14,
                        tag.str() + "initial state");
    check.expect_matrix(cor.final_state.matrix(), unc.final_state.matrix(),
                        1e-14, tag.str() + "final state");
    check.expect_matrix(cor.joint_final.matrix(), unc.joint_final.matrix(),
                        1e-14, tag.str() + "joint final");
    check.expect_near(result.expansion.exact_diff, 0.0, 1e-14,
                      tag.str() + "exact_diff");
    check.expect_near(result.expansion.expansion_diff, 0.0, 1e-14,
                      tag.str() + "expansion_diff");
    check.expect_near(result.expansion.residual, 0.0, 1e-14,
                      tag.str() + "residual");
  }
  return check.ok;
}

// 7. Property suite: unital channels never lower the entropy; Stinespring
// constructions are CPTP; the direct and commutator unitality routes agree
// on random dilations.
bool criterion_property_suite(Check& check) {
  Rng rng(20260401);

  int entropy_violations = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Index dim = 2 + static_cast<Index>(trial % 3);
    const QuantumChannel channel =
        qht::testing::random_unital_channel(dim, rng);
    const DensityMatrix rho = qht::testing::random_density(dim, rng);
    if (entropy_change(channel, rho) < -1e-9) ++entropy_violations;
  }
  check.expect(entropy_violations == 0,
               std::to_string(entropy_violations) +
                   " of 1000 unital channels decreased entropy");

  int cptp_violations = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const Index sys_dim = 2 + static_cast<Index>(trial % 2);
    const Index res_dim = 2 + static_cast<Index>((trial / 2) % 2);
    const UnitaryOperator u(
        qht::testing::random_unitary(sys_dim * res_dim, rng), sys_dim,
        res_dim);
    const DensityMatrix pi0 = qht::testing::random_density(res_dim, rng);
    const QuantumChannel channel = stinespring_channel(u, pi0);
    if (is_trace_preserving(channel).defect > 1e-10) ++cptp_violations;
    if (hermitian_eigenvalues(choi_matrix(channel)).front() < -1e-9)
      ++cptp_violations;
  }
  check.expect(cptp_violations == 0,
               std::to_string(cptp_violations) +
                   " CPTP violations across 120 Stinespring channels");

  double worst_disagreement = 0.0;
  for (int trial = 0; trial < 120; ++trial) {
    const Index sys_dim = 2 + static_cast<Index>(trial % 2);
    const Index res_dim = 2 + static_cast<Index>((trial / 2) % 2);
    const UnitaryOperator u(
        qht::testing::random_unitary(sys_dim * res_dim, rng), sys_dim,
        res_dim);
    const DensityMatrix pi0 = qht::testing::random_density(res_dim, rng);
    const double gap = max_abs(
        unitality_defect_direct(stinespring_channel(u, pi0)).defect -
        unitality_defect_commutator(extract_f_operators(u), pi0).defect);
    worst_disagreement = std::max(worst_disagreement, gap);
  }
  std::ostringstream os;
  os << "worst direct/commutator disagreement " << worst_disagreement;
  check.expect(worst_disagreement <= 1e-10, os.str());
  return check.ok;
}

// 8. CLI contract: the shell commands reproduce the scenario results with
// exit code 0, and a malformed channel file exits with code 2.
bool criterion_cli_contract(Check& check) {
  // Demon defects through both routes (criterion 1 from the shell).
  for (const std::string variant : {"semiclassical", "quantum"}) {
    const auto result =
        run_cli("demon --variant " + variant + " --p0 0.5 --format json");
    check.expect(result.exit_code == 0, variant + " demon exit code");
    if (result.exit_code != 0) continue;
    const auto doc = nlohmann::json::parse(result.output);
    const auto& rec = doc["records"][0];
    check.expect_matrix(json_to_matrix(rec["defect_matrix_direct"]),
                        diag2(1.0, -1.0), 1e-12,
                        variant + " CLI direct defect");
    check.expect_matrix(json_to_matrix(rec["defect_matrix_commutator"]),
                        diag2(1.0, -1.0), 1e-12,
                        variant + " CLI commutator defect");
  }

  // Joint final state and entropy erasure per p0 (criterion 2).
  for (double p0 : {0.0, 0.3, 0.5, 0.7, 1.0}) {
    std::ostringstream cmd;
    cmd << "demon --variant quantum --p0 " << p0 << " --format json";
    const auto result = run_cli(cmd.str());
    check.expect(result.exit_code == 0, "quantum demon exit code");
    if (result.exit_code != 0) continue;
    const auto rec = nlohmann::json::parse(result.output)["records"][0];
    check.expect_matrix(json_to_matrix(rec["joint_final"]),
                        kron(basis_op(2, 0, 0), diag2(p0, 1.0 - p0)), 1e-12,
                        "CLI joint final");
    check.expect(std::abs(rec["s_final"].get<double>()) <= 1e-10 &&
                     std::abs(rec["s_initial"].get<double>() -
                              shannon2(p0)) <= 1e-10,
                 "CLI demon entropy fields");
  }

  // Cooling/heating rows (criterion 3).
  {
    const auto result = run_cli("coolheat --format json");
    check.expect(result.exit_code == 0, "coolheat exit code");
    if (result.exit_code == 0) {
      const auto recs = nlohmann::json::parse(result.output)["records"];
      check.expect(recs.size() == 2, "coolheat record count");
      check.expect_near(recs[0]["delta_s"].get<double>(), -kLn2, 1e-10,
                        "CLI cooling delta_s");
      check.expect_near(recs[1]["delta_s"].get<double>(), kLn2, 1e-10,
                        "CLI heating delta_s");
      check.expect(!recs[0]["unital"].get<bool>() &&
                       recs[1]["unital"].get<bool>(),
                   "CLI cool/heat unitality verdicts");
      check.expect_matrix(json_to_matrix(recs[0]["joint_final"]),
                          kron(basis_op(2, 0, 0), 0.5 * identity(2)), 1e-12,
                          "CLI coolheat joint final");
    }
  }

  // Baseline and eps = 0 degeneracy (criteria 4 and 6).
  {
    const auto result = run_cli(
        "correlations --p0 0.9 --q0 0.5 --eps 0 --format json");
    check.expect(result.exit_code == 0, "correlations exit code");
    if (result.exit_code == 0) {
      const auto recs = nlohmann::json::parse(result.output)["records"];
      check.expect(recs.size() == 2, "correlations record count");
      check.expect_matrix(json_to_matrix(recs[0]["final_state"]),
                          diag2(0.5, 0.5), 1e-12, "CLI baseline final");
      check.expect(recs[0]["delta_s"].get<double>() > 0.0,
                   "CLI baseline entropy gain");
      for (const char* field : {"s_initial", "s_final", "delta_s"})
        check.expect_near(recs[1][field].get<double>(),
                          recs[0][field].get<double>(), 1e-14,
                          std::string("CLI eps=0 field ") + field);
    }
  }

  // Expansion residual decade ratios via a sweep (criterion 5).
  {
    const auto result = run_cli(
        "correlations --p0 0.8 --q0 0.6 "
        "--sweep eps:0.0001:0.01:3:log --format json");
    check.expect(result.exit_code == 0, "correlations sweep exit code");
    if (result.exit_code == 0) {
      const auto recs = nlohmann::json::parse(result.output)["records"];
      std::vector<double> residuals;
      std::vector<double> diffs;
      for (const auto& rec : recs)
        if (rec["scenario"] == "correlated") {
          residuals.push_back(std::abs(rec["residual"].get<double>()));
          diffs.push_back(rec["exact_diff"].get<double>());
        }
      check.expect(residuals.size() == 3, "swept correlated record count");
      if (residuals.size() == 3) {
        const double ratio_a = residuals[1] / residuals[0];
        const double ratio_b = residuals[2] / residuals[1];
        // eps ascending, so each step multiplies the residual by ~10^3.
        check.expect(ratio_a >= 500.0 && ratio_a <= 2000.0,
                     "CLI residual ratio eps 1e-4 -> 1e-3");
        check.expect(ratio_b >= 500.0 && ratio_b <= 2000.0,
                     "CLI residual ratio eps 1e-3 -> 1e-2");
        check.expect(diffs[0] < 0.0 && diffs[1] < 0.0 && diffs[2] < 0.0,
                     "CLI swept exact_diff signs");
      }
    }
  }

  // Same sign claim on the other side of the entropy ordering.
  {
    const auto result = run_cli(
        "correlations --p0 0.2 --q0 0.4 --eps 0.01 --format json");
    check.expect(result.exit_code == 0, "below-grid correlations exit code");
    if (result.exit_code == 0) {
      const auto recs = nlohmann::json::parse(result.output)["records"];
      check.expect(recs[1]["exact_diff"].get<double>() < 0.0,
                   "CLI below-grid exact_diff sign");
    }
  }

  // Malformed channel file: exit code 2 plus a diagnostic.
  {
    const auto path =
        std::filesystem::temp_directory_path() / "qht_acceptance_bad.json";
    std::ofstream out(path);
    out << "{ definitely not a channel";
    out.close();
    const auto result = run_cli("check-channel " + path.string());
    check.expect(result.exit_code == 2,
                 "malformed channel file must exit with code 2");
    check.expect(result.output.find("error") != std::string::npos,
                 "malformed channel file must print a diagnostic");
    std::filesystem::remove(path);
  }
  return check.ok;
}

struct Criterion {
  int number;
  std::string label;
  std::function<bool(Check&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "demon channels are non-unital with Phi(1)=2|g><g| via both routes",
       criterion_demon_nonunitality},
      {2, "quantum demon erases the system entropy into the ancilla",
       criterion_demon_final_state},
      {3, "two-qubit exchange cools qubit 1 and heats qubit 2",
       criterion_cool_heat},
      {4, "uncorrelated baseline adopts the reservoir populations",
       criterion_uncorrelated_baseline},
      {5, "weak-correlation expansion is second-order accurate",
       criterion_expansion},
      {6, "eps=0 collapses the correlated branch onto the baseline",
       criterion_eps_zero},
      {7, "randomized property suite (H-theorem, CPTP, route agreement)",
       criterion_property_suite},
      {8, "CLI contract reproduces the scenario results from the shell",
       criterion_cli_contract},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    Check check;
    bool ok = false;
    std::string error;
    try {
      ok = criterion.run(check);
    } catch (const std::exception& e) {
      ok = false;
      error = e.what();
    }
    if (ok) {
      std::cout << "[PASS] criterion " << criterion.number << ": "
                << criterion.label << "\n";
    } else {
      ++failures;
      std::cout << "[FAIL] criterion " << criterion.number << ": "
                << criterion.label;
      if (!check.detail.str().empty())
        std::cout << " -- " << check.detail.str();
      if (!error.empty()) std::cout << " -- exception: " << error;
      std::cout << "\n";
    }
  }
  if (failures == 0)
    std::cout << "all " << criteria.size() << " criteria passed\n";
  else
    std::cout << failures << " of " << criteria.size()
              << " criteria failed\n";
  return failures;
}
