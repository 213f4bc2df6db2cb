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

// scenarios.hpp — Reproducible qubit experiments: a Maxwell demon acting on
// a qubit (measurement-feedback and fully unitary realizations), two-qubit
// cooling/heating, and entropy growth under weak initial classical
// correlations with its second-order expansion in the correlation strength.
//
// Basis identification throughout: system |g> = row 0, |e> = row 1;
// reservoir/demon |0> = row 0, |1> = row 1.

#pragma once

#include "qht/channels.hpp"
#include "qht/entropy.hpp"
#include "qht/linalg.hpp"

#include <string_view>
#include <utility>

namespace qht {

struct ScenarioParams {
  double p0 = 0.5;   // system ground-state population
  double q0 = 0.5;   // reservoir |0> population
  double eps = 0.0;  // classical-correlation strength

  double p1() const { return 1.0 - p0; }
  double q1() const { return 1.0 - q0; }
};

// Throws std::invalid_argument naming the offending field.
void validate_params(const ScenarioParams& params);

enum class ScenarioId {
  SemiclassicalDemon,
  QuantumDemon,
  CoolingQubit1,
  HeatingQubit2,
  CorrelationBaseline,
  Correlated,
};

std::string_view scenario_name(ScenarioId id);

struct ExperimentReport {
  ScenarioId scenario_id;
  ScenarioParams params;
  DensityMatrix initial_state;  // reduced, system side
  DensityMatrix final_state;    // reduced, system side
  DensityMatrix joint_final;    // system ⊗ reservoir ordering of this report
  double s_initial = 0.0;
  double s_final = 0.0;
  double delta_s = 0.0;
  UnitalityReport unitality_direct;
  UnitalityReport unitality_commutator;
};

struct ExpansionResult {
  double c1 = 0.0;              // first-order coefficient in eps
  double c2 = 0.0;              // second-order coefficient
  double exact_diff = 0.0;      // S_f(eps) - S_f(0)
  double expansion_diff = 0.0;  // c1*eps + c2*eps^2
  double residual = 0.0;        // exact_diff - expansion_diff
};

// The joint demon/exchange unitary on qubit ⊗ ancilla,
//   |g><g|⊗|0><0| + |g><e|⊗|1><0| + |e><g|⊗|1><1| + |e><e|⊗|0><1|;
// the measurement step followed by the conditional flip, composed.
UnitaryOperator demon_unitary();

// The two realizations of the demon channel. They generate the same map,
// rho -> Tr(rho) |g><g|, through different Kraus families.
QuantumChannel semiclassical_demon_channel();
QuantumChannel quantum_demon_channel();

// Demon as projective measurement plus conditional feedback: measure
// {|g>,|e>}, flip on |e>. Drives any diagonal state to |g><g|, so the
// channel is non-unital with Phi(1) = 2|g><g|. The commutator-route verdict
// is evaluated on the unitary demon realization, which generates the same
// channel.
ExperimentReport semiclassical_demon(const ScenarioParams& params,
                                     double tol = kDefaultTol);

// Same demon as a joint unitary on qubit ⊗ demon-qubit with the demon
// starting in |0><0|; the joint final state is |g><g| ⊗ (p0|0><0| +
// p1|1><1|).
ExperimentReport quantum_demon(const ScenarioParams& params,
                               double tol = kDefaultTol);

// Two qubits, initial state (1/2)·1 ⊗ |g><g|, exchanged by demon_unitary():
// qubit 1 cools to |g><g| (non-unital channel, ΔS = -ln 2), qubit 2 heats
// to the maximally mixed state (unital channel, ΔS = +ln 2).
std::pair<ExperimentReport, ExperimentReport> cool_heat(
    double tol = kDefaultTol);

struct CorrelatedEntropyResult {
  ExperimentReport uncorrelated;
  ExperimentReport correlated;
  ExpansionResult expansion;
};

// Entropy growth with and without weak initial classical correlations of
// strength eps between system and reservoir, evolved by demon_unitary().
// The unitality reports in both branches describe the channel generated by
// the unitary with the uncorrelated reservoir state diag(q0, q1); the
// correlated evolution itself has no channel description.
CorrelatedEntropyResult correlated_entropy_experiment(
    const ScenarioParams& params, double tol = kDefaultTol);

// Expansion of S_f(eps) - S_f(0) to second order:
//   c1 = (q0 - p0) ln(q0/(1-q0)),  c2 = -(p0 - q0)^2 / (2 q0 (1-q0)).
// q0 must lie strictly inside (0,1); the endpoints are singular.
std::pair<double, double> expansion_coefficients(double p0, double q0);

}  // namespace qht
