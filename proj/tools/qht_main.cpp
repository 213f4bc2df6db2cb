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

// qht — command-line experiment runner. Exit codes: 0 success, 1 parameter
// or domain error, 2 file/parse error, 3 internal invariant violation.

#include "CLI11.hpp"

#include "qht/entropy.hpp"
#include "qht/io.hpp"
#include "qht/scenarios.hpp"
#include "qht/version.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace qht;

struct SweepSpec {
  std::string parameter;
  std::vector<double> values;
};

std::vector<std::string> split(const std::string& text, char delim) {
  std::vector<std::string> parts;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, delim)) parts.push_back(token);
  return parts;
}

double parse_number(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const double value = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw std::invalid_argument("--sweep: cannot parse " + what + " '" +
                                text + "'");
  }
}

// <param>:<start>:<stop>:<count>[:log]
SweepSpec parse_sweep(const std::string& text,
                      const std::vector<std::string>& allowed) {
  const auto parts = split(text, ':');
  if (parts.size() != 4 && parts.size() != 5)
    throw std::invalid_argument(
        "--sweep: expected <param>:<start>:<stop>:<count>[:log]");
  SweepSpec spec;
  spec.parameter = parts[0];
  if (std::find(allowed.begin(), allowed.end(), spec.parameter) ==
      allowed.end()) {
    std::string names;
    for (const auto& name : allowed)
      names += (names.empty() ? "" : ", ") + name;
    throw std::invalid_argument("--sweep: parameter '" + spec.parameter +
                                "' not sweepable here (allowed: " + names +
                                ")");
  }
  const double start = parse_number(parts[1], "start");
  const double stop = parse_number(parts[2], "stop");
  const double count_raw = parse_number(parts[3], "count");
  const auto count = static_cast<long>(count_raw);
  if (count < 1 || static_cast<double>(count) != count_raw)
    throw std::invalid_argument("--sweep: count must be a positive integer");
  bool log_grid = false;
  if (parts.size() == 5) {
    if (parts[4] != "log")
      throw std::invalid_argument("--sweep: trailing token must be 'log'");
    log_grid = true;
  }
  if (log_grid && (start <= 0.0 || stop <= 0.0))
    throw std::invalid_argument("--sweep: log grid needs positive bounds");

  for (long i = 0; i < count; ++i) {
    const double t =
        count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
    const double value = log_grid ? start * std::pow(stop / start, t)
                                  : start + t * (stop - start);
    if (!(value >= 0.0 && value <= 1.0)) {
      std::ostringstream os;
      os << "--sweep: value " << value << " for " << spec.parameter
         << " outside [0, 1]";
      throw std::invalid_argument(os.str());
    }
    spec.values.push_back(value);
  }
  std::sort(spec.values.begin(), spec.values.end());
  return spec;
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw io_error("cannot open output file '" + out_path + "'");
  out << text;
  if (!out) throw io_error("failed writing output file '" + out_path + "'");
}

// --------------------------- subcommands -------------------------------------

struct CommonOptions {
  std::string format = "csv";
  std::string out;
  double tol = kDefaultTol;
  std::string sweep;
};

void add_common(CLI::App* cmd, CommonOptions* opts, bool with_sweep) {
  cmd->add_option("--format", opts->format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", opts->out,
                  "Output path (default: standard output)");
  cmd->add_option("--tol", opts->tol, "Classification tolerance")
      ->check(CLI::PositiveNumber);
  if (with_sweep)
    cmd->add_option("--sweep", opts->sweep,
                    "Parameter sweep <param>:<start>:<stop>:<count>[:log]");
}

int run_demon(const std::string& variant, double p0,
              const CommonOptions& opts, const std::string& emit_channel) {
  const bool quantum = variant == "quantum";
  std::vector<double> p0_values{p0};
  if (!opts.sweep.empty())
    p0_values = parse_sweep(opts.sweep, {"p0"}).values;

  const std::string timestamp = utc_timestamp_now();
  std::vector<RunRecord> records;
  for (double value : p0_values) {
    ScenarioParams params;
    params.p0 = value;
    const ExperimentReport report = quantum
                                        ? quantum_demon(params, opts.tol)
                                        : semiclassical_demon(params, opts.tol);
    records.push_back(record_from_report(report, timestamp));
  }
  write_output(format_records(records, parse_output_format(opts.format)),
               opts.out);

  if (!emit_channel.empty()) {
    const QuantumChannel channel =
        quantum ? quantum_demon_channel() : semiclassical_demon_channel();
    write_channel_file(channel, emit_channel);
  }
  return 0;
}

int run_coolheat(const CommonOptions& opts) {
  const std::string timestamp = utc_timestamp_now();
  const auto [cooling, heating] = cool_heat(opts.tol);
  const std::vector<RunRecord> records = {
      record_from_report(cooling, timestamp),
      record_from_report(heating, timestamp)};
  write_output(format_records(records, parse_output_format(opts.format)),
               opts.out);
  return 0;
}

int run_correlations(ScenarioParams params, const CommonOptions& opts) {
  const std::string timestamp = utc_timestamp_now();
  std::vector<ScenarioParams> points;
  if (opts.sweep.empty()) {
    points.push_back(params);
  } else {
    const SweepSpec spec = parse_sweep(opts.sweep, {"p0", "q0", "eps"});
    for (double value : spec.values) {
      ScenarioParams point = params;
      if (spec.parameter == "p0") point.p0 = value;
      else if (spec.parameter == "q0") point.q0 = value;
      else point.eps = value;
      points.push_back(point);
    }
  }

  std::vector<RunRecord> records;
  for (const ScenarioParams& point : points) {
    const CorrelatedEntropyResult result =
        correlated_entropy_experiment(point, opts.tol);
    records.push_back(record_from_report(result.uncorrelated, timestamp));
    RunRecord correlated = record_from_report(result.correlated, timestamp);
    attach_expansion(correlated, result.expansion);
    records.push_back(std::move(correlated));
  }
  write_output(format_records(records, parse_output_format(opts.format)),
               opts.out);
  return 0;
}

int run_check_channel(const std::string& path, const CommonOptions& opts) {
  const QuantumChannel channel = read_channel_file(path);
  const TracePreservationReport tp = is_trace_preserving(channel, opts.tol);
  // The Choi matrix of a Kraus-sum map is Hermitian up to roundoff;
  // symmetrize so the spectral check cannot trip on extreme inputs.
  const Matrix choi = choi_matrix(channel);
  const std::vector<double> choi_evs =
      hermitian_eigenvalues(0.5 * (choi + dagger(choi)));
  const double choi_min = choi_evs.front();
  const bool cp = choi_min >= -opts.tol;
  const UnitalityReport unitality =
      unitality_defect_direct(channel, opts.tol);

  if (opts.format == "json") {
    nlohmann::ordered_json doc;
    doc["schema_version"] = kCheckSchemaVersion;
    doc["tool_version"] = kToolVersion;
    doc["file"] = path;
    doc["dim"] = channel.dim();
    doc["kraus_count"] = channel.kraus_ops().size();
    doc["trace_preserving"] = tp.preserved;
    doc["trace_preservation_defect"] = tp.defect;
    doc["completely_positive"] = cp;
    doc["choi_min_eigenvalue"] = choi_min;
    doc["unital"] = unitality.is_unital;
    doc["unitality_defect_max_abs"] = unitality.max_abs_defect;
    doc["defect_matrix"] =
        nlohmann::ordered_json::parse(matrix_to_json_text(unitality.defect));
    write_output(doc.dump(2) + "\n", opts.out);
  } else {
    std::ostringstream out;
    out << "file: " << path << "\n"
        << "dim: " << channel.dim() << "\n"
        << "kraus_count: " << channel.kraus_ops().size() << "\n"
        << "trace_preserving: " << (tp.preserved ? "true" : "false") << "\n"
        << "trace_preservation_defect: " << format_double(tp.defect) << "\n"
        << "completely_positive: " << (cp ? "true" : "false") << "\n"
        << "choi_min_eigenvalue: " << format_double(choi_min) << "\n"
        << "unital: " << (unitality.is_unital ? "true" : "false") << "\n"
        << "unitality_defect_max_abs: "
        << format_double(unitality.max_abs_defect) << "\n"
        << "defect_matrix: " << matrix_to_json_text(unitality.defect)
        << "\n";
    write_output(out.str(), opts.out);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum-channel unitality and entropy experiment runner"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  // demon
  auto* demon = app.add_subcommand(
      "demon", "Maxwell demon driving a qubit to its ground state");
  std::string variant;
  double p0 = 0.5;
  std::string emit_channel;
  CommonOptions demon_opts;
  demon->add_option("--variant", variant, "Demon realization")
      ->required()
      ->check(CLI::IsMember({"semiclassical", "quantum"}));
  demon->add_option("--p0", p0, "Initial ground-state population")
      ->check(CLI::Range(0.0, 1.0));
  demon->add_option("--emit-channel", emit_channel,
                    "Write the demon channel to this file");
  add_common(demon, &demon_opts, /*with_sweep=*/true);

  // coolheat
  auto* coolheat = app.add_subcommand(
      "coolheat", "Two-qubit exchange: cooling qubit 1, heating qubit 2");
  CommonOptions coolheat_opts;
  add_common(coolheat, &coolheat_opts, /*with_sweep=*/false);

  // correlations
  auto* correlations = app.add_subcommand(
      "correlations",
      "Entropy growth with weak initial classical correlations");
  ScenarioParams corr_params;
  CommonOptions corr_opts;
  correlations->add_option("--p0", corr_params.p0, "System |g> population")
      ->check(CLI::Range(0.0, 1.0));
  correlations->add_option("--q0", corr_params.q0, "Reservoir |0> population")
      ->check(CLI::Range(0.0, 1.0));
  correlations->add_option("--eps", corr_params.eps, "Correlation strength")
      ->check(CLI::Range(0.0, 1.0));
  add_common(correlations, &corr_opts, /*with_sweep=*/true);

  // check-channel
  auto* check = app.add_subcommand(
      "check-channel", "Classify a Kraus family from a channel file");
  std::string channel_path;
  CommonOptions check_opts;
  check->add_option("file", channel_path, "Channel file (JSON)")->required();
  add_common(check, &check_opts, /*with_sweep=*/false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (demon->parsed())
      return run_demon(variant, p0, demon_opts, emit_channel);
    if (coolheat->parsed()) return run_coolheat(coolheat_opts);
    if (correlations->parsed())
      return run_correlations(corr_params, corr_opts);
    if (check->parsed()) return run_check_channel(channel_path, check_opts);
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const io_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const validation_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
