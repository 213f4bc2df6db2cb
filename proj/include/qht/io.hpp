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

// io.hpp — The tool's public, versioned data contracts.
//
// Channel files (schema qht-channel/1): a JSON object with "dim" and
// "kraus", the latter an array of dim x dim matrices stored as row-major
// nested arrays whose entries are two-element [re, im] arrays.
//
// Run records (schema qht-records/1): one flat record per scenario
// execution, serialized as CSV rows or a JSON document; numeric fields at
// full double precision.

#pragma once

#include "qht/channels.hpp"
#include "qht/scenarios.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qht {

// File cannot be opened/written.
class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// File content does not match the schema; the message carries the
// offending location (line/offset or field path).
class parse_error : public io_error {
 public:
  using io_error::io_error;
};

// --------------------------- channel files ----------------------------------

std::string channel_to_json(const QuantumChannel& channel);
QuantumChannel parse_channel_json(const std::string& text,
                                  const std::string& origin = "<memory>");
QuantumChannel read_channel_file(const std::string& path);
void write_channel_file(const QuantumChannel& channel,
                        const std::string& path);

// --------------------------- run records ------------------------------------

struct RunRecord {
  std::string timestamp;  // ISO-8601 UTC, second resolution
  std::string scenario;
  std::optional<double> p0;
  std::optional<double> q0;
  std::optional<double> eps;
  double s_initial = 0.0;
  double s_final = 0.0;
  double delta_s = 0.0;
  bool unital = false;
  double defect_direct = 0.0;      // max-abs unitality defect, direct route
  double defect_commutator = 0.0;  // same, commutator route
  std::optional<double> c1;
  std::optional<double> c2;
  std::optional<double> exact_diff;
  std::optional<double> expansion_diff;
  std::optional<double> residual;
  // States and defect matrices, serialized in JSON mode only; CSV rows
  // carry the scalar fields above.
  Matrix initial_state;
  Matrix final_state;
  Matrix joint_final;
  Matrix defect_matrix_direct;
  Matrix defect_matrix_commutator;
};

// Flattens a report; parameters irrelevant to the scenario stay unset.
RunRecord record_from_report(const ExperimentReport& report,
                             const std::string& timestamp);
void attach_expansion(RunRecord& record, const ExpansionResult& expansion);

enum class OutputFormat { Csv, Json };
OutputFormat parse_output_format(const std::string& name);

std::string format_records(const std::vector<RunRecord>& records,
                           OutputFormat format);

// Shortest exact decimal form that round-trips through double.
std::string format_double(double value);

std::string utc_timestamp_now();

// Row-major nested arrays of [re, im] pairs, the same encoding channel
// files use.
std::string matrix_to_json_text(const Matrix& m);

}  // namespace qht
