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

#include "qht/io.hpp"

#include "qht/version.hpp"

#include "json.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <sstream>

namespace qht {

using json = nlohmann::ordered_json;

// --------------------------- channel files ----------------------------------

namespace {

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j)
      row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string matrix_to_json_text(const Matrix& m) {
  return matrix_to_json(m).dump();
}

std::string channel_to_json(const QuantumChannel& channel) {
  json doc;
  doc["schema_version"] = kChannelSchemaVersion;
  doc["dim"] = channel.dim();
  json kraus = json::array();
  for (const Matrix& k : channel.kraus_ops())
    kraus.push_back(matrix_to_json(k));
  doc["kraus"] = std::move(kraus);
  return doc.dump(2) + "\n";
}

namespace {

[[noreturn]] void fail_parse(const std::string& origin,
                             const std::string& what) {
  throw parse_error(origin + ": " + what);
}

Complex parse_entry(const json& entry, const std::string& origin,
                    const std::string& where) {
  if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
      !entry[1].is_number())
    fail_parse(origin, where + ": expected a two-element [re, im] array");
  const double re = entry[0].get<double>();
  const double im = entry[1].get<double>();
  if (!std::isfinite(re) || !std::isfinite(im))
    fail_parse(origin, where + ": non-finite entry");
  return {re, im};
}

}  // namespace

QuantumChannel parse_channel_json(const std::string& text,
                                  const std::string& origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail_parse(origin, e.what());
  }
  if (!doc.is_object()) fail_parse(origin, "top level must be an object");
  if (!doc.contains("schema_version") || !doc["schema_version"].is_string())
    fail_parse(origin, "missing string field 'schema_version'");
  const auto schema = doc["schema_version"].get<std::string>();
  if (schema != kChannelSchemaVersion)
    fail_parse(origin, "unsupported schema_version '" + schema +
                           "', expected '" + kChannelSchemaVersion + "'");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer())
    fail_parse(origin, "missing integer field 'dim'");
  const auto dim = doc["dim"].get<Index>();
  if (dim < 1 || dim > 1024)
    fail_parse(origin, "'dim' must lie in [1, 1024], got " +
                           std::to_string(dim));
  if (!doc.contains("kraus") || !doc["kraus"].is_array() ||
      doc["kraus"].empty())
    fail_parse(origin, "missing nonempty array field 'kraus'");

  std::vector<Matrix> kraus;
  const json& ops = doc["kraus"];
  for (std::size_t m = 0; m < ops.size(); ++m) {
    std::ostringstream where;
    where << "kraus[" << m << "]";
    const json& rows = ops[m];
    if (!rows.is_array() || rows.size() != static_cast<std::size_t>(dim))
      fail_parse(origin, where.str() + ": expected " + std::to_string(dim) +
                             " rows (non-square or inconsistent dims)");
    Matrix op(dim, dim);
    for (Index i = 0; i < dim; ++i) {
      const json& row = rows[static_cast<std::size_t>(i)];
      if (!row.is_array() || row.size() != static_cast<std::size_t>(dim)) {
        std::ostringstream w2;
        w2 << where.str() << "[" << i << "]: expected " << dim
           << " entries (non-square or inconsistent dims)";
        fail_parse(origin, w2.str());
      }
      for (Index j = 0; j < dim; ++j) {
        std::ostringstream w3;
        w3 << where.str() << "[" << i << "][" << j << "]";
        op(i, j) = parse_entry(row[static_cast<std::size_t>(j)], origin,
                               w3.str());
      }
    }
    kraus.push_back(std::move(op));
  }
  return QuantumChannel::unchecked(std::move(kraus));
}

QuantumChannel read_channel_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open channel file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_channel_json(buffer.str(), path);
}

void write_channel_file(const QuantumChannel& channel,
                        const std::string& path) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot open output file '" + path + "'");
  out << channel_to_json(channel);
  if (!out) throw io_error("failed writing channel file '" + path + "'");
}

// --------------------------- run records ------------------------------------

RunRecord record_from_report(const ExperimentReport& report,
                             const std::string& timestamp) {
  RunRecord record;
  record.timestamp = timestamp;
  record.scenario = std::string(scenario_name(report.scenario_id));
  switch (report.scenario_id) {
    case ScenarioId::SemiclassicalDemon:
    case ScenarioId::QuantumDemon:
      record.p0 = report.params.p0;
      break;
    case ScenarioId::CorrelationBaseline:
    case ScenarioId::Correlated:
      record.p0 = report.params.p0;
      record.q0 = report.params.q0;
      record.eps = report.params.eps;
      break;
    case ScenarioId::CoolingQubit1:
    case ScenarioId::HeatingQubit2:
      break;  // fixed setup, no free parameters
  }
  record.s_initial = report.s_initial;
  record.s_final = report.s_final;
  record.delta_s = report.delta_s;
  record.unital = report.unitality_direct.is_unital &&
                  report.unitality_commutator.is_unital;
  record.defect_direct = report.unitality_direct.max_abs_defect;
  record.defect_commutator = report.unitality_commutator.max_abs_defect;
  record.initial_state = report.initial_state.matrix();
  record.final_state = report.final_state.matrix();
  record.joint_final = report.joint_final.matrix();
  record.defect_matrix_direct = report.unitality_direct.defect;
  record.defect_matrix_commutator = report.unitality_commutator.defect;
  return record;
}

void attach_expansion(RunRecord& record, const ExpansionResult& expansion) {
  record.c1 = expansion.c1;
  record.c2 = expansion.c2;
  record.exact_diff = expansion.exact_diff;
  record.expansion_diff = expansion.expansion_diff;
  record.residual = expansion.residual;
}

OutputFormat parse_output_format(const std::string& name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw std::invalid_argument("unknown output format '" + name +
                              "', expected csv or json");
}

std::string format_double(double value) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, result.ptr);
}

namespace {

const char* const kCsvHeader =
    "schema_version,tool_version,timestamp,scenario,p0,q0,eps,"
    "s_initial,s_final,delta_s,unital,defect_direct,defect_commutator,"
    "c1,c2,exact_diff,expansion_diff,residual";

std::string opt_field(const std::optional<double>& value) {
  return value ? format_double(*value) : std::string();
}

std::string format_csv(const std::vector<RunRecord>& records) {
  std::ostringstream out;
  out << kCsvHeader << "\n";
  for (const RunRecord& r : records) {
    out << kRecordsSchemaVersion << ',' << kToolVersion << ','
        << r.timestamp << ',' << r.scenario << ',' << opt_field(r.p0) << ','
        << opt_field(r.q0) << ',' << opt_field(r.eps) << ','
        << format_double(r.s_initial) << ',' << format_double(r.s_final)
        << ',' << format_double(r.delta_s) << ','
        << (r.unital ? "true" : "false") << ','
        << format_double(r.defect_direct) << ','
        << format_double(r.defect_commutator) << ',' << opt_field(r.c1)
        << ',' << opt_field(r.c2) << ',' << opt_field(r.exact_diff) << ','
        << opt_field(r.expansion_diff) << ',' << opt_field(r.residual)
        << "\n";
  }
  return out.str();
}

std::string format_json(const std::vector<RunRecord>& records) {
  json doc;
  doc["schema_version"] = kRecordsSchemaVersion;
  doc["tool_version"] = kToolVersion;
  json list = json::array();
  for (const RunRecord& r : records) {
    json rec;
    rec["timestamp"] = r.timestamp;
    rec["scenario"] = r.scenario;
    if (r.p0) rec["p0"] = *r.p0;
    if (r.q0) rec["q0"] = *r.q0;
    if (r.eps) rec["eps"] = *r.eps;
    rec["s_initial"] = r.s_initial;
    rec["s_final"] = r.s_final;
    rec["delta_s"] = r.delta_s;
    rec["unital"] = r.unital;
    rec["defect_direct"] = r.defect_direct;
    rec["defect_commutator"] = r.defect_commutator;
    if (r.c1) rec["c1"] = *r.c1;
    if (r.c2) rec["c2"] = *r.c2;
    if (r.exact_diff) rec["exact_diff"] = *r.exact_diff;
    if (r.expansion_diff) rec["expansion_diff"] = *r.expansion_diff;
    if (r.residual) rec["residual"] = *r.residual;
    rec["initial_state"] = matrix_to_json(r.initial_state);
    rec["final_state"] = matrix_to_json(r.final_state);
    rec["joint_final"] = matrix_to_json(r.joint_final);
    rec["defect_matrix_direct"] = matrix_to_json(r.defect_matrix_direct);
    rec["defect_matrix_commutator"] =
        matrix_to_json(r.defect_matrix_commutator);
    list.push_back(std::move(rec));
  }
  doc["records"] = std::move(list);
  return doc.dump(2) + "\n";
}

}  // namespace

std::string format_records(const std::vector<RunRecord>& records,
                           OutputFormat format) {
  return format == OutputFormat::Csv ? format_csv(records)
                                     : format_json(records);
}

std::string utc_timestamp_now() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace qht
