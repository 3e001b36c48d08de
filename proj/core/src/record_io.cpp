// Copyright 2026 The tiltalloc Authors
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

#include "tiltalloc/record_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "tiltalloc/errors.hpp"

namespace tiltalloc {

namespace {

const char* const kColumnNames[] = {
    "t",
    "px", "py", "pz", "vx", "vy", "vz",
    "roll", "pitch", "yaw", "roll_rate", "pitch_rate", "yaw_rate",
    "alpha1", "alpha2", "alpha3", "alpha4", "alpha5", "alpha6",
    "beta1", "beta2", "beta3", "beta4", "beta5", "beta6",
    "omega1", "omega2", "omega3", "omega4", "omega5", "omega6",
    "ustar_fx", "ustar_fy", "ustar_fz", "ustar_tx", "ustar_ty", "ustar_tz",
    "uv_fx", "uv_fy", "uv_fz", "uv_tx", "uv_ty", "uv_tz",
    "uvc_fx", "uvc_fy", "uvc_fz", "uvc_tx", "uvc_ty", "uvc_tz",
    "objective", "uy_norm", "uj_norm", "sigma_min", "damped", "sat_mask",
};
constexpr int kNumColumns = static_cast<int>(std::size(kColumnNames));

void append_double(std::string& out, double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, ptr);
}

void row_values(const StepRecord& r, double out[kNumColumns]) {
  int c = 0;
  out[c++] = r.t;
  for (int i = 0; i < 3; ++i) out[c++] = r.platform.position[i];
  for (int i = 0; i < 3; ++i) out[c++] = r.platform.velocity[i];
  for (int i = 0; i < 3; ++i) out[c++] = r.platform.attitude[i];
  for (int i = 0; i < 3; ++i) out[c++] = r.platform.attitude_rate[i];
  for (int j = 0; j < kActuatorDim; ++j) out[c++] = r.actuators.x[j];
  for (int i = 0; i < 6; ++i) out[c++] = r.u_star.vector()[i];
  for (int i = 0; i < 6; ++i) out[c++] = r.u_v.vector()[i];
  for (int i = 0; i < 6; ++i) out[c++] = r.u_vc.vector()[i];
  out[c++] = r.objective;
  out[c++] = r.u_y.norm();
  out[c++] = r.u_j.norm();
  out[c++] = r.sigma_min;
  out[c++] = r.damped ? 1.0 : 0.0;
  out[c++] = static_cast<double>(r.saturation_mask);
}

}  // namespace

std::string record_csv_header() {
  std::string header;
  for (int c = 0; c < kNumColumns; ++c) {
    if (c) header += ',';
    header += kColumnNames[c];
  }
  return header;
}

void write_record_csv(const RunRecord& record, std::ostream& os) {
  std::string out;
  out.reserve(record.rows.size() * 400 + 1024);
  out += kRecordSchemaTag;
  out += '\n';
  out += record_csv_header();
  out += '\n';

  double values[kNumColumns];
  for (const StepRecord& row : record.rows) {
    row_values(row, values);
    for (int c = 0; c < kNumColumns; ++c) {
      if (c) out += ',';
      append_double(out, values[c]);
    }
    out += '\n';
  }
  os << out;
}

void write_record_csv(const RunRecord& record,
                      const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) {
    throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  }
  write_record_csv(record, os);
}

int RecordTable::column_index(const std::string& name) const {
  for (size_t c = 0; c < columns.size(); ++c) {
    if (columns[c] == name) return static_cast<int>(c);
  }
  return -1;
}

RecordTable read_record_table(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) {
    throw std::runtime_error("cannot open record '" + path.string() + "'");
  }

  RecordTable table;
  std::string line;
  bool have_header = false;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;

    std::vector<std::string> fields;
    size_t start = 0;
    while (true) {
      const size_t comma = line.find(',', start);
      fields.push_back(line.substr(
          start, comma == std::string::npos ? std::string::npos : comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }

    if (!have_header) {
      table.columns = fields;
      have_header = true;
      continue;
    }
    if (fields.size() != table.columns.size()) {
      throw std::runtime_error("ragged CSV row in '" + path.string() + "'");
    }
    std::vector<double> row(fields.size());
    for (size_t c = 0; c < fields.size(); ++c) {
      const std::string& f = fields[c];
      auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), row[c]);
      if (ec != std::errc{} || ptr != f.data() + f.size()) {
        throw std::runtime_error("non-numeric CSV field '" + f + "' in '" +
                                 path.string() + "'");
      }
    }
    table.rows.push_back(std::move(row));
  }
  if (!have_header) {
    throw std::runtime_error("record '" + path.string() + "' has no header");
  }
  return table;
}

RunRecord record_from_table(const RecordTable& table, const std::string& name) {
  RunRecord record;
  record.scenario_name = name;

  auto idx = [&](const char* column) {
    const int i = table.column_index(column);
    if (i < 0) {
      throw std::runtime_error(std::string("record is missing column '") +
                               column + "'");
    }
    return i;
  };

  const int t_i = idx("t");
  const int px_i = idx("px"), vx_i = idx("vx");
  const int roll_i = idx("roll"), roll_rate_i = idx("roll_rate");
  const int alpha_i = idx("alpha1");
  const int ustar_i = idx("ustar_fx"), uv_i = idx("uv_fx"), uvc_i = idx("uvc_fx");
  const int obj_i = idx("objective"), sigma_i = idx("sigma_min");
  const int damped_i = idx("damped"), mask_i = idx("sat_mask");

  record.rows.reserve(table.rows.size());
  for (const auto& row : table.rows) {
    StepRecord r;
    r.t = row[t_i];
    for (int k = 0; k < 3; ++k) {
      r.platform.position[k] = row[px_i + k];
      r.platform.velocity[k] = row[vx_i + k];
      r.platform.attitude[k] = row[roll_i + k];
      r.platform.attitude_rate[k] = row[roll_rate_i + k];
    }
    for (int j = 0; j < kActuatorDim; ++j) r.actuators.x[j] = row[alpha_i + j];
    Vec6 ustar, uv, uvc;
    for (int k = 0; k < 6; ++k) {
      ustar[k] = row[ustar_i + k];
      uv[k] = row[uv_i + k];
      uvc[k] = row[uvc_i + k];
    }
    r.u_star = Wrench::from_vector(ustar);
    r.u_v = Wrench::from_vector(uv);
    r.u_vc = Wrench::from_vector(uvc);
    r.objective = row[obj_i];
    r.sigma_min = row[sigma_i];
    r.damped = row[damped_i] != 0.0;
    r.saturation_mask = static_cast<std::uint32_t>(row[mask_i]);
    record.rows.push_back(std::move(r));
  }
  if (record.rows.size() >= 2) {
    record.dt = record.rows[1].t - record.rows[0].t;
  }
  return record;
}

ComparisonReport compare_runs(const RecordTable& a, const RecordTable& b) {
  if (a.columns != b.columns) {
    throw GridMismatch("records have different column sets");
  }
  if (a.rows.size() != b.rows.size()) {
    throw GridMismatch("records have different row counts (" +
                       std::to_string(a.rows.size()) + " vs " +
                       std::to_string(b.rows.size()) + ")");
  }
  const int t_col = a.column_index("t");
  if (t_col < 0) throw GridMismatch("records have no time column");
  for (size_t n = 0; n < a.rows.size(); ++n) {
    if (a.rows[n][t_col] != b.rows[n][t_col]) {
      throw GridMismatch("time grids differ at row " + std::to_string(n));
    }
  }

  ComparisonReport report;
  report.row_count = a.rows.size();
  report.columns.reserve(a.columns.size());
  for (size_t c = 0; c < a.columns.size(); ++c) {
    ColumnDiff diff;
    diff.column = a.columns[c];
    double ss = 0.0;
    for (size_t n = 0; n < a.rows.size(); ++n) {
      const double d = a.rows[n][c] - b.rows[n][c];
      diff.max_abs = std::max(diff.max_abs, std::abs(d));
      ss += d * d;
    }
    diff.rms = a.rows.empty() ? 0.0 : std::sqrt(ss / static_cast<double>(a.rows.size()));
    if (diff.column.rfind("uv_", 0) == 0) {
      report.wrench_max_abs = std::max(report.wrench_max_abs, diff.max_abs);
    }
    report.columns.push_back(std::move(diff));
  }
  return report;
}

std::string ComparisonReport::format() const {
  std::ostringstream os;
  os << "rows compared: " << row_count << '\n';
  os << "wrench max |diff| (uv_* columns): " << wrench_max_abs << '\n';
  os << "column, max_abs_diff, rms_diff\n";
  os.precision(17);
  for (const ColumnDiff& diff : columns) {
    os << diff.column << ", " << diff.max_abs << ", " << diff.rms << '\n';
  }
  return os.str();
}

}  // namespace tiltalloc
