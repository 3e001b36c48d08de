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

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "tiltalloc/simulation.hpp"

namespace tiltalloc {

// Version tag written as the first line of every record CSV.
inline constexpr const char* kRecordSchemaTag = "# tiltalloc record v1";

/// Column header of the v1 record schema.
std::string record_csv_header();

/// Writes the run as CSV: schema tag line, header row, then one row per
/// step. Doubles are printed with shortest round-trip formatting, so equal
/// runs serialize to identical bytes. Booleans and the saturation mask are
/// written as integers.
void write_record_csv(const RunRecord& record, std::ostream& os);
void write_record_csv(const RunRecord& record, const std::filesystem::path& path);

/// A parsed record CSV: named numeric columns in file order.
struct RecordTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;  // row-major

  int column_index(const std::string& name) const;  // -1 when absent
};

RecordTable read_record_table(const std::filesystem::path& path);

/// Rebuilds the step rows persisted in a v1 CSV (u_y/u_j, which are stored
/// only as norms, come back zero).
RunRecord record_from_table(const RecordTable& table, const std::string& name);

struct ColumnDiff {
  std::string column;
  double max_abs = 0.0;
  double rms = 0.0;
};

struct ComparisonReport {
  std::vector<ColumnDiff> columns;
  double wrench_max_abs = 0.0;  // max |diff| over the produced-wrench columns
  std::size_t row_count = 0;

  std::string format() const;
};

/// Per-column max-abs and RMS differences between two records. Throws
/// GridMismatch when the column sets differ or the time grids are not
/// bitwise identical.
ComparisonReport compare_runs(const RecordTable& a, const RecordTable& b);

}  // namespace tiltalloc
