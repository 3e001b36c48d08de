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

#include "tiltalloc/analysis.hpp"

#include <cmath>
#include <sstream>

#include "tiltalloc/errors.hpp"

namespace tiltalloc {

CosineFit cosine_fit(std::span<const double> t, std::span<const double> x,
                     double fit_frequency) {
  if (t.size() != x.size()) {
    throw FitError(FitError::Kind::InsufficientData,
                   "time and signal lengths differ");
  }
  if (t.size() < 3) {
    throw FitError(FitError::Kind::InsufficientData,
                   "cosine fit needs at least 3 samples");
  }
  const double span_t = t.back() - t.front();
  const double period = 2.0 * M_PI / fit_frequency;
  if (!(fit_frequency > 0.0) || span_t < period) {
    throw FitError(FitError::Kind::InsufficientData,
                   "samples must span at least one period of the fit frequency");
  }

  // Normal equations for the basis {cos(w t), sin(w t), 1}.
  Mat3 gram = Mat3::Zero();
  Vec3 moment = Vec3::Zero();
  for (size_t k = 0; k < t.size(); ++k) {
    const Vec3 basis(std::cos(fit_frequency * t[k]),
                     std::sin(fit_frequency * t[k]), 1.0);
    gram += basis * basis.transpose();
    moment += basis * x[k];
  }

  const Eigen::SelfAdjointEigenSolver<Mat3> eig(gram);
  const double eig_min = eig.eigenvalues().minCoeff();
  const double eig_max = eig.eigenvalues().maxCoeff();
  if (eig_min <= 0.0 || eig_max / eig_min > 1e12) {
    throw FitError(FitError::Kind::IllConditioned,
                   "normal matrix condition number exceeds 1e12");
  }
  const Vec3 coeff = gram.ldlt().solve(moment);

  const double a_cos = coeff[0], a_sin = coeff[1];
  CosineFit fit;
  fit.frequency = fit_frequency;
  fit.offset = coeff[2];
  fit.amplitude = std::hypot(a_cos, a_sin);

  // x = A cos(w t + phi) with phi = atan2(-a_sin, a_cos); fold phi into
  // (-pi/2, pi/2] and carry the half-turn in the amplitude sign.
  if (fit.amplitude > 0.0) {
    double phi = std::atan2(-a_sin, a_cos);
    if (phi > M_PI / 2.0) {
      phi -= M_PI;
      fit.amplitude = -fit.amplitude;
    } else if (phi <= -M_PI / 2.0) {
      phi += M_PI;
      fit.amplitude = -fit.amplitude;
    }
    fit.phase = phi;
  }

  double ss = 0.0;
  for (size_t k = 0; k < t.size(); ++k) {
    const double model = a_cos * std::cos(fit_frequency * t[k]) +
                         a_sin * std::sin(fit_frequency * t[k]) + fit.offset;
    ss += (x[k] - model) * (x[k] - model);
  }
  fit.residual_rms = std::sqrt(ss / static_cast<double>(t.size()));
  return fit;
}

ActuatorTable table_report(const RunRecord& record, double window_start,
                           double fit_frequency) {
  std::vector<double> t;
  t.reserve(record.rows.size());
  for (const StepRecord& row : record.rows) {
    if (row.t >= window_start) t.push_back(row.t);
  }

  ActuatorTable table;
  table.window_start = window_start;
  table.fit_frequency = fit_frequency;

  std::vector<double> x(t.size());
  for (int j = 0; j < kActuatorDim; ++j) {
    size_t k = 0;
    for (const StepRecord& row : record.rows) {
      if (row.t >= window_start) x[k++] = row.actuators.x[j];
    }
    table.fits[j] = cosine_fit(t, x, fit_frequency);
  }
  return table;
}

std::vector<std::pair<double, double>> objective_series(const RunRecord& record) {
  std::vector<std::pair<double, double>> series;
  series.reserve(record.rows.size());
  for (const StepRecord& row : record.rows) {
    series.emplace_back(row.t, row.objective);
  }
  return series;
}

double mean_objective(const RunRecord& record, double window_start) {
  double sum = 0.0;
  long count = 0;
  for (const StepRecord& row : record.rows) {
    if (row.t >= window_start) {
      sum += row.objective;
      ++count;
    }
  }
  return count > 0 ? sum / static_cast<double>(count) : 0.0;
}

namespace {

struct ComponentGroup {
  const char* label;
  int first_index;   // component index of propeller i
  bool in_degrees;
};

std::array<ComponentGroup, 3> component_groups() {
  return {{{"alpha", 0, true}, {"beta", kNumPropellers, true},
           {"omega", 2 * kNumPropellers, false}}};
}

double display_value(double v, bool in_degrees) {
  return in_degrees ? rad_to_deg(v) : v;
}

}  // namespace

std::string format_actuator_tables(
    const std::vector<std::pair<std::string, ActuatorTable>>& tables) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(4);

  os << "pair               ";
  for (const auto& [label, table] : tables) {
    (void)table;
    os << "| " << label << ": amplitude, offset ";
  }
  os << '\n';

  for (const ComponentGroup& group : component_groups()) {
    for (int i = 0; i < kNumPropellers / 2; ++i) {
      const int a = group.first_index + i;
      const int b = group.first_index + i + kNumPropellers / 2;
      os << "[" << group.label << (i + 1) << "," << group.label << (i + 4) << "]";
      for (const auto& [label, table] : tables) {
        (void)label;
        os << "  | [" << display_value(table.fits[a].amplitude, group.in_degrees)
           << ", " << display_value(table.fits[b].amplitude, group.in_degrees)
           << "]  [" << display_value(table.fits[a].offset, group.in_degrees)
           << ", " << display_value(table.fits[b].offset, group.in_degrees) << "]";
      }
      os << '\n';
    }
  }
  return os.str();
}

std::string actuator_tables_csv(
    const std::vector<std::pair<std::string, ActuatorTable>>& tables) {
  std::ostringstream os;
  os.precision(10);
  os << "component,unit";
  for (const auto& [label, table] : tables) {
    (void)table;
    os << "," << label << "_amplitude," << label << "_offset";
  }
  os << '\n';

  for (const ComponentGroup& group : component_groups()) {
    for (int i = 0; i < kNumPropellers; ++i) {
      const int j = group.first_index + i;
      os << group.label << (i + 1) << ","
         << (group.in_degrees ? "deg" : "rad_per_s");
      for (const auto& [label, table] : tables) {
        (void)label;
        os << "," << display_value(table.fits[j].amplitude, group.in_degrees)
           << "," << display_value(table.fits[j].offset, group.in_degrees);
      }
      os << '\n';
    }
  }
  return os.str();
}

}  // namespace tiltalloc
