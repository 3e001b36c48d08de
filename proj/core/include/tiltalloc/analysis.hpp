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

#include <array>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tiltalloc/simulation.hpp"
#include "tiltalloc/types.hpp"

namespace tiltalloc {

/// Result of fitting x(t) ~ amplitude * cos(frequency t + phase) + offset.
/// The phase is folded into (-pi/2, pi/2] and the residual half-turn into
/// the amplitude sign, so signals in phase opposition get amplitudes of
/// opposite sign.
struct CosineFit {
  double amplitude = 0.0;
  double offset = 0.0;
  double phase = 0.0;
  double frequency = 0.0;
  double residual_rms = 0.0;
};

/// Linear least squares on the basis {cos(w t), sin(w t), 1}.
/// Requires at least 3 samples spanning at least one period; throws
/// FitError(InsufficientData) otherwise and FitError(IllConditioned) when
/// the normal matrix is numerically singular.
CosineFit cosine_fit(std::span<const double> t, std::span<const double> x,
                     double fit_frequency);

/// Per-component steady-state fits of the 18 actuator signals.
struct ActuatorTable {
  std::array<CosineFit, kActuatorDim> fits;
  double window_start = 0.0;
  double fit_frequency = 0.0;

  const CosineFit& alpha(int i) const { return fits[ActuatorState::alpha_index(i)]; }
  const CosineFit& beta(int i) const { return fits[ActuatorState::beta_index(i)]; }
  const CosineFit& omega(int i) const { return fits[ActuatorState::omega_index(i)]; }
};

/// Fits every actuator component on [window_start, end of record]. The fit
/// frequency is locked to the reference rate, which keeps the problem
/// linear; pass the trajectory angular rate.
ActuatorTable table_report(const RunRecord& record, double window_start,
                           double fit_frequency);

/// (t, J(sat(x))) series of a run.
std::vector<std::pair<double, double>> objective_series(const RunRecord& record);

/// Mean of J(sat(x)) over rows with t >= window_start.
double mean_objective(const RunRecord& record, double window_start);

/// Table formatted like the amplitude/offset summaries: one line per
/// opposite-propeller pair, tilt angles in degrees, one column block per
/// labeled run.
std::string format_actuator_tables(
    const std::vector<std::pair<std::string, ActuatorTable>>& tables);

/// CSV with one row per (component, run label): amplitude and offset in
/// component units (degrees for tilts, rad/s for spin rates).
std::string actuator_tables_csv(
    const std::vector<std::pair<std::string, ActuatorTable>>& tables);

}  // namespace tiltalloc
