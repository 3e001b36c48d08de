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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "test_support.hpp"
#include "tiltalloc/integrate.hpp"
#include "tiltalloc/platform.hpp"
#include "tiltalloc/record_io.hpp"
#include "tiltalloc/simulation.hpp"

using namespace tiltalloc;

namespace {

std::string to_csv(const RunRecord& record) {
  std::ostringstream os;
  write_record_csv(record, os);
  return os.str();
}

Scenario free_fall_scenario() {
  // Zero gains and zero spin: the Jacobian vanishes at omega = 0, the
  // damped pseudo-inverse returns zero commands, and the platform drops.
  Scenario s = make_hover_scenario(2.0);
  s.name = "free_fall";
  s.gains.kp_pos.setZero();
  s.gains.kd_pos.setZero();
  s.gains.kp_att.setZero();
  s.gains.kd_att.setZero();
  s.allocator.gamma_j = 0.0;
  for (int i = 0; i < kNumPropellers; ++i) {
    s.box.lower[ActuatorState::omega_index(i)] = -1.0;
    s.box.upper[ActuatorState::omega_index(i)] = 1.0;
  }
  s.initial_actuators = ActuatorState{};
  return s;
}

}  // namespace

TEST_CASE("hover equilibrium is preserved step by step") {
  Scenario s = make_hover_scenario(2.0);
  const RunRecord record = run(s);
  REQUIRE(record.status == RunStatus::Completed);
  REQUIRE(record.rows.size() == 2001);
  for (size_t n = 1; n < record.rows.size(); ++n) {
    CHECK((record.rows[n].platform.position - record.rows[n - 1].platform.position)
              .norm() < 1e-9);
  }
  CHECK((record.rows.back().platform.position).norm() < 1e-9);
  CHECK(record.rows.back().platform.attitude.norm() < 1e-9);
}

TEST_CASE("free fall matches the ballistic solution") {
  const RunRecord record = run(free_fall_scenario());
  REQUIRE(record.status == RunStatus::Completed);
  for (const StepRecord& row : record.rows) {
    const double z_expected = -0.5 * 9.81 * row.t * row.t;
    CHECK(std::abs(row.platform.position[2] - z_expected) < 1e-9);
    CHECK(std::abs(row.platform.velocity[2] + 9.81 * row.t) < 1e-10);
    CHECK(row.u_v.force.norm() == 0.0);
    CHECK(row.damped);  // zero Jacobian takes the damped path every step
  }
}

TEST_CASE("identical scenarios produce bit-identical records") {
  const Scenario s = make_circle_scenario(10.0, ObjectiveKind::Symmetric, 0.5);
  const RunRecord a = run(s);
  const RunRecord b = run(s);
  REQUIRE(a.status == RunStatus::Completed);
  CHECK(to_csv(a) == to_csv(b));
}

TEST_CASE("zero duration yields the initial condition only") {
  Scenario s = make_hover_scenario(0.0);
  const RunRecord record = run(s);
  REQUIRE(record.rows.size() == 1);
  CHECK(record.rows[0].t == 0.0);
  CHECK(record.status == RunStatus::Completed);
}

TEST_CASE("integrator is fourth order on a smooth forced segment") {
  // Platform driven by a prescribed smooth wrench; halving dt must shrink
  // the endpoint error by ~16x (>= 8x required).
  const PlatformParams params = test::stock().platform;
  const double mg = params.mass * params.gravity;
  using Vec12 = Eigen::Matrix<double, 12, 1>;
  const auto rhs = [&](double t, const Vec12& y) {
    PlatformState s;
    s.position = y.segment<3>(0);
    s.velocity = y.segment<3>(3);
    s.attitude = y.segment<3>(6);
    s.attitude_rate = y.segment<3>(9);
    Wrench w;
    w.force = Vec3(0.4 * std::sin(3 * t), 0.3 * std::cos(2 * t), mg + 0.5 * std::sin(t));
    w.torque = 0.02 * Vec3(std::sin(2 * t), std::cos(3 * t), std::sin(t));
    const PlatformDerivative d = platform_dynamics(s, w, params);
    Vec12 dy;
    dy << d.velocity, d.acceleration, d.attitude_rate, d.attitude_accel;
    return dy;
  };

  const auto integrate = [&](double dt) {
    Vec12 y = Vec12::Zero();
    const int steps = static_cast<int>(std::lround(0.5 / dt));
    for (int n = 0; n < steps; ++n) y = rk4_step(rhs, y, n * dt, dt);
    return y;
  };

  const Vec12 reference = integrate(1e-3 / 16.0);
  const double err_coarse = (integrate(1e-3) - reference).norm();
  const double err_fine = (integrate(0.5e-3) - reference).norm();
  CHECK(err_coarse / err_fine >= 8.0);
}

TEST_CASE("tilt stress scenario saturates but keeps running") {
  Scenario s = make_tilt_stress_scenario(1.0, 3.0);
  const RunRecord record = run(s);
  REQUIRE(record.status == RunStatus::Completed);
  bool saw_saturation = false;
  for (const StepRecord& row : record.rows) {
    saw_saturation = saw_saturation || row.saturation_mask != 0;
    CHECK(row.u_v.all_finite());
  }
  CHECK(saw_saturation);
}

TEST_CASE("short circle run completes without damping events") {
  const Scenario s = make_circle_scenario(10.0, ObjectiveKind::Symmetric, 2.0);
  const RunRecord record = run(s);
  REQUIRE(record.status == RunStatus::Completed);
  REQUIRE(record.rows.size() == 2001);
  for (const StepRecord& row : record.rows) {
    CHECK_FALSE(row.damped);
    CHECK(row.saturation_mask == 0u);
  }
}

TEST_CASE("starting at the kinematic singularity aborts with a diagnostic") {
  Scenario s = make_hover_scenario(1.0);
  s.initial_platform.attitude = Vec3(0, M_PI / 2, 0);
  const RunRecord record = run(s);
  CHECK(record.status == RunStatus::KinematicSingularityAbort);
  CHECK(record.rows.empty());
  CHECK_FALSE(record.diagnostic.empty());
}

TEST_CASE("numerical blow-up aborts with a partial record") {
  // The saturated output map keeps moderate garbage bounded, so the state
  // has to overflow the controller arithmetic itself to trip the guard.
  Scenario s = make_hover_scenario(1.0);
  s.initial_platform.velocity = Vec3(1e308, 0, 0);
  const RunRecord record = run(s);
  CHECK(record.status == RunStatus::NonFiniteAbort);
  CHECK(record.rows.size() < 1001);
  CHECK_FALSE(record.diagnostic.empty());
}
