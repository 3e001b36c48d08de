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
#include <vector>

#include "test_support.hpp"
#include "tiltalloc/actuation.hpp"
#include "tiltalloc/allocator.hpp"
#include "tiltalloc/scenario.hpp"

using namespace tiltalloc;

namespace {

const Scenario& sc() { return test::stock(); }

Wrench hover_wrench() {
  const Scenario& s = sc();
  return total_wrench(s.initial_actuators, s.box, s.propellers);
}

}  // namespace

TEST_CASE("command filter passes the command through at zero error") {
  const AllocatorParams params = sc().allocator;
  Wrench u_star;
  u_star.force = Vec3(1, 2, 3);
  u_star.torque = Vec3(0.1, 0.2, 0.3);
  const Wrench u_vc = command_filter(u_star, Wrench{}, u_star, params);
  CHECK((u_vc.vector() - u_star.vector()).norm() < 1e-15);
}

TEST_CASE("closed wrench-error dynamics contract at gamma_p (1 + k)") {
  // d(u_v)/dt = gamma_p (u_vc - u_v) must equal -gamma_p (1 + k) u~ for a
  // static command; with gamma_p = 5, k = 3 the rate is -20.
  const AllocatorParams params = sc().allocator;
  Wrench u_star;
  u_star.force = Vec3(0, 0, 19.62);
  Wrench u_v = u_star;
  u_v.force += Vec3(0.5, -0.25, 1.0);
  u_v.torque += Vec3(0.01, 0.02, -0.03);
  const Vec6 error = u_v.vector() - u_star.vector();
  const Wrench u_vc = command_filter(u_star, Wrench{}, u_v, params);
  const Vec6 rate = params.gamma_p * (u_vc.vector() - u_v.vector());
  CHECK((rate + 20.0 * error).norm() < 1e-12);
}

TEST_CASE("ramp command feeds forward slope/gamma_p") {
  const AllocatorParams params = sc().allocator;
  Wrench u_star, u_star_dot;
  u_star.force = Vec3(2, 0, 19);
  u_star_dot.force = Vec3(0.8, -0.4, 0.2);
  const Wrench u_vc = command_filter(u_star, u_star_dot, u_star, params);
  const Vec6 expected = u_star.vector() + u_star_dot.vector() / params.gamma_p;
  CHECK((u_vc.vector() - expected).norm() < 1e-15);
}

TEST_CASE("allocator output vanishes at equilibrium with gamma_j = 0") {
  const Scenario& s = sc();
  AllocatorParams params = s.allocator;
  params.gamma_j = 0.0;
  const auto out = allocator_step(s.initial_actuators, hover_wrench(), Wrench{},
                                  s.box, s.propellers, params);
  CHECK(out.u_a.norm() < 1e-9);
  CHECK(out.diag.u_j.norm() == 0.0);
}

TEST_CASE("u_j lies in the null space of the gated Jacobian") {
  auto gen = test::rng(47u);
  const Scenario& s = sc();
  for (int k = 0; k < 25; ++k) {
    const ActuatorState x = test::random_interior_state(s.box, gen);
    const auto out = allocator_step(x, hover_wrench(), Wrench{}, s.box,
                                    s.propellers, s.allocator);
    const Vec18 gate = sat_gradient(x, s.box, s.allocator.sat_epsilon);
    const Mat6x18 m = wrench_jacobian(x, s.box, s.propellers) * gate.asDiagonal();
    const Vec18 grad = objective_gradient(x, s.box, s.allocator.objective);
    CHECK((m * out.diag.u_j).norm() <= 1e-9 * std::max(1.0, grad.norm()));
  }
}

TEST_CASE("u_j vanishes exactly at the hover critical point") {
  // At hover the objective gradient lies in the row space of the Jacobian,
  // so the projected descent direction is numerically zero.
  const Scenario& s = sc();
  const auto out = allocator_step(s.initial_actuators, hover_wrench(), Wrench{},
                                  s.box, s.propellers, s.allocator);
  CHECK(out.diag.u_j.norm() < 1e-8);
}

TEST_CASE("saturating a component scales its Jacobian column by epsilon") {
  const Scenario& s = sc();
  auto gen = test::rng(53u);
  ActuatorState interior = test::random_interior_state(s.box, gen);

  ActuatorState beyond = interior;
  beyond.alpha(2) = deg_to_rad(35.0);
  ActuatorState at_bound = interior;
  at_bound.alpha(2) = deg_to_rad(30.0);

  const Vec18 gate = sat_gradient(beyond, s.box, s.allocator.sat_epsilon);
  const Mat6x18 gated =
      wrench_jacobian(beyond, s.box, s.propellers) * gate.asDiagonal();
  const Mat6x18 reference = wrench_jacobian(at_bound, s.box, s.propellers);

  const int col = ActuatorState::alpha_index(2);
  CHECK((gated.col(col) - 0.001 * reference.col(col)).norm() <
        1e-12 * reference.col(col).norm());
  // All other columns are untouched.
  for (int j = 0; j < kActuatorDim; ++j) {
    if (j == col) continue;
    CHECK((gated.col(j) - reference.col(j)).norm() == 0.0);
  }
}

TEST_CASE("diagnostics report saturation and conditioning") {
  const Scenario& s = sc();
  ActuatorState x = s.initial_actuators;
  x.beta(1) = deg_to_rad(45.0);
  const auto out =
      allocator_step(x, hover_wrench(), Wrench{}, s.box, s.propellers, s.allocator);
  CHECK(out.diag.saturation_mask == (1u << ActuatorState::beta_index(1)));
  CHECK(out.diag.sigma_min > 0.0);
  CHECK_FALSE(out.diag.damped);
  CHECK(out.diag.objective > 0.0);
}

TEST_CASE("projected descent never increases the objective") {
  // Hold the wrench target at the produced wrench each step so u_y = 0 and
  // the state flows along -u_j only; J(sat(x)) must be non-increasing.
  const Scenario& s = sc();
  ActuatorState x = s.initial_actuators;
  for (int i = 0; i < kNumPropellers; ++i) {
    x.alpha(i) = deg_to_rad(10.0 - 3.0 * i);
    x.beta(i) = deg_to_rad(-8.0 + 2.5 * i);
  }
  const double dt = 1e-3;
  double previous = objective_value(x, s.box, s.allocator.objective);
  for (int n = 0; n < 2000; ++n) {
    const Wrench current = total_wrench(x, s.box, s.propellers);
    const auto out =
        allocator_step(x, current, Wrench{}, s.box, s.propellers, s.allocator);
    CHECK(out.diag.u_y.norm() < 1e-9);
    x.x += dt * (out.diag.u_y - out.diag.u_j);
    const double value = objective_value(x, s.box, s.allocator.objective);
    CHECK(value <= previous + 1e-9);
    previous = value;
  }
}

TEST_CASE("isolated wrench loop decays at the design rate") {
  // Actuator subsystem alone under a constant commanded wrench step: the
  // wrench error must decay with exponent gamma_p (1 + k) = 20 within 5%.
  // The step is kept small: the design rate is the linearized property,
  // and large steps leave the Jacobian's linear regime.
  const Scenario& s = sc();
  AllocatorParams params = s.allocator;
  params.gamma_j = 0.0;

  Wrench u_star = hover_wrench();
  u_star.force += Vec3(0.03, -0.02, 0.04);
  u_star.torque += Vec3(0.001, 0.0015, -0.0005);

  ActuatorState x = s.initial_actuators;
  const double dt = 1e-3;
  std::vector<double> t_log, log_error;
  for (int n = 0; n <= 500; ++n) {
    const auto out =
        allocator_step(x, u_star, Wrench{}, s.box, s.propellers, params);
    const double err =
        (out.diag.produced_wrench.vector() - u_star.vector()).norm();
    if (n * dt >= 0.05 && err > 1e-8) {  // skip the transient and the floor
      t_log.push_back(n * dt);
      log_error.push_back(std::log(err));
    }
    x.x += dt * (out.diag.u_y - out.diag.u_j);
  }
  REQUIRE(t_log.size() > 50);

  // Least-squares slope of log ||u~|| vs t.
  double st = 0, sy = 0, stt = 0, sty = 0;
  for (size_t k = 0; k < t_log.size(); ++k) {
    st += t_log[k];
    sy += log_error[k];
    stt += t_log[k] * t_log[k];
    sty += t_log[k] * log_error[k];
  }
  const double n = static_cast<double>(t_log.size());
  const double slope = (n * sty - st * sy) / (n * stt - st * st);
  CHECK(std::abs(-slope - 20.0) < 1.0);  // within 5%
}
