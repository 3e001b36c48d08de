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

#include "test_support.hpp"
#include "tiltalloc/euler.hpp"

using namespace tiltalloc;

TEST_CASE("rotation_wb at zero angles is the identity") {
  CHECK((rotation_wb(Vec3::Zero()) - Mat3::Identity()).norm() == doctest::Approx(0.0));
}

TEST_CASE("pure yaw of pi/2 maps e1 to e2") {
  const Vec3 mapped = rotation_wb(Vec3(0, 0, M_PI / 2)) * Vec3::UnitX();
  CHECK((mapped - Vec3::UnitY()).norm() < 1e-15);
}

TEST_CASE("rotation_wb is proper orthogonal at random angles") {
  auto gen = test::rng();
  for (int k = 0; k < 50; ++k) {
    const Vec3 euler = test::random_vec3(gen, M_PI);
    const Mat3 r = rotation_wb(euler);
    CHECK((r.transpose() * r - Mat3::Identity()).norm() < 1e-12);
    CHECK(r.determinant() == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("rotation_wb composes intrinsic z-y-x rotations") {
  // Independent oracle: Eigen's angle-axis composition.
  auto gen = test::rng(7u);
  for (int k = 0; k < 20; ++k) {
    const Vec3 e = test::random_vec3(gen, M_PI);
    const Mat3 expected =
        (Eigen::AngleAxisd(e[2], Vec3::UnitZ()) *
         Eigen::AngleAxisd(e[1], Vec3::UnitY()) *
         Eigen::AngleAxisd(e[0], Vec3::UnitX()))
            .toRotationMatrix();
    CHECK((rotation_wb(e) - expected).norm() < 1e-13);
  }
}

TEST_CASE("euler_rate_matrix at zero angles is the identity") {
  CHECK((euler_rate_matrix(Vec3::Zero()) - Mat3::Identity()).norm() == doctest::Approx(0.0));
}

TEST_CASE("euler_rate_matrix is singular at pitch = pi/2") {
  CHECK(std::abs(euler_rate_matrix(Vec3(0.3, M_PI / 2, -0.7)).determinant()) < 1e-12);
}

TEST_CASE("euler_rate_matrix determinant equals cos(pitch) away from the singularity") {
  auto gen = test::rng(11u);
  std::uniform_real_distribution<double> pitch(-M_PI / 2 + 0.1, M_PI / 2 - 0.1);
  for (int k = 0; k < 50; ++k) {
    Vec3 e = test::random_vec3(gen, M_PI);
    e[1] = pitch(gen);
    const Mat3 w = euler_rate_matrix(e);
    CHECK(w.determinant() == doctest::Approx(std::cos(e[1])).epsilon(1e-12));
  }
}

TEST_CASE("euler_rate_matrix_dot vanishes for zero rates") {
  CHECK(euler_rate_matrix_dot(Vec3(0.4, -0.2, 1.1), Vec3::Zero()).norm() == 0.0);
}

TEST_CASE("euler_rate_matrix_dot entry (0,2) is -cos(pitch)*pitch_rate") {
  const Mat3 wd = euler_rate_matrix_dot(Vec3::Zero(), Vec3(0, 1, 0));
  CHECK(wd(0, 2) == doctest::Approx(-1.0));
}

TEST_CASE("euler_rate_matrix_dot matches the directional finite difference") {
  auto gen = test::rng(13u);
  const double h = 1e-7;
  for (int k = 0; k < 30; ++k) {
    const Vec3 e = test::random_vec3(gen, 1.0);
    const Vec3 de = test::random_vec3(gen, 1.0);
    const Mat3 fd = (euler_rate_matrix(e + h * de) - euler_rate_matrix(e - h * de)) / (2 * h);
    CHECK((euler_rate_matrix_dot(e, de) - fd).norm() < 1e-6);
  }
}
