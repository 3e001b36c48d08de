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

#include "tiltalloc/euler.hpp"

#include <cmath>

namespace tiltalloc {

Mat3 rot_x(double a) {
  const double c = std::cos(a), s = std::sin(a);
  Mat3 r;
  r << 1, 0, 0,
       0, c, -s,
       0, s, c;
  return r;
}

Mat3 rot_y(double a) {
  const double c = std::cos(a), s = std::sin(a);
  Mat3 r;
  r << c, 0, s,
       0, 1, 0,
       -s, 0, c;
  return r;
}

Mat3 rot_z(double a) {
  const double c = std::cos(a), s = std::sin(a);
  Mat3 r;
  r << c, -s, 0,
       s, c, 0,
       0, 0, 1;
  return r;
}

Mat3 rotation_wb(const Vec3& euler) {
  return rot_z(euler[2]) * rot_y(euler[1]) * rot_x(euler[0]);
}

Mat3 euler_rate_matrix(const Vec3& euler) {
  const double cr = std::cos(euler[0]), sr = std::sin(euler[0]);
  const double cp = std::cos(euler[1]), sp = std::sin(euler[1]);
  Mat3 w;
  w << 1, 0, -sp,
       0, cr, cp * sr,
       0, -sr, cp * cr;
  return w;
}

Mat3 euler_rate_matrix_dot(const Vec3& euler, const Vec3& euler_rate) {
  const double cr = std::cos(euler[0]), sr = std::sin(euler[0]);
  const double cp = std::cos(euler[1]), sp = std::sin(euler[1]);
  const double dr = euler_rate[0], dp = euler_rate[1];
  Mat3 wd;
  wd << 0, 0, -cp * dp,
        0, -sr * dr, -sp * dp * sr + cp * cr * dr,
        0, -cr * dr, -sp * dp * cr - cp * sr * dr;
  return wd;
}

}  // namespace tiltalloc
