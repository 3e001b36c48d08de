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

#include <stdexcept>
#include <string>

namespace tiltalloc {

/// The Euler-angle chart lost invertibility (|cos(pitch)| ~ 0).
struct KinematicSingularity : std::runtime_error {
  explicit KinematicSingularity(const std::string& what)
      : std::runtime_error(what) {}
};

/// Scenario file problem; `line` is 1-based, 0 when not tied to a line.
struct ConfigError : std::runtime_error {
  ConfigError(const std::string& what, int line_number = 0)
      : std::runtime_error(line_number > 0
                               ? "line " + std::to_string(line_number) + ": " + what
                               : what),
        line(line_number) {}
  int line;
};

struct FitError : std::runtime_error {
  enum class Kind { InsufficientData, IllConditioned };
  FitError(Kind k, const std::string& what) : std::runtime_error(what), kind(k) {}
  Kind kind;
};

/// Two records compared on different time grids.
struct GridMismatch : std::runtime_error {
  explicit GridMismatch(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tiltalloc
