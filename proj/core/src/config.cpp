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

#include "tiltalloc/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "tiltalloc/actuation.hpp"
#include "tiltalloc/errors.hpp"

namespace tiltalloc {

namespace {

struct Entry {
  std::string value;
  int line = 0;
  mutable bool consumed = false;
};

using Section = std::map<std::string, Entry>;

struct Document {
  std::map<std::string, Section> sections;
  std::map<std::string, int> section_lines;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

Document lex(std::string_view text) {
  Document doc;
  std::string current;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    const size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
    ++line_no;

    if (const size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']' || line.size() < 3) {
        throw ConfigError("malformed section header", line_no);
      }
      current = std::string(trim(line.substr(1, line.size() - 2)));
      if (doc.sections.count(current)) {
        throw ConfigError("duplicate section [" + current + "]", line_no);
      }
      doc.sections[current] = {};
      doc.section_lines[current] = line_no;
      continue;
    }

    const size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("expected key = value", line_no);
    }
    if (current.empty()) {
      throw ConfigError("key outside of any section", line_no);
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (key.empty()) throw ConfigError("empty key", line_no);
    auto [it, inserted] = doc.sections[current].emplace(key, Entry{value, line_no});
    if (!inserted) {
      throw ConfigError("duplicate key '" + key + "' in [" + current + "]", line_no);
    }
  }
  return doc;
}

class Reader {
 public:
  explicit Reader(const Document& doc) : doc_(doc) {}

  bool has(const std::string& section, const std::string& key) const {
    auto s = doc_.sections.find(section);
    return s != doc_.sections.end() && s->second.count(key) > 0;
  }

  const Entry& require(const std::string& section, const std::string& key) const {
    auto s = doc_.sections.find(section);
    if (s == doc_.sections.end()) {
      throw ConfigError("missing section [" + section + "]");
    }
    auto k = s->second.find(key);
    if (k == s->second.end()) {
      throw ConfigError("missing key '" + key + "' in [" + section + "]",
                        doc_.section_lines.at(section));
    }
    k->second.consumed = true;
    return k->second;
  }

  double number(const std::string& section, const std::string& key) const {
    const Entry& e = require(section, key);
    return parse_number(e.value, e.line);
  }

  double number_or(const std::string& section, const std::string& key,
                   double fallback) const {
    return has(section, key) ? number(section, key) : fallback;
  }

  std::string word(const std::string& section, const std::string& key) const {
    return require(section, key).value;
  }

  std::string word_or(const std::string& section, const std::string& key,
                      const std::string& fallback) const {
    return has(section, key) ? word(section, key) : fallback;
  }

  template <int N>
  Eigen::Matrix<double, N, 1> vector(const std::string& section,
                                     const std::string& key) const {
    const Entry& e = require(section, key);
    const std::vector<double> values = parse_list(e.value, e.line);
    if (values.size() != N) {
      throw ConfigError("key '" + key + "' expects " + std::to_string(N) +
                            " numbers, got " + std::to_string(values.size()),
                        e.line);
    }
    Eigen::Matrix<double, N, 1> out;
    for (int i = 0; i < N; ++i) out[i] = values[i];
    return out;
  }

  template <int N>
  Eigen::Matrix<double, N, 1> vector_or(
      const std::string& section, const std::string& key,
      const Eigen::Matrix<double, N, 1>& fallback) const {
    return has(section, key) ? vector<N>(section, key) : fallback;
  }

  void reject_unconsumed(const std::set<std::string>& known_sections) const {
    for (const auto& [name, section] : doc_.sections) {
      if (!known_sections.count(name)) {
        throw ConfigError("unknown section [" + name + "]",
                          doc_.section_lines.at(name));
      }
      for (const auto& [key, entry] : section) {
        if (!entry.consumed) {
          throw ConfigError("unknown key '" + key + "' in [" + name + "]",
                            entry.line);
        }
      }
    }
  }

  static double parse_number(const std::string& s, int line) {
    double value = 0.0;
    const char* begin = s.data();
    const char* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) {
      throw ConfigError("not a number: '" + s + "'", line);
    }
    return value;
  }

  static std::vector<double> parse_list(const std::string& s, int line) {
    std::vector<double> values;
    std::istringstream is(s);
    std::string token;
    while (is >> token) values.push_back(parse_number(token, line));
    return values;
  }

 private:
  const Document& doc_;
};

}  // namespace

ParsedScenario parse_scenario_text(std::string_view text,
                                   const std::string& name) {
  const Document doc = lex(text);
  const Reader r(doc);

  ParsedScenario parsed;
  Scenario& s = parsed.scenario;
  s.name = name;

  s.platform.mass = r.number("platform", "mass");
  s.platform.inertia = Vec3(r.vector<3>("platform", "inertia_diag")).asDiagonal();
  s.platform.gravity = r.number("platform", "gravity");

  s.propellers = star_hexarotor_propellers(r.number("propellers", "arm_length"),
                                           r.number("propellers", "force_coeff"),
                                           r.number("propellers", "drag_coeff"));

  const double tilt_limit = deg_to_rad(r.number("saturation", "tilt_limit_deg"));
  const double spin_min = r.number("saturation", "spin_min");
  const double spin_max = r.number("saturation", "spin_max");
  {
    const Entry& e = r.require("saturation", "spin_min");
    if (spin_min < 0.0 || spin_max <= spin_min) {
      throw ConfigError("spin bounds must satisfy 0 <= spin_min < spin_max", e.line);
    }
  }
  s.box = make_saturation_box(tilt_limit, spin_min, spin_max, s.propellers);

  s.gains.kp_pos = r.vector<3>("controller", "kp_pos");
  s.gains.kd_pos = r.vector<3>("controller", "kd_pos");
  s.gains.kp_att = r.vector<3>("controller", "kp_att");
  s.gains.kd_att = r.vector<3>("controller", "kd_att");

  s.allocator.gamma_p = r.number("allocator", "gamma_p");
  s.allocator.gamma_j = r.number("allocator", "gamma_j");
  s.allocator.k_diag = r.vector<6>("allocator", "k_diag");
  s.allocator.sat_epsilon = r.number("allocator", "epsilon");
  {
    const Entry& e = r.require("allocator", "objective");
    ObjectiveKind kind;
    if (e.value == "symmetric") {
      kind = ObjectiveKind::Symmetric;
    } else if (e.value == "alpha") {
      kind = ObjectiveKind::AlphaConstrained;
    } else if (e.value == "beta") {
      kind = ObjectiveKind::BetaConstrained;
    } else {
      throw ConfigError("objective must be symmetric|alpha|beta, got '" +
                            e.value + "'",
                        e.line);
    }
    s.allocator.objective =
        make_objective(kind, r.number("allocator", "mu_alpha"),
                       r.number("allocator", "mu_beta"),
                       r.number("allocator", "mu_omega"));
  }

  {
    const Entry& e = r.require("trajectory", "type");
    if (e.value == "circle") {
      s.trajectory = ReferenceTrajectory::circle(
          r.number("trajectory", "radius"), r.number("trajectory", "angular_rate"),
          r.number_or("trajectory", "altitude", 0.0));
    } else if (e.value == "hover") {
      s.trajectory = ReferenceTrajectory::hover(r.vector<3>("trajectory", "position"));
    } else if (e.value == "step") {
      s.trajectory = ReferenceTrajectory::step(r.vector<3>("trajectory", "from"),
                                               r.vector<3>("trajectory", "to"),
                                               r.number("trajectory", "step_time"));
    } else {
      throw ConfigError("trajectory type must be circle|hover|step, got '" +
                            e.value + "'",
                        e.line);
    }
    s.trajectory.attitude =
        deg_to_rad(1.0) * r.vector_or<3>("trajectory", "attitude_deg", Vec3::Zero());
  }

  s.duration = r.number("sim", "duration");
  s.dt = r.number("sim", "dt");
  {
    const double substeps = r.number_or("sim", "substeps", 40.0);
    if (substeps < 1.0 || substeps != std::floor(substeps)) {
      throw ConfigError("substeps must be a positive integer",
                        r.has("sim", "substeps") ? r.require("sim", "substeps").line
                                                 : 0);
    }
    s.substeps = static_cast<int>(substeps);
  }

  // [initial] is optional and defaults to hovering at the reference start.
  s.initial_platform.position =
      r.vector_or<3>("initial", "position", s.trajectory.sample(0.0).position);
  s.initial_platform.velocity = r.vector_or<3>("initial", "velocity", Vec3::Zero());
  s.initial_platform.attitude =
      deg_to_rad(1.0) * r.vector_or<3>("initial", "attitude_deg", Vec3::Zero());
  s.initial_platform.attitude_rate =
      deg_to_rad(1.0) * r.vector_or<3>("initial", "attitude_rate_deg", Vec3::Zero());

  const Vec6 alpha0 = r.vector_or<6>("initial", "alpha_deg", Vec6::Zero());
  const Vec6 beta0 = r.vector_or<6>("initial", "beta_deg", Vec6::Zero());
  for (int i = 0; i < kNumPropellers; ++i) {
    s.initial_actuators.alpha(i) = deg_to_rad(alpha0[i]);
    s.initial_actuators.beta(i) = deg_to_rad(beta0[i]);
  }
  if (r.has("initial", "spin") &&
      trim(r.require("initial", "spin").value) != "hover") {
    const Entry& e = r.require("initial", "spin");
    const std::vector<double> spins = Reader::parse_list(e.value, e.line);
    if (spins.size() != kNumPropellers) {
      throw ConfigError("spin expects 'hover' or 6 signed rates", e.line);
    }
    for (int i = 0; i < kNumPropellers; ++i) s.initial_actuators.omega(i) = spins[i];
  } else {
    for (int i = 0; i < kNumPropellers; ++i) {
      s.initial_actuators.omega(i) =
          s.propellers[i].spin_sign * hover_spin_rate(s.platform, s.propellers[i]);
    }
  }

  parsed.output.record = r.word_or("output", "record", "record.csv");
  parsed.output.tables = r.word_or("output", "tables", "tables.csv");
  parsed.output.summary = r.word_or("output", "summary", "summary.txt");

  r.reject_unconsumed({"platform", "propellers", "saturation", "controller",
                       "allocator", "trajectory", "initial", "sim", "output"});

  try {
    s.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return parsed;
}

ParsedScenario parse_scenario_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open scenario file '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario_text(buffer.str(), path.stem().string());
}

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

std::string fmt_vec(const Eigen::Ref<const Eigen::VectorXd>& v) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) os << ' ';
    os.precision(17);
    os << v[i];
  }
  return os.str();
}

}  // namespace

std::string serialize_scenario(const ParsedScenario& parsed) {
  const Scenario& s = parsed.scenario;
  std::ostringstream os;

  os << "[platform]\n";
  os << "mass = " << fmt(s.platform.mass) << "\n";
  os << "inertia_diag = " << fmt_vec(s.platform.inertia.diagonal()) << "\n";
  os << "gravity = " << fmt(s.platform.gravity) << "\n\n";

  os << "[propellers]\n";
  os << "arm_length = " << fmt(s.propellers[0].arm_length) << "\n";
  os << "force_coeff = " << fmt(s.propellers[0].force_coeff) << "\n";
  os << "drag_coeff = " << fmt(s.propellers[0].drag_coeff) << "\n\n";

  os << "[saturation]\n";
  os << "tilt_limit_deg = " << fmt(rad_to_deg(s.box.upper[0])) << "\n";
  const int w0 = ActuatorState::omega_index(0);
  os << "spin_min = " << fmt(std::min(std::abs(s.box.lower[w0]), std::abs(s.box.upper[w0]))) << "\n";
  os << "spin_max = " << fmt(std::max(std::abs(s.box.lower[w0]), std::abs(s.box.upper[w0]))) << "\n\n";

  os << "[controller]\n";
  os << "kp_pos = " << fmt_vec(s.gains.kp_pos) << "\n";
  os << "kd_pos = " << fmt_vec(s.gains.kd_pos) << "\n";
  os << "kp_att = " << fmt_vec(s.gains.kp_att) << "\n";
  os << "kd_att = " << fmt_vec(s.gains.kd_att) << "\n\n";

  os << "[allocator]\n";
  os << "gamma_p = " << fmt(s.allocator.gamma_p) << "\n";
  os << "gamma_j = " << fmt(s.allocator.gamma_j) << "\n";
  os << "k_diag = " << fmt_vec(s.allocator.k_diag) << "\n";
  os << "epsilon = " << fmt(s.allocator.sat_epsilon) << "\n";
  const auto& obj = s.allocator.objective;
  os << "objective = "
     << (obj.alpha_exponent == 2 ? "alpha" : (obj.beta_exponent == 2 ? "beta" : "symmetric"))
     << "\n";
  os << "mu_alpha = " << fmt(obj.mu_alpha) << "\n";
  os << "mu_beta = " << fmt(obj.mu_beta) << "\n";
  os << "mu_omega = " << fmt(obj.mu_omega) << "\n\n";

  os << "[trajectory]\n";
  switch (s.trajectory.kind) {
    case ReferenceTrajectory::Kind::Circle:
      os << "type = circle\n";
      os << "radius = " << fmt(s.trajectory.radius) << "\n";
      os << "angular_rate = " << fmt(s.trajectory.angular_rate) << "\n";
      os << "altitude = " << fmt(s.trajectory.altitude) << "\n";
      break;
    case ReferenceTrajectory::Kind::Hover:
      os << "type = hover\n";
      os << "position = " << fmt_vec(s.trajectory.hover_position) << "\n";
      break;
    case ReferenceTrajectory::Kind::Step:
      os << "type = step\n";
      os << "from = " << fmt_vec(s.trajectory.hover_position) << "\n";
      os << "to = " << fmt_vec(s.trajectory.step_target) << "\n";
      os << "step_time = " << fmt(s.trajectory.step_time) << "\n";
      break;
  }
  os << "attitude_deg = " << fmt_vec(rad_to_deg(1.0) * s.trajectory.attitude) << "\n\n";

  os << "[initial]\n";
  os << "position = " << fmt_vec(s.initial_platform.position) << "\n";
  os << "velocity = " << fmt_vec(s.initial_platform.velocity) << "\n";
  os << "attitude_deg = " << fmt_vec(rad_to_deg(1.0) * s.initial_platform.attitude) << "\n";
  os << "attitude_rate_deg = "
     << fmt_vec(rad_to_deg(1.0) * s.initial_platform.attitude_rate) << "\n";
  os << "alpha_deg = "
     << fmt_vec(rad_to_deg(1.0) * s.initial_actuators.x.head<6>()) << "\n";
  os << "beta_deg = "
     << fmt_vec(rad_to_deg(1.0) * s.initial_actuators.x.segment<6>(6)) << "\n";
  os << "spin = " << fmt_vec(s.initial_actuators.x.tail<6>()) << "\n\n";

  os << "[sim]\n";
  os << "duration = " << fmt(s.duration) << "\n";
  os << "dt = " << fmt(s.dt) << "\n";
  os << "substeps = " << s.substeps << "\n\n";

  os << "[output]\n";
  os << "record = " << parsed.output.record << "\n";
  os << "tables = " << parsed.output.tables << "\n";
  os << "summary = " << parsed.output.summary << "\n";
  return os.str();
}

}  // namespace tiltalloc
