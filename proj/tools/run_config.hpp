// Copyright 2026 The seclogit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SECLOGIT_TOOLS_RUN_CONFIG_HPP
#define SECLOGIT_TOOLS_RUN_CONFIG_HPP

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "seclogit/data.hpp"
#include "seclogit/errors.hpp"
#include "seclogit/protocol1.hpp"
#include "seclogit/protocol2.hpp"

namespace seclogit::tools {

enum class Method { kExactNr, kHessLbClear, kProtocol1, kProtocol2 };

inline Method method_from_name(const std::string& name) {
  if (name == "exact_nr") return Method::kExactNr;
  if (name == "hesslb_clear") return Method::kHessLbClear;
  if (name == "protocol1") return Method::kProtocol1;
  if (name == "protocol2") return Method::kProtocol2;
  throw ValidationError("unknown method '" + name + "'");
}

inline const char* method_name(Method m) {
  switch (m) {
    case Method::kExactNr:
      return "exact_nr";
    case Method::kHessLbClear:
      return "hesslb_clear";
    case Method::kProtocol1:
      return "protocol1";
    case Method::kProtocol2:
      return "protocol2";
  }
  return "?";
}

// Everything one run needs, loadable from a sectioned key=value file and
// serializable back for provenance. Strict mode forbids intermediate
// parameter revelation (and therefore trace emission).
struct RunConfig {
  Method method = Method::kProtocol1;
  bool trace_mode = false;
  int parties = 2;
  PartitionScheme scheme = PartitionScheme::kHorizontal;
  uint64_t seed = 1;
  int modulus_bits = 64;
  int frac_bits = 24;
  double eps_conv = 1e-8;
  Protocol1Config p1;
  Protocol2Config p2;
  std::optional<double> b_threshold;  // protocol 2; derived from data if absent

  Protocol1Config protocol1_config() const {
    Protocol1Config c = p1;
    c.seed = seed;
    c.eps_conv = eps_conv;
    return c;
  }
  Protocol2Config protocol2_config(std::optional<double> derived_b) const {
    Protocol2Config c = p2;
    c.seed = seed;
    if (b_threshold) {
      c.b_threshold = *b_threshold;
    } else if (derived_b) {
      c.b_threshold = *derived_b;
    } else {
      throw ValidationError("protocol2 needs an explicit b threshold in strict mode");
    }
    return c;
  }
  FixedPointCodec codec() const { return FixedPointCodec(modulus_bits, frac_bits); }

  std::string to_kv() const;
  static RunConfig from_file(const std::string& path);
  void apply(const std::string& section, const std::string& key, const std::string& value);
};

inline std::string RunConfig::to_kv() const {
  std::ostringstream os;
  os.precision(17);
  os << "[run]\n";
  os << "method = " << method_name(method) << "\n";
  os << "mode = " << (trace_mode ? "trace" : "strict") << "\n";
  os << "parties = " << parties << "\n";
  os << "scheme = " << scheme_name(scheme) << "\n";
  os << "seed = " << seed << "\n";
  os << "eps_conv = " << eps_conv << "\n";
  os << "\n[codec]\n";
  os << "modulus_bits = " << modulus_bits << "\n";
  os << "frac_bits = " << frac_bits << "\n";
  os << "\n[protocol1]\n";
  os << "L = " << p1.logistic_samples << "\n";
  os << "hessian_mode = "
     << (p1.hessian_mode == HessianMode::kHessianLb ? "hessian_lb" : "full_newton") << "\n";
  os << "max_outer = " << p1.max_outer << "\n";
  os << "inv_eps = " << p1.inv_eps << "\n";
  os << "max_inv = " << p1.max_inv << "\n";
  os << "refinement_schedule =";
  for (size_t i = 0; i < p1.refinement_schedule.size(); ++i) {
    os << (i ? "," : " ") << p1.refinement_schedule[i];
  }
  os << "\n";
  os << "\n[protocol2]\n";
  os << "k = " << p2.euler_steps << "\n";
  if (b_threshold) os << "b = " << *b_threshold << "\n";
  os << "max_outer = " << p2.max_outer << "\n";
  os << "inv_eps = " << p2.inv_eps << "\n";
  os << "max_inv = " << p2.max_inv << "\n";
  return os.str();
}

inline void RunConfig::apply(const std::string& section, const std::string& key,
                             const std::string& value) {
  auto bad = [&]() {
    throw ValidationError("unknown config key '" + key + "' in section [" + section + "]");
  };
  if (section == "run") {
    if (key == "method") method = method_from_name(value);
    else if (key == "mode") {
      if (value == "trace") trace_mode = true;
      else if (value == "strict") trace_mode = false;
      else throw ValidationError("mode must be strict or trace");
    } else if (key == "parties") parties = std::stoi(value);
    else if (key == "scheme") scheme = scheme_from_name(value);
    else if (key == "seed") seed = std::stoull(value);
    else if (key == "eps_conv") eps_conv = std::stod(value);
    else bad();
  } else if (section == "codec") {
    if (key == "modulus_bits") modulus_bits = std::stoi(value);
    else if (key == "frac_bits") frac_bits = std::stoi(value);
    else bad();
  } else if (section == "protocol1") {
    if (key == "L") p1.logistic_samples = std::stoi(value);
    else if (key == "hessian_mode") {
      if (value == "hessian_lb") p1.hessian_mode = HessianMode::kHessianLb;
      else if (value == "full_newton") p1.hessian_mode = HessianMode::kFullNewton;
      else throw ValidationError("hessian_mode must be hessian_lb or full_newton");
    } else if (key == "max_outer") p1.max_outer = std::stoi(value);
    else if (key == "inv_eps") p1.inv_eps = std::stod(value);
    else if (key == "max_inv") p1.max_inv = std::stoi(value);
    else if (key == "refinement_schedule") {
      p1.refinement_schedule.clear();
      std::stringstream ss(value);
      std::string item;
      while (std::getline(ss, item, ',')) {
        if (!item.empty()) p1.refinement_schedule.push_back(std::stoi(item));
      }
    } else bad();
  } else if (section == "protocol2") {
    if (key == "k") p2.euler_steps = std::stoi(value);
    else if (key == "b") b_threshold = std::stod(value);
    else if (key == "max_outer") p2.max_outer = std::stoi(value);
    else if (key == "inv_eps") p2.inv_eps = std::stod(value);
    else if (key == "max_inv") p2.max_inv = std::stoi(value);
    else bad();
  } else {
    throw ValidationError("unknown config section [" + section + "]");
  }
}

inline RunConfig RunConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open config file " + path);
  RunConfig cfg;
  std::string line, section = "run";
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r\n");
    line = line.substr(first, last - first + 1);
    if (line.empty() || line[0] == '#') continue;
    if (line.front() == '[' && line.back() == ']') {
      section = line.substr(1, line.size() - 2);
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ValidationError("bad config line: " + line);
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t");
      if (b == std::string::npos) return std::string();
      const auto e = s.find_last_not_of(" \t");
      return s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (!value.empty()) cfg.apply(section, key, value);
  }
  return cfg;
}

}  // namespace seclogit::tools

#endif  // SECLOGIT_TOOLS_RUN_CONFIG_HPP
