// Copyright 2026 The edgeqaoa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "edgeqaoa/config.h"

#include <fstream>
#include <map>
#include <set>

#include <boost/algorithm/string.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <fmt/format.h>

#include "edgeqaoa/permutation.h"

namespace edgeqaoa {

void ExperimentConfig::validate() const {
  if (graph_size < 2) throw ConfigError("graph size must be at least 2");
  if (graph_size > kMaxFactorialArg) {
    throw ConfigError(fmt::format("graph size {} exceeds the supported maximum {}", graph_size,
                                  kMaxFactorialArg));
  }
  if (static_cast<std::size_t>(graph_size) > kDefaultBruteForceCap) {
    throw ConfigError(fmt::format("graph size {} exceeds the brute-force cap {}", graph_size,
                                  kDefaultBruteForceCap));
  }
  if (qubit_count(graph_size) > kDefaultMaxQubits) {
    throw ConfigError(fmt::format("graph size {} needs more than {} qubits", graph_size, kDefaultMaxQubits));
  }
  if (trials < 1) throw ConfigError("trial count must be at least 1");
  if (threads < 1) throw ConfigError("thread count must be at least 1");
  if (deformations.empty()) throw ConfigError("at least one deformation is required");
  if (depths.empty()) throw ConfigError("at least one depth p is required");
  for (int p : depths) {
    if (p < 1) throw ConfigError(fmt::format("depth p must be >= 1, got {}", p));
  }
  if (methods.empty()) throw ConfigError("at least one optimisation method is required");
  for (Method m : methods) {
    if (!is_implemented(m)) {
      throw ConfigError(fmt::format("optimisation method '{}' is not available", to_string(m)));
    }
  }
  if (budget_scaling < 1) throw ConfigError("budget scaling must be positive");
  if (max_evaluations && *max_evaluations < 1) throw ConfigError("max_evaluations must be positive");
  if (samples && *samples < 1) throw ConfigError("sample count must be positive");
  if (!(tolerances.x_tol >= 0.0) || !(tolerances.f_tol >= 0.0)) {
    throw ConfigError("tolerances must be non-negative");
  }
}

std::size_t ExperimentConfig::sample_count() const {
  return samples ? *samples : static_cast<std::size_t>(graph_size) * static_cast<std::size_t>(graph_size);
}

namespace {

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> parts;
  std::string s(text);
  boost::split(parts, s, boost::is_any_of(","));
  for (auto& p : parts) {
    boost::trim(p);
    if (p.empty()) throw ConfigError(fmt::format("list '{}' has an empty item", text));
  }
  return parts;
}

template <typename T>
T parse_number(const std::string& key, const std::string& text) {
  try {
    std::size_t used = 0;
    T value;
    if constexpr (std::is_same_v<T, double>) {
      value = std::stod(text, &used);
    } else if constexpr (std::is_same_v<T, uint64_t>) {
      if (!text.empty() && text[0] == '-') throw std::invalid_argument("negative");
      value = std::stoull(text, &used);
    } else {
      value = static_cast<T>(std::stoll(text, &used));
    }
    if (used != text.size()) throw std::invalid_argument("trailing characters");
    return value;
  } catch (const std::exception&) {
    throw ConfigError(fmt::format("{}: '{}' is not a valid number", key, text));
  }
}

bool parse_bool(const std::string& key, std::string text) {
  boost::to_lower(text);
  if (text == "true" || text == "yes" || text == "1" || text == "on") return true;
  if (text == "false" || text == "no" || text == "0" || text == "off") return false;
  throw ConfigError(fmt::format("{}: '{}' is not a boolean", key, text));
}

}  // namespace

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  for (const auto& item : split_list(text)) out.push_back(parse_number<int>("list", item));
  return out;
}

std::vector<Method> parse_method_list(std::string_view text) {
  std::vector<Method> out;
  for (const auto& item : split_list(text)) {
    try {
      out.push_back(parse_method(item));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
  return out;
}

std::vector<Deformation> parse_deformation_list(std::string_view text) {
  if (boost::trim_copy(std::string(text)) == "all") return ExperimentConfig{}.deformations;
  std::vector<Deformation> out;
  for (const auto& item : split_list(text)) {
    try {
      out.push_back(parse_deformation(item));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
  return out;
}

ExperimentConfig parse_config(std::istream& in) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(fmt::format("config: {}", e.what()));
  }

  ExperimentConfig cfg;
  using Setter = void (*)(ExperimentConfig&, const std::string&, const std::string&);
  static const std::map<std::string, std::map<std::string, Setter>> kKeys = {
      {"graph",
       {{"size", [](ExperimentConfig& c, const std::string& k, const std::string& v) { c.graph_size = parse_number<int>(k, v); }},
        {"directed", [](ExperimentConfig& c, const std::string& k, const std::string& v) { c.directed = parse_bool(k, v); }},
        {"deformations", [](ExperimentConfig& c, const std::string&, const std::string& v) { c.deformations = parse_deformation_list(v); }}}},
      {"qaoa",
       {{"cost_mode", [](ExperimentConfig& c, const std::string&, const std::string& v) {
          try {
            c.mode = parse_cost_mode(v);
          } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
          }
        }},
        {"depths", [](ExperimentConfig& c, const std::string&, const std::string& v) { c.depths = parse_int_list(v); }},
        {"samples", [](ExperimentConfig& c, const std::string& k, const std::string& v) {
          auto n = parse_number<uint64_t>(k, v);
          if (n == 0) c.samples.reset(); else c.samples = n;
        }}}},
      {"optimizer",
       {{"methods", [](ExperimentConfig& c, const std::string&, const std::string& v) { c.methods = parse_method_list(v); }},
        {"budget_scaling", [](ExperimentConfig& c, const std::string& k, const std::string& v) { c.budget_scaling = parse_number<uint64_t>(k, v); }},
        {"max_evaluations", [](ExperimentConfig& c, const std::string& k, const std::string& v) {
          auto n = parse_number<uint64_t>(k, v);
          if (n == 0) c.max_evaluations.reset(); else c.max_evaluations = n;
        }},
        {"x_tol", [](ExperimentConfig& c, const std::string& k, const std::string& v) { c.tolerances.x_tol = parse_number<double>(k, v); }},
        {"f_tol", [](ExperimentConfig& c, const std::string& k, const std::string& v) { c.tolerances.f_tol = parse_number<double>(k, v); }}}},
      {"run",
       {{"seed", [](ExperimentConfig& c, const std::string& k, const std::string& v) { c.master_seed = parse_number<uint64_t>(k, v); }},
        {"trials", [](ExperimentConfig& c, const std::string& k, const std::string& v) { c.trials = parse_number<int>(k, v); }},
        {"threads", [](ExperimentConfig& c, const std::string& k, const std::string& v) { c.threads = parse_number<int>(k, v); }}}},
      {"output",
       {{"path", [](ExperimentConfig& c, const std::string&, const std::string& v) { c.output_path = v; }}}},
  };

  for (const auto& [section, body] : tree) {
    auto sec = kKeys.find(section);
    if (sec == kKeys.end()) throw ConfigError(fmt::format("config: unknown section [{}]", section));
    if (body.empty() && !body.data().empty()) {
      throw ConfigError(fmt::format("config: key '{}' must sit inside a section", section));
    }
    for (const auto& [key, value] : body) {
      auto setter = sec->second.find(key);
      if (setter == sec->second.end()) {
        throw ConfigError(fmt::format("config: unknown key '{}' in [{}]", key, section));
      }
      setter->second(cfg, section + "." + key, boost::trim_copy(value.data()));
    }
  }
  cfg.validate();
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(fmt::format("cannot open config file '{}'", path));
  return parse_config(in);
}

}  // namespace edgeqaoa
