// Copyright 2026 The tdesign Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tdesign/manifest.hpp"

#include <chrono>
#include <ctime>
#include <fstream>

#include "tdesign/errors.hpp"
#include "tdesign/table_io.hpp"

namespace tdesign {

using nlohmann::json;

std::string manifest_path_for(const std::string& data_path) {
  return data_path + ".manifest.json";
}

std::string iso8601_utc_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t tt = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&tt, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return std::string(buf);
}

json build_manifest(const std::string& subcommand, const json& config_echo,
                    std::uint64_t root_seed, const std::string& started_utc,
                    const std::string& finished_utc,
                    const std::vector<std::string>& output_paths) {
  json outputs = json::array();
  for (const auto& p : output_paths) {
    outputs.push_back({{"path", p}, {"fnv1a64", file_digest(p)}});
  }
  return json{{"version", kVersionString},
              {"subcommand", subcommand},
              {"config", config_echo},
              {"root_seed", root_seed},
              {"started_utc", started_utc},
              {"finished_utc", finished_utc},
              {"outputs", outputs}};
}

void write_manifest(const std::string& manifest_path, const json& manifest) {
  std::ofstream out(manifest_path, std::ios::binary);
  if (!out) {
    throw ResourceError("cannot open '" + manifest_path + "' for writing");
  }
  out << manifest.dump(2) << "\n";
  if (!out) throw ResourceError("write failure on '" + manifest_path + "'");
}

json load_manifest(const std::string& manifest_path) {
  std::ifstream in(manifest_path, std::ios::binary);
  if (!in) throw ResourceError("cannot open '" + manifest_path + "'");
  json m;
  try {
    in >> m;
  } catch (const json::parse_error& e) {
    throw ConfigError("malformed manifest '" + manifest_path +
                      "': " + e.what());
  }
  return m;
}

std::vector<std::string> manifest_schema_errors(const json& m) {
  std::vector<std::string> errors;
  auto need = [&m, &errors](const char* key, bool ok) {
    if (!m.contains(key)) {
      errors.push_back(std::string("missing key '") + key + "'");
    } else if (!ok) {
      errors.push_back(std::string("ill-typed key '") + key + "'");
    }
  };
  need("version", m.contains("version") && m["version"].is_string());
  need("subcommand", m.contains("subcommand") && m["subcommand"].is_string());
  need("config", m.contains("config") && m["config"].is_object());
  need("root_seed",
       m.contains("root_seed") && m["root_seed"].is_number_unsigned());
  need("started_utc",
       m.contains("started_utc") && m["started_utc"].is_string());
  need("finished_utc",
       m.contains("finished_utc") && m["finished_utc"].is_string());
  need("outputs", m.contains("outputs") && m["outputs"].is_array());
  return errors;
}

const char* scaling_mode_name(ScalingMode mode) {
  switch (mode) {
    case ScalingMode::None:
      return "none";
    case ScalingMode::SqrtS:
      return "sqrtS";
    case ScalingMode::TwoOverDeltaOpt:
      return "two_over_delta_opt";
  }
  throw ArgumentError("unknown scaling mode");
}

ScalingMode scaling_mode_from_name(const std::string& name) {
  if (name == "none") return ScalingMode::None;
  if (name == "sqrtS") return ScalingMode::SqrtS;
  if (name == "two_over_delta_opt") return ScalingMode::TwoOverDeltaOpt;
  throw ConfigError("unknown scaling mode '" + name + "'");
}

ExperimentConfig parse_experiment_config(const json& j) {
  std::vector<std::string> errors;
  if (!j.is_object()) throw ConfigError("config must be a JSON object");

  static const char* kKnown[] = {"d",         "t",    "sample_size",
                                 "set_size",  "seed", "is_symmetric",
                                 "scaling"};
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* k : kKnown) known = known || item.key() == k;
    if (!known) errors.push_back("unknown key '" + item.key() + "'");
  }

  auto need_int = [&](const char* key, int lo) {
    if (!j.contains(key)) {
      errors.push_back(std::string("missing key '") + key + "'");
      return lo;
    }
    if (!j[key].is_number_integer()) {
      errors.push_back(std::string("ill-typed key '") + key +
                       "' (integer expected)");
      return lo;
    }
    const auto v = j[key].get<std::int64_t>();
    if (v < lo) {
      errors.push_back(std::string("key '") + key + "' must be >= " +
                       std::to_string(lo));
      return lo;
    }
    return static_cast<int>(v);
  };

  ExperimentConfig config;
  config.d = need_int("d", 2);
  config.t = need_int("t", 1);
  config.sample_size = need_int("sample_size", 1);
  config.set_size = need_int("set_size", 1);

  if (!j.contains("is_symmetric")) {
    errors.push_back("missing key 'is_symmetric'");
  } else if (!j["is_symmetric"].is_boolean()) {
    errors.push_back("ill-typed key 'is_symmetric' (boolean expected)");
  } else {
    config.is_symmetric = j["is_symmetric"].get<bool>();
  }

  if (!j.contains("seed")) {
    errors.push_back("missing key 'seed'");
  } else if (!j["seed"].is_number_unsigned() &&
             !(j["seed"].is_number_integer() &&
               j["seed"].get<std::int64_t>() >= 0)) {
    errors.push_back("ill-typed key 'seed' (unsigned integer expected)");
  } else {
    config.seed = j["seed"].get<std::uint64_t>();
  }

  if (!j.contains("scaling")) {
    errors.push_back("missing key 'scaling'");
  } else if (!j["scaling"].is_string()) {
    errors.push_back("ill-typed key 'scaling' (string expected)");
  } else {
    try {
      config.scaling = scaling_mode_from_name(j["scaling"].get<std::string>());
    } catch (const ConfigError& e) {
      errors.push_back(e.what());
    }
  }

  if (!errors.empty()) {
    std::string message = "invalid experiment config:";
    for (const auto& e : errors) message += "\n  " + e;
    throw ConfigError(message);
  }
  return config;
}

ExperimentConfig load_experiment_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ResourceError("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ConfigError("malformed config '" + path + "': " + e.what());
  }
  return parse_experiment_config(j);
}

json experiment_config_to_json(const ExperimentConfig& config) {
  return json{{"d", config.d},
              {"t", config.t},
              {"sample_size", config.sample_size},
              {"set_size", config.set_size},
              {"is_symmetric", config.is_symmetric},
              {"seed", config.seed},
              {"scaling", scaling_mode_name(config.scaling)}};
}

}  // namespace tdesign
