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

#ifndef TDESIGN_MANIFEST_HPP_
#define TDESIGN_MANIFEST_HPP_

#include <string>
#include <vector>

#include <json.hpp>

#include "tdesign/moments.hpp"

namespace tdesign {

inline constexpr const char* kVersionString = "tdesign 1.0.0";

// Every table written by the command-line tool gets a sibling
// "<table>.manifest.json" recording the subcommand, the full configuration,
// the root seed, timestamps, and a digest of each output, which is enough
// to reproduce the data bit for bit (timestamps aside).
std::string manifest_path_for(const std::string& data_path);

nlohmann::json build_manifest(const std::string& subcommand,
                              const nlohmann::json& config_echo,
                              std::uint64_t root_seed,
                              const std::string& started_utc,
                              const std::string& finished_utc,
                              const std::vector<std::string>& output_paths);

void write_manifest(const std::string& manifest_path,
                    const nlohmann::json& manifest);

nlohmann::json load_manifest(const std::string& manifest_path);

// Returns the missing or ill-typed top-level keys; empty means valid.
std::vector<std::string> manifest_schema_errors(const nlohmann::json& m);

std::string iso8601_utc_now();

// Experiment configuration as a JSON file with exactly the keys
// d, t, sample_size, set_size, is_symmetric, seed, scaling. Unknown,
// missing, or ill-typed keys raise ConfigError naming every offender.
ExperimentConfig parse_experiment_config(const nlohmann::json& j);
ExperimentConfig load_experiment_config(const std::string& path);
nlohmann::json experiment_config_to_json(const ExperimentConfig& config);

const char* scaling_mode_name(ScalingMode mode);
ScalingMode scaling_mode_from_name(const std::string& name);

}  // namespace tdesign

#endif  // TDESIGN_MANIFEST_HPP_
