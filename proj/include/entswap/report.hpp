// Copyright 2026 The entswap Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <span>
#include <string>

#include <json.hpp>

#include "entswap/monte_carlo.hpp"
#include "entswap/protocol.hpp"
#include "entswap/stats.hpp"

namespace entswap {

// JSON field names are a stable interface; see README.md for the schemas.

nlohmann::json to_json(const SessionConfig& config);
nlohmann::json to_json(const ClassicalMessage& message);
nlohmann::json to_json(const GroupRecord& group);
nlohmann::json to_json(const SessionReport& report);
nlohmann::json to_json(const Proportion& p);
nlohmann::json to_json(const MCReport& report);
nlohmann::json to_json(const EfficiencyReport& report);

/// strategy,n_groups,k_checked,trials,detection_rate,ci,analytic,eve_key_rate,agreement_rate
inline constexpr const char* kSweepCsvHeader =
    "strategy,n_groups,k_checked,trials,detection_rate,ci,analytic,eve_key_rate,agreement_rate";

std::string sweep_csv_row(const MCReport& report);
std::string sweep_csv(std::span<const MCReport> reports);

/// Pretty-printed with a trailing newline.
std::string dump(const nlohmann::json& j);

}  // namespace entswap
