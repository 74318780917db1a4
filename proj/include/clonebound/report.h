// Copyright 2026 The clonebound Authors
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

#ifndef CLONEBOUND_REPORT_H
#define CLONEBOUND_REPORT_H

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "clonebound/bounds.h"
#include "clonebound/cloners.h"
#include "clonebound/geometry.h"
#include "clonebound/search.h"

namespace clonebound {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";

/// A file could not be read or written.
class IoError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct RunManifest {
    std::string command;
    Json parameters = Json::object();
    std::uint64_t seed = 0;
    std::string tool_version = kToolVersion;
    /// UTC ISO-8601. Taken from SOURCE_DATE_EPOCH when that is set.
    std::string timestamp;

    static RunManifest now(std::string command, std::uint64_t seed);
    Json to_json() const;
};

/// UTC ISO-8601 time, honoring SOURCE_DATE_EPOCH for reproducible output.
std::string utc_timestamp();

/// 17 significant digits.
std::string format_number(double value);

/// Writes a header row and one row per grid point. Every curve must share
/// the first curve's grid.
void write_curves_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
                      const std::vector<BoundCurve>& curves);

Json curves_json(const std::vector<BoundCurve>& curves);

Json state_json(const StateVector& v);
Json to_json(const InequalityReport& r);
Json to_json(const SweepSummary& s);
Json to_json(const RandomSweepStats& s);
Json to_json(const VerificationPoint& p, std::uint64_t seed);

/// Report of one constructed cloner, including closed-form references and
/// the unitarity residual |<V(phi)|V(psi)> - <phi|psi>|.
Json cloner_report(const ClonerSpec& spec, const ClonerResult& r);

/// Two states as {"phi": [[re, im], ...], "psi": [...]} or a two-element
/// array of such lists. Vectors are normalized; a warning goes to `warnings`
/// when the correction exceeds 1e-6.
TwoStateSet parse_state_file(const std::filesystem::path& path, std::vector<std::string>* warnings);

void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace clonebound

#endif  // CLONEBOUND_REPORT_H
