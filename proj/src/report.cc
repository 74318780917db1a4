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

#include "clonebound/report.h"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <limits>
#include <sstream>

namespace clonebound {

namespace {

Json number_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

StateVector parse_vector(const Json& j, const char* which) {
    if (!j.is_array() || j.empty()) {
        throw DomainError(std::string("state file: '") + which + "' must be a non-empty array");
    }
    std::vector<Complex> amps;
    for (const auto& entry : j) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
            !entry[1].is_number()) {
            throw DomainError(std::string("state file: '") + which +
                              "' entries must be [re, im] pairs");
        }
        amps.emplace_back(entry[0].get<double>(), entry[1].get<double>());
    }
    return StateVector(std::move(amps));
}

}  // namespace

std::string utc_timestamp() {
    std::time_t t{};
    if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH"); epoch != nullptr && *epoch) {
        t = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
    } else {
        t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    }
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

RunManifest RunManifest::now(std::string command, std::uint64_t seed) {
    RunManifest m;
    m.command = std::move(command);
    m.seed = seed;
    m.timestamp = utc_timestamp();
    return m;
}

Json RunManifest::to_json() const {
    Json j;
    j["command"] = command;
    j["parameters"] = parameters;
    j["seed"] = seed;
    j["tool_version"] = tool_version;
    j["timestamp"] = timestamp;
    return j;
}

std::string format_number(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    out << text;
    if (!out) {
        throw IoError("failed writing '" + path.string() + "'");
    }
}

void write_curves_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
                      const std::vector<BoundCurve>& curves) {
    if (curves.empty() || header.size() != curves.size() + 1) {
        throw DomainError("write_curves_csv: header must name z plus one column per curve");
    }
    const auto& grid = curves.front().grid;
    for (const auto& c : curves) {
        if (c.grid != grid) {
            throw DomainError("write_curves_csv: curves sampled on different grids");
        }
    }
    std::ostringstream out;
    for (std::size_t i = 0; i < header.size(); ++i) {
        out << (i ? "," : "") << header[i];
    }
    out << '\n';
    for (std::size_t row = 0; row < grid.size(); ++row) {
        out << format_number(grid[row]);
        for (const auto& c : curves) {
            out << ',' << format_number(c.values[row]);
        }
        out << '\n';
    }
    write_text(path, out.str());
}

Json curves_json(const std::vector<BoundCurve>& curves) {
    Json arr = Json::array();
    for (const auto& c : curves) {
        Json j;
        j["name"] = c.name;
        j["z"] = c.grid;
        j["values"] = c.values;
        arr.push_back(std::move(j));
    }
    return arr;
}

Json state_json(const StateVector& v) {
    Json arr = Json::array();
    for (const auto& a : v.amplitudes()) {
        arr.push_back(Json::array({a.real(), a.imag()}));
    }
    return arr;
}

Json to_json(const InequalityReport& r) {
    Json j;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["slack"] = r.slack;
    j["holds"] = r.holds;
    j["tol"] = r.tol;
    return j;
}

Json to_json(const SweepSummary& s) {
    Json j;
    j["name"] = s.name;
    j["trials"] = s.trials;
    j["min_slack"] = number_or_null(s.min_slack);
    j["violations"] = s.violations;
    return j;
}

Json to_json(const RandomSweepStats& s) {
    Json j;
    j["samples"] = s.samples;
    j["min_ae"] = number_or_null(s.min_ae);
    j["mean_ae"] = number_or_null(s.mean_ae);
    j["max_ae"] = number_or_null(s.max_ae);
    j["min_re"] = number_or_null(s.min_re);
    j["mean_re"] = number_or_null(s.mean_re);
    j["max_re"] = number_or_null(s.max_re);
    j["ae_violations"] = s.ae_violations;
    j["re_violations"] = s.re_violations;
    j["undefined_re"] = s.undefined_re;
    j["chain_checked"] = s.chain_checked;
    j["chain_violations"] = s.chain_violations;
    j["chain_min_slack"] = number_or_null(s.chain_min_slack);
    return j;
}

Json to_json(const VerificationPoint& p, std::uint64_t seed) {
    Json j;
    j["z"] = p.z;
    j["bound_ae"] = p.outcome.bound_ae;
    j["bound_re"] = p.outcome.bound_re;
    j["best_ae"] = number_or_null(p.outcome.best_ae);
    j["best_re"] = number_or_null(p.outcome.best_re);
    j["attained_within"] = number_or_null(p.outcome.attained_within);
    j["attained"] = p.attained;
    j["violations"] = p.violations;
    j["trials"] = p.outcome.trials + p.sweep.samples;
    j["seed"] = seed;
    j["optimizer_evaluations"] = p.outcome.evaluations;
    j["sweep"] = to_json(p.sweep);
    return j;
}

Json cloner_report(const ClonerSpec& spec, const ClonerResult& r) {
    const double z = r.set.z();
    Json j;
    j["kind"] = to_string(spec.kind);
    if (spec.favored) {
        j["favored"] = *spec.favored == Favored::kPhi ? "phi" : "psi";
    }
    j["dims"] = {{"d1", r.dims.d1}, {"d2", r.dims.d2}, {"danc", r.dims.danc}};
    j["inputs"] = {{"phi", state_json(r.set.phi())}, {"psi", state_json(r.set.psi())}};
    j["z"] = z;
    j["delta"] = r.set.delta().radians();
    j["tensor_delta"] = r.set.tensor_delta().radians();

    auto branch = [](const CloneAnalysis& a) {
        Json b;
        b["x"] = a.x;
        b["delta_s"] = a.delta_s.radians();
        b["q_norm"] = a.q.norm();
        b["degenerate_ideal"] = a.degenerate();
        return b;
    };
    j["phi"] = branch(r.a_phi);
    j["psi"] = branch(r.a_psi);
    j["ae"] = r.ae;
    if (r.re) {
        j["re"] = *r.re;
    } else if (r.ideal_angle) {
        j["re"] = "undefined (identical ideal outputs)";
    } else {
        j["re"] = "undefined (degenerate ideal output)";
    }
    j["ideal_angle"] = r.ideal_angle ? Json(r.ideal_angle->radians()) : Json(nullptr);

    Json ref;
    ref["re_lower_bound"] = re_lower_bound(z);
    ref["ae_lower_bound"] = ae_lower_bound(z);
    ref["hb_bound"] = hb_bound(z);
    ref["re_symmetric"] = z < 1.0 ? Json(closed_form_re_s(z)) : Json(nullptr);
    ref["re_wootters_zurek"] = closed_form_re_wz(z);
    ref["x_psi_wootters_zurek"] = wootters_zurek_error(z);
    j["closed_form"] = ref;

    j["unitarity_residual"] = std::abs(inner(r.a_phi.v, r.a_psi.v) - inner(r.set.phi(), r.set.psi()));
    if (r.ideal_angle) {
        const auto [ideal_bound, error_bound] = inequality_chain(r);
        j["inequality_chain"] = {{"ideal_angle_bound", to_json(ideal_bound)},
                                 {"error_angle_bound", to_json(error_bound)}};
    }
    return j;
}

TwoStateSet parse_state_file(const std::filesystem::path& path,
                             std::vector<std::string>* warnings) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open state file '" + path.string() + "'");
    }
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw DomainError(std::string("state file: ") + e.what());
    }
    Json phi_j, psi_j;
    if (doc.is_object() && doc.contains("phi") && doc.contains("psi")) {
        phi_j = doc["phi"];
        psi_j = doc["psi"];
    } else if (doc.is_array() && doc.size() == 2) {
        phi_j = doc[0];
        psi_j = doc[1];
    } else {
        throw DomainError("state file: expected {\"phi\": ..., \"psi\": ...} or [phi, psi]");
    }
    auto load = [&](const Json& j, const char* which) {
        StateVector v = parse_vector(j, which);
        const double n = v.norm();
        if (n == 0.0) {
            throw DomainError(std::string("state file: '") + which + "' is the zero vector");
        }
        if (std::abs(n - 1.0) > 1e-6 && warnings != nullptr) {
            warnings->push_back(std::string("state '") + which + "' had norm " + format_number(n) +
                                "; normalized");
        }
        return v.normalized();
    };
    StateVector phi = load(phi_j, "phi");
    StateVector psi = load(psi_j, "psi");
    return TwoStateSet(std::move(phi), std::move(psi));
}

}  // namespace clonebound
