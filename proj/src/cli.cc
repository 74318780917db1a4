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

#include "clonebound/cli.h"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "clonebound/bounds.h"
#include "clonebound/cloners.h"
#include "clonebound/geometry.h"
#include "clonebound/report.h"
#include "clonebound/search.h"

namespace clonebound::cli {

namespace {

namespace fs = std::filesystem;

// Failures that map straight to an exit code.
struct Exit {
    int code;
    std::string message;
};

struct BoundsArgs {
    double z_min = 0.0;
    double z_max = 1.0;
    std::size_t steps = 201;
    std::string out = ".";
    std::string format = "csv";
};

struct ClonerArgs {
    std::string kind;
    std::optional<double> z;
    std::string states;
    std::size_t dim = 2;
    std::optional<std::string> favored;
    std::string out;
};

struct LemmaArgs {
    std::size_t trials = 100000;
    std::size_t dim = 8;
    std::string out;
};

struct VerifyArgs {
    std::vector<double> z{0.1, 0.3, 0.5, 1.0 / std::sqrt(3.0), 0.7, 0.9};
    std::size_t restarts = 20;
    std::size_t trials = 10000;
    std::string out;
};

void emit_json(const Json& doc, const std::string& out_path, std::ostream& out) {
    const std::string text = doc.dump(2) + "\n";
    if (out_path.empty() || out_path == "-") {
        out << text;
        return;
    }
    const fs::path path(out_path);
    if (path.has_parent_path()) {
        std::error_code ec;
        fs::create_directories(path.parent_path(), ec);
    }
    write_text(path, text);
}

int cmd_bounds(const BoundsArgs& a, std::uint64_t seed, std::ostream& out) {
    if (!(a.z_min >= 0.0 && a.z_min < a.z_max && a.z_max <= 1.0) || a.steps < 2) {
        throw Exit{kUsage, "bounds: need 0 <= z-min < z-max <= 1 and steps >= 2"};
    }
    const auto fig1 = sample_curve("re_lower_bound", re_lower_bound, a.z_min, a.z_max, a.steps);
    const auto fig2_ae = sample_curve("ae_lower_bound", ae_lower_bound, a.z_min, a.z_max, a.steps);
    const auto fig2_hb = sample_curve("hb_bound", hb_bound, a.z_min, a.z_max, a.steps);

    const fs::path dir(a.out);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec && !fs::is_directory(dir)) {
        throw IoError("cannot create output directory '" + dir.string() + "'");
    }

    RunManifest manifest = RunManifest::now("bounds", seed);
    manifest.parameters = {{"z_min", a.z_min}, {"z_max", a.z_max}, {"steps", a.steps},
                           {"format", a.format}};
    if (a.format == "csv") {
        write_curves_csv(dir / "fig1.csv", {"z", "value"}, {fig1});
        write_curves_csv(dir / "fig2.csv", {"z", "ae_bound", "hb_bound"}, {fig2_ae, fig2_hb});
    } else {
        Json f1, f2;
        f1["manifest"] = manifest.to_json();
        f1["curves"] = curves_json({fig1});
        f2["manifest"] = manifest.to_json();
        f2["curves"] = curves_json({fig2_ae, fig2_hb});
        write_text(dir / "fig1.json", f1.dump(2) + "\n");
        write_text(dir / "fig2.json", f2.dump(2) + "\n");
    }
    write_text(dir / "manifest.json", manifest.to_json().dump(2) + "\n");

    const std::size_t peak = fig2_ae.argmax();
    out << "fig1: " << fig1.size() << " points, F(z_max) = " << format_number(fig1.values.back())
        << "\n"
        << "fig2: ae_bound max " << format_number(fig2_ae.values[peak]) << " at z = "
        << format_number(fig2_ae.grid[peak]) << "\n"
        << "wrote " << (dir / ("fig1." + a.format)).string() << ", "
        << (dir / ("fig2." + a.format)).string() << "\n";
    return kOk;
}

int cmd_cloner(const ClonerArgs& a, std::uint64_t seed, std::ostream& out, std::ostream& err) {
    const ClonerKind kind = parse_cloner_kind(a.kind);
    if (a.favored && kind != ClonerKind::kAsymmetric) {
        throw Exit{kUsage, "cloner: --favored only applies to asym"};
    }
    const std::string favored = a.favored.value_or("phi");
    ClonerSpec spec;
    switch (kind) {
        case ClonerKind::kSymmetric:
            spec = ClonerSpec::symmetric();
            break;
        case ClonerKind::kAsymmetric:
            spec = ClonerSpec::asymmetric(favored == "psi" ? Favored::kPsi : Favored::kPhi);
            break;
        case ClonerKind::kWoottersZurek:
            spec = ClonerSpec::wootters_zurek();
            break;
    }
    if (a.z.has_value() == !a.states.empty()) {
        throw Exit{kUsage, "cloner: give exactly one of --z or --states"};
    }
    std::vector<std::string> warnings;
    const TwoStateSet set = a.z ? TwoStateSet::canonical(*a.z, a.dim)
                                : parse_state_file(a.states, &warnings);
    for (const auto& w : warnings) {
        err << "warning: " << w << "\n";
    }
    if (set.z() >= 1.0 - kAlgebraicTol) {
        throw Exit{kUsage, "identical states clone ideally; relative error undefined"};
    }
    const ClonerResult r = build(spec, set);

    RunManifest manifest = RunManifest::now("cloner", seed);
    manifest.parameters = {{"kind", a.kind}, {"dim", set.dim()}};
    if (a.z) manifest.parameters["z"] = *a.z;
    if (!a.states.empty()) manifest.parameters["states"] = a.states;
    if (spec.favored) manifest.parameters["favored"] = favored;

    Json doc;
    doc["manifest"] = manifest.to_json();
    const Json report = cloner_report(spec, r);
    for (const auto& [key, value] : report.items()) {
        doc[key] = value;
    }
    emit_json(doc, a.out, out);
    return kOk;
}

int cmd_lemmas(const LemmaArgs& a, std::uint64_t seed, double tol, std::ostream& out) {
    if (a.trials < 1) {
        throw Exit{kUsage, "lemmas: trials must be at least 1"};
    }
    if (a.dim < 2) {
        throw Exit{kUsage, "lemmas: dim must be at least 2"};
    }
    SweepOptions opts;
    opts.trials = a.trials;
    opts.max_dim = a.dim;
    opts.seed = seed;
    opts.tol = tol;

    std::vector<SweepSummary> rows = sweep_all(opts);
    std::size_t violations = 0;
    for (const auto& r : rows) {
        violations += r.violations;
    }
    std::vector<SweepSummary> witnesses;
    for (std::size_t d = 2; d <= a.dim; ++d) {
        witnesses.push_back(witness_lemma1(d));
        witnesses.push_back(witness_lemma2(d));
    }
    std::size_t witness_failures = 0;
    for (const auto& w : witnesses) {
        witness_failures += w.min_slack < kAlgebraicTol ? 0 : 1;
    }
    const SweepSummary tight = lemma4_tightness(std::min<std::size_t>(a.trials, 200), seed);

    out << std::left << std::setw(14) << "check" << std::setw(10) << "trials" << std::setw(26)
        << "min_slack" << "violations\n";
    for (const auto& r : rows) {
        out << std::setw(14) << r.name << std::setw(10) << r.trials << std::setw(26)
            << format_number(r.min_slack) << r.violations << "\n";
    }
    double worst_witness = 0.0;
    for (const auto& w : witnesses) {
        worst_witness = std::max(worst_witness, w.min_slack);
    }
    out << "coplanar witnesses (lemmas 1-2, dims 2-" << a.dim
        << "): max |slack| = " << format_number(worst_witness) << "\n"
        << "lemma4 tightness (qubit pairs): min sup(lhs) - rhs = " << format_number(tight.min_slack)
        << "\n";

    if (!a.out.empty()) {
        RunManifest manifest = RunManifest::now("lemmas", seed);
        manifest.parameters = {{"trials", a.trials}, {"max_dim", a.dim}, {"tol", tol}};
        Json doc;
        doc["manifest"] = manifest.to_json();
        doc["sweeps"] = Json::array();
        for (const auto& r : rows) doc["sweeps"].push_back(to_json(r));
        doc["witnesses"] = Json::array();
        for (const auto& w : witnesses) doc["witnesses"].push_back(to_json(w));
        doc["lemma4_tightness"] = to_json(tight);
        emit_json(doc, a.out, out);
    }
    if (violations > 0 || witness_failures > 0 || tight.violations > 0) {
        throw Exit{kViolation, "lemmas: inequality violated (" + std::to_string(violations) +
                                   " sweep, " + std::to_string(witness_failures) +
                                   " witness, " + std::to_string(tight.violations) +
                                   " tightness)"};
    }
    return kOk;
}

int cmd_verify(const VerifyArgs& a, std::uint64_t seed, std::ostream& out) {
    if (a.z.empty()) {
        throw Exit{kUsage, "verify: no z values"};
    }
    for (double z : a.z) {
        if (!(z > 0.0 && z <= 0.99)) {
            throw Exit{kUsage, "verify: every z must lie in (0, 0.99]"};
        }
    }
    if (a.restarts < 1 || a.trials < 1) {
        throw Exit{kUsage, "verify: restarts and trials must be at least 1"};
    }
    RunManifest manifest = RunManifest::now("verify", seed);
    manifest.parameters = {{"z", a.z}, {"restarts", a.restarts}, {"trials", a.trials}};
    Json doc;
    doc["manifest"] = manifest.to_json();
    doc["points"] = Json::array();

    std::size_t violations = 0;
    bool attained = true;
    for (double z : a.z) {
        SearchConfig cfg;
        cfg.z = z;
        cfg.restarts = a.restarts;
        cfg.seed = seed;
        const VerificationPoint p = verify_point(cfg, a.trials);
        violations += p.violations;
        attained = attained && p.attained;
        doc["points"].push_back(to_json(p, seed));
        out << "z = " << format_number(z) << ": best_ae " << format_number(p.outcome.best_ae)
            << " (bound " << format_number(p.outcome.bound_ae) << "), best_re "
            << format_number(p.outcome.best_re) << " (bound " << format_number(p.outcome.bound_re)
            << "), gap " << format_number(p.outcome.attained_within) << ", violations "
            << p.violations << "\n";
    }
    if (!a.out.empty()) {
        emit_json(doc, a.out, out);
    }
    if (violations > 0) {
        throw Exit{kViolation, "verify: " + std::to_string(violations) + " floor violation(s)"};
    }
    if (!attained) {
        throw Exit{kAttainment, "verify: optimizer did not reach a bound within 1e-5"};
    }
    return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bounds, constructions and checks for state-dependent cloning of two states"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    double tol = kInequalityTol;
    app.add_option("--seed", seed, "Master seed")->envname("CLONEBOUND_SEED");
    app.add_option("--tol", tol, "Inequality tolerance")->envname("CLONEBOUND_TOL");

    BoundsArgs bounds;
    auto* bounds_cmd = app.add_subcommand("bounds", "Sample the relative and absolute error bound curves");
    bounds_cmd->add_option("--z-min", bounds.z_min)->capture_default_str();
    bounds_cmd->add_option("--z-max", bounds.z_max)->capture_default_str();
    bounds_cmd->add_option("--steps", bounds.steps)->capture_default_str();
    bounds_cmd->add_option("--out", bounds.out, "Output directory")->capture_default_str();
    bounds_cmd->add_option("--format", bounds.format)
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    ClonerArgs cloner;
    auto* cloner_cmd = app.add_subcommand("cloner", "Build a cloner and report its errors");
    cloner_cmd->add_option("kind", cloner.kind, "sym, asym or wz")
        ->required()
        ->check(CLI::IsMember({"sym", "asym", "wz"}));
    cloner_cmd->add_option("--z", cloner.z, "Overlap |<phi|psi>| of a canonical pair");
    cloner_cmd->add_option("--states", cloner.states, "JSON file with the two states");
    cloner_cmd->add_option("--dim", cloner.dim, "Particle dimension")->capture_default_str();
    cloner_cmd->add_option("--favored", cloner.favored, "Exactly copied state for asym (default phi)")
        ->check(CLI::IsMember({"phi", "psi"}));
    cloner_cmd->add_option("--out", cloner.out, "Report path (stdout when omitted)");

    LemmaArgs lemmas;
    auto* lemmas_cmd = app.add_subcommand("lemmas", "Random sweeps of the angle inequalities");
    lemmas_cmd->add_option("--trials", lemmas.trials)->capture_default_str();
    lemmas_cmd->add_option("--dim", lemmas.dim, "Largest dimension (sweeps 2..dim)")
        ->capture_default_str();
    lemmas_cmd->add_option("--seed", seed, "Master seed")->envname("CLONEBOUND_SEED");
    lemmas_cmd->add_option("--tol", tol, "Inequality tolerance")->envname("CLONEBOUND_TOL");
    lemmas_cmd->add_option("--out", lemmas.out, "Optional JSON report");

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "Check the bounds are floors and are attained");
    verify_cmd->add_option("--z", verify.z, "Comma-separated overlaps")->delimiter(',');
    verify_cmd->add_option("--restarts", verify.restarts)->capture_default_str();
    verify_cmd->add_option("--trials", verify.trials, "Random pairs per z")->capture_default_str();
    verify_cmd->add_option("--seed", seed, "Master seed")->envname("CLONEBOUND_SEED");
    verify_cmd->add_option("--out", verify.out, "Optional JSON report");

    for (auto* sub : {bounds_cmd, cloner_cmd}) {
        sub->add_option("--seed", seed, "Master seed")->envname("CLONEBOUND_SEED");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (*bounds_cmd) return cmd_bounds(bounds, seed, out);
        if (*cloner_cmd) return cmd_cloner(cloner, seed, out, err);
        if (*lemmas_cmd) return cmd_lemmas(lemmas, seed, tol, out);
        if (*verify_cmd) return cmd_verify(verify, seed, out);
    } catch (const Exit& e) {
        err << "error: " << e.message << "\n";
        return e.code;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return kIo;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace clonebound::cli
