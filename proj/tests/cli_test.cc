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

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

namespace fs = std::filesystem;

struct CliRun {
    int code = -1;
    std::string output;
};

CliRun run_cli(const std::string& args) {
    const std::string cmd = std::string("SOURCE_DATE_EPOCH=1700000000 ") + CLONEBOUND_CLI_PATH +
                            " " + args + " 2>&1";
    CliRun r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return r;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("clonebound_cli_test_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

TEST(Cli, UnknownSubcommandIsUsageError) {
    EXPECT_EQ(run_cli("frobnicate").code, 1);
    EXPECT_EQ(run_cli("").code, 1);
}

TEST(Cli, BoundsWritesCsvFiles) {
    const fs::path dir = scratch("bounds");
    const CliRun r = run_cli("bounds --out " + dir.string());
    ASSERT_EQ(r.code, 0) << r.output;
    const std::string fig1 = slurp(dir / "fig1.csv");
    std::istringstream lines(fig1);
    std::string line;
    std::size_t count = 0;
    std::getline(lines, line);
    EXPECT_EQ(line, "z,value");
    while (std::getline(lines, line)) ++count;
    EXPECT_EQ(count, 201u);
    EXPECT_NE(slurp(dir / "fig2.csv").find("z,ae_bound,hb_bound"), std::string::npos);
    const auto manifest = nlohmann::ordered_json::parse(slurp(dir / "manifest.json"));
    EXPECT_EQ(manifest["command"], "bounds");
    EXPECT_EQ(manifest["timestamp"], "2023-11-14T22:13:20Z");
}

TEST(Cli, BoundsJsonAndValidation) {
    const fs::path dir = scratch("bounds_json");
    ASSERT_EQ(run_cli("bounds --format json --steps 11 --out " + dir.string()).code, 0);
    EXPECT_EQ(run_cli("bounds --z-min 0.5 --z-max 0.2 --out " + dir.string()).code, 1);
    EXPECT_EQ(run_cli("bounds --format xml --out " + dir.string()).code, 1);
}

TEST(Cli, ClonerReport) {
    const CliRun r = run_cli("cloner asym --z 0.5");
    ASSERT_EQ(r.code, 0) << r.output;
    const auto doc = nlohmann::ordered_json::parse(r.output);
    EXPECT_NEAR(doc["re"].get<double>(), 0.5 - 0.25 / std::sqrt(1.25), 1e-12);
    EXPECT_EQ(doc["kind"], "asym");
    EXPECT_EQ(doc["favored"], "phi");
    EXPECT_EQ(doc.begin().key(), "manifest");
}

TEST(Cli, ClonerRejectsIdenticalStates) {
    const CliRun r = run_cli("cloner sym --z 1");
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.output.find("identical states clone ideally"), std::string::npos);
    EXPECT_EQ(run_cli("cloner sym").code, 1);
    EXPECT_EQ(run_cli("cloner sym --z 0.5 --favored psi").code, 1);
}

TEST(Cli, ClonerFromStateFile) {
    const fs::path dir = scratch("states");
    std::ofstream(dir / "pair.json") << R"({"phi": [[1, 0], [0, 0]], "psi": [[0.6, 0], [0, 0.8]]})";
    const CliRun r = run_cli("cloner sym --states " + (dir / "pair.json").string());
    ASSERT_EQ(r.code, 0) << r.output;
    const auto doc = nlohmann::ordered_json::parse(r.output);
    EXPECT_NEAR(doc["z"].get<double>(), 0.6, 1e-12);
    EXPECT_EQ(run_cli("cloner sym --states " + (dir / "missing.json").string()).code, 2);
    std::ofstream(dir / "bad.json") << "{ not json";
    EXPECT_NE(run_cli("cloner sym --states " + (dir / "bad.json").string()).code, 0);
}

TEST(Cli, LemmasSmallRun) {
    const CliRun r = run_cli("lemmas --trials 500 --seed 4");
    EXPECT_EQ(r.code, 0) << r.output;
    EXPECT_NE(r.output.find("lemma4"), std::string::npos);
    EXPECT_EQ(run_cli("lemmas --trials 0").code, 1);
}

TEST(Cli, VerifySmallRun) {
    const fs::path dir = scratch("verify");
    const CliRun r = run_cli("verify --z 0.5 --restarts 2 --trials 200 --seed 1 --out " +
                          (dir / "v.json").string());
    ASSERT_EQ(r.code, 0) << r.output;
    const auto doc = nlohmann::ordered_json::parse(slurp(dir / "v.json"));
    EXPECT_LT(doc["points"][0]["best_re"].get<double>() - doc["points"][0]["bound_re"].get<double>(),
              1e-5);
    EXPECT_EQ(run_cli("verify --z 1.0").code, 1);
}

TEST(Cli, DeterministicOutputs) {
    const fs::path a = scratch("det_a");
    const fs::path b = scratch("det_b");
    for (const fs::path& dir : {a, b}) {
        ASSERT_EQ(run_cli("bounds --out " + dir.string()).code, 0);
        ASSERT_EQ(run_cli("verify --z 0.3 --restarts 2 --trials 300 --seed 9 --out " +
                          (dir / "v.json").string())
                      .code,
                  0);
    }
    for (const char* f : {"fig1.csv", "fig2.csv", "manifest.json", "v.json"}) {
        EXPECT_EQ(slurp(a / f), slurp(b / f)) << f;
    }
}

TEST(Cli, UnwritableOutputIsIoError) {
    // A regular file where a directory is expected.
    const fs::path dir = scratch("io");
    std::ofstream(dir / "blocker") << "x";
    EXPECT_EQ(run_cli("cloner asym --z 0.5 --out " + (dir / "blocker" / "x.json").string()).code, 2);
    EXPECT_EQ(run_cli("bounds --out " + (dir / "blocker").string()).code, 2);
}

}  // namespace
