// Copyright 2026 The hflow Authors
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

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hflow/cli.hpp"

#ifndef HFLOW_CIRCUIT_DIR
#define HFLOW_CIRCUIT_DIR "circuits"
#endif

namespace hflow {
namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "hflow");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("hflow_cli_" + name)).string();
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

const std::string kEpr = HFLOW_CIRCUIT_DIR "/epr.dh";
const std::string kTeleport = HFLOW_CIRCUIT_DIR "/teleport.dh";

TEST(Cli, RunReportsEveryQubit) {
    const auto r = run({"run", "--circuit", kTeleport, "--param", "theta=pi/3", "--time", "4"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("5 qubits, 5 steps; reporting t = 4"), std::string::npos);
    EXPECT_NE(r.out.find("Q5: <q> = ("), std::string::npos);
}

TEST(Cli, BackendsAgreeOnRun) {
    auto strip = [](std::string s) { return s.substr(s.find('\n')); };
    const auto a = run({"run", "--circuit", kEpr, "--param", "theta=0.4", "--param", "phi=1.2"});
    const auto b = run({"run", "--circuit", kEpr, "--param", "theta=0.4", "--param", "phi=1.2", "--backend", "dense"});
    ASSERT_EQ(a.code, 0);
    ASSERT_EQ(b.code, 0);
    // Values printed at 17 digits may differ in the last place; compare the shape.
    EXPECT_EQ(std::count(a.out.begin(), a.out.end(), '\n'), std::count(b.out.begin(), b.out.end(), '\n'));
    EXPECT_NE(strip(b.out).find("Q1:"), std::string::npos);
}

TEST(Cli, RunWritesDescriptorCsv) {
    const std::string path = temp_path("run.csv");
    const auto r = run({"run", "--circuit", kEpr, "--param", "theta=0", "--param", "phi=0", "--csv", path});
    ASSERT_EQ(r.code, 0) << r.err;
    const std::string first = slurp(path);
    ASSERT_EQ(run({"run", "--circuit", kEpr, "--param", "theta=0", "--param", "phi=0", "--csv", path}).code, 0);
    EXPECT_EQ(first, slurp(path));
    EXPECT_EQ(first.rfind("time,qubit,component,pauli_string,re,im\n", 0), 0u);
    std::remove(path.c_str());
}

TEST(Cli, Epr) {
    const auto r = run({"epr", "--theta", "1.0", "--phi", "0.0"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("prob_different = 0.2298488470659301"), std::string::npos) << r.out;
}

TEST(Cli, TeleportCsv) {
    const std::string path = temp_path("tele.csv");
    const auto r = run({"teleport", "--theta", "0.5", "--backend", "dense", "--csv", path});
    ASSERT_EQ(r.code, 0) << r.err;
    const std::string csv = slurp(path);
    EXPECT_EQ(csv.rfind("key,value\ntheta,0.5\nbackend,dense\n", 0), 0u) << csv;
    EXPECT_NE(csv.find("verify_prob,"), std::string::npos);
    std::remove(path.c_str());
}

TEST(Cli, InfoFlow) {
    const auto r = run({"infoflow", "--circuit", kEpr, "--probe", "theta", "--param", "phi=0.3", "--time", "3",
                        "--subset", "1,2", "--subset", "1,2,3,4"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("Q1: LOCALLY_INACCESSIBLE"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("Q3: NO_INFO"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("{1,2}: not accessible"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("{1,2,3,4}: accessible"), std::string::npos) << r.out;
}

TEST(Cli, BellAndDemos) {
    const auto bell = run({"bell", "--samples", "4"});
    ASSERT_EQ(bell.code, 0) << bell.err;
    EXPECT_NE(bell.out.find("a(theta_0) a(theta_1) = 0.125"), std::string::npos) << bell.out;
    const auto x = run({"xor-demo", "--x", "1011", "--r", "0110"});
    ASSERT_EQ(x.code, 0);
    EXPECT_NE(x.out.find("y = x^r   = 1101"), std::string::npos);
    const auto amb = run({"ambiguity-demo"});
    ASSERT_EQ(amb.code, 0);
    EXPECT_NE(amb.out.find("states_match = true"), std::string::npos);
}

TEST(Cli, Selfcheck) {
    const auto r = run({"selfcheck", "--samples", "5", "--seed", "11"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("ok = true"), std::string::npos);
}

TEST(Cli, Errors) {
    EXPECT_NE(run({}).code, 0);
    EXPECT_NE(run({"frobnicate"}).code, 0);
    auto missing = run({"run", "--circuit", "/nonexistent/file.dh"});
    EXPECT_EQ(missing.code, 1);
    EXPECT_EQ(missing.err.rfind("error: ", 0), 0u) << missing.err;
    EXPECT_EQ(run({"run", "--circuit", kEpr, "--param", "theta"}).code, 1);
    EXPECT_EQ(run({"run", "--circuit", kEpr, "--param", "theta=1"}).code, 1);  // phi unbound
    EXPECT_EQ(run({"run", "--circuit", kEpr, "--param", "theta=1", "--param", "phi=1", "--time", "9"}).code, 1);
    EXPECT_NE(run({"epr", "--theta", "1", "--phi", "0", "--backend", "gpu"}).code, 0);
    EXPECT_EQ(run({"xor-demo", "--x", "10", "--r", "1"}).code, 1);
}

}  // namespace
}  // namespace hflow
