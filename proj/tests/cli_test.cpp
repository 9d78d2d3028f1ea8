// Copyright 2026 The chansim Authors
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

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "chansim/cli/cli.hpp"
#include "chansim/cli/serialize.hpp"

namespace chansim {
namespace {

namespace fs = std::filesystem;
using io::Json;

struct Invocation {
    int code;
    std::string out;
    std::string err;
};

Invocation call(const std::vector<std::string> &args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("chansim_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        auto r = call({"fixtures", "emit", "--dir", dir_.string(), "--seed", "7"});
        ASSERT_EQ(r.code, 0) << r.err;
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string &name) const { return (dir_ / name).string(); }

    static std::string slurp(const std::string &p) {
        std::ifstream in(p, std::ios::binary);
        return {std::istreambuf_iterator<char>(in), {}};
    }

    fs::path dir_;
};

TEST_F(CliTest, OctahedronPairwiseViolationExitsTwo) {
    auto r = call({"certify", "pairwise", "--in", path("octahedron.json"), "--d", "2"});
    ASSERT_EQ(r.code, 2) << r.err;
    auto cert = Json::parse(r.out);
    EXPECT_DOUBLE_EQ(cert["result"]["value"].get<double>(), 6.0);
    EXPECT_DOUBLE_EQ(cert["result"]["bound"].get<double>(), 5.0);
    EXPECT_EQ(cert["result"]["verdict"], "violation");
}

TEST_F(CliTest, SubsetPassExitsZero) {
    auto r = call({"certify", "subset", "--in", path("octahedron.json"), "--r", "2", "--d", "4"});
    EXPECT_EQ(r.code, 0) << r.err;
}

TEST_F(CliTest, NoisySimulationVerifies) {
    auto r = call({"simulate", "quantum", "--in", path("depolarizing.json"), "--noise", "delta:0.5", "--out",
                   path("q.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    auto v = call({"verify", path("q.json")});
    EXPECT_EQ(v.code, 0) << v.out;
    EXPECT_EQ(Json::parse(v.out)["verified"], true);
}

TEST_F(CliTest, GlobalOptionsAfterSubcommand) {
    auto r = call({"simulate", "quantum", "--in", path("random_povm.json"), "--tol", "1e-8", "--out", path("r.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(fs::exists(path("r.json")));
    EXPECT_TRUE(r.out.empty());
}

TEST_F(CliTest, TamperedWeightFailsVerify) {
    ASSERT_EQ(call({"simulate", "quantum", "--in", path("random_povm.json"), "--out", path("r.json")}).code, 0);
    auto cert = Json::parse(slurp(path("r.json")));
    auto &terms = cert["result"]["mixture"]["terms"];
    ASSERT_GE(terms.size(), 2u);
    double w0 = terms[0]["weight"].get<double>();
    terms[0]["weight"] = w0 * 0.5;
    terms[1]["weight"] = terms[1]["weight"].get<double>() + w0 * 0.5;
    std::ofstream(path("bad.json")) << cert.dump();
    auto v = call({"verify", path("bad.json")});
    EXPECT_EQ(v.code, 2);
    EXPECT_EQ(Json::parse(v.out)["verified"], false);
}

TEST_F(CliTest, TamperedInputFailsDigest) {
    ASSERT_EQ(call({"certify", "storability", "--in", path("octahedron.json"), "--out", path("s.json")}).code, 0);
    auto cert = Json::parse(slurp(path("s.json")));
    cert["input"]["data"]["matrix"][0][0] = 0.25;
    std::ofstream(path("bad.json")) << cert.dump();
    auto v = call({"verify", path("bad.json")});
    EXPECT_EQ(v.code, 2);
    EXPECT_NE(v.out.find("digest"), std::string::npos);
}

TEST_F(CliTest, TamperedAsymmetryCenterFailsVerify) {
    ASSERT_EQ(call({"certify", "asymmetry", "--in", path("octahedron_polytope.json"), "--out", path("a.json")}).code,
              0);
    ASSERT_EQ(call({"verify", path("a.json")}).code, 0);
    auto cert = Json::parse(slurp(path("a.json")));
    cert["result"]["center"][0] = 0.5;
    std::ofstream(path("bad.json")) << cert.dump();
    EXPECT_EQ(call({"verify", path("bad.json")}).code, 2);
}

TEST_F(CliTest, OutputIsByteIdenticalAcrossRuns) {
    std::vector<std::string> args{"simulate", "quantum", "--in", path("random_povm.json"), "--noise", "delta:1/3"};
    auto a = call(args);
    auto b = call(args);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
}

TEST_F(CliTest, FixturesDependOnlyOnSeed) {
    auto a = slurp(path("random_povm.json"));
    auto other = dir_ / "again";
    ASSERT_EQ(call({"fixtures", "emit", "--dir", other.string(), "--seed", "7"}).code, 0);
    EXPECT_EQ(a, slurp((other / "random_povm.json").string()));
}

TEST_F(CliTest, InvalidInputIsExitOneWithJsonError) {
    std::ofstream(path("broken.json")) << R"({"matrix": [[0.7, 0.1], [0.2, 0.8]]})";
    auto r = call({"certify", "storability", "--in", path("broken.json"), "--json-errors"});
    EXPECT_EQ(r.code, 1);
    auto e = Json::parse(r.err);
    EXPECT_TRUE(e["error"].contains("code"));
}

TEST_F(CliTest, UnknownSubcommandIsUsageError) { EXPECT_EQ(call({"simulate", "nothing"}).code, 1); }

TEST_F(CliTest, UsageErrorAsJson) {
    auto r = call({"certify", "pairwise", "--json-errors"});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(Json::parse(r.err)["error"]["code"], "Usage");
}

TEST_F(CliTest, SignallingMatchesClosedForm) {
    auto r = call({"certify", "signalling", "--n", "3", "--delta", "1/2"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(Json::parse(r.out)["result"]["dimension"], 2);
}

TEST(Canonical, KeysSortedAndStable) {
    Json a = Json::parse(R"({"b": 1, "a": [0.1, -0.0, 2]})");
    auto text = io::canonical_dump(a);
    EXPECT_EQ(text, R"({"a":[0.10000000000000001,0,2],"b":1})");
    EXPECT_EQ(io::canonical_dump(Json::parse(text)), text);
}

TEST(Canonical, Sha256KnownVector) {
    EXPECT_EQ(io::sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

}  // namespace
}  // namespace chansim
