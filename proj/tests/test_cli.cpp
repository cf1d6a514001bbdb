#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "torus/cli.hpp"

using namespace torus;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, MuExample) {
    auto r = run({"mu", "--w", "0", "--inputs", "r4,r3,r2,r1"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "U*i1\n");
    auto f = run({"mu", "--ring", "f2", "--inputs", "r1,r2"});
    EXPECT_EQ(f.out, "r12\n");
}

TEST(Cli, MuPatternsJson) {
    auto r = run({"--json", "mu", "--w", "1", "--inputs", "r41,r4,r34,r3,r23,r2,r12,r1", "--patterns"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = json::parse(r.out);
    EXPECT_EQ(j.at("schema").get<int>(), 1);
    EXPECT_EQ(j.at("command").get<std::string>(), "mu");
    EXPECT_EQ(j.at("enumeration_status").get<std::string>(), "ok");
    long total = 0;
    for (const auto& t : j.at("result").at("terms")) total += t.at("coeff").get<long>();
    EXPECT_EQ(static_cast<long>(j.at("patterns").size()), total);
    for (const auto& p : j.at("patterns")) {
        auto tp = pattern_from_json(p);
        EXPECT_TRUE(validate_pattern(tp).valid);
        EXPECT_EQ(to_string(output_element(tp)), p.at("output").get<std::string>());
    }
}

TEST(Cli, GlobalFlagsAfterSubcommand) {
    auto a = run({"--json", "mu", "--inputs", "r4,r3,r2,r1"});
    auto b = run({"mu", "--inputs", "r4,r3,r2,r1", "--json"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, GradingRows) {
    auto r = run({"grading", "r4"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("gr'    (-1/2;0,0,0,1)"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("gamma  (-3/2;-1/2,-1/2)x1"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("alpha  (1/2;1/2,1/2)x-1"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("wingr  1"), std::string::npos);
    auto u = run({"--json", "grading", "U"});
    ASSERT_EQ(u.code, 0) << u.err;
    auto j = json::parse(u.out);
    EXPECT_EQ(j.at("record").at("element").get<std::string>(), "U*i0");
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"mu"}).code, 2);
    EXPECT_EQ(run({"mu", "--inputs", "r5"}).code, 2);
    EXPECT_EQ(run({"mu", "--inputs", "r1", "--ring", "q"}).code, 2);
    EXPECT_EQ(run({"grading", "r1+r2"}).code, 2);
    EXPECT_EQ(run({"hochschild", "--bigrading", "4"}).code, 2);
    EXPECT_EQ(run({"hochschild", "--bigrading", "4,-1", "--model", "other"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, BoundsErrors) {
    EXPECT_EQ(run({"verify-ainfty", "--max-length", "40"}).code, 3);
    EXPECT_EQ(run({"verify-ainfty", "--max-weight", "-1"}).code, 3);
    EXPECT_EQ(run({"mu", "--w", "9", "--inputs", "r1"}).code, 3);
    EXPECT_EQ(run({"cobar-check", "--max-letters", "50"}).code, 3);
    EXPECT_EQ(run({"hochschild", "--bigrading", "4,-1", "--cutoff", "100"}).code, 3);
    // A cutoff too small for the slice is reported, not silently truncated.
    EXPECT_EQ(run({"hochschild", "--bigrading", "7,-2", "--cutoff", "6"}).code, 3);
}

TEST(Cli, VerifySmallBounds) {
    auto r = run({"--json", "verify-ainfty", "--max-length", "5", "--max-weight", "1", "--structure"});
    ASSERT_EQ(r.code, 0) << r.err << r.out;
    auto j = json::parse(r.out);
    EXPECT_EQ(j.at("failures").get<long>(), 0);
    EXPECT_EQ(j.at("mod2_mismatches").get<long>(), 0);
    EXPECT_EQ(j.at("structure").at("grading_violations").get<long>(), 0);
    EXPECT_GT(j.at("instances").get<long>(), 0);
}

TEST(Cli, HochschildJson) {
    auto r = run({"--json", "hochschild", "--model", "assoc", "--ring", "z", "--bigrading", "4,-1", "--representatives"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = json::parse(r.out);
    EXPECT_EQ(j.at("schema").get<int>(), 1);
    EXPECT_EQ(j.at("basis").size(), 12u);
    EXPECT_EQ(j.at("dims").at(1).get<int>(), 12);
    EXPECT_EQ(j.at("matrix").at("cols").get<int>(), 12);
    for (const auto& t : j.at("matrix").at("entries")) EXPECT_EQ(t.size(), 3u);
    EXPECT_EQ(j.at("homology").at("rank").get<int>(), 1);
    EXPECT_TRUE(j.at("homology").at("invariant_factors").empty());
    EXPECT_EQ(j.at("homology").at("representatives").size(), 1u);
    EXPECT_TRUE(j.at("cutoff_adequate").get<bool>());
    auto w = run({"hochschild", "--model", "weighted", "--ring", "f2", "--bigrading", "1,-1"});
    EXPECT_EQ(w.code, 0);
    EXPECT_NE(w.out.find("rank 2"), std::string::npos) << w.out;
}

TEST(Cli, JsonIsDeterministic) {
    std::vector<std::string> args{"--json", "hochschild", "--model", "weighted", "--bigrading", "1,-2", "--representatives"};
    EXPECT_EQ(run(args).out, run(args).out);
    std::vector<std::string> g{"--json", "--seed", "7", "golden"};
    EXPECT_EQ(run(g).out, run(g).out);
}

TEST(Cli, CobarCheck) {
    auto r = run({"--json", "cobar-check", "--ring", "z", "--max-letters", "3", "--max-winding", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = json::parse(r.out);
    EXPECT_EQ(j.at("homotopy_failures").get<long>(), 0);
    EXPECT_GT(j.at("words").get<long>(), 0);
}

TEST(Cli, GoldenReplay) {
    auto r = run({"golden"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("0 of "), std::string::npos);
}

TEST(Cli, OutFile) {
    std::string path = ::testing::TempDir() + "torus_cli_out.json";
    auto r = run({"--json", "--out", path, "mu", "--inputs", "r4,r3,r2,r1"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.out.empty());
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    auto j = json::parse(ss.str());
    EXPECT_EQ(j.at("result").at("text").get<std::string>(), "U*i1");
    std::remove(path.c_str());
    EXPECT_EQ(run({"--out", "/nonexistent/dir/x", "mu", "--inputs", "r1"}).code, 2);
}
