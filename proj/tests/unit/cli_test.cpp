#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace revlcg::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

TEST(CliDerive, RundDefaults) {
  const Result r = invoke({"derive", "--a", "1029", "--b", "1731", "--m", "2048"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_EQ(r.out, "c=205 d=1497\n");
  EXPECT_EQ(invoke({"derive"}).out, "c=205 d=1497\n");
}

TEST(CliDerive, Identity) {
  const Result r = invoke({"derive", "--a", "1", "--b", "0", "--m", "16"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_EQ(r.out, "c=1 d=0\n");
}

TEST(CliDerive, NotInvertible) {
  const Result r = invoke({"derive", "--a", "4", "--b", "1", "--m", "8"});
  EXPECT_EQ(r.code, kUsageError);
  EXPECT_NE(r.err.find("not invertible: gcd(a,m)=4"), std::string::npos) << r.err;
  EXPECT_TRUE(r.out.empty());
}

TEST(CliGenerate, FirstTwoStates) {
  const Result r = invoke({"generate", "--n", "2", "--x0", "0", "--y0", "0"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_EQ(r.out, "1 1731 0\n2 1170 1382\n");
}

TEST(CliGenerate, ZeroRecords) {
  const Result r = invoke({"generate", "--n", "0"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_TRUE(r.out.empty());
}

TEST(CliGenerate, Formats) {
  EXPECT_EQ(invoke({"generate", "--n", "2", "--format", "z"}).out, "1731\n2831506\n");
  const auto real = lines(invoke({"generate", "--n", "1", "--format", "real"}).out);
  ASSERT_EQ(real.size(), 1u);
  EXPECT_EQ(real[0], "1 1731/4194304 0.00041270256042480469");
}

TEST(CliGenerate, MatchesGoldenFile) {
  std::ifstream golden(std::string(REVLCG_GOLDEN_DIR) + "/rund_first_64.txt");
  ASSERT_TRUE(golden);
  std::stringstream expected;
  expected << golden.rdbuf();
  EXPECT_EQ(invoke({"generate", "--n", "64"}).out, expected.str());
}

TEST(CliGenerate, OutOfRangeSeed) {
  const Result r = invoke({"generate", "--n", "2", "--x0", "2048"});
  EXPECT_EQ(r.code, kUsageError);
  EXPECT_FALSE(r.err.empty());
}

TEST(CliGenerate, BadFlagsAreUsageErrors) {
  EXPECT_EQ(invoke({"generate"}).code, kUsageError);
  EXPECT_EQ(invoke({"generate", "--n", "2", "--format", "hex"}).code, kUsageError);
  EXPECT_EQ(invoke({"generate", "--n", "-1"}).code, kUsageError);
  EXPECT_EQ(invoke({"generate", "--n", "1", "--m", "1"}).code, kUsageError);
  EXPECT_EQ(invoke({"generate", "--n", "1", "--s", "4096"}).code, kUsageError);
  EXPECT_EQ(invoke({}).code, kUsageError);
  EXPECT_EQ(invoke({"frobnicate"}).code, kUsageError);
}

TEST(CliGenerate, HelpExitsZero) { EXPECT_EQ(invoke({"--help"}).code, kSuccess); }

TEST(CliReverse, Examples) {
  const Result r = invoke({"reverse", "--n", "2", "--x0", "1170", "--y0", "1382"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_EQ(r.out, "1 1731 0\n2 0 0\n");
  EXPECT_TRUE(invoke({"reverse", "--n", "0"}).out.empty());
}

TEST(CliReverse, ReproducesGenerateStreamReversed) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 5; ++trial) {
    const auto n = std::uniform_int_distribution<int>(2, 10000)(rng);
    const auto x0 = std::uniform_int_distribution<int>(0, 2047)(rng);
    const auto y0 = std::uniform_int_distribution<int>(0, 2047)(rng);
    const auto fwd = lines(invoke({"generate", "--n", std::to_string(n), "--x0", std::to_string(x0),
                                   "--y0", std::to_string(y0)})
                               .out);
    ASSERT_EQ(fwd.size(), static_cast<std::size_t>(n));
    std::istringstream last(fwd.back());
    std::string idx, x, y;
    last >> idx >> x >> y;
    const auto back = lines(invoke({"reverse", "--n", std::to_string(n), "--x0", x, "--y0", y}).out);
    ASSERT_EQ(back.size(), fwd.size());
    // back record k holds the state of forward record n - k (record 0 = seed).
    for (int k = 1; k < n; ++k) {
      const std::string& f = fwd[static_cast<std::size_t>(n - k - 1)];
      const std::string& b = back[static_cast<std::size_t>(k - 1)];
      ASSERT_EQ(b.substr(b.find(' ')), f.substr(f.find(' ')));
    }
    ASSERT_EQ(back.back(), std::to_string(n) + " " + std::to_string(x0) + " " + std::to_string(y0));
  }
}

TEST(CliVerify, Paper) {
  const Result r = invoke({"verify", "paper"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_EQ(r.out, "comparisons=4194303 mismatches=0 first_mismatch_n=none\n");
}

TEST(CliVerify, PaperCorruptedC) {
  EXPECT_EQ(invoke({"verify", "paper", "--c", "204"}).code, kVerificationFailed);
}

TEST(CliVerify, Period) {
  const Result r = invoke({"verify", "period"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_EQ(r.out.rfind("period=4194304 full=true", 0), 0u) << r.out;
}

TEST(CliVerify, RoundTripCorruptedD) {
  const Result r = invoke({"verify", "roundtrip", "--d", "1498", "--report", "kv"});
  EXPECT_EQ(r.code, kVerificationFailed);
  EXPECT_NE(r.out.find("status=fail\n"), std::string::npos);
  EXPECT_NE(r.out.find("mismatches=4194304\n"), std::string::npos);
}

TEST(CliVerify, RoundTripToy) {
  EXPECT_EQ(invoke({"verify", "roundtrip", "--a", "5", "--b", "3", "--m", "8", "--s", "3"}).code, kSuccess);
}

TEST(CliVerify, RefusesOversizedExhaustive) {
  const Result r = invoke({"verify", "roundtrip", "--a", "5", "--b", "3", "--m", "8192", "--s", "0"});
  EXPECT_EQ(r.code, kUsageError);
  EXPECT_NE(r.err.find("exhaustive"), std::string::npos);
}

TEST(CliVerify, EquidistHullDobellOracle) {
  EXPECT_EQ(invoke({"verify", "equidist"}).code, kSuccess);
  EXPECT_EQ(invoke({"verify", "hulldobell"}).code, kSuccess);
  EXPECT_EQ(invoke({"verify", "hulldobell", "--a", "2", "--b", "1", "--m", "8", "--s", "0"}).code,
            kVerificationFailed);
  EXPECT_EQ(invoke({"verify", "oracle"}).code, kSuccess);
}

TEST(CliVerify, UnknownCheck) { EXPECT_EQ(invoke({"verify", "spectral"}).code, kUsageError); }

TEST(Cli, Deterministic) {
  const std::vector<std::string> args{"generate", "--n", "300", "--format", "real"};
  EXPECT_EQ(invoke(args).out, invoke(args).out);
}

}  // namespace
}  // namespace revlcg::cli
