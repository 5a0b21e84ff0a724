#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "json.hpp"

#ifndef THOMA_CLI_PATH
#error "THOMA_CLI_PATH must point at the built CLI"
#endif

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(THOMA_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

}  // namespace

TEST(Cli, EvalThoma) {
  const auto r = run("eval-thoma --alpha 1/2,1/4 --beta 1/4 --sigma \"(1 2 3)\" --tau e --json");
  ASSERT_EQ(r.status, 0);
  const auto doc = nlohmann::json::parse(r.out);
  // p_3 = 1/8 + 1/64 + 1/64
  EXPECT_EQ(doc["phi"], "5/32");
  EXPECT_EQ(doc["cycle_type"], nlohmann::json::array({3}));
}

TEST(Cli, EvalConstruction) {
  const auto r = run("eval-construction --pair A --s 0.7 --g \"(1 2)|e\" --json");
  ASSERT_EQ(r.status, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["norm_sq"]["ss"], "4");
  EXPECT_NEAR(std::stod(doc["norm_sq_value"].get<std::string>()), 1.96, 1e-12);
  EXPECT_NEAR(std::stod(doc["spherical"].get<std::string>()), std::exp(-0.98), 1e-15);
  EXPECT_EQ(doc["xi"].size(), 4u);
}

TEST(Cli, HumanOutput) {
  const auto r = run("eval-thoma --alpha 1/2,1/4 --beta 1/4 --sigma \"(1 2 3)\"");
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("5/32"), std::string::npos);
  const auto v = run("verify psd --alpha 1 --elements 10 --seed 1");
  EXPECT_EQ(v.status, 0);
  EXPECT_NE(v.out.find("PASS"), std::string::npos);
}

TEST(Cli, VerifySuitesPass) {
  EXPECT_EQ(run("verify cocycle --pair A --samples 200 --seed 42").status, 0);
  EXPECT_EQ(run("verify oracle --n 3 --alpha 1/2,1/2").status, 0);
  EXPECT_EQ(run("verify pairA --s 0.7").status, 0);
  EXPECT_EQ(run("verify fock --dim 2 --degree 12").status, 0);
}

TEST(Cli, FailingCheckExitsOne) {
  // A negative tolerance demands min eig >= 1, which the singular all-ones
  // Gram matrix cannot meet.
  const auto r = run("verify psd --alpha 1 --elements 4 --tol -1");
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);
  EXPECT_EQ(run("verify nosuchsuite").status, 2);
  EXPECT_EQ(run("eval-thoma --alpha 3/4 --beta 1/2").status, 2);
  EXPECT_EQ(run("eval-thoma --alpha 1/2 --sigma \"(1 1)\"").status, 2);
  EXPECT_EQ(run("eval-construction --pair B --s 1 --t 2 --g e").status, 2);
  EXPECT_EQ(run("eval-construction --pair A --s 0.7").status, 2);
  EXPECT_EQ(run("verify oracle --alpha 1/2").status, 2);
  EXPECT_EQ(run("verify fock --dim 2 --v 1,2,3").status, 2);
  EXPECT_EQ(run("verify cocycle --window 40").status, 2);
}

TEST(Cli, JsonIsByteDeterministic) {
  for (const char* args : {"verify cocycle --pair B --samples 50 --seed 9 --json", "verify psd --seed 3 --json",
                           "verify kinv --seed 5 --json"}) {
    const auto a = run(args);
    const auto b = run(args);
    ASSERT_EQ(a.status, 0) << args;
    EXPECT_EQ(a.out, b.out) << args;
    const auto doc = nlohmann::json::parse(a.out);
    EXPECT_TRUE(doc["pass"].get<bool>());
    for (const auto& c : doc["checks"]) EXPECT_TRUE(c["abs_err"].is_string());
  }
  EXPECT_NE(run("verify cocycle --samples 5 --seed 1 --json").out, run("verify cocycle --samples 5 --seed 2 --json").out);
}
