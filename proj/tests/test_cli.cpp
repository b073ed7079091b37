#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "support.hpp"

using namespace endok;

namespace {

struct CliRun {
  int exit = -1;
  std::string out;
};

std::string corpus(const std::string& f) { return std::string(ENDOK_CORPUS_DIR) + "/" + f; }

CliRun endok_cli(const std::string& args, const std::string& env = {}) {
  std::string cmd = env + (env.empty() ? "" : " ") + "'" + ENDOK_CLI_PATH + "' " + args + " 2>/dev/null";
  CliRun r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.exit = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<json> lines(const std::string& text) {
  std::vector<json> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) out.push_back(json::parse(line));
  return out;
}

std::filesystem::path scratch(const std::string& name, const std::string& text) {
  auto dir = std::filesystem::temp_directory_path() / ("endok_cli_test_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  auto p = dir / name;
  std::ofstream(p) << text;
  return p;
}

}  // namespace

TEST(Cli, Version) {
  CliRun r = endok_cli("--version");
  EXPECT_EQ(r.exit, 0);
  EXPECT_NE(r.out.find(kToolVersion), std::string::npos);
}

TEST(Cli, MachineReportIsWellFormedAndDeterministic) {
  const std::string args = "check-ideal " + corpus("example1_A.alg") + " --e e1 --format machine";
  CliRun a = endok_cli(args), b = endok_cli(args);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.exit, kNegative);
  auto recs = lines(a.out);
  ASSERT_GE(recs.size(), 3u);
  EXPECT_EQ(recs.front()["record"], "header");
  EXPECT_EQ(recs.front()["schema"], kReportSchema);
  EXPECT_EQ(recs.front()["scope"], "rank-level");
  EXPECT_EQ(recs.back()["record"], "summary");
  EXPECT_EQ(recs.back()["exit"], a.exit);
  EXPECT_EQ(recs.back()["records"], recs.size() - 2);
  for (const auto& r : recs) EXPECT_NE(r["record"], "timing");
}

TEST(Cli, HumanAndMachineReportsAgree) {
  for (const std::string args : {"verify " + corpus("example2_T.alg") + " --thm 1.1 --ideal Te11T --e e11",
                                 "verify " + corpus("example1_A.alg") + " --thm 1.1 --e e1",
                                 "stratify " + corpus("example1_A.alg")}) {
    CliRun m = endok_cli(args + " --format machine"), h = endok_cli(args);
    EXPECT_EQ(m.exit, h.exit) << args;
    for (const auto& rec : lines(m.out)) {
      if (rec["record"] != "decomposition") continue;
      EXPECT_NE(h.out.find(rec["equation"].get<std::string>()), std::string::npos) << args;
      EXPECT_NE(h.out.find(rec["classification"].get<std::string>()), std::string::npos) << args;
    }
    EXPECT_NE(h.out.find("exit " + std::to_string(h.exit)), std::string::npos);
  }
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(endok_cli("k0 " + corpus("example1_A.alg")).exit, kOk);
  EXPECT_EQ(endok_cli("check-ideal " + corpus("example1_A.alg") + " --e e1").exit, kNegative);
  EXPECT_EQ(endok_cli("check-ideal " + corpus("example1_B.alg") + " --e e1").exit, kOk);
  EXPECT_EQ(endok_cli("k0 /nonexistent.alg").exit, kInputError);
  EXPECT_EQ(endok_cli("k0 " + corpus("example1_A.alg") + " --no-such-flag").exit, kInputError);
  EXPECT_EQ(endok_cli("frobnicate " + corpus("example1_A.alg")).exit, kInputError);
  EXPECT_EQ(endok_cli("k0 " + corpus("example1_A.alg") + " --format xml").exit, kInputError);
  EXPECT_EQ(endok_cli("verify " + corpus("example1_A.alg")).exit, kInputError);
  EXPECT_EQ(endok_cli("stratify " + corpus("example1_A.alg") + " --budget 0").exit, kUnknown);
}

TEST(Cli, InputErrorsBecomeRecords) {
  auto bad = scratch("decimal.alg", R"({"endok": 1, "objects": [
  {"name": "R", "type": "algebra", "kind": "polynomial", "coefficients": ["0", "0.5", "1"]}
]})");
  CliRun r = endok_cli("analyze " + bad.string() + " --format machine");
  EXPECT_EQ(r.exit, kInputError);
  bool found = false;
  for (const auto& rec : lines(r.out))
    if (rec["record"] == "error") {
      found = true;
      EXPECT_EQ(rec["kind"], "NonRationalLiteral");
      EXPECT_NE(rec["message"].get<std::string>().find("line 2"), std::string::npos);
    }
  EXPECT_TRUE(found);
}

TEST(Cli, SeedAndTiming) {
  const std::string args = "k0 " + corpus("example2_T.alg") + " --format machine";
  auto env_seed = lines(endok_cli(args, "ENDOK_SEED=41").out);
  EXPECT_EQ(env_seed.front()["seed"], 41);
  auto flag_seed = lines(endok_cli(args + " --seed 5", "ENDOK_SEED=41").out);
  EXPECT_EQ(flag_seed.front()["seed"], 5);
  EXPECT_EQ(endok_cli(args, "ENDOK_SEED=abc").exit, kInputError);
  auto timed = lines(endok_cli(args + " --timing").out);
  EXPECT_EQ(timed.back()["record"], "timing");
}

TEST(Cli, ConstructRoundTrips) {
  CliRun c = endok_cli("construct " + corpus("example1_A.alg"));
  ASSERT_EQ(c.exit, kOk);
  auto doc = scratch("constructed.alg", c.out);
  CliRun a = endok_cli("analyze " + doc.string() + " --format machine");
  ASSERT_EQ(a.exit, kOk);
  for (const auto& rec : lines(a.out))
    if (rec["record"] == "algebra") {
      EXPECT_EQ(rec["dim"], 5);
      EXPECT_EQ(rec["radical_dim"], 3);
    }
  CliRun k = endok_cli("k0 " + doc.string() + " --format machine");
  bool ranked = false;
  for (const auto& rec : lines(k.out))
    if (rec["record"] == "k0") ranked = rec["rank"] == 2;
  EXPECT_TRUE(ranked);
}

TEST(Cli, CorpusPasses) {
  CliRun r = endok_cli("corpus " + std::string(ENDOK_CORPUS_DIR) + " --format machine");
  EXPECT_EQ(r.exit, kOk);
  std::size_t cases = 0;
  for (const auto& rec : lines(r.out))
    if (rec["record"] == "case") {
      ++cases;
      EXPECT_EQ(rec["status"], "pass") << rec.dump();
    }
  EXPECT_GE(cases, 27u);
}

TEST(Cli, CorpusReportsMismatches) {
  auto dir = scratch("T.alg", endok::detail::read_file(corpus("example2_T.alg"))).parent_path();
  std::ofstream(dir / "expectations.json") << R"({"cases": [
    {"id": "wrong", "file": "T.alg", "command": "k0", "expect": {"exit": 0, "records": [{"record": "k0", "rank": 3}]}}
  ]})";
  Report r = run_corpus(dir.string(), RunOptions{});
  EXPECT_EQ(r.exit_code, kNegative);
  ASSERT_EQ(r.records.size(), 2u);
  EXPECT_EQ(r.records[0]["status"], "fail");
  EXPECT_EQ(r.records[1]["failed"], 1);
  EXPECT_EQ(endok_cli("corpus " + dir.string()).exit, kNegative);
}
