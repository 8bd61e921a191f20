#include <sys/wait.h>

#include <cstdio>
#include <filesystem>

#include <gtest/gtest.h>

#include "ybe/io.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " " YBE_CLI_PATH " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::string out;
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("ybe_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, GenFamilies) {
  EXPECT_EQ(run("gen theorem_main -p 2 -n 1 -o " + path("tm.json")).code, 0);
  EXPECT_EQ(ybe::load_solution(path("tm.json")).size(), 8u);
  EXPECT_EQ(run("gen theorem42 -p 7 -q 3 -n 1 -o " + path("t42.json")).code, 0);
  EXPECT_EQ(ybe::load_solution(path("t42.json")).size(), 49u);
  EXPECT_EQ(run("gen remark22 -m 4 --m1 2 --m2 2 -o " + path("r22.json")).code, 0);
  EXPECT_EQ(ybe::load_solution(path("r22.json")).size(), 16u);
  auto r = run("gen cyclic -n 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, R"({"family":{"name":"cyclic","params":{"n":2}},"n":2,"schema":"ybe/1","sigma":[[1,0],[1,0]]})"
                   "\n");
}

TEST_F(CliTest, GenRejectsBadParameters) {
  EXPECT_EQ(run("gen theorem_main -p 4 -n 1").code, 2);
  EXPECT_EQ(run("gen theorem42 -p 5 -q 3 -n 1").code, 2);
  EXPECT_EQ(run("gen remark22 -m 6 --m1 2 --m2 2").code, 2);
  EXPECT_EQ(run("gen theorem23 -m 2").code, 2);
  EXPECT_EQ(run("gen nosuchfamily -n 3").code, 2);
  EXPECT_EQ(run("").code, 2);
}

TEST_F(CliTest, RoundTripIsByteIdentical) {
  ASSERT_EQ(run("gen theorem23 -m 2 -n 3 -o " + path("a.json")).code, 0);
  std::string text = ybe::read_file(path("a.json"));
  ybe::save_solution(path("b.json"), ybe::load_solution(path("a.json")));
  EXPECT_EQ(ybe::read_file(path("b.json")), text);
}

TEST_F(CliTest, VerifyExitCodes) {
  run("gen theorem_main -p 2 -n 1 -o " + path("tm.json"));
  auto r = run("verify " + path("tm.json"));
  EXPECT_EQ(r.code, 0);
  auto cert = ybe::json::parse(r.out);
  EXPECT_EQ(cert.at("checks").at("simple"), true);
  EXPECT_EQ(cert.at("group_order"), "32");

  run("gen theorem23 -m 2 -n 2 -o " + path("t23.json"));
  r = run("verify " + path("t23.json"));
  EXPECT_EQ(r.code, 1);
  cert = ybe::json::parse(r.out);
  EXPECT_EQ(cert.at("checks").at("simple"), false);
  EXPECT_EQ(cert.at("checks").at("indecomposable"), true);
  EXPECT_EQ(cert.at("checks").at("irretractable"), true);
  EXPECT_EQ(run("verify " + path("t23.json") + " --checks ybe,indecomposable,irretractable").code, 0);
}

TEST_F(CliTest, CorruptedSigmaFailsYbe) {
  auto j = ybe::to_json(ybe::solution_from_json(ybe::json::parse(run("gen theorem_main -p 2 -n 1").out)));
  j["sigma"][3] = {0, 1, 2, 3, 4, 5, 6, 7};
  ybe::write_file(path("bad.json"), j.dump());
  auto r = run("verify " + path("bad.json"));
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(ybe::json::parse(r.out).at("checks").at("ybe"), false);
}

TEST_F(CliTest, MalformedInput) {
  ybe::write_file(path("broken.json"), "{\"n\": 2, \"sigma\": [[0,1]");
  EXPECT_EQ(run("verify " + path("broken.json")).code, 2);
  ybe::write_file(path("notperm.json"), R"({"schema":"ybe/1","n":2,"sigma":[[0,0],[1,0]]})");
  EXPECT_EQ(run("verify " + path("notperm.json")).code, 2);
  EXPECT_EQ(run("verify " + path("missing.json")).code, 3);
  EXPECT_EQ(run("verify " + path("broken.json") + " --checks nonsense").code, 2);
}

TEST_F(CliTest, GroupSubcommand) {
  run("gen theorem42 -p 7 -q 3 -n 1 -o " + path("t42.json"));
  auto r = run("group " + path("t42.json"));
  EXPECT_EQ(r.code, 0);
  auto j = ybe::json::parse(r.out);
  EXPECT_EQ(j.at("order"), "352947");
  EXPECT_EQ(j.at("prime_divisors"), (std::vector<int>{3, 7}));
  EXPECT_TRUE(j.at("p_group_for").is_null());
}

TEST_F(CliTest, BraceSubcommand) {
  run("gen remark31 -m 2 -o " + path("r31.json"));
  EXPECT_EQ(run("brace " + path("r31.json") + " -o " + path("b.json") + " --map " + path("map.json")).code, 0);
  auto B = ybe::brace_from_json(ybe::json::parse(ybe::read_file(path("b.json"))));
  EXPECT_EQ(B.size(), 8u);
  auto map = ybe::json::parse(ybe::read_file(path("map.json")));
  EXPECT_EQ(map.at("perm").size(), 8u);
  EXPECT_EQ(map.at("coset_rep").size(), 8u);
  run("gen theorem_main -p 3 -n 1 -o " + path("big.json"));
  EXPECT_EQ(run("brace " + path("big.json")).code, 1);
}

TEST_F(CliTest, CatalogWorkflow) {
  std::string env = "YBE_CATALOG=" + path("cat.jsonl");
  run("gen theorem_main -p 2 -n 1 -o " + path("tm.json"));
  run("gen theorem42 -p 7 -q 3 -n 1 -o " + path("t42.json"));
  run("gen theorem23 -m 2 -n 2 -o " + path("t23.json"));
  EXPECT_EQ(run("verify " + path("tm.json") + " --append", env).code, 0);
  EXPECT_EQ(run("verify " + path("t42.json") + " --par 2 --append", env).code, 0);
  EXPECT_EQ(run("verify " + path("t23.json") + " -o " + path("t23.cert")).code, 1);
  EXPECT_EQ(run("catalog append " + path("t23.cert"), env).code, 0);

  auto lines = [](const std::string& s) { return std::count(s.begin(), s.end(), '\n'); };
  EXPECT_EQ(lines(run("catalog list", env).out), 3);
  auto r = run("catalog query --simple true --cardinality 8", env);
  ASSERT_EQ(lines(r.out), 1);
  EXPECT_EQ(ybe::json::parse(r.out).at("family").at("name"), "theorem_main");
  r = run("catalog --catalog " + path("cat.jsonl") + " query --singular true");
  ASSERT_EQ(lines(r.out), 1);
  EXPECT_EQ(ybe::json::parse(r.out).at("family").at("name"), "theorem42");
  EXPECT_EQ(lines(run("catalog query --family theorem23", env).out), 1);

  EXPECT_EQ(run("catalog list", "YBE_CATALOG=" + path("nope/cat.jsonl")).code, 3);
  EXPECT_EQ(run("catalog append " + path("tm.json"), env).code, 2);
}
