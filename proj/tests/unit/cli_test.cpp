//
// Copyright 2026 The Posibot Authors
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
//

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "test_support.hpp"

namespace posibot {
namespace {

struct CliRun {
  int exit_code = -1;
  std::string out;
};

std::string quote(const std::string& arg) {
  std::string q = "'";
  for (char c : arg) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

CliRun run_cli(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::string cmd = quote(POSIBOT_CLI_PATH);
  for (const auto& a : args) cmd += " " + quote(a);
  cmd += " 2>/dev/null";
  if (!stdin_text.empty()) cmd = "printf '%s' " + quote(stdin_text) + " | " + cmd;
  CliRun run;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return run;
  char buffer[4096];
  std::size_t n = 0;
  while ((n = std::fread(buffer, 1, sizeof(buffer), pipe)) > 0) run.out.append(buffer, n);
  const int status = pclose(pipe);
  run.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return run;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(Cli, HelpForEverySubcommand) {
  EXPECT_EQ(run_cli({"--help"}).exit_code, 0);
  for (const auto& sub : std::vector<std::vector<std::string>>{
           {"augment"}, {"train"}, {"classify"}, {"summarize"}, {"chat"},
           {"stats", "lengths"}, {"stats", "emotions"}, {"serve"}}) {
    auto args = sub;
    args.push_back("--help");
    const CliRun r = run_cli(args);
    EXPECT_EQ(r.exit_code, 0) << sub.back();
    EXPECT_NE(r.out.find("--"), std::string::npos) << sub.back();
  }
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).exit_code, 1);
  EXPECT_EQ(run_cli({"frobnicate"}).exit_code, 1);
  EXPECT_EQ(run_cli({"augment"}).exit_code, 1);
  EXPECT_EQ(run_cli({"summarize", "--in", "/no/such/file"}).exit_code, 1);
  EXPECT_EQ(run_cli({"classify", "--text", "hi", "--in",
                     testing::data_path("toy_original.txt").string()})
                .exit_code,
            1);
}

TEST(Cli, DataErrors) {
  EXPECT_EQ(run_cli({"classify", "--text", "hi"}).exit_code, 2);
  const auto dir = testing::temp_dir("cli-data");
  std::ofstream(dir / "bad.csv") << "id,text,sentiment\n1,\"open\n";
  EXPECT_EQ(run_cli({"train", "--corpus", (dir / "bad.csv").string(), "--schema",
                     testing::data_path("schemas/synthetic.json").string(), "--out",
                     (dir / "m.json").string()})
                .exit_code,
            2);
  std::filesystem::remove_all(dir);
}

TEST(Cli, AugmentIsDeterministic) {
  const std::string in = testing::data_path("toy_original.txt").string();
  const CliRun a = run_cli({"augment", "--in", in, "--seed", "5", "--variants", "2"});
  const CliRun b = run_cli({"augment", "--in", in, "--seed", "5", "--variants", "2"});
  ASSERT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.out, b.out);
  std::istringstream lines(a.out);
  std::size_t count = 0;
  for (std::string line; std::getline(lines, line); ++count) {
    const auto doc = nlohmann::json::parse(line);
    EXPECT_TRUE(doc.contains("variants"));
  }
  EXPECT_EQ(count, testing::read_lines(in).size());
}

TEST(Cli, StatsLengthsMatchesOracle) {
  const auto dir = testing::temp_dir("cli-lengths");
  const CliRun r = run_cli({"stats", "lengths", "--original",
                         testing::data_path("toy_original.txt").string(), "--augmented",
                         testing::data_path("toy_augmented.txt").string(), "--out",
                         (dir / "h.json").string()});
  ASSERT_EQ(r.exit_code, 0);
  const auto report = nlohmann::json::parse(slurp(dir / "h.json"));
  const auto oracle = nlohmann::json::parse(slurp(testing::fixture_path("lengths_oracle.json")));
  for (const char* corpus : {"original", "augmented"}) {
    EXPECT_EQ(report["histograms"][corpus]["counts"], oracle[corpus]["counts"]);
    EXPECT_EQ(report["histograms"][corpus]["labels"], oracle[corpus]["labels"]);
  }
  std::filesystem::remove_all(dir);
}

TEST(Cli, StatsEmotionsWritesJsonAndCsv) {
  const auto dir = testing::temp_dir("cli-emotions");
  const CliRun r = run_cli({"stats", "emotions", "--in",
                         testing::data_path("demographics.csv").string(), "--gender", "female",
                         "--out", (dir / "f.json").string()});
  ASSERT_EQ(r.exit_code, 0);
  const auto doc = nlohmann::json::parse(slurp(dir / "f.json"));
  const auto oracle = nlohmann::json::parse(slurp(testing::fixture_path("emotion_oracle.json")));
  EXPECT_EQ(doc["used_records"], oracle["female"]["used_records"]);
  EXPECT_TRUE(std::filesystem::exists(dir / "f.csv"));
  EXPECT_EQ(run_cli({"stats", "emotions", "--in", testing::data_path("demographics.csv").string(),
                     "--gender", "robot"})
                .exit_code,
            1);
  std::filesystem::remove_all(dir);
}

TEST(Cli, TrainClassifySummarize) {
  const auto dir = testing::temp_dir("cli-train");
  const std::string model = (dir / "model.json").string();
  const CliRun t = run_cli({"train", "--corpus", testing::data_path("synthetic_corpus.csv").string(),
                         "--schema", testing::data_path("schemas/synthetic.json").string(),
                         "--out", model, "--seed", "7"});
  ASSERT_EQ(t.exit_code, 0);
  const auto report = nlohmann::json::parse(t.out);
  EXPECT_GE(report["evaluation"]["macro_f1"].get<double>(), 0.95);
  EXPECT_GE(report["evaluation"]["accuracy"].get<double>(), 0.95);
  EXPECT_EQ(report["train_size"].get<int>() + report["test_size"].get<int>(), 200);
  EXPECT_TRUE(std::filesystem::exists(model + ".report.json"));

  const CliRun c = run_cli({"classify", "--model", model, "--text", "I feel hopeless and alone"});
  ASSERT_EQ(c.exit_code, 0);
  EXPECT_EQ(nlohmann::json::parse(c.out)["label"], "negative");

  std::ofstream(dir / "doc.txt") << "I cannot sleep. Work keeps me up and sleep never comes. "
                                    "The cat sat in the garden.";
  const CliRun s = run_cli({"summarize", "--in", (dir / "doc.txt").string(), "--sentences", "1"});
  ASSERT_EQ(s.exit_code, 0);
  EXPECT_EQ(nlohmann::json::parse(s.out)["sentences"].size(), 1u);

  const CliRun chat = run_cli({"chat", "--model", model}, "Hello there\nI want to end my life\n/quit\n");
  EXPECT_EQ(chat.exit_code, 0);
  EXPECT_NE(chat.out.find("[CRISIS]"), std::string::npos);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace posibot
