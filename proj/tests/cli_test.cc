#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.h"
#include "gtest/gtest.h"
#include "roborun/json.h"
#include "roborun/service.h"
#include "testing/test_support.h"

namespace roborun::cli {
namespace {

namespace fs = std::filesystem;

const std::string kData = std::string(ROBORUN_TEST_DATA_DIR) + "/data/";

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun Cli(std::vector<std::string> args) {
  args.insert(args.begin(), "roborun");
  std::ostringstream out, err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(CliTest, RunGoalPrintsJsonTrace) {
  CliRun r = Cli({"run", "--level", kData + "open5x5.level.json", "--program", kData + "move4.rr",
               "--trace", "json"});
  EXPECT_EQ(r.code, kOk);
  const Json trace = Json::parse(r.out);
  EXPECT_EQ(trace.at("outcome"), "goal");
  EXPECT_EQ(trace.at("steps"), 4);
  EXPECT_EQ(trace.at("events").size(), 6u);
}

TEST(CliTest, RunCrash) {
  CliRun r = Cli({"run", "--level", kData + "wall3x3.level.json", "--program", kData + "move2.rr",
               "--trace", "json"});
  EXPECT_EQ(r.code, kNotReached);
  EXPECT_EQ(Json::parse(r.out).at("outcome"), "crash");

  CliRun pretty = Cli({"run", "--level", kData + "wall3x3.level.json", "--program",
                    kData + "move2.rr"});
  EXPECT_EQ(pretty.code, kNotReached);
  EXPECT_NE(pretty.out.find("CRASH at (0,0) into (1,0)"), std::string::npos) << pretty.out;
  EXPECT_NE(pretty.out.find("outcome: crash, 0 steps"), std::string::npos) << pretty.out;
}

TEST(CliTest, RunStepLimit) {
  CliRun r = Cli({"run", "--level", kData + "open5x5.level.json", "--program", kData + "move4.rr",
               "--max-steps", "2", "--trace", "json"});
  EXPECT_EQ(r.code, kNotReached);
  EXPECT_EQ(Json::parse(r.out).at("outcome"), "step_limit");
  EXPECT_EQ(Cli({"run", "--level", kData + "open5x5.level.json", "--program",
                 kData + "move4.rr", "--max-steps", "0"})
                .code,
            kInvalid);
}

TEST(CliTest, InvalidProgramAndMissingFiles) {
  CliRun invalid = Cli({"run", "--level", kData + "open5x5.level.json", "--program",
                     kData + "move0.rr"});
  EXPECT_EQ(invalid.code, kInvalid);
  EXPECT_NE(invalid.err.find("E_MOVE_RANGE"), std::string::npos) << invalid.err;
  EXPECT_TRUE(invalid.out.empty());

  CliRun missing = Cli({"run", "--level", kData + "nope.level.json", "--program",
                     kData + "move4.rr"});
  EXPECT_EQ(missing.code, kInternal);
  EXPECT_NE(missing.err.find("E_IO"), std::string::npos);
}

TEST(CliTest, UsageErrorsAndHelp) {
  EXPECT_EQ(Cli({}).code, kInvalid);
  EXPECT_EQ(Cli({"run", "--level"}).code, kInvalid);
  EXPECT_EQ(Cli({"fly"}).code, kInvalid);
  EXPECT_EQ(Cli({"run", "--level", "a", "--program", "b", "--trace", "xml"}).code, kInvalid);
  CliRun help = Cli({"--help"});
  EXPECT_EQ(help.code, kOk);
  EXPECT_NE(help.out.find("export"), std::string::npos);
}

TEST(CliTest, Score) {
  CliRun r = Cli({"score", "--level", kData + "open5x5.level.json", "--program",
               kData + "repeat4.rr", "--time-seconds", "30"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(Json::parse(r.out).at("total"), 1030);
  CliRun negative = Cli({"score", "--level", kData + "open5x5.level.json", "--program",
                      kData + "repeat4.rr", "--time-seconds", "-1"});
  EXPECT_EQ(negative.code, kInvalid);
  EXPECT_NE(negative.err.find("E_TIME"), std::string::npos);
}

TEST(CliTest, ScoreConfig) {
  const fs::path config = fs::temp_directory_path() /
                          ("roborun_cli_config_" + std::to_string(::getpid()) + ".json");
  std::ofstream(config) << R"({"speed_base":0})";
  CliRun r = Cli({"score", "--level", kData + "open5x5.level.json", "--program",
               kData + "repeat4.rr", "--time-seconds", "30", "--score-config", config.string()});
  fs::remove(config);
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(Json::parse(r.out).at("total"), 860);
}

TEST(CliTest, Export) {
  CliRun pseudo = Cli({"export", "--program", kData + "move3.rr", "--target", "pseudocode"});
  EXPECT_EQ(pseudo.code, kOk);
  EXPECT_EQ(pseudo.out, "go straight for 3 squares\n");
  CliRun td = Cli({"export", "--program", kData + "repeat4.rr", "--target", "touchdevelop"});
  EXPECT_EQ(td.code, kOk);
  EXPECT_EQ(td.out,
            "action run_maze() {\n  for 0 <= i < 4 do {\n    robot->go_straight(1)\n  }\n}\n");
  CliRun java = Cli({"export", "--program", kData + "move3.rr", "--target", "java"});
  EXPECT_EQ(java.code, kInvalid);
  EXPECT_NE(java.err.find("E_TARGET"), std::string::npos);
}

TEST(CliTest, Check) {
  CliRun bad = Cli({"check", "--level", kData + "unsolvable3x3.level.json"});
  EXPECT_EQ(bad.code, kNotReached);
  EXPECT_EQ(bad.out, "unreachable\n");
  CliRun good = Cli({"check", "--level", kData + "wall3x3.level.json"});
  EXPECT_EQ(good.code, kOk);
  EXPECT_EQ(good.out, "reachable, shortest path 4 cells\n");
}

TEST(CliTest, MatchesServiceByteForByte) {
  auto store = LevelStore::Open(fs::temp_directory_path() /
                                ("roborun_cli_store_" + std::to_string(::getpid())));
  ASSERT_TRUE(store.ok());
  const fs::path root = store->root();
  Service service(std::move(store).value());
  for (const char* program : {"move4.rr", "move2.rr", "repeat4.rr", "move3.rr"}) {
    for (const char* level : {"open5x5.level.json", "wall3x3.level.json"}) {
      CliRun cli = Cli({"run", "--level", kData + level, "--program", kData + program, "--trace",
                     "json"});
      Json req;
      req["level"] = Json::parse(testing::ReadFileOrDie(kData + level));
      req["program"] = testing::ReadFileOrDie(kData + program);
      ApiResponse api = service.Execute(req.dump());
      if (api.status == 200) {
        EXPECT_EQ(cli.out, api.body) << program << " " << level;
      } else {
        EXPECT_EQ(api.status, 400);
        EXPECT_EQ(cli.code, kInvalid);
        EXPECT_TRUE(cli.out.empty());
      }
    }
  }
  fs::remove_all(root);
}

}  // namespace
}  // namespace roborun::cli
