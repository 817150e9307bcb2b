#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>

#include "taskmine/pipeline.hpp"
#include "test_support.hpp"

namespace taskmine {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using testing::fixture_path;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("taskmine_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int sh(const std::string& args) {
    std::string cmd = std::string(TASKMINE_CLI) + " " + args + " >" + (dir_ / "stdout").string() +
                      " 2>" + (dir_ / "stderr").string();
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  static std::string fx(const std::string& rel) { return fixture_path(rel).string(); }
  json read_json(const fs::path& p) { return json::parse(read_file(p)); }

  fs::path dir_;
};

TEST_F(Cli, ParseMotivation) {
  ASSERT_EQ(sh("parse --script " + fx("notes/scripts/set_left_swipe_delete.java") + " --out " +
               (dir_ / "tc.json").string()),
            0);
  auto j = read_json(dir_ / "tc.json");
  ASSERT_EQ(j["events"].size(), 4u);
  const auto& e4 = j["events"][3];
  EXPECT_EQ(e4["search_type"], "allOf");
  EXPECT_EQ(e4["criteria"][1]["name"], "withText");
  EXPECT_EQ(e4["criteria"][1]["args"][0]["content"], "Delete");
  EXPECT_EQ(e4["action"]["name"], "click");
  EXPECT_EQ(e4["lines"], (json{11, 11}));
}

TEST_F(Cli, ParseEmptyMethod) {
  write_file_atomic(dir_ / "empty.java", "public void nothing() {\n}\n");
  ASSERT_EQ(sh("parse --script " + (dir_ / "empty.java").string() + " --out " + (dir_ / "o.json").string()), 0);
  auto j = read_json(dir_ / "o.json");
  EXPECT_TRUE(j["events"].empty());
  EXPECT_TRUE(j["assertions"].empty());
}

TEST_F(Cli, ParseUnsupportedApiExitsTwo) {
  EXPECT_EQ(sh("parse --script " + fx("notes/scripts/swipe_note_away.java")), 2);
  EXPECT_NE(read_file(dir_ / "stderr").find("swipeLeft"), std::string::npos);
}

TEST_F(Cli, DetectMotivationAndOracle) {
  auto model = fx("notes/model.json");
  auto script = fx("notes/scripts/set_left_swipe_delete.java");
  ASSERT_EQ(sh("detect --model " + model + " --script " + script + " --out " + (dir_ / "a").string()), 0);
  ASSERT_EQ(sh("detect --oracle --model " + model + " --script " + script + " --out " + (dir_ / "b").string()), 0);
  ASSERT_EQ(sh("detect --parallel --seed 5 --model " + model + " --script " + script + " --out " +
               (dir_ / "c").string()),
            0);
  auto a = read_file(dir_ / "a/set_left_swipe_delete.report.json");
  EXPECT_EQ(a, read_file(dir_ / "b/set_left_swipe_delete.report.json"));
  EXPECT_EQ(a, read_file(dir_ / "c/set_left_swipe_delete.report.json"));
  auto report = report_from_json(json::parse(a));
  EXPECT_EQ(report.mutable_events(), std::vector<std::size_t>{3});
  EXPECT_TRUE(fs::exists(dir_ / "a/set_left_swipe_delete.timings.json"));
}

TEST_F(Cli, DetectZeroEventScript) {
  write_file_atomic(dir_ / "empty.java", "public void nothing() {\n}\n");
  ASSERT_EQ(sh("detect --model " + fx("notes/model.json") + " --script " + (dir_ / "empty.java").string() +
               " --out " + (dir_ / "out").string()),
            0);
  auto j = read_json(dir_ / "out/empty.report.json");
  EXPECT_EQ(j["status"], "ok");
  EXPECT_TRUE(j["events"].empty());
}

TEST_F(Cli, DetectBaseFailureExitsThree) {
  EXPECT_EQ(sh("detect --model " + fx("expense/model.json") + " --config " + fx("expense/config.json") +
               " --script " + fx("expense/scripts/check_total.java") + " --out " + (dir_ / "out").string()),
            3);
  auto j = read_json(dir_ / "out/check_total.report.json");
  EXPECT_EQ(j["status"], "base_task_failure");
  EXPECT_EQ(j["stage"], "assertion");
  EXPECT_EQ(j["index"], 0);
}

TEST_F(Cli, GenerateCounts) {
  struct Case {
    std::string app, stem;
    std::size_t files;
  };
  for (const auto& c : std::vector<Case>{{"notes", "set_left_swipe_delete", 1},
                                         {"expense", "add_expense", 3},
                                         {"bible", "open_bookmarks", 1}}) {
    auto script = fx(c.app + "/scripts/" + c.stem + ".java");
    auto out = dir_ / c.app;
    ASSERT_EQ(sh("detect --model " + fx(c.app + "/model.json") + " --config " + fx(c.app + "/config.json") +
                 " --script " + script + " --out " + (out / "r").string()),
              0);
    ASSERT_EQ(sh("generate --report " + (out / "r" / (c.stem + ".report.json")).string() + " --script " +
                 script + " --out " + (out / "m").string()),
              0);
    std::size_t tasks = 0;
    for (const auto& e : fs::directory_iterator(out / "m")) tasks += e.path().extension() == ".task";
    EXPECT_EQ(tasks, c.files) << c.app;
  }
  auto zero = read_file(dir_ / "bible/m/openBookmarks.task");
  EXPECT_NE(zero.find("openBookmarks()"), std::string::npos);
}

TEST_F(Cli, RunOptions) {
  auto script = fx("notes/scripts/set_left_swipe_delete.java");
  ASSERT_EQ(sh("detect --model " + fx("notes/model.json") + " --script " + script + " --out " + (dir_ / "r").string()), 0);
  ASSERT_EQ(sh("generate --report " + (dir_ / "r/set_left_swipe_delete.report.json").string() + " --script " +
               script + " --out " + (dir_ / "m").string()),
            0);
  auto method = (dir_ / "m/setLeftSwipeToDelete__m3.task").string();
  auto json_method = (dir_ / "m/setLeftSwipeToDelete__m3.json").string();
  ASSERT_EQ(sh("run --model " + fx("notes/model.json") + " --method " + method + " --out " +
               (dir_ / "archive.json").string() + " Archive"),
            0);
  auto trace = read_json(dir_ / "archive.json");
  EXPECT_TRUE(trace["ok"].get<bool>());
  EXPECT_NE(trace["final_tree"].dump().find("\"Archive\""), std::string::npos);
  EXPECT_EQ(sh("run --model " + fx("notes/model.json") + " --method " + json_method + " Trash"), 1);
  EXPECT_EQ(read_json(dir_ / "stdout")["failure"]["kind"], "UnsupportedOption");
  EXPECT_EQ(sh("run --model " + fx("notes/model.json") + " --method " + method + " Delete"), 0);
}

TEST_F(Cli, ReportPublishedMatrix) {
  // 144 synthetic events laid out as tn=92, fp=9, fn=15, tp=28.
  MutationReport r;
  r.test_case = "matrix";
  r.app = "synthetic";
  json mutable_idx = json::array();
  auto add = [&](std::size_t count, bool truly, bool detected) {
    for (std::size_t i = 0; i < count; ++i) {
      EventRecord e;
      e.event = {Selector::single(CriterionKind::with_text, "e"), Action::click(), {}};
      e.pool.event_index = r.events.size();
      e.pool.total_on_screen = 1;
      if (detected) {
        MutantCandidate c{ActionKind::click, FeatureKind::text, "m", {}};
        e.pool.candidates = {c};
        e.survivors = {{c, {}}};
      }
      if (truly) mutable_idx.push_back(r.events.size());
      r.events.push_back(std::move(e));
    }
  };
  add(92, false, false);
  add(9, false, true);
  add(15, true, false);
  add(28, true, true);
  write_file_atomic(dir_ / "matrix.report.json", report_to_json(r).dump());
  write_file_atomic(dir_ / "truth.json", json{{"matrix", {{"mutable_events", mutable_idx}}}}.dump());
  ASSERT_EQ(sh("report --report " + (dir_ / "matrix.report.json").string() + " --truth " +
               (dir_ / "truth.json").string() + " --out " + (dir_ / "s").string()),
            0);
  auto s = read_json(dir_ / "s/summary.json");
  EXPECT_EQ(s["confusion"], (json{{"tn", 92}, {"fp", 9}, {"fn", 15}, {"tp", 28}}));
  EXPECT_NEAR(s["precision"].get<double>(), 0.757, 0.005);
  EXPECT_NEAR(s["recall"].get<double>(), 0.651, 0.005);
  EXPECT_NEAR(s["f1"].get<double>(), 0.700, 0.005);
}

TEST_F(Cli, PipelineMatchesGoldenAndIsIdempotent) {
  ASSERT_EQ(sh("pipeline --fixtures " + fx("") + " --out " + (dir_ / "one").string()), 0);
  ASSERT_EQ(sh("pipeline --fixtures " + fx("") + " --out " + (dir_ / "two").string()), 0);
  auto golden = read_file(fixture_path("golden/summary.json"));
  EXPECT_EQ(read_file(dir_ / "one/summary.json"), golden);
  for (const auto& e : fs::recursive_directory_iterator(dir_ / "one")) {
    if (!e.is_regular_file()) continue;
    auto name = e.path().filename().string();
    if (name.find("timings") != std::string::npos || e.path().extension() == ".txt") continue;
    auto rel = fs::relative(e.path(), dir_ / "one");
    EXPECT_EQ(read_file(e.path()), read_file(dir_ / "two" / rel)) << rel;
  }
}

TEST_F(Cli, ReportDirectoryOfRunsWithMethods) {
  ASSERT_EQ(sh("pipeline --fixtures " + fx("") + " --out " + (dir_ / "p").string()), 0);
  ASSERT_EQ(sh("report --report " + (dir_ / "p/settings/reports").string() + " --truth " +
               fx("settings/truth.json") + " --methods " +
               (dir_ / "p/settings/methods/chooseRegion__m0.json").string() + " --out " +
               (dir_ / "s").string()),
            0);
  auto s = read_json(dir_ / "s/summary.json");
  ASSERT_EQ(s["methods"].size(), 1u);
  EXPECT_EQ(s["methods"][0]["label"], "Type2");
}

}  // namespace
}  // namespace taskmine
