#include <gtest/gtest.h>

#include <cstdlib>

#include "cli_fixtures.hpp"
#include "qframe/errors.hpp"

using namespace qframe;
using cli_fixtures::FixtureSet;
using cli_fixtures::run;

namespace {

const FixtureSet& fixtures_dir() {
  static const FixtureSet set(std::filesystem::temp_directory_path() / "qframe_cli_tests");
  return set;
}

Json report_of(const cli_fixtures::Run& r) { return parse_json(r.out); }

// Restores QFRAME_TOL_PROFILE when the test ends.
class ProfileGuard {
 public:
  explicit ProfileGuard(const char* value) {
    if (const char* old = std::getenv("QFRAME_TOL_PROFILE")) saved_ = old;
    ::setenv("QFRAME_TOL_PROFILE", value, 1);
  }
  ~ProfileGuard() {
    if (saved_) {
      ::setenv("QFRAME_TOL_PROFILE", saved_->c_str(), 1);
    } else {
      ::unsetenv("QFRAME_TOL_PROFILE");
    }
  }

 private:
  std::optional<std::string> saved_;
};

}  // namespace

TEST(Cli, ExitCodesFollowTheContract) {
  for (const auto& inv : fixtures_dir().invocations()) {
    const auto r = run(inv.args);
    EXPECT_EQ(r.code, inv.expected_code) << inv.label << "\nstderr: " << r.err;
    if (r.code == 0 || r.code == 1) {
      EXPECT_NO_THROW(report_of(r)) << inv.label;
    }
    if (r.code >= 2) EXPECT_FALSE(r.err.empty()) << inv.label;
  }
}

TEST(Cli, ReportsAreByteIdenticalAcrossRuns) {
  for (const auto& inv : fixtures_dir().invocations()) {
    const auto a = run(inv.args);
    const auto b = run(inv.args);
    EXPECT_EQ(a.code, b.code) << inv.label;
    EXPECT_EQ(a.out, b.out) << inv.label;
  }
}

TEST(Cli, HelpExitsZero) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("check-equiv"), std::string::npos);
}

TEST(Cli, ReportShape) {
  const auto r = run({"analyze", fixtures_dir().path("frame.json")});
  ASSERT_EQ(r.code, 0);
  const Json j = report_of(r);
  EXPECT_EQ(j["command"], "analyze");
  EXPECT_TRUE(j["inputs"].contains("frame"));
  EXPECT_EQ(j["inputs"]["frame"]["fnv1a64"], fnv1a64_hex(read_file(fixtures_dir().path("frame.json"))));
  EXPECT_GT(j["metrics"]["m"].get<double>(), 0.0);
  EXPECT_GE(j["metrics"]["M"].get<double>(), j["metrics"]["m"].get<double>());
  EXPECT_EQ(j["tolerances"]["kernel"].get<double>(), 1e-8);
  EXPECT_TRUE(j["verdict"].is_null());
  EXPECT_EQ(r.out, canonical_dump(j));
}

TEST(Cli, OutputFileMatchesEmbeddedArtifact) {
  const FixtureSet& fx = fixtures_dir();
  const auto embedded = report_of(run({"dual", fx.path("frame.json")}));
  const std::string out = fx.path("dual_artifact.json");
  const auto written = report_of(run({"dual", fx.path("frame.json"), "-o", out}));
  const std::string bytes = read_file(out);
  EXPECT_EQ(bytes, canonical_dump(embedded["output"]));
  EXPECT_EQ(written["output"]["fnv1a64"], fnv1a64_hex(bytes));
  // The written dual is the dual relation's second argument.
  EXPECT_EQ(run({"check-equiv", fx.path("frame.json"), out, "--mode", "dual"}).code, 0);
}

TEST(Cli, CheckEquivWitnessAndVerdict) {
  const FixtureSet& fx = fixtures_dir();
  const Json yes = report_of(run({"check-equiv", fx.path("frame.json"), fx.path("dual.json")}));
  EXPECT_EQ(yes["verdict"], true);
  EXPECT_TRUE(yes["witness"].contains("T"));
  EXPECT_EQ(yes["witness"]["u"].size(), 10u);
  const Json no = report_of(run({"check-equiv", fx.path("frame.json"), fx.path("unrelated.json")}));
  EXPECT_EQ(no["verdict"], false);
  EXPECT_TRUE(no["witness"].is_null());
}

TEST(Cli, ToleranceOverrideIsReported) {
  const auto r = run({"--tol", "kernel=1e-6", "--tol", "equiv=2e-7", "analyze", fixtures_dir().path("frame.json")});
  ASSERT_EQ(r.code, 0);
  const Json j = report_of(r);
  EXPECT_EQ(j["tolerances"]["kernel"].get<double>(), 1e-6);
  EXPECT_EQ(j["tolerances"]["equiv"].get<double>(), 2e-7);
}

TEST(Cli, StrictProfileDividesDefaultsByTen) {
  ProfileGuard guard("strict");
  const auto r = run({"analyze", fixtures_dir().path("frame.json")});
  ASSERT_EQ(r.code, 0);
  const Json j = report_of(r);
  EXPECT_DOUBLE_EQ(j["tolerances"]["kernel"].get<double>(), 1e-9);
  EXPECT_DOUBLE_EQ(j["tolerances"]["equiv"].get<double>(), 1e-8);
}

TEST(Cli, UnknownProfileIsUsageError) {
  ProfileGuard guard("lenient");
  EXPECT_EQ(run({"analyze", fixtures_dir().path("frame.json")}).code, 2);
}

TEST(Cli, VerifyNamesTheFailedCheck) {
  const auto r = run({"verify", fixtures_dir().path("dependent.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("point_independence"), std::string::npos) << r.err;
  const Json j = report_of(r);
  EXPECT_EQ(j["verdict"], false);
}

TEST(Cli, VerifyPassesOnRandomFrames) {
  for (int seed = 1; seed <= 5; ++seed) {
    const auto r = run({"verify", "--seed", std::to_string(seed), "--dim", "4", "--rank", "2", "--points", "12"});
    EXPECT_EQ(r.code, 0) << seed << "\n" << r.err;
  }
}

TEST(Cli, RandomIsSeedDeterministic) {
  const auto a = run({"random", "--dim", "3", "--rank", "2", "--points", "6", "--seed", "9"});
  const auto b = run({"random", "--dim", "3", "--rank", "2", "--points", "6", "--seed", "10"});
  EXPECT_EQ(a.code, 0);
  EXPECT_NE(a.out, b.out);
  EXPECT_EQ(run({"random", "--dim", "0", "--rank", "1", "--points", "3"}).code, 3);
}
