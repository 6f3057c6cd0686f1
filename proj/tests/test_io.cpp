#include <gtest/gtest.h>

#include <filesystem>

#include "helpers.hpp"
#include "qframe/errors.hpp"
#include "qframe/io.hpp"

using namespace qframe;
using namespace fixtures;

namespace {

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "qframe_io_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

Json minimal_frame_json() {
  return parse_json(R"({"version": 1, "d": 1, "n": 1,
    "points": [{"q": [0, 0, 0, 0], "w": 1, "vectors": [[[1, 0, 0, 0]]]}]})");
}

}  // namespace

TEST(CanonicalDump, SortedKeysAndFixedFloatFormat) {
  const Json j = {{"b", 1.5}, {"a", Json::array({1.0, 0.1})}, {"c", "x"}};
  EXPECT_EQ(canonical_dump(j),
            "{\n  \"a\": [1.0000000000000000e+00, 1.0000000000000001e-01],\n"
            "  \"b\": 1.5000000000000000e+00,\n  \"c\": \"x\"\n}\n");
}

TEST(CanonicalDump, NonFiniteBecomesNull) {
  const Json j = {{"x", std::numeric_limits<double>::infinity()},
                  {"y", std::numeric_limits<double>::quiet_NaN()}};
  const std::string s = canonical_dump(j);
  EXPECT_NE(s.find("\"x\": null"), std::string::npos);
  EXPECT_NE(s.find("\"y\": null"), std::string::npos);
}

TEST(ParseJson, ErrorsCarryLineAndColumn) {
  try {
    parse_json("{\n  \"a\": 1,\n  \"b\": ]\n}");
    FAIL() << "expected ParseError";
  } catch (const ParseError& err) {
    EXPECT_EQ(err.line(), 3u);
    EXPECT_GE(err.column(), 8u);
  }
}

TEST(FrameJson, RoundTripIsBitExact) {
  for (std::uint64_t i = 0; i < 20; ++i) {
    const QuadFrame f = random_test_frame(i);
    const QuadFrame g = frame_from_json(parse_json(canonical_dump(frame_to_json(f))));
    EXPECT_EQ(max_vector_diff(f, g), 0.0);
    for (std::size_t m = 0; m < f.size(); ++m) {
      EXPECT_EQ(f.points()[m].q, g.points()[m].q);
      EXPECT_EQ(f.points()[m].w, g.points()[m].w);
    }
  }
}

TEST(FrameJson, SaveLoadSaveIsByteIdentical) {
  const QuadFrame f = random_test_frame(3);
  const auto a = scratch("a.json");
  const auto b = scratch("b.json");
  save_frame(f, a);
  save_frame(load_frame(a), b);
  EXPECT_EQ(read_file(a), read_file(b));
}

TEST(FrameJson, ValidationErrorsNameThePath) {
  Json j = minimal_frame_json();
  EXPECT_NO_THROW(frame_from_json(j));

  j["points"][0]["w"] = 0.0;
  try {
    frame_from_json(j);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& err) {
    EXPECT_NE(std::string(err.what()).find("points[0].w"), std::string::npos) << err.what();
  }

  Json k = minimal_frame_json();
  k["version"] = 2;
  EXPECT_THROW(frame_from_json(k), ValidationError);
  Json s = minimal_frame_json();
  s["points"][0]["vectors"][0][0] = Json::array({1, 0, 0});
  EXPECT_THROW(frame_from_json(s), ValidationError);
  Json n = minimal_frame_json();
  n["points"][0]["q"] = "origin";
  EXPECT_THROW(frame_from_json(n), ValidationError);
}

TEST(FrameJson, DependentVectorsNameThePoint) {
  Json j = parse_json(R"({"version": 1, "d": 2, "n": 2, "points": [
    {"q": [0, 0, 0, 0], "w": 1, "vectors": [[[1, 0, 0, 0], [0, 0, 0, 0]], [[0, 0, 0, 0], [1, 0, 0, 0]]]},
    {"q": [1, 0, 0, 0], "w": 1, "vectors": [[[1, 0, 0, 0], [0, 0, 0, 0]], [[0, 1, 0, 0], [0, 0, 0, 0]]]}]})");
  try {
    frame_from_json(j);
    FAIL() << "expected IndependenceError";
  } catch (const IndependenceError& err) {
    EXPECT_EQ(err.point(), 1u);
  }
}

TEST(MatrixJson, RoundTripAndBareArray) {
  Rng rng(91);
  const QMatrix m = random_matrix(3, 2, rng);
  EXPECT_EQ(matrix_from_json(parse_json(canonical_dump(matrix_to_json(m)))), m);
  const QMatrix bare = matrix_from_json(parse_json("[[[2, 0, 0, 0], [0, 0, 0, 0]], [[0, 0, 0, 0], [0, 1, 0, 0]]]"));
  EXPECT_EQ(bare, (QMatrix{{2, 0}, {0, kI}}));
  EXPECT_THROW(matrix_from_json(parse_json("[[[1, 0, 0, 0]], [[1, 0, 0, 0], [1, 0, 0, 0]]]")), ValidationError);
}

TEST(GaugeJson, RoundTrip) {
  const Gauge u = random_gauge(5, 3, 92);
  const auto path = scratch("gauge.json");
  save_gauge(u, path);
  const Gauge v = load_gauge(path);
  ASSERT_EQ(v.size(), u.size());
  for (std::size_t m = 0; m < u.size(); ++m) EXPECT_EQ(v[m], u[m]);
}

TEST(KernelJson, HasBlocksForEveryPair) {
  const Json j = kernel_to_json(kernel(diag21()));
  EXPECT_EQ(j["points"], 3);
  EXPECT_EQ(j["n"], 1);
  ASSERT_EQ(j["blocks"].size(), 3u);
  EXPECT_EQ(j["blocks"][0].size(), 3u);
  EXPECT_NEAR(j["blocks"][0][1][0][0][0].get<double>(), 0.5, 1e-15);
}

TEST(Files, MissingFileIsIoError) {
  EXPECT_THROW(read_file(scratch("does_not_exist.json")), IoError);
  EXPECT_THROW(load_frame(scratch("does_not_exist.json")), IoError);
}

TEST(Fnv1a64, KnownVectors) {
  EXPECT_EQ(fnv1a64_hex(""), "cbf29ce484222325");
  EXPECT_EQ(fnv1a64_hex("a"), "af63dc4c8601ec8c");
  EXPECT_EQ(fnv1a64_hex("foobar"), "85944171f73967e8");
}
