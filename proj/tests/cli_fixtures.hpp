#pragma once

// Fixture files and a scripted set of CLI invocations shared by the unit
// tests and the acceptance binary.

#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "qframe/cli.hpp"
#include "qframe/frame.hpp"
#include "qframe/io.hpp"
#include "qframe/random.hpp"

namespace cli_fixtures {

using namespace qframe;

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

inline Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.code = cli_dispatch(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

struct Invocation {
  std::string label;
  std::vector<std::string> args;
  int expected_code;
};

// Frame, its dual, a same-layout unrelated frame, operators, a gauge, a
// square matrix and a few broken inputs, all written under `dir`.
class FixtureSet {
 public:
  explicit FixtureSet(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::filesystem::remove_all(dir_);
    std::filesystem::create_directories(dir_);
    const QuadFrame f = random_frame(3, 2, 10, 7);
    save_frame(f, path("frame.json"));
    save_frame(dual_frame(f), path("dual.json"));
    save_frame(gauge_transform(f, random_gauge(f.size(), f.rank(), 11)), path("gauged.json"));

    Rng rng(12);
    std::vector<QuadPoint> pts = f.points();
    for (auto& p : pts)
      for (auto& v : p.vectors) v = random_vector(f.dim(), rng);
    save_frame(build_frame(std::move(pts)), path("unrelated.json"));

    const QMatrix op = QMatrix::identity(3) * 1.5 + random_matrix(3, 3, rng) * 0.1;
    save_matrix(op, path("op.json"));
    const QMatrix u = random_unitary(3, 13);
    save_matrix(u, path("unitary.json"));
    save_frame(unitary_transform(f, u), path("rotated.json"));
    save_gauge(random_gauge(f.size(), f.rank(), 14), path("gauge.json"));
    save_matrix(random_matrix(4, 4, rng), path("square.json"));

    write_file(path("broken.json"), "{\"version\": 1, \"d\": 2,\n  \"points\": [\n");
    write_file(path("dependent.json"), R"({"version": 1, "d": 2, "n": 2, "points": [
  {"q": [0, 0, 0, 0], "w": 1, "vectors": [[[1, 0, 0, 0], [0, 0, 0, 0]], [[0, 0, 0, 0], [1, 0, 0, 0]]]},
  {"q": [1, 0, 0, 0], "w": 1, "vectors": [[[1, 0, 0, 0], [0, 0, 0, 0]], [[2, 0, 0, 0], [0, 0, 0, 0]]]}]}
)");
  }

  [[nodiscard]] std::string path(const std::string& name) const { return (dir_ / name).string(); }

  // Every subcommand on success, false verdicts, usage errors and input errors.
  [[nodiscard]] std::vector<Invocation> invocations() const {
    const std::string f = path("frame.json");
    return {
        {"analyze", {"analyze", f}, 0},
        {"dual", {"dual", f}, 0},
        {"dual -o", {"dual", f, "-o", path("out_dual.json")}, 0},
        {"tight", {"tight", f}, 0},
        {"transform", {"transform", f, "--op", path("op.json")}, 0},
        {"transform --unitary", {"transform", f, "--op", path("unitary.json"), "--unitary"}, 0},
        {"transform --unitary non-unitary", {"transform", f, "--op", path("op.json"), "--unitary"}, 3},
        {"gauge", {"gauge", f, "--gauge", path("gauge.json")}, 0},
        {"kernel", {"kernel", f}, 0},
        {"kernel -o", {"kernel", f, "-o", path("out_kernel.json")}, 0},
        {"check-equiv kernel", {"check-equiv", f, path("dual.json")}, 0},
        {"check-equiv kernel false", {"check-equiv", f, path("unrelated.json")}, 1},
        {"check-equiv gauge", {"check-equiv", f, path("gauged.json"), "--mode", "gauge"}, 0},
        {"check-equiv unitary", {"check-equiv", f, path("rotated.json"), "--mode", "unitary"}, 0},
        {"check-equiv unitary false", {"check-equiv", f, path("dual.json"), "--mode", "unitary"}, 1},
        {"check-equiv dual", {"check-equiv", f, path("dual.json"), "--mode", "dual"}, 0},
        {"check-equiv dual false", {"check-equiv", f, f, "--mode", "dual"}, 1},
        {"check-equiv layout mismatch", {"check-equiv", f, path("dependent.json")}, 3},
        {"spectrum", {"spectrum", path("square.json")}, 0},
        {"random", {"random", "--dim", "2", "--rank", "1", "--points", "5", "--seed", "3"}, 0},
        {"verify frame", {"verify", f}, 0},
        {"verify seeded", {"verify", "--seed", "5"}, 0},
        {"verify dependent", {"verify", path("dependent.json")}, 1},
        {"strict tolerance override", {"--tol", "kernel=1e-6", "kernel", f}, 0},
        {"no subcommand", {}, 2},
        {"unknown subcommand", {"frobnicate"}, 2},
        {"missing positional", {"analyze"}, 2},
        {"unknown option", {"analyze", f, "--bogus"}, 2},
        {"bad mode", {"check-equiv", f, f, "--mode", "sideways"}, 2},
        {"unknown tolerance", {"--tol", "nonsense=1", "analyze", f}, 2},
        {"malformed tolerance", {"--tol", "kernel", "analyze", f}, 2},
        {"verify without input", {"verify"}, 2},
        {"missing file", {"analyze", path("absent.json")}, 3},
        {"malformed json", {"analyze", path("broken.json")}, 3},
        {"dependent frame", {"analyze", path("dependent.json")}, 3},
    };
  }

 private:
  std::filesystem::path dir_;
};

}  // namespace cli_fixtures
