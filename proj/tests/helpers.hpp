#pragma once

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "qframe/frame.hpp"
#include "qframe/random.hpp"

namespace fixtures {

using namespace qframe;

inline constexpr double kEps = std::numeric_limits<double>::epsilon();

inline bool near(const Quaternion& a, const Quaternion& b, double tol) {
  return max_component_diff(a, b) <= tol;
}

inline QVector e(std::size_t dim, std::size_t k) { return QVector::basis(dim, k); }

// One point, weight 1, the standard basis of H^2.
inline QuadFrame parseval() {
  return build_frame({QuadPoint{Quaternion{0.0}, 1.0, {e(2, 0), e(2, 1)}}});
}

// Rank one in H^2: {e1}, {e1}, {e2}; frame operator diag(2, 1).
inline QuadFrame diag21() {
  return build_frame({QuadPoint{Quaternion{0.0}, 1.0, {e(2, 0)}},
                      QuadPoint{Quaternion{1.0}, 1.0, {e(2, 0)}},
                      QuadPoint{Quaternion{2.0}, 1.0, {e(2, 1)}}});
}

// Parameters of the i-th random test frame: d <= 6, n <= d, points up to 50.
struct FrameShape {
  std::size_t d, n, points;
};

inline FrameShape shape(std::uint64_t i, std::size_t max_d = 6) {
  std::mt19937_64 rng(0xf00d + i);
  const std::size_t d = 1 + rng() % max_d;
  const std::size_t n = 1 + rng() % d;
  const std::size_t lo = d + 2;
  const std::size_t points = lo + rng() % (51 - lo);
  return {d, n, points};
}

inline QuadFrame random_test_frame(std::uint64_t i, std::size_t max_d = 6) {
  const FrameShape s = shape(i, max_d);
  return random_frame(s.d, s.n, s.points, 1000 + i);
}

// Same points and weights as f, fresh Gaussian vectors.
inline QuadFrame resampled(const QuadFrame& f, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<QuadPoint> pts = f.points();
  for (auto& p : pts)
    for (auto& v : p.vectors) v = random_vector(f.dim(), rng);
  return build_frame(std::move(pts));
}

inline double max_vector_diff(const QuadFrame& a, const QuadFrame& b) {
  double r = 0.0;
  for (std::size_t m = 0; m < a.size(); ++m)
    for (std::size_t i = 0; i < a.rank(); ++i)
      r = std::max(r, max_abs_diff(a.points()[m].vectors[i], b.points()[m].vectors[i]));
  return r;
}

// Invertible operator with singular values inside [1, 2].
inline QMatrix well_conditioned(std::size_t d, Rng& rng) {
  return QMatrix::identity(d) * 1.5 + random_matrix(d, d, rng) * (0.4 / (2.0 * std::sqrt(double(d)) + 1.0));
}

}  // namespace fixtures
