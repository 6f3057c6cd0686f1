#pragma once

/**
 * @file frame.hpp
 * @brief Rank-n continuous frames with the measure replaced by a finite
 *        weighted point set.
 *
 * A QuadFrame holds points q_m with weights w_m > 0 and, at each point, n
 * linearly independent vectors eta_m^1..eta_m^n of H^d. Its frame operator
 *
 *     A = sum_m w_m sum_i |eta_m^i><eta_m^i|
 *
 * is accumulated in point order, then vector order, and must be invertible.
 * Every transform returns a new frame; QuadFrame itself is immutable.
 */

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qframe/linalg.hpp"

namespace qframe {

namespace tol {
/// Per-point Gram matrix: lambda_min > kIndependence * lambda_max.
inline constexpr double kIndependence = 1e-10;
/// Default unitarity check for user-supplied U and gauge matrices.
inline constexpr double kUnitary = 1e-10;
/// S(q) agreement and unitarity of recovered gauges.
inline constexpr double kGauge = 1e-8;
}  // namespace tol

struct QuadPoint {
  Quaternion q;
  double w = 1.0;
  std::vector<QVector> vectors;

  bool operator==(const QuadPoint&) const = default;
};

/// Per-point n x n unitary matrices, indexed like the frame's points.
using Gauge = std::vector<QMatrix>;

class QuadFrame {
 public:
  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] std::size_t rank() const { return rank_; }
  [[nodiscard]] std::size_t size() const { return points_.size(); }
  [[nodiscard]] const std::vector<QuadPoint>& points() const { return points_; }
  [[nodiscard]] const QuadPoint& point(std::size_t m) const;
  [[nodiscard]] const QMatrix& frame_op() const { return frame_op_; }
  [[nodiscard]] RayleighBounds bounds() const { return bounds_; }

  friend QuadFrame build_frame(std::vector<QuadPoint> points);

 private:
  QuadFrame(std::size_t dim, std::size_t rank, std::vector<QuadPoint> points, QMatrix frame_op,
            RayleighBounds bounds);

  std::size_t dim_;
  std::size_t rank_;
  std::vector<QuadPoint> points_;
  QMatrix frame_op_;
  RayleighBounds bounds_;
};

/// Validates the points and assembles the frame operator.
/// Throws ShapeError (empty / inconsistent shapes / n > d), ValidationError
/// (w <= 0 or non-finite data), IndependenceError naming the first dependent
/// point, NotAFrameError when A is singular.
QuadFrame build_frame(std::vector<QuadPoint> points);

/// Gram matrix G_ik = <v_i|v_k> of a family.
QMatrix gram(std::span<const QVector> family);

/// xi^i = sum_j eta^j u_ji (right coefficients).
std::vector<QVector> recombine(std::span<const QVector> eta, const QMatrix& u);

/// Coefficients u with xi^i = sum_j eta^j u_ji, assuming span(xi) lies in
/// span(eta): u = G^-1 C, G the Gram matrix of eta, C_jk = <eta_j|xi_k>.
QMatrix basis_change(std::span<const QVector> eta, std::span<const QVector> xi);

/// s(phi) = sum_m w_m sum_i |<eta_m^i|phi>|^2.
double frame_sum(const QuadFrame& f, const QVector& phi);

struct FrameBoundsReport {
  std::size_t trials = 0;
  double m = 0.0;
  double M = 0.0;
  double epsilon = 0.0;  // 1e-9 * M
  double min_observed = 0.0;
  double max_observed = 0.0;
  bool ok = true;
  std::optional<QVector> witness;  // first unit vector violating the bounds
};

/// Samples `trials` seeded unit vectors and checks m - eps <= s(phi) <= M + eps.
FrameBoundsReport frame_bounds_check(const QuadFrame& f, std::size_t trials, std::uint64_t seed);

/// (M - m) / (M + m).
double width(const QuadFrame& f);

bool is_tight(const QuadFrame& f, double tolerance = 1e-8);
bool is_self_dual(const QuadFrame& f, double tolerance = 1e-8);

/// eta_bar = A^-1 eta at the same points and weights.
QuadFrame dual_frame(const QuadFrame& f);

/// eta_hat = A^{-1/2} eta; frame operator I.
QuadFrame tight_frame(const QuadFrame& f);

/// eta -> T eta; frame operator T A T^dagger. Singular T throws DomainError.
QuadFrame t_transform(const QuadFrame& f, const QMatrix& t);

/// t_transform restricted to unitary U (checked within `tolerance`).
QuadFrame unitary_transform(const QuadFrame& f, const QMatrix& u,
                            double tolerance = tol::kUnitary);

/// Per-point mixing xi_m^i = sum_j eta_m^j u(m)_ji. Non-unitary u throws
/// DomainError.
QuadFrame gauge_transform(const QuadFrame& f, const Gauge& u, double tolerance = tol::kUnitary);

/// S(q_m) = sum_i |eta_m^i><eta_m^i| (unweighted).
QMatrix s_of_point(const QuadFrame& f, std::size_t m);

enum class GaugeStatus { kRelated, kNotGaugeRelated, kInconsistent };

struct GaugeRecovery {
  GaugeStatus status = GaugeStatus::kNotGaugeRelated;
  Gauge u;                         // filled when status == kRelated
  double s_mismatch = 0.0;         // max over points of ||S_F - S_G||_max
  double unitarity_defect = 0.0;   // max over points of ||u^dagger u - I||_max
  double reconstruction = 0.0;     // max ||xi - sum eta u|| over points/vectors
  std::string detail;

  [[nodiscard]] bool related() const { return status == GaugeStatus::kRelated; }
};

/// Recovers per-point unitaries u with G's vectors = F's vectors mixed by u.
/// F and G must share points, weights, d and n (ShapeError otherwise).
GaugeRecovery gauge_recover(const QuadFrame& f, const QuadFrame& g,
                            double tolerance = tol::kGauge);

/// Throws ShapeError unless both frames have the same d, n, points and weights.
void require_same_layout(const QuadFrame& f, const QuadFrame& g, const char* op);

struct DiscreteFrameBounds {
  double lower = 0.0;  // optimal A
  double upper = 0.0;  // optimal B
  bool is_frame = false;
};

/// Optimal bounds of the discrete family via Rayleigh bounds of
/// sum_k |phi_k><phi_k|; is_frame iff lower > 1e-10 * upper.
DiscreteFrameBounds discrete_frame_bounds(std::span<const QVector> vectors);

/// Seeded test frame: Gaussian points and vectors, weights in [0.5, 1.5].
/// Requires 1 <= n <= d, points >= 1, n * points >= d (PreconditionError).
QuadFrame random_frame(std::size_t d, std::size_t n, std::size_t points, std::uint64_t seed);

/// Per-point unitaries drawn with random_unitary from consecutive seeds.
Gauge random_gauge(std::size_t points, std::size_t n, std::uint64_t seed);

}  // namespace qframe
