#pragma once

/**
 * @file kernel.hpp
 * @brief Analysis map, the reproducing kernel space of a frame, and the frame
 *        kernel K(p, q)_ij = <eta_p^i | A^-1 eta_q^j>.
 *
 * Sample fields Phi live on the quadrature points: Phi_i(q_m) for m < M,
 * i < n. Field norms carry the weights, ||Phi||^2 = sum_m w_m sum_i
 * |Phi_i(q_m)|^2; stored values are unweighted.
 */

#include <vector>

#include "qframe/frame.hpp"

namespace qframe {

namespace tol {
inline constexpr double kKernel = 1e-8;
inline constexpr double kRange = 1e-8;
}  // namespace tol

class SampleField {
 public:
  SampleField(std::size_t points, std::size_t rank);

  [[nodiscard]] std::size_t points() const { return points_; }
  [[nodiscard]] std::size_t rank() const { return rank_; }
  Quaternion& operator()(std::size_t m, std::size_t i) { return values_[m * rank_ + i]; }
  const Quaternion& operator()(std::size_t m, std::size_t i) const { return values_[m * rank_ + i]; }

  /// The n-vector (Phi_1(q_m), ..., Phi_n(q_m)).
  [[nodiscard]] QVector at(std::size_t m) const;

  SampleField& operator+=(const SampleField& o);
  SampleField& operator-=(const SampleField& o);
  [[nodiscard]] double max_abs() const;

 private:
  std::size_t points_;
  std::size_t rank_;
  std::vector<Quaternion> values_;
};

SampleField operator+(SampleField a, const SampleField& b);
SampleField operator-(SampleField a, const SampleField& b);
/// Right scalar action (Phi q)_i(q_m) = Phi_i(q_m) q.
SampleField operator*(const SampleField& f, const Quaternion& q);

/// (n M) x d matrix whose row (m, i) is sqrt(w_m) <eta_m^i|; W^dagger W = A.
QMatrix analysis_matrix(const QuadFrame& f);

/// Phi_i(q_m) = <eta_m^i | phi>.
SampleField analysis_apply(const QuadFrame& f, const QVector& phi);

/// Weighted L^2 norm squared of a sample field.
double field_norm2(const QuadFrame& f, const SampleField& phi);

/// The unique phi with analysis_apply(f, phi) = Phi:
/// phi = A^-1 sum_m w_m sum_i eta_m^i Phi_i(q_m). Throws OffRangeError when
/// the relative residual exceeds `tolerance`.
QVector pullback(const QuadFrame& f, const SampleField& phi, double tolerance = tol::kRange);

/// <Phi|Psi>_eta = <pullback(Phi)|pullback(Psi)>.
Quaternion rkhs_inner(const QuadFrame& f, const SampleField& phi, const SampleField& psi);

struct KernelResiduals {
  double min_diagonal = 0.0;  // min over q, i of Re K_ii(q, q)
  double diagonal_imag = 0.0; // max |Im K_ii(q, q)|
  double hermitian = 0.0;     // max |K_ij(p,q) - conj(K_ji(q,p))|
  double reproducing = 0.0;   // max |sum_k w_k K(p,q_k) K(q_k,r) - K(p,r)|
};

class FrameKernel {
 public:
  [[nodiscard]] std::size_t points() const { return points_; }
  [[nodiscard]] std::size_t rank() const { return rank_; }
  [[nodiscard]] const std::vector<double>& weights() const { return weights_; }
  /// n x n block K(q_p, q_q).
  [[nodiscard]] QMatrix block(std::size_t p, std::size_t q) const;
  [[nodiscard]] const Quaternion& entry(std::size_t p, std::size_t i, std::size_t q,
                                        std::size_t j) const {
    return full_(p * rank_ + i, q * rank_ + j);
  }
  /// All blocks as one (n M) x (n M) matrix, row index m * n + i.
  [[nodiscard]] const QMatrix& full() const { return full_; }
  [[nodiscard]] const KernelResiduals& residuals() const { return residuals_; }

  friend FrameKernel kernel(const QuadFrame& f, double tolerance);

 private:
  FrameKernel(std::size_t points, std::size_t rank, std::vector<double> weights, QMatrix full,
              KernelResiduals residuals);

  std::size_t points_;
  std::size_t rank_;
  std::vector<double> weights_;
  QMatrix full_;
  KernelResiduals residuals_;
};

/// Computes every block and verifies diagonal positivity, Hermitian symmetry
/// and the discrete reproducing identity within `tolerance` (scaled by
/// max(1, max|K|)); NumericError otherwise.
FrameKernel kernel(const QuadFrame& f, double tolerance = tol::kKernel);

/// sum_j sum_k w_k K_ij(q_m, q_k) Phi_j(q_k). Throws OffRangeError when the
/// result deviates from Phi_i(q_m) by more than `tolerance`.
Quaternion evaluate(const FrameKernel& k, const SampleField& phi, std::size_t m, std::size_t i,
                    double tolerance = tol::kKernel);

/// Max entry deviation over all blocks; ShapeError on mismatched index sets.
double kernel_distance(const FrameKernel& a, const FrameKernel& b);
bool kernels_equal(const FrameKernel& a, const FrameKernel& b, double tolerance = tol::kKernel);

/// max over (p, q) of ||K2(p,q) - u(p)^dagger K1(p,q) u(q)||_max.
double kernel_gauge_residual(const FrameKernel& k1, const FrameKernel& k2, const Gauge& u);

/// True iff every block satisfies K2(p,q) = u(p)^dagger K1(p,q) u(q) within
/// `tolerance`. A non-unitary u(q) throws DomainError.
bool kernel_gauge_related(const FrameKernel& k1, const FrameKernel& k2, const Gauge& u,
                          double tolerance = tol::kKernel,
                          double unitary_tolerance = tol::kGauge);

/// xi_q^i = sum_j (U A^{-1/2} eta_q^j) u(q)_ji; a self-dual tight frame
/// kernel-equivalent to f through u.
QuadFrame tight_orbit_member(const QuadFrame& f, const QMatrix& u_global, const Gauge& u,
                             double tolerance = tol::kUnitary);

/// eta~_q^i = sum_j (T(q) eta_q^j) u(q)_ji. No relation between the frame
/// operators is imposed. Rank collapse at a point throws IndependenceError.
QuadFrame bundle_transform(const QuadFrame& f, const std::vector<QMatrix>& t, const Gauge& u,
                           double tolerance = tol::kUnitary);

/// Orthogonal projector H G^-1 H^dagger onto span{eta_m^i}.
QMatrix point_projector(const QuadFrame& f, std::size_t m);

}  // namespace qframe
