#pragma once

/**
 * @file equivalence.hpp
 * @brief Decision procedures with witnesses for kernel, unitary and dual
 *        relations between two frames on the same points and weights.
 *
 * Two frames are kernel equivalent iff eta~_q^i = sum_j (T eta_q^j) u(q)_ji
 * for some invertible T and per-point unitaries u, with A~ = T A T^dagger.
 * After whitening, eta_hat = A^{-1/2} eta and xi_hat = A~^{-1/2} eta~, such a
 * pair exists iff one unitary V carries every whitened point operator
 *
 *     S_hat_eta(q) = sum_i |eta_hat_q^i><eta_hat_q^i|
 *
 * to S_hat_xi(q) = V S_hat_eta(q) V^dagger. V is found as the unitary part of
 * a null vector of the real-linear map V -> V S_hat_eta(q) - S_hat_xi(q) V;
 * u(q) is then the change of basis from V eta_hat_q to xi_hat_q.
 */

#include <optional>
#include <string>

#include "qframe/kernel.hpp"

namespace qframe {

namespace tol {
inline constexpr double kEquivalence = 1e-7;
inline constexpr double kDual = 1e-8;
}  // namespace tol

struct EquivalenceResiduals {
  double reconstruction = 0.0;  // max ||eta~ - sum (T eta) u||, scaled by max(1, max|eta~|)
  double operator_law = 0.0;    // ||A~ - T A T^dagger||_max, scaled by max(1, max|A~|)
  double inverse = 0.0;         // ||T' T - I||_max
  double unitarity = 0.0;       // max over points of ||u^dagger u - I||_max
  double kernel_gauge = 0.0;    // max ||K~(p,q) - u(p)^dagger K(p,q) u(q)||_max
  double commutant = 0.0;       // relative singular value of the chosen null vector
};

struct KernelEquivalence {
  bool equivalent = false;
  bool span_total = false;      // stacked vectors of both frames span H^d
  std::optional<QMatrix> t;
  std::optional<QMatrix> t_inverse;
  Gauge u;
  EquivalenceResiduals residuals;
  std::string detail;
};

/// Searches for (T, u) relating G to F and verifies every relation within
/// `tolerance`. ShapeError unless the frames share d, n, points and weights.
KernelEquivalence kernel_equivalent(const QuadFrame& f, const QuadFrame& g,
                                    double tolerance = tol::kEquivalence);

struct UnitaryEquivalence {
  bool equivalent = false;
  std::optional<QMatrix> u;     // U = (sum w |eta~><eta|) A^-1
  double unitarity_defect = 0.0;
  double reconstruction = 0.0;  // max ||eta~ - U eta||
  std::string detail;
};

/// Decides whether G = unitary_transform(F, U) for some unitary U.
UnitaryEquivalence unitary_equivalent(const QuadFrame& f, const QuadFrame& g,
                                      double tolerance = tol::kUnitary);

struct DualRelation {
  bool related = false;
  double residual = 0.0;  // max ||xi - A^-1 eta||, scaled by max(1, max|xi|)
};

/// Decides whether G's vectors are A^-1 applied to F's vectors.
DualRelation dual_related(const QuadFrame& f, const QuadFrame& g, double tolerance = tol::kDual);

}  // namespace qframe
