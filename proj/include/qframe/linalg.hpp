#pragma once

/**
 * @file linalg.hpp
 * @brief Quaternionic operator calculus routed through the complex embedding.
 *
 * Writing A = A1 + A2 j with complex A1, A2 (entries w + x i and y + z i), the
 * embedding
 *
 *     chi(A) = [[ A1,        A2       ],
 *               [ -conj(A2), conj(A1) ]]
 *
 * is an injective real-algebra homomorphism M_n(H) -> M_2n(C) with
 * chi(A^dagger) = chi(A)^H. Invertibility, eigenvalues, singular values and
 * square roots of A are all computed on chi(A) and mapped back.
 */

#include <Eigen/Dense>
#include <cstdint>
#include <utility>

#include "qframe/qmatrix.hpp"

namespace qframe {

using ComplexMatrix = Eigen::MatrixXcd;

namespace tol {
/// Block-structure tolerance for chi_extract (scaled by max(1, max|M_ij|)).
inline constexpr double kStructure = 1e-10;
/// Relative singular-value threshold for invertibility.
inline constexpr double kRank = 1e-10;
/// Sphere deduplication on (a, b).
inline constexpr double kSphereDedup = 1e-8;
/// S-spectrum membership: sigma_min(chi(R_l(A))) <= kSpectrum * ||chi(A)||^2.
inline constexpr double kSpectrum = 1e-8;
/// Positivity precondition for square roots.
inline constexpr double kPositive = 1e-10;
}  // namespace tol

ComplexMatrix chi_embed(const QMatrix& a);

/// Inverse of chi_embed on its image. The two copies of each block are
/// averaged; disagreement beyond tol::kStructure throws StructureError.
QMatrix chi_extract(const ComplexMatrix& m, double tolerance = tol::kStructure);

/// Computed as chi_extract(chi(A)^-1). Throws SingularityError when
/// sigma_min(chi(A)) <= rank_tol * sigma_max(chi(A)).
QMatrix inverse(const QMatrix& a, double rank_tol = tol::kRank);

/// sigma_min / sigma_max of chi(A) (0 for the zero matrix).
double inverse_condition(const QMatrix& a);

bool is_self_adjoint(const QMatrix& a, double tolerance);

/// Minimum eigenvalue of chi(A) >= -tolerance. A must be self-adjoint within
/// `tolerance`, else DomainError.
bool is_positive(const QMatrix& a, double tolerance);

/// Unique positive square root. Throws DomainError if A is not positive
/// self-adjoint within tol::kPositive (relative to ||A||).
QMatrix sqrt_psd(const QMatrix& a);

/// A^{-1/2} for positive definite A; SingularityError when A is singular.
QMatrix inv_sqrt_psd(const QMatrix& a, double rank_tol = tol::kRank);

/// m(A), M(A): extremes of <phi|A phi> over unit phi.
struct RayleighBounds {
  double m;
  double M;
};

/// Min/max eigenvalue of the Hermitian matrix chi(A). A must be self-adjoint.
RayleighBounds rayleigh_bounds(const QMatrix& a);

/// R_l(A) = A^2 - 2 Re(l) A + |l|^2 I.
QMatrix resolvent_op(const QMatrix& a, const Quaternion& lambda);

/// Largest singular value of chi(A).
double op_norm(const QMatrix& a);

/// Smallest and largest singular values of chi(A).
std::pair<double, double> singular_extremes(const QMatrix& a);

bool is_unitary(const QMatrix& u, double tolerance);

/// Seeded Haar-like unitary from quaternionic Gram-Schmidt on Gaussian columns.
QMatrix random_unitary(std::size_t n, std::uint64_t seed);

/// Orthonormalises the columns of `a` (right-coefficient convention).
/// Returns false if some column collapses below `collapse_tol` of its norm.
bool gram_schmidt(QMatrix& a, double collapse_tol = 1e-8);

}  // namespace qframe
