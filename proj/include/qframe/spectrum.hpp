#pragma once

/**
 * @file spectrum.hpp
 * @brief S-spectrum of a square quaternionic matrix.
 *
 * l belongs to the S-spectrum iff R_l(A) = A^2 - 2 Re(l) A + |l|^2 I is not
 * invertible. R_l depends on l only through (Re l, |l|), so the spectrum is a
 * finite union of similarity spheres. Each eigenvalue a + b i of chi(A)
 * contributes the sphere (a, |b|); eigenvalues come in conjugate pairs and
 * are deduplicated.
 */

#include <vector>

#include "qframe/linalg.hpp"

namespace qframe {

struct SSpectrum {
  std::vector<SphereRep> spheres;  // sorted by (a, b), deduplicated
  bool is_real = false;            // every sphere is a real point
};

/// Throws NumericError if the eigensolver fails or a returned sphere does
/// not make R_l(A) singular.
SSpectrum s_spectrum(const QMatrix& a);

/// max over spheres of sqrt(a^2 + b^2).
double s_radius(const QMatrix& a);
double s_radius(const SSpectrum& s);

/// Smallest singular value of chi(R_l(A)).
double resolvent_sigma_min(const QMatrix& a, const Quaternion& lambda);

/// R_l(A) passes the relative invertibility test.
bool is_resolvent_point(const QMatrix& a, const Quaternion& lambda, double rank_tol = tol::kRank);

}  // namespace qframe
