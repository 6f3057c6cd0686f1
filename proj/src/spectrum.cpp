#include "qframe/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qframe/errors.hpp"

namespace qframe {

namespace {

std::vector<SphereRep> dedup(std::vector<SphereRep> raw, double tolerance) {
  std::sort(raw.begin(), raw.end());
  std::vector<SphereRep> kept;
  for (const auto& s : raw) {
    const bool dup = std::any_of(kept.begin(), kept.end(), [&](const SphereRep& k) {
      return std::fabs(k.a - s.a) <= tolerance && std::fabs(k.b - s.b) <= tolerance;
    });
    if (!dup) kept.push_back(s);
  }
  return kept;
}

}  // namespace

double resolvent_sigma_min(const QMatrix& a, const Quaternion& lambda) {
  return singular_extremes(resolvent_op(a, lambda)).first;
}

bool is_resolvent_point(const QMatrix& a, const Quaternion& lambda, double rank_tol) {
  const auto [smin, smax] = singular_extremes(resolvent_op(a, lambda));
  return smin > rank_tol * smax;
}

SSpectrum s_spectrum(const QMatrix& a) {
  if (!a.is_square()) throw ShapeError("s_spectrum: matrix must be square");
  const double scale = std::max(1.0, a.max_abs());
  const double norm = op_norm(a);
  SSpectrum out;
  std::vector<SphereRep> raw;

  if (is_self_adjoint(a, tol::kPositive * scale)) {
    const QMatrix h = 0.5 * (a + adjoint(a));
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(chi_embed(h), Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw NumericError("s_spectrum: Hermitian eigensolver failed");
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) raw.push_back({es.eigenvalues()(k), 0.0});
  } else {
    Eigen::ComplexEigenSolver<ComplexMatrix> es(chi_embed(a), false);
    if (es.info() != Eigen::Success) throw NumericError("s_spectrum: eigensolver failed");
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
      const auto l = es.eigenvalues()(k);
      raw.push_back({l.real(), std::fabs(l.imag())});
    }
  }
  const double dedup_tol = tol::kSphereDedup * std::max(1.0, norm);
  out.spheres = dedup(std::move(raw), dedup_tol);
  out.is_real = std::all_of(out.spheres.begin(), out.spheres.end(),
                            [](const SphereRep& s) { return s.b == 0.0; });

  // Every sphere must make R singular; a probe beyond ||A|| must not.
  const double bound = tol::kSpectrum * norm * norm;
  for (const auto& s : out.spheres) {
    const double smin = resolvent_sigma_min(a, s.representative());
    if (smin > bound) {
      std::ostringstream os;
      os << "s_spectrum: sphere (" << s.a << ", " << s.b << ") fails the singularity check ("
         << smin << " > " << bound << ")";
      throw NumericError(os.str());
    }
  }
  if (!is_resolvent_point(a, Quaternion{2.0 * norm + 1.0})) {
    throw NumericError("s_spectrum: probe beyond the operator norm is not a resolvent point");
  }
  return out;
}

double s_radius(const SSpectrum& s) {
  double r = 0.0;
  for (const auto& sp : s.spheres) r = std::max(r, sp.radius());
  return r;
}

double s_radius(const QMatrix& a) { return s_radius(s_spectrum(a)); }

}  // namespace qframe
