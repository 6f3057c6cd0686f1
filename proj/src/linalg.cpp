#include "qframe/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

#include "qframe/errors.hpp"

namespace qframe {

namespace {

using cd = std::complex<double>;

void require_square(const QMatrix& a, const char* op) {
  if (!a.is_square()) throw ShapeError(std::string(op) + ": matrix must be square");
}

QMatrix hermitian_part(const QMatrix& a) { return 0.5 * (a + adjoint(a)); }

// Applies f to the spectrum of the Hermitian matrix chi(A).
template <typename F>
QMatrix hermitian_function(const QMatrix& a, F f) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(chi_embed(a));
  if (es.info() != Eigen::Success) throw NumericError("Hermitian eigensolver failed");
  Eigen::VectorXd mapped = es.eigenvalues().unaryExpr(f);
  const ComplexMatrix& v = es.eigenvectors();
  ComplexMatrix m = v * mapped.cast<cd>().asDiagonal() * v.adjoint();
  return chi_extract(m);
}

}  // namespace

ComplexMatrix chi_embed(const QMatrix& a) {
  require_square(a, "chi_embed");
  const auto n = static_cast<Eigen::Index>(a.rows());
  ComplexMatrix m(2 * n, 2 * n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      const Quaternion& q = a(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
      const cd a1{q.w, q.x};
      const cd a2{q.y, q.z};
      m(r, c) = a1;
      m(r, n + c) = a2;
      m(n + r, c) = -std::conj(a2);
      m(n + r, n + c) = std::conj(a1);
    }
  }
  return m;
}

QMatrix chi_extract(const ComplexMatrix& m, double tolerance) {
  if (m.rows() != m.cols() || m.rows() == 0 || m.rows() % 2 != 0) {
    throw ShapeError("chi_extract: expected a nonempty 2n x 2n matrix");
  }
  const Eigen::Index n = m.rows() / 2;
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  double deviation = 0.0;
  QMatrix a(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      const cd a1_top = m(r, c);
      const cd a1_bot = std::conj(m(n + r, n + c));
      const cd a2_top = m(r, n + c);
      const cd a2_bot = -std::conj(m(n + r, c));
      deviation = std::max({deviation, std::abs(a1_top - a1_bot), std::abs(a2_top - a2_bot)});
      const cd a1 = 0.5 * (a1_top + a1_bot);
      const cd a2 = 0.5 * (a2_top + a2_bot);
      a(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
          Quaternion{a1.real(), a1.imag(), a2.real(), a2.imag()};
    }
  }
  if (deviation > tolerance * scale) {
    std::ostringstream os;
    os << "chi_extract: block structure violated by " << deviation << " (tolerance "
       << tolerance * scale << ")";
    throw StructureError(os.str());
  }
  return a;
}

std::pair<double, double> singular_extremes(const QMatrix& a) {
  Eigen::JacobiSVD<ComplexMatrix> svd(chi_embed(a));
  const auto& s = svd.singularValues();
  return {s(s.size() - 1), s(0)};
}

double op_norm(const QMatrix& a) { return singular_extremes(a).second; }

double inverse_condition(const QMatrix& a) {
  const auto [smin, smax] = singular_extremes(a);
  return smax > 0.0 ? smin / smax : 0.0;
}

QMatrix inverse(const QMatrix& a, double rank_tol) {
  require_square(a, "inverse");
  Eigen::JacobiSVD<ComplexMatrix> svd(chi_embed(a), Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double smax = s(0);
  const double smin = s(s.size() - 1);
  const double cond = smax > 0.0 ? smin / smax : 0.0;
  if (!(smin > rank_tol * smax)) {
    std::ostringstream os;
    os << "inverse: matrix is singular (sigma_min/sigma_max = " << cond << ")";
    throw SingularityError(os.str(), cond);
  }
  ComplexMatrix inv =
      svd.matrixV() * s.cwiseInverse().cast<cd>().asDiagonal() * svd.matrixU().adjoint();
  return chi_extract(inv);
}

bool is_self_adjoint(const QMatrix& a, double tolerance) {
  if (!a.is_square()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i; j < a.cols(); ++j)
      if ((a(i, j) - qconj(a(j, i))).norm() > tolerance) return false;
  return true;
}

bool is_positive(const QMatrix& a, double tolerance) {
  require_square(a, "is_positive");
  if (!is_self_adjoint(a, tolerance)) throw DomainError("is_positive: matrix is not self-adjoint");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(chi_embed(hermitian_part(a)),
                                                  Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericError("Hermitian eigensolver failed");
  return es.eigenvalues()(0) >= -tolerance;
}

RayleighBounds rayleigh_bounds(const QMatrix& a) {
  require_square(a, "rayleigh_bounds");
  const double scale = std::max(1.0, a.max_abs());
  if (!is_self_adjoint(a, tol::kPositive * scale)) {
    throw DomainError("rayleigh_bounds: matrix is not self-adjoint");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(chi_embed(hermitian_part(a)),
                                                  Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericError("Hermitian eigensolver failed");
  const auto& ev = es.eigenvalues();
  return {ev(0), ev(ev.size() - 1)};
}

QMatrix sqrt_psd(const QMatrix& a) {
  require_square(a, "sqrt_psd");
  const double scale = std::max(1.0, a.max_abs());
  if (!is_self_adjoint(a, tol::kPositive * scale) || !is_positive(a, tol::kPositive * scale)) {
    throw DomainError("sqrt_psd: matrix is not positive self-adjoint");
  }
  return hermitian_function(hermitian_part(a), [](double l) { return std::sqrt(std::max(l, 0.0)); });
}

QMatrix inv_sqrt_psd(const QMatrix& a, double rank_tol) {
  const auto [m, big] = rayleigh_bounds(a);
  if (!(m > rank_tol * big)) {
    throw SingularityError("inv_sqrt_psd: matrix is not positive definite",
                           big > 0.0 ? m / big : 0.0);
  }
  return hermitian_function(hermitian_part(a), [](double l) { return 1.0 / std::sqrt(l); });
}

QMatrix resolvent_op(const QMatrix& a, const Quaternion& lambda) {
  require_square(a, "resolvent_op");
  QMatrix r = matmul(a, a);
  r -= (2.0 * lambda.real()) * a;
  r += lambda.norm2() * QMatrix::identity(a.rows());
  return r;
}

bool is_unitary(const QMatrix& u, double tolerance) {
  if (!u.is_square()) return false;
  const QMatrix id = QMatrix::identity(u.rows());
  const QMatrix ua = adjoint(u);
  return max_abs_diff(ua * u, id) <= tolerance && max_abs_diff(u * ua, id) <= tolerance;
}

bool gram_schmidt(QMatrix& a, double collapse_tol) {
  for (std::size_t c = 0; c < a.cols(); ++c) {
    QVector v = a.column(c);
    const double original = v.norm();
    if (original == 0.0) return false;
    // Two passes keep the columns orthonormal to working precision.
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t p = 0; p < c; ++p) {
        const QVector e = a.column(p);
        v -= e * inner(e, v);
      }
    }
    const double nv = v.norm();
    if (nv <= collapse_tol * original) return false;
    v = v * (1.0 / nv);
    for (std::size_t r = 0; r < a.rows(); ++r) a(r, c) = v[r];
  }
  return true;
}

}  // namespace qframe
