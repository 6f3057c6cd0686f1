#include "qframe/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "qframe/errors.hpp"

namespace qframe {

// ------------------------------------------------------------ SampleField

SampleField::SampleField(std::size_t points, std::size_t rank)
    : points_{points}, rank_{rank}, values_(points * rank) {
  if (points == 0 || rank == 0) throw ShapeError("SampleField: empty index set");
}

QVector SampleField::at(std::size_t m) const {
  if (m >= points_) throw ShapeError("SampleField::at: point index out of range");
  QVector v(rank_);
  for (std::size_t i = 0; i < rank_; ++i) v[i] = (*this)(m, i);
  return v;
}

SampleField& SampleField::operator+=(const SampleField& o) {
  if (o.points_ != points_ || o.rank_ != rank_) throw ShapeError("SampleField +: shape mismatch");
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] += o.values_[k];
  return *this;
}

SampleField& SampleField::operator-=(const SampleField& o) {
  if (o.points_ != points_ || o.rank_ != rank_) throw ShapeError("SampleField -: shape mismatch");
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] -= o.values_[k];
  return *this;
}

double SampleField::max_abs() const {
  double m = 0.0;
  for (const auto& q : values_) m = std::max(m, q.norm());
  return m;
}

SampleField operator+(SampleField a, const SampleField& b) { return a += b; }
SampleField operator-(SampleField a, const SampleField& b) { return a -= b; }

SampleField operator*(const SampleField& f, const Quaternion& q) {
  SampleField out(f.points(), f.rank());
  for (std::size_t m = 0; m < f.points(); ++m)
    for (std::size_t i = 0; i < f.rank(); ++i) out(m, i) = f(m, i) * q;
  return out;
}

// ------------------------------------------------------------ analysis map

namespace {

void require_field_shape(const QuadFrame& f, const SampleField& phi, const char* op) {
  if (phi.points() != f.size() || phi.rank() != f.rank()) {
    throw ShapeError(std::string(op) + ": field shape does not match the frame");
  }
}

void require_unitary_gauge(const Gauge& u, std::size_t points, std::size_t n, double tolerance,
                           const char* op) {
  if (u.size() != points) throw ShapeError(std::string(op) + ": one gauge matrix per point required");
  for (std::size_t m = 0; m < points; ++m) {
    if (u[m].rows() != n || u[m].cols() != n) {
      throw ShapeError(std::string(op) + ": gauge at point " + std::to_string(m) + " must be n x n");
    }
    if (!is_unitary(u[m], tolerance)) {
      throw DomainError(std::string(op) + ": gauge at point " + std::to_string(m) +
                        " is not unitary");
    }
  }
}

}  // namespace

QMatrix analysis_matrix(const QuadFrame& f) {
  const std::size_t n = f.rank();
  QMatrix w(f.size() * n, f.dim());
  for (std::size_t m = 0; m < f.size(); ++m) {
    const QuadPoint& p = f.points()[m];
    const double s = std::sqrt(p.w);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t a = 0; a < f.dim(); ++a) w(m * n + i, a) = qconj(p.vectors[i][a]) * s;
  }
  return w;
}

SampleField analysis_apply(const QuadFrame& f, const QVector& phi) {
  if (phi.dim() != f.dim()) throw ShapeError("analysis_apply: vector dimension mismatch");
  SampleField out(f.size(), f.rank());
  for (std::size_t m = 0; m < f.size(); ++m)
    for (std::size_t i = 0; i < f.rank(); ++i) out(m, i) = inner(f.points()[m].vectors[i], phi);
  return out;
}

double field_norm2(const QuadFrame& f, const SampleField& phi) {
  require_field_shape(f, phi, "field_norm2");
  double s = 0.0;
  for (std::size_t m = 0; m < f.size(); ++m) {
    double local = 0.0;
    for (std::size_t i = 0; i < f.rank(); ++i) local += phi(m, i).norm2();
    s += f.points()[m].w * local;
  }
  return s;
}

QVector pullback(const QuadFrame& f, const SampleField& phi, double tolerance) {
  require_field_shape(f, phi, "pullback");
  QVector acc(f.dim());
  for (std::size_t m = 0; m < f.size(); ++m) {
    const QuadPoint& p = f.points()[m];
    for (std::size_t i = 0; i < f.rank(); ++i) acc += p.vectors[i] * (phi(m, i) * p.w);
  }
  QVector v = inverse(f.frame_op()) * acc;
  const double total = std::sqrt(field_norm2(f, phi));
  const double residual = std::sqrt(field_norm2(f, analysis_apply(f, v) - phi));
  const double relative = total > 0.0 ? residual / total : residual;
  if (relative > tolerance) {
    std::ostringstream os;
    os << "pullback: field is not in the range of the analysis map (relative residual "
       << relative << ")";
    throw OffRangeError(os.str(), relative);
  }
  return v;
}

Quaternion rkhs_inner(const QuadFrame& f, const SampleField& phi, const SampleField& psi) {
  return inner(pullback(f, phi), pullback(f, psi));
}

// ------------------------------------------------------------ frame kernel

FrameKernel::FrameKernel(std::size_t points, std::size_t rank, std::vector<double> weights,
                         QMatrix full, KernelResiduals residuals)
    : points_{points}, rank_{rank}, weights_{std::move(weights)}, full_{std::move(full)},
      residuals_{residuals} {}

QMatrix FrameKernel::block(std::size_t p, std::size_t q) const {
  if (p >= points_ || q >= points_) throw ShapeError("FrameKernel::block: index out of range");
  QMatrix b(rank_, rank_);
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j) b(i, j) = full_(p * rank_ + i, q * rank_ + j);
  return b;
}

FrameKernel kernel(const QuadFrame& f, double tolerance) {
  const std::size_t n = f.rank();
  const std::size_t big = f.size() * n;
  const QMatrix a_inv = inverse(f.frame_op());

  std::vector<QVector> eta;
  std::vector<QVector> dual;
  eta.reserve(big);
  dual.reserve(big);
  std::vector<double> weights;
  for (const auto& p : f.points()) {
    weights.push_back(p.w);
    for (const auto& v : p.vectors) {
      eta.push_back(v);
      dual.push_back(a_inv * v);
    }
  }

  QMatrix full(big, big);
  for (std::size_t r = 0; r < big; ++r)
    for (std::size_t c = 0; c < big; ++c) full(r, c) = inner(eta[r], dual[c]);

  KernelResiduals res;
  res.min_diagonal = std::numeric_limits<double>::infinity();
  for (std::size_t r = 0; r < big; ++r) {
    res.min_diagonal = std::min(res.min_diagonal, full(r, r).w);
    res.diagonal_imag = std::max(res.diagonal_imag, full(r, r).imag().norm());
    for (std::size_t c = 0; c < big; ++c) {
      res.hermitian = std::max(res.hermitian, (full(r, c) - qconj(full(c, r))).norm());
    }
  }

  // sum_k w_k K(p, q_k) K(q_k, r) through the complex embedding.
  Eigen::VectorXd wdiag(2 * static_cast<Eigen::Index>(big));
  for (std::size_t m = 0; m < f.size(); ++m)
    for (std::size_t i = 0; i < n; ++i) {
      const auto idx = static_cast<Eigen::Index>(m * n + i);
      wdiag(idx) = weights[m];
      wdiag(idx + static_cast<Eigen::Index>(big)) = weights[m];
    }
  const ComplexMatrix ck = chi_embed(full);
  const ComplexMatrix product = ck * wdiag.cast<std::complex<double>>().asDiagonal() * ck;
  res.reproducing = max_abs_diff(chi_extract(product), full);

  const double scale = std::max(1.0, full.max_abs());
  if (!(res.min_diagonal > 0.0) || res.diagonal_imag > tolerance * scale ||
      res.hermitian > tolerance * scale || res.reproducing > tolerance * scale) {
    std::ostringstream os;
    os << "kernel: property check failed (min diagonal " << res.min_diagonal << ", hermitian "
       << res.hermitian << ", reproducing " << res.reproducing << ")";
    throw NumericError(os.str());
  }
  return FrameKernel(f.size(), n, std::move(weights), std::move(full), res);
}

Quaternion evaluate(const FrameKernel& k, const SampleField& phi, std::size_t m, std::size_t i,
                    double tolerance) {
  if (phi.points() != k.points() || phi.rank() != k.rank()) {
    throw ShapeError("evaluate: field shape does not match the kernel");
  }
  if (m >= k.points() || i >= k.rank()) throw ShapeError("evaluate: index out of range");
  Quaternion s;
  for (std::size_t q = 0; q < k.points(); ++q) {
    Quaternion local;
    for (std::size_t j = 0; j < k.rank(); ++j) local += k.entry(m, i, q, j) * phi(q, j);
    s += local * k.weights()[q];
  }
  const double deviation = (s - phi(m, i)).norm();
  if (deviation > tolerance * std::max(1.0, phi.max_abs())) {
    std::ostringstream os;
    os << "evaluate: reproducing identity violated by " << deviation;
    throw OffRangeError(os.str(), deviation);
  }
  return s;
}

double kernel_distance(const FrameKernel& a, const FrameKernel& b) {
  if (a.points() != b.points() || a.rank() != b.rank()) {
    throw ShapeError("kernel_distance: kernels have different index sets");
  }
  return max_abs_diff(a.full(), b.full());
}

bool kernels_equal(const FrameKernel& a, const FrameKernel& b, double tolerance) {
  return kernel_distance(a, b) <= tolerance;
}

double kernel_gauge_residual(const FrameKernel& k1, const FrameKernel& k2, const Gauge& u) {
  if (k1.points() != k2.points() || k1.rank() != k2.rank()) {
    throw ShapeError("kernel_gauge_residual: kernels have different index sets");
  }
  if (u.size() != k1.points()) throw ShapeError("kernel_gauge_residual: one gauge per point required");
  std::vector<QMatrix> u_adj;
  u_adj.reserve(u.size());
  for (const auto& g : u) u_adj.push_back(adjoint(g));
  double r = 0.0;
  for (std::size_t p = 0; p < k1.points(); ++p)
    for (std::size_t q = 0; q < k1.points(); ++q) {
      const QMatrix expected = u_adj[p] * k1.block(p, q) * u[q];
      r = std::max(r, max_abs_diff(k2.block(p, q), expected));
    }
  return r;
}

bool kernel_gauge_related(const FrameKernel& k1, const FrameKernel& k2, const Gauge& u,
                          double tolerance, double unitary_tolerance) {
  require_unitary_gauge(u, k1.points(), k1.rank(), unitary_tolerance, "kernel_gauge_related");
  return kernel_gauge_residual(k1, k2, u) <= tolerance;
}

QuadFrame tight_orbit_member(const QuadFrame& f, const QMatrix& u_global, const Gauge& u,
                             double tolerance) {
  if (u_global.rows() != f.dim() || u_global.cols() != f.dim()) {
    throw ShapeError("tight_orbit_member: U must be d x d");
  }
  if (!is_unitary(u_global, tolerance)) throw DomainError("tight_orbit_member: U is not unitary");
  require_unitary_gauge(u, f.size(), f.rank(), tolerance, "tight_orbit_member");
  const QMatrix map = u_global * inv_sqrt_psd(f.frame_op());
  std::vector<QuadPoint> pts = f.points();
  for (std::size_t m = 0; m < pts.size(); ++m) {
    std::vector<QVector> hat;
    for (const auto& v : pts[m].vectors) hat.push_back(map * v);
    pts[m].vectors = recombine(hat, u[m]);
  }
  return build_frame(std::move(pts));
}

QuadFrame bundle_transform(const QuadFrame& f, const std::vector<QMatrix>& t, const Gauge& u,
                           double tolerance) {
  if (t.size() != f.size()) throw ShapeError("bundle_transform: one operator per point required");
  require_unitary_gauge(u, f.size(), f.rank(), tolerance, "bundle_transform");
  std::vector<QuadPoint> pts = f.points();
  for (std::size_t m = 0; m < pts.size(); ++m) {
    if (t[m].rows() != f.dim() || t[m].cols() != f.dim()) {
      throw ShapeError("bundle_transform: T(q) at point " + std::to_string(m) + " must be d x d");
    }
    std::vector<QVector> mapped;
    for (const auto& v : pts[m].vectors) mapped.push_back(t[m] * v);
    pts[m].vectors = recombine(mapped, u[m]);
  }
  return build_frame(std::move(pts));
}

QMatrix point_projector(const QuadFrame& f, std::size_t m) {
  const auto& vecs = f.point(m).vectors;
  const QMatrix h = QMatrix::from_columns(vecs);
  return h * inverse(gram(vecs)) * adjoint(h);
}

}  // namespace qframe
