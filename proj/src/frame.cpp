#include "qframe/frame.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "qframe/errors.hpp"
#include "qframe/random.hpp"

namespace qframe {

namespace {

bool finite(const Quaternion& q) {
  return std::isfinite(q.w) && std::isfinite(q.x) && std::isfinite(q.y) && std::isfinite(q.z);
}

// lambda_min / lambda_max of chi(G), or 0 when G vanishes.
double gram_condition(const QMatrix& g) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(chi_embed(0.5 * (g + adjoint(g))),
                                                  Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericError("Gram eigensolver failed");
  const double lmax = es.eigenvalues()(es.eigenvalues().size() - 1);
  if (!(lmax > 0.0)) return 0.0;
  return es.eigenvalues()(0) / lmax;
}

// Accumulates sum_i |v_i><v_i| * weight into the upper triangle of `acc`.
void accumulate_upper(QMatrix& acc, std::span<const QVector> family, double weight) {
  const std::size_t d = acc.rows();
  for (const auto& v : family) {
    for (std::size_t a = 0; a < d; ++a) {
      const Quaternion va = v[a] * weight;
      for (std::size_t b = a; b < d; ++b) acc(a, b) += va * qconj(v[b]);
    }
  }
}

void mirror_upper(QMatrix& acc) {
  for (std::size_t a = 0; a < acc.rows(); ++a) {
    acc(a, a) = Quaternion{acc(a, a).w};
    for (std::size_t b = a + 1; b < acc.cols(); ++b) acc(b, a) = qconj(acc(a, b));
  }
}

QuadFrame map_vectors(const QuadFrame& f, const QMatrix& t) {
  std::vector<QuadPoint> pts = f.points();
  for (auto& p : pts)
    for (auto& v : p.vectors) v = t * v;
  return build_frame(std::move(pts));
}

}  // namespace

QuadFrame::QuadFrame(std::size_t dim, std::size_t rank, std::vector<QuadPoint> points,
                     QMatrix frame_op, RayleighBounds bounds)
    : dim_{dim}, rank_{rank}, points_{std::move(points)}, frame_op_{std::move(frame_op)},
      bounds_{bounds} {}

const QuadPoint& QuadFrame::point(std::size_t m) const {
  if (m >= points_.size()) throw ShapeError("QuadFrame::point: index out of range");
  return points_[m];
}

QMatrix gram(std::span<const QVector> family) {
  if (family.empty()) throw ShapeError("gram: empty family");
  QMatrix g(family.size(), family.size());
  for (std::size_t i = 0; i < family.size(); ++i) {
    g(i, i) = Quaternion{family[i].norm2()};
    for (std::size_t k = i + 1; k < family.size(); ++k) {
      g(i, k) = inner(family[i], family[k]);
      g(k, i) = qconj(g(i, k));
    }
  }
  return g;
}

std::vector<QVector> recombine(std::span<const QVector> eta, const QMatrix& u) {
  if (eta.empty() || u.rows() != eta.size() || u.cols() != eta.size()) {
    throw ShapeError("recombine: coefficient matrix must be n x n");
  }
  std::vector<QVector> xi;
  xi.reserve(eta.size());
  for (std::size_t i = 0; i < eta.size(); ++i) {
    QVector v(eta.front().dim());
    for (std::size_t j = 0; j < eta.size(); ++j) v += eta[j] * u(j, i);
    xi.push_back(std::move(v));
  }
  return xi;
}

QMatrix basis_change(std::span<const QVector> eta, std::span<const QVector> xi) {
  if (eta.size() != xi.size() || eta.empty()) throw ShapeError("basis_change: family sizes differ");
  QMatrix c(eta.size(), xi.size());
  for (std::size_t j = 0; j < eta.size(); ++j)
    for (std::size_t k = 0; k < xi.size(); ++k) c(j, k) = inner(eta[j], xi[k]);
  return inverse(gram(eta)) * c;
}

QuadFrame build_frame(std::vector<QuadPoint> points) {
  if (points.empty()) throw ShapeError("build_frame: no points");
  const std::size_t n = points.front().vectors.size();
  if (n == 0) throw ShapeError("build_frame: point 0 has no vectors");
  const std::size_t d = points.front().vectors.front().dim();
  if (n > d) {
    throw ShapeError("build_frame: rank " + std::to_string(n) + " exceeds dimension " +
                     std::to_string(d));
  }

  QMatrix acc(d, d);
  for (std::size_t m = 0; m < points.size(); ++m) {
    const QuadPoint& p = points[m];
    if (p.vectors.size() != n) {
      throw ShapeError("build_frame: point " + std::to_string(m) + " has " +
                       std::to_string(p.vectors.size()) + " vectors, expected " + std::to_string(n));
    }
    if (!std::isfinite(p.w) || !(p.w > 0.0)) {
      throw ValidationError("build_frame: weight at point " + std::to_string(m) +
                            " must be positive and finite");
    }
    if (!finite(p.q)) throw ValidationError("build_frame: non-finite location at point " + std::to_string(m));
    for (const auto& v : p.vectors) {
      if (v.dim() != d) {
        throw ShapeError("build_frame: vector of dimension " + std::to_string(v.dim()) +
                         " at point " + std::to_string(m) + ", expected " + std::to_string(d));
      }
      for (const auto& c : v.entries())
        if (!finite(c)) throw ValidationError("build_frame: non-finite entry at point " + std::to_string(m));
    }
    if (!(gram_condition(gram(p.vectors)) > tol::kIndependence)) {
      throw IndependenceError("build_frame: vectors at point " + std::to_string(m) +
                                  " are linearly dependent",
                              m);
    }
    accumulate_upper(acc, p.vectors, p.w);
  }
  mirror_upper(acc);

  const RayleighBounds b = rayleigh_bounds(acc);
  if (!(b.m > tol::kRank * b.M)) {
    std::ostringstream os;
    os << "build_frame: frame operator is singular (m = " << b.m << ", M = " << b.M << ")";
    throw NotAFrameError(os.str());
  }
  return QuadFrame(d, n, std::move(points), std::move(acc), b);
}

double frame_sum(const QuadFrame& f, const QVector& phi) {
  double s = 0.0;
  for (const auto& p : f.points()) {
    double local = 0.0;
    for (const auto& v : p.vectors) local += inner(v, phi).norm2();
    s += p.w * local;
  }
  return s;
}

FrameBoundsReport frame_bounds_check(const QuadFrame& f, std::size_t trials, std::uint64_t seed) {
  FrameBoundsReport r;
  r.trials = trials;
  r.m = f.bounds().m;
  r.M = f.bounds().M;
  r.epsilon = 1e-9 * r.M;
  r.min_observed = std::numeric_limits<double>::infinity();
  r.max_observed = -std::numeric_limits<double>::infinity();
  Rng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const QVector phi = random_unit_vector(f.dim(), rng);
    const double s = frame_sum(f, phi);
    r.min_observed = std::min(r.min_observed, s);
    r.max_observed = std::max(r.max_observed, s);
    if (r.ok && (s < r.m - r.epsilon || s > r.M + r.epsilon)) {
      r.ok = false;
      r.witness = phi;
    }
  }
  return r;
}

double width(const QuadFrame& f) {
  const auto [m, big] = f.bounds();
  return (big - m) / (big + m);
}

bool is_tight(const QuadFrame& f, double tolerance) {
  return max_abs_diff(f.frame_op(), f.bounds().M * QMatrix::identity(f.dim())) <= tolerance;
}

bool is_self_dual(const QuadFrame& f, double tolerance) {
  return max_abs_diff(f.frame_op(), QMatrix::identity(f.dim())) <= tolerance;
}

QuadFrame dual_frame(const QuadFrame& f) { return map_vectors(f, inverse(f.frame_op())); }

QuadFrame tight_frame(const QuadFrame& f) { return map_vectors(f, inv_sqrt_psd(f.frame_op())); }

QuadFrame t_transform(const QuadFrame& f, const QMatrix& t) {
  if (t.rows() != f.dim() || t.cols() != f.dim()) throw ShapeError("t_transform: T must be d x d");
  const double cond = inverse_condition(t);
  if (!(cond > tol::kRank)) {
    std::ostringstream os;
    os << "t_transform: T is not invertible (sigma_min/sigma_max = " << cond << ")";
    throw DomainError(os.str());
  }
  return map_vectors(f, t);
}

QuadFrame unitary_transform(const QuadFrame& f, const QMatrix& u, double tolerance) {
  if (!is_unitary(u, tolerance)) throw DomainError("unitary_transform: U is not unitary");
  return t_transform(f, u);
}

QuadFrame gauge_transform(const QuadFrame& f, const Gauge& u, double tolerance) {
  if (u.size() != f.size()) throw ShapeError("gauge_transform: one matrix per point required");
  std::vector<QuadPoint> pts = f.points();
  for (std::size_t m = 0; m < pts.size(); ++m) {
    if (u[m].rows() != f.rank() || u[m].cols() != f.rank()) {
      throw ShapeError("gauge_transform: gauge at point " + std::to_string(m) + " must be n x n");
    }
    if (!is_unitary(u[m], tolerance)) {
      throw DomainError("gauge_transform: gauge at point " + std::to_string(m) + " is not unitary");
    }
    pts[m].vectors = recombine(pts[m].vectors, u[m]);
  }
  return build_frame(std::move(pts));
}

QMatrix s_of_point(const QuadFrame& f, std::size_t m) {
  const QuadPoint& p = f.point(m);
  QMatrix s(f.dim(), f.dim());
  accumulate_upper(s, p.vectors, 1.0);
  mirror_upper(s);
  return s;
}

void require_same_layout(const QuadFrame& f, const QuadFrame& g, const char* op) {
  if (f.dim() != g.dim() || f.rank() != g.rank() || f.size() != g.size()) {
    throw ShapeError(std::string(op) + ": frames differ in dimension, rank or point count");
  }
  for (std::size_t m = 0; m < f.size(); ++m) {
    const QuadPoint& a = f.points()[m];
    const QuadPoint& b = g.points()[m];
    const double qs = std::max(1.0, a.q.norm());
    if ((a.q - b.q).norm() > 1e-12 * qs || std::fabs(a.w - b.w) > 1e-12 * a.w) {
      throw ShapeError(std::string(op) + ": point " + std::to_string(m) +
                       " differs in location or weight");
    }
  }
}

GaugeRecovery gauge_recover(const QuadFrame& f, const QuadFrame& g, double tolerance) {
  require_same_layout(f, g, "gauge_recover");
  GaugeRecovery r;
  for (std::size_t m = 0; m < f.size(); ++m) {
    r.s_mismatch = std::max(r.s_mismatch, max_abs_diff(s_of_point(f, m), s_of_point(g, m)));
  }
  if (r.s_mismatch > tolerance) {
    r.status = GaugeStatus::kNotGaugeRelated;
    std::ostringstream os;
    os << "S(q) differs by " << r.s_mismatch << " (tolerance " << tolerance << ")";
    r.detail = os.str();
    return r;
  }
  const QMatrix id = QMatrix::identity(f.rank());
  for (std::size_t m = 0; m < f.size(); ++m) {
    const auto& eta = f.points()[m].vectors;
    const auto& xi = g.points()[m].vectors;
    QMatrix u = basis_change(eta, xi);
    r.unitarity_defect = std::max(r.unitarity_defect, max_abs_diff(adjoint(u) * u, id));
    r.unitarity_defect = std::max(r.unitarity_defect, max_abs_diff(u * adjoint(u), id));
    const auto rebuilt = recombine(eta, u);
    for (std::size_t i = 0; i < xi.size(); ++i) {
      r.reconstruction = std::max(r.reconstruction, max_abs_diff(rebuilt[i], xi[i]));
    }
    r.u.push_back(std::move(u));
  }
  if (r.unitarity_defect > tolerance || r.reconstruction > tolerance) {
    r.status = GaugeStatus::kInconsistent;
    std::ostringstream os;
    os << "recovered gauge is not unitary (defect " << r.unitarity_defect << ", reconstruction "
       << r.reconstruction << ")";
    r.detail = os.str();
    r.u.clear();
    return r;
  }
  r.status = GaugeStatus::kRelated;
  return r;
}

DiscreteFrameBounds discrete_frame_bounds(std::span<const QVector> vectors) {
  if (vectors.empty()) throw ShapeError("discrete_frame_bounds: no vectors");
  const std::size_t d = vectors.front().dim();
  QMatrix acc(d, d);
  for (const auto& v : vectors) {
    if (v.dim() != d) throw ShapeError("discrete_frame_bounds: vectors differ in dimension");
  }
  accumulate_upper(acc, vectors, 1.0);
  mirror_upper(acc);
  const RayleighBounds b = rayleigh_bounds(acc);
  DiscreteFrameBounds out;
  out.lower = b.m;
  out.upper = b.M;
  out.is_frame = b.m > tol::kRank * b.M;
  return out;
}

QuadFrame random_frame(std::size_t d, std::size_t n, std::size_t points, std::uint64_t seed) {
  if (n < 1 || n > d) throw PreconditionError("random_frame: need 1 <= n <= d");
  if (points < 1) throw PreconditionError("random_frame: need at least one point");
  if (n * points < d) throw PreconditionError("random_frame: need n * points >= d");
  Rng rng(seed);
  std::uniform_real_distribution<double> weight(0.5, 1.5);
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::vector<QuadPoint> pts;
    pts.reserve(points);
    bool failed = false;
    for (std::size_t m = 0; m < points && !failed; ++m) {
      QuadPoint p;
      p.q = random_quaternion(rng);
      p.w = weight(rng);
      int tries = 0;
      for (; tries < 8; ++tries) {
        p.vectors.clear();
        for (std::size_t i = 0; i < n; ++i) p.vectors.push_back(random_vector(d, rng));
        if (gram_condition(gram(p.vectors)) > tol::kIndependence) break;
      }
      if (tries == 8) failed = true;
      pts.push_back(std::move(p));
    }
    if (failed) continue;
    try {
      return build_frame(std::move(pts));
    } catch (const NotAFrameError&) {
      continue;
    }
  }
  throw NumericError("random_frame: generation failed after 8 attempts");
}

Gauge random_gauge(std::size_t points, std::size_t n, std::uint64_t seed) {
  Gauge u;
  u.reserve(points);
  for (std::size_t m = 0; m < points; ++m) u.push_back(random_unitary(n, seed + 7919 * (m + 1)));
  return u;
}

}  // namespace qframe
