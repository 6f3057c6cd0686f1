#include "qframe/equivalence.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

#include "qframe/errors.hpp"
#include "qframe/random.hpp"

namespace qframe {

namespace {

using cd = std::complex<double>;

constexpr std::uint64_t kCombinationSeed = 0x51c0ffee;
// Singular values below this fraction of the largest span the intertwiner space.
constexpr double kNullSpace = 1e-8;

std::vector<std::vector<QVector>> mapped_families(const QuadFrame& f, const QMatrix& map) {
  std::vector<std::vector<QVector>> out;
  out.reserve(f.size());
  for (const auto& p : f.points()) {
    std::vector<QVector> fam;
    fam.reserve(p.vectors.size());
    for (const auto& v : p.vectors) fam.push_back(map * v);
    out.push_back(std::move(fam));
  }
  return out;
}

QMatrix family_operator(const std::vector<QVector>& fam) {
  const std::size_t d = fam.front().dim();
  QMatrix s(d, d);
  for (const auto& v : fam) s += outer(v, v);
  return s;
}

Quaternion unit_component(int e) {
  switch (e) {
    case 0: return kOne;
    case 1: return kI;
    case 2: return kJ;
    default: return kK;
  }
}

double component(const Quaternion& q, int e) {
  switch (e) {
    case 0: return q.w;
    case 1: return q.x;
    case 2: return q.y;
    default: return q.z;
  }
}

// Real matrix of V -> sqrt(w) (V S_eta - S_xi V) stacked over all points.
// Unknown index (a, b, e) -> 4 (a d + b) + e.
Eigen::MatrixXd intertwiner_system(const std::vector<QMatrix>& s_eta,
                                   const std::vector<QMatrix>& s_xi,
                                   const std::vector<double>& weights, std::size_t d) {
  const auto unknowns = static_cast<Eigen::Index>(4 * d * d);
  Eigen::MatrixXd sys(unknowns * static_cast<Eigen::Index>(s_eta.size()), unknowns);
  for (std::size_t m = 0; m < s_eta.size(); ++m) {
    const double sw = std::sqrt(weights[m]);
    const Eigen::Index row0 = static_cast<Eigen::Index>(m) * unknowns;
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b)
        for (int e = 0; e < 4; ++e) {
          // V = E_ab * unit: (V S)_ij = delta_ia unit S_bj, (S' V)_ij = S'_ia unit delta_bj.
          const Quaternion unit = unit_component(e);
          QMatrix image(d, d);
          for (std::size_t j = 0; j < d; ++j) image(a, j) += unit * s_eta[m](b, j);
          for (std::size_t i = 0; i < d; ++i) image(i, b) -= s_xi[m](i, a) * unit;
          const auto col = static_cast<Eigen::Index>(4 * (a * d + b) + static_cast<std::size_t>(e));
          for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
              for (int c = 0; c < 4; ++c) {
                sys(row0 + static_cast<Eigen::Index>(4 * (i * d + j) + static_cast<std::size_t>(c)),
                    col) = sw * component(image(i, j), c);
              }
        }
  }
  return sys;
}

QMatrix unpack(const Eigen::VectorXd& x, std::size_t d) {
  QMatrix v(d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      const auto k = static_cast<Eigen::Index>(4 * (a * d + b));
      v(a, b) = Quaternion{x(k), x(k + 1), x(k + 2), x(k + 3)};
    }
  return v;
}

QMatrix polar_unitary(const QMatrix& v) {
  Eigen::JacobiSVD<ComplexMatrix> svd(chi_embed(v), Eigen::ComputeFullU | Eigen::ComputeFullV);
  return chi_extract(svd.matrixU() * svd.matrixV().adjoint(), 1e-8);
}

// Unitary V with V S_eta(q) V^dagger = S_xi(q) at every point, when one exists.
QMatrix find_intertwiner(const std::vector<QMatrix>& s_eta, const std::vector<QMatrix>& s_xi,
                         const std::vector<double>& weights, std::size_t d, double& commutant) {
  const Eigen::MatrixXd sys = intertwiner_system(s_eta, s_xi, weights, d);
  const Eigen::Index k = sys.cols();
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(sys);
  const Eigen::MatrixXd r = qr.matrixQR().topRows(k).triangularView<Eigen::Upper>();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(r, Eigen::ComputeFullV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double smax = sv(0);

  Rng rng(kCombinationSeed);
  std::normal_distribution<double> normal;
  Eigen::VectorXd x = Eigen::VectorXd::Zero(k);
  Eigen::Index used = 0;
  for (Eigen::Index c = k - 1; c >= 0; --c) {
    if (used > 0 && sv(c) > kNullSpace * smax) break;
    x += normal(rng) * svd.matrixV().col(c);
    ++used;
  }
  commutant = smax > 0.0 ? sv(k - 1) / smax : 0.0;

  QMatrix v = polar_unitary(unpack(x, d));
  Quaternion trace;
  for (std::size_t i = 0; i < d; ++i) trace += v(i, i);
  if (trace.w < 0.0) v *= -1.0;
  return v;
}

double max_vector_scale(const QuadFrame& f) {
  double s = 0.0;
  for (const auto& p : f.points())
    for (const auto& v : p.vectors) s = std::max(s, v.max_abs());
  return std::max(1.0, s);
}

}  // namespace

KernelEquivalence kernel_equivalent(const QuadFrame& f, const QuadFrame& g, double tolerance) {
  require_same_layout(f, g, "kernel_equivalent");
  const std::size_t d = f.dim();
  KernelEquivalence out;

  std::vector<QVector> stacked;
  for (const auto* frame : {&f, &g})
    for (const auto& p : frame->points())
      stacked.insert(stacked.end(), p.vectors.begin(), p.vectors.end());
  out.span_total = discrete_frame_bounds(stacked).is_frame;
  if (!out.span_total) {
    out.detail = "stacked frame vectors do not span the space; equivalence is indeterminate";
    return out;
  }

  const auto eta_hat = mapped_families(f, inv_sqrt_psd(f.frame_op()));
  const auto xi_hat = mapped_families(g, inv_sqrt_psd(g.frame_op()));
  std::vector<QMatrix> s_eta;
  std::vector<QMatrix> s_xi;
  std::vector<double> weights;
  double whitened_gap = 0.0;
  for (std::size_t m = 0; m < f.size(); ++m) {
    s_eta.push_back(family_operator(eta_hat[m]));
    s_xi.push_back(family_operator(xi_hat[m]));
    weights.push_back(f.points()[m].w);
    whitened_gap = std::max(whitened_gap, max_abs_diff(s_eta.back(), s_xi.back()));
  }

  QMatrix v = QMatrix::identity(d);
  if (whitened_gap > tolerance) {
    v = find_intertwiner(s_eta, s_xi, weights, d, out.residuals.commutant);
  }

  Gauge u;
  u.reserve(f.size());
  for (std::size_t m = 0; m < f.size(); ++m) {
    std::vector<QVector> rotated;
    for (const auto& x : eta_hat[m]) rotated.push_back(v * x);
    u.push_back(basis_change(rotated, xi_hat[m]));
  }

  // T = sum_p w_p sum_k |(sum_i eta~_p^i conj(u_ki))><eta_p^k| A^-1, and T' with the roles exchanged.
  QMatrix t_sum(d, d);
  QMatrix t_inv_sum(d, d);
  for (std::size_t m = 0; m < f.size(); ++m) {
    const auto& eta = f.points()[m].vectors;
    const auto& xi = g.points()[m].vectors;
    const double w = f.points()[m].w;
    const auto back = recombine(xi, adjoint(u[m]));
    const auto forth = recombine(eta, u[m]);
    for (std::size_t k = 0; k < eta.size(); ++k) {
      t_sum += w * outer(back[k], eta[k]);
      t_inv_sum += w * outer(forth[k], xi[k]);
    }
  }
  const QMatrix t = t_sum * inverse(f.frame_op());
  const QMatrix t_inv = t_inv_sum * inverse(g.frame_op());

  EquivalenceResiduals& res = out.residuals;
  const double xi_scale = max_vector_scale(g);
  for (std::size_t m = 0; m < f.size(); ++m) {
    const QMatrix& um = u[m];
    res.unitarity =
        std::max(res.unitarity, max_abs_diff(adjoint(um) * um, QMatrix::identity(um.rows())));
    std::vector<QVector> mapped;
    for (const auto& x : f.points()[m].vectors) mapped.push_back(t * x);
    const auto rebuilt = recombine(mapped, um);
    for (std::size_t i = 0; i < rebuilt.size(); ++i) {
      res.reconstruction = std::max(
          res.reconstruction, max_abs_diff(rebuilt[i], g.points()[m].vectors[i]) / xi_scale);
    }
  }
  res.operator_law = max_abs_diff(g.frame_op(), t * f.frame_op() * adjoint(t)) /
                     std::max(1.0, g.frame_op().max_abs());
  res.inverse = max_abs_diff(t_inv * t, QMatrix::identity(d));

  const bool relations = res.unitarity <= tolerance && res.reconstruction <= tolerance &&
                         res.operator_law <= tolerance && res.inverse <= tolerance;
  if (relations) {
    const FrameKernel kf = kernel(f);
    const FrameKernel kg = kernel(g);
    res.kernel_gauge = kernel_gauge_residual(kf, kg, u);
  }
  out.equivalent = relations && res.kernel_gauge <= tolerance;

  std::ostringstream os;
  if (out.equivalent) {
    os << "kernel equivalent";
  } else {
    os << "no witness: unitarity " << res.unitarity << ", reconstruction " << res.reconstruction
       << ", operator law " << res.operator_law << ", inverse " << res.inverse;
  }
  out.detail = os.str();
  out.t = t;
  out.t_inverse = t_inv;
  out.u = std::move(u);
  return out;
}

UnitaryEquivalence unitary_equivalent(const QuadFrame& f, const QuadFrame& g, double tolerance) {
  require_same_layout(f, g, "unitary_equivalent");
  const std::size_t d = f.dim();
  QMatrix cross(d, d);
  for (std::size_t m = 0; m < f.size(); ++m) {
    const double w = f.points()[m].w;
    for (std::size_t i = 0; i < f.rank(); ++i)
      cross += w * outer(g.points()[m].vectors[i], f.points()[m].vectors[i]);
  }
  const QMatrix u = cross * inverse(f.frame_op());

  UnitaryEquivalence out;
  out.unitarity_defect = std::max(max_abs_diff(adjoint(u) * u, QMatrix::identity(d)),
                                  max_abs_diff(u * adjoint(u), QMatrix::identity(d)));
  for (std::size_t m = 0; m < f.size(); ++m)
    for (std::size_t i = 0; i < f.rank(); ++i) {
      out.reconstruction =
          std::max(out.reconstruction,
                   max_abs_diff(u * f.points()[m].vectors[i], g.points()[m].vectors[i]));
    }
  const double scale = max_vector_scale(g);
  out.equivalent = out.unitarity_defect <= tolerance && out.reconstruction <= tolerance * scale;
  std::ostringstream os;
  os << (out.equivalent ? "unitarily equivalent" : "not unitarily equivalent")
     << " (unitarity defect " << out.unitarity_defect << ", reconstruction " << out.reconstruction
     << ")";
  out.detail = os.str();
  out.u = u;
  return out;
}

DualRelation dual_related(const QuadFrame& f, const QuadFrame& g, double tolerance) {
  require_same_layout(f, g, "dual_related");
  const QMatrix a_inv = inverse(f.frame_op());
  DualRelation out;
  const double scale = max_vector_scale(g);
  for (std::size_t m = 0; m < f.size(); ++m)
    for (std::size_t i = 0; i < f.rank(); ++i) {
      out.residual = std::max(
          out.residual, max_abs_diff(a_inv * f.points()[m].vectors[i], g.points()[m].vectors[i]));
    }
  out.residual /= scale;
  out.related = out.residual <= tolerance;
  return out;
}

}  // namespace qframe
