#include "qframe/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "qframe/equivalence.hpp"
#include "qframe/errors.hpp"
#include "qframe/random.hpp"

namespace qframe {

namespace {

constexpr double kUnchecked = std::numeric_limits<double>::infinity();

class Battery {
 public:
  explicit Battery(const ToleranceSet& tol) : tol_{tol} {}

  void add(const std::string& name, double residual, const std::string& tol_name,
           std::string detail = {}) {
    const double t = tol_[tol_name];
    result_.checks.push_back({name, residual, t, residual <= t, std::move(detail)});
  }

  void fail(const std::string& name, const std::string& detail) {
    result_.checks.push_back({name, kUnchecked, 0.0, false, detail});
  }

  // Runs `body`; a library error marks `name` as failed instead of aborting the battery.
  template <typename F>
  void guarded(const std::string& name, F body) {
    try {
      body();
    } catch (const Error& e) {
      fail(name, e.what());
    }
  }

  VerifyResult take() { return std::move(result_); }

 private:
  const ToleranceSet& tol_;
  VerifyResult result_;
};

double relative(double diff, double scale) { return diff / std::max(1.0, scale); }

double max_vector_diff(const QuadFrame& a, const QuadFrame& b) {
  double r = 0.0;
  for (std::size_t m = 0; m < a.size(); ++m)
    for (std::size_t i = 0; i < a.rank(); ++i)
      r = std::max(r, max_abs_diff(a.points()[m].vectors[i], b.points()[m].vectors[i]));
  return r;
}

QMatrix well_conditioned(std::size_t d, Rng& rng) {
  return QMatrix::identity(d) * 1.5 + random_matrix(d, d, rng) * (0.5 / std::sqrt(double(d)));
}

}  // namespace

bool VerifyResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::vector<std::string> VerifyResult::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (!c.passed) out.push_back(c.name);
  return out;
}

Json VerifyResult::to_json() const {
  Json j = Json::object();
  for (const auto& c : checks) {
    Json entry = {{"residual", c.residual}, {"tolerance", c.tolerance}, {"passed", c.passed}};
    if (!c.detail.empty()) entry["detail"] = c.detail;
    j[c.name] = std::move(entry);
  }
  return j;
}

VerifyResult construction_failure(const std::string& name, const std::string& detail) {
  VerifyResult r;
  r.checks.push_back({name, kUnchecked, 0.0, false, detail});
  return r;
}

VerifyResult verify_suite(const QuadFrame& f, const ToleranceSet& tol, std::uint64_t seed) {
  Battery b(tol);
  Rng rng(seed);
  const std::size_t d = f.dim();
  const std::size_t n = f.rank();
  const QMatrix& a = f.frame_op();
  const auto [m, big_m] = f.bounds();

  b.guarded("frame_inequality", [&] {
    const FrameBoundsReport r = frame_bounds_check(f, 1000, seed);
    const double excess = std::max({0.0, m - r.min_observed, r.max_observed - big_m});
    std::ostringstream os;
    os << "observed [" << r.min_observed << ", " << r.max_observed << "] against [" << m << ", "
       << big_m << "]";
    b.add("frame_inequality", excess / big_m, "bounds", os.str());
  });

  b.guarded("analysis_factorization", [&] {
    const QMatrix w = analysis_matrix(f);
    b.add("analysis_factorization", relative(max_abs_diff(adjoint(w) * w, a), a.max_abs()),
          "operator");
  });

  b.guarded("dual_operator", [&] {
    const QuadFrame dual = dual_frame(f);
    const QMatrix a_inv = inverse(a);
    b.add("dual_operator", relative(max_abs_diff(dual.frame_op(), a_inv), a_inv.max_abs()),
          "operator");
    const auto [dm, dM] = dual.bounds();
    b.add("dual_bounds", std::max(std::abs(dm * big_m - 1.0), std::abs(dM * m - 1.0)), "relative");
    b.add("dual_width", std::abs(width(dual) - width(f)), "width");
    b.add("dual_involution", max_vector_diff(dual_frame(dual), f), "involution");
  });

  b.guarded("tight_operator", [&] {
    const QuadFrame t = tight_frame(f);
    b.add("tight_operator", max_abs_diff(t.frame_op(), QMatrix::identity(d)), "tight");
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
      const QVector phi = random_unit_vector(d, rng);
      worst = std::max(worst, std::abs(frame_sum(t, phi) - 1.0));
    }
    b.add("tight_parseval", worst, "tight");
  });

  const Gauge u = random_gauge(f.size(), n, seed ^ 0x9e3779b97f4a7c15ULL);
  b.guarded("gauge_invariance", [&] {
    const QuadFrame g = gauge_transform(f, u);
    double s_diff = 0.0;
    for (std::size_t k = 0; k < f.size(); ++k)
      s_diff = std::max(s_diff, max_abs_diff(s_of_point(f, k), s_of_point(g, k)));
    b.add("gauge_invariance",
          relative(std::max(s_diff, max_abs_diff(g.frame_op(), a)), a.max_abs()), "invariance");
    const GaugeRecovery rec = gauge_recover(f, g, tol["gauge"]);
    if (rec.related()) {
      b.add("gauge_recovery", std::max(rec.reconstruction, rec.unitarity_defect), "gauge");
    } else {
      b.fail("gauge_recovery", rec.detail);
    }
  });

  b.guarded("kernel_properties", [&] {
    const FrameKernel k = kernel(f, kUnchecked);
    const KernelResiduals& r = k.residuals();
    const double scale = k.full().max_abs();
    std::ostringstream os;
    os << "min diagonal " << r.min_diagonal;
    if (r.min_diagonal > 0.0) {
      b.add("kernel_diagonal", relative(r.diagonal_imag, scale), "kernel", os.str());
    } else {
      b.fail("kernel_diagonal", os.str());
    }
    b.add("kernel_hermitian", relative(r.hermitian, scale), "kernel");
    b.add("kernel_reproducing", relative(r.reproducing, scale), "kernel");

    double iso = 0.0;
    for (int t = 0; t < 20; ++t) {
      const QVector phi = random_vector(d, rng);
      const SampleField field = analysis_apply(f, phi);
      const Quaternion ip = rkhs_inner(f, field, field);
      iso = std::max(iso, (ip - Quaternion{phi.norm2()}).norm() / phi.norm2());
    }
    b.add("isometry", iso, "isometry");

    const QVector phi = random_vector(d, rng);
    const SampleField field = analysis_apply(f, phi);
    double eval = 0.0;
    for (std::size_t p = 0; p < f.size(); ++p)
      for (std::size_t i = 0; i < n; ++i)
        eval = std::max(eval, (evaluate(k, field, p, i, kUnchecked) - field(p, i)).norm());
    b.add("evaluation", relative(eval, field.max_abs()), "kernel");

    b.add("dual_kernel", kernel_distance(k, kernel(dual_frame(f), kUnchecked)), "kernel");

    const QuadFrame g = gauge_transform(f, u);
    b.add("gauge_kernel", kernel_gauge_residual(k, kernel(g, kUnchecked), u), "kernel");
    const SampleField psi = analysis_apply(g, phi);
    double field_diff = 0.0;
    for (std::size_t p = 0; p < f.size(); ++p)
      field_diff = std::max(field_diff, max_abs_diff(psi.at(p), adjoint(u[p]) * field.at(p)));
    b.add("gauge_field", relative(field_diff, field.max_abs()), "isometry");

    const QMatrix big_u = random_unitary(d, seed + 17);
    b.add("unitary_kernel", kernel_distance(k, kernel(unitary_transform(f, big_u), kUnchecked)),
          "kernel");

    const QuadFrame orbit = tight_orbit_member(f, big_u, u);
    b.add("tight_orbit_operator", max_abs_diff(orbit.frame_op(), QMatrix::identity(d)), "tight");
    b.add("tight_orbit_kernel", kernel_gauge_residual(k, kernel(orbit, kUnchecked), u), "kernel");
  });

  b.guarded("equivalence_roundtrip", [&] {
    const QMatrix t = well_conditioned(d, rng);
    const QuadFrame g = t_transform(gauge_transform(f, u), t);
    const KernelEquivalence eq = kernel_equivalent(f, g, tol["equiv"]);
    if (eq.equivalent) {
      b.add("equivalence_roundtrip", eq.residuals.inverse, "equiv", eq.detail);
    } else {
      b.fail("equivalence_roundtrip", eq.detail);
    }

    std::vector<QMatrix> bundle;
    for (std::size_t p = 0; p < f.size(); ++p) bundle.push_back(t * point_projector(f, p));
    const QuadFrame h = bundle_transform(f, bundle, u);
    b.add("bundle_equivalence",
          kernel_gauge_residual(kernel(f, kUnchecked), kernel(h, kUnchecked), u), "kernel");
  });

  return b.take();
}

}  // namespace qframe
