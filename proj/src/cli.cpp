#include "qframe/cli.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "qframe/equivalence.hpp"
#include "qframe/errors.hpp"
#include "qframe/report.hpp"
#include "qframe/spectrum.hpp"
#include "qframe/verify.hpp"

namespace qframe {

namespace {

struct Options {
  std::vector<std::string> tol;
  std::string frame;
  std::string frame_b;
  std::string output;
  std::string op;
  std::string gauge;
  std::string matrix;
  std::string mode = "kernel";
  bool unitary = false;
  std::size_t dim = 0;
  std::size_t rank = 0;
  std::size_t points = 0;
  std::uint64_t seed = 0;
};

struct Context {
  Options opt;
  ToleranceSet tol;
  Report report;
  std::ostream& out;
  std::ostream& err;
};

QuadFrame read_frame(Context& c, const std::string& role, const std::string& path) {
  const std::string bytes = read_file(path);
  c.report.add_input(role, path, bytes);
  return frame_from_json(parse_json(bytes));
}

// Writes the artifact to -o when given, otherwise embeds it in the report.
void emit(Context& c, const Json& artifact) {
  if (c.opt.output.empty()) {
    c.report.output = artifact;
    return;
  }
  const std::string text = canonical_dump(artifact);
  write_file(c.opt.output, text);
  c.report.output = {{"path", c.opt.output}, {"fnv1a64", fnv1a64_hex(text)}};
}

Json bounds_metrics(const QuadFrame& f) {
  const auto [m, big_m] = f.bounds();
  return {{"m", m}, {"M", big_m}, {"width", width(f)}};
}

double scaled(double diff, double scale) { return diff / std::max(1.0, scale); }

int finish(Context& c, int code) {
  c.out << c.report.render();
  return code;
}

int run_analyze(Context& c) {
  const QuadFrame f = read_frame(c, "frame", c.opt.frame);
  Json m = bounds_metrics(f);
  m["d"] = f.dim();
  m["n"] = f.rank();
  m["points"] = f.size();
  m["tight"] = is_tight(f, c.tol["tight"]);
  m["self_dual"] = is_self_dual(f, c.tol["self_dual"]);
  m["spectrum"] = spectrum_to_json(s_spectrum(f.frame_op()));
  c.report.metrics = std::move(m);
  return finish(c, kExitOk);
}

int run_dual(Context& c) {
  const QuadFrame f = read_frame(c, "frame", c.opt.frame);
  const QuadFrame g = dual_frame(f);
  const QMatrix a_inv = inverse(f.frame_op());
  Json m = bounds_metrics(g);
  m["operator_residual"] = scaled(max_abs_diff(g.frame_op(), a_inv), a_inv.max_abs());
  c.report.metrics = std::move(m);
  emit(c, frame_to_json(g));
  return finish(c, kExitOk);
}

int run_tight(Context& c) {
  const QuadFrame f = read_frame(c, "frame", c.opt.frame);
  const QuadFrame g = tight_frame(f);
  Json m = bounds_metrics(g);
  m["operator_residual"] = max_abs_diff(g.frame_op(), QMatrix::identity(f.dim()));
  m["self_dual"] = is_self_dual(g, c.tol["self_dual"]);
  c.report.metrics = std::move(m);
  emit(c, frame_to_json(g));
  return finish(c, kExitOk);
}

int run_transform(Context& c) {
  const QuadFrame f = read_frame(c, "frame", c.opt.frame);
  const std::string bytes = read_file(c.opt.op);
  c.report.add_input("operator", c.opt.op, bytes);
  const QMatrix t = matrix_from_json(parse_json(bytes));
  const QuadFrame g = c.opt.unitary ? unitary_transform(f, t, c.tol["unitary"]) : t_transform(f, t);
  const QMatrix expected = t * f.frame_op() * adjoint(t);
  Json m = bounds_metrics(g);
  m["operator_law_residual"] = scaled(max_abs_diff(g.frame_op(), expected), expected.max_abs());
  m["unitary"] = c.opt.unitary;
  c.report.metrics = std::move(m);
  emit(c, frame_to_json(g));
  return finish(c, kExitOk);
}

int run_gauge(Context& c) {
  const QuadFrame f = read_frame(c, "frame", c.opt.frame);
  const std::string bytes = read_file(c.opt.gauge);
  c.report.add_input("gauge", c.opt.gauge, bytes);
  const Gauge u = gauge_from_json(parse_json(bytes));
  const QuadFrame g = gauge_transform(f, u, c.tol["unitary"]);
  double s_diff = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k)
    s_diff = std::max(s_diff, max_abs_diff(s_of_point(f, k), s_of_point(g, k)));
  Json m = bounds_metrics(g);
  m["point_operator_residual"] = s_diff;
  m["frame_operator_residual"] = max_abs_diff(g.frame_op(), f.frame_op());
  c.report.metrics = std::move(m);
  emit(c, frame_to_json(g));
  return finish(c, kExitOk);
}

int run_kernel(Context& c) {
  const QuadFrame f = read_frame(c, "frame", c.opt.frame);
  const FrameKernel k = kernel(f, c.tol["kernel"]);
  const KernelResiduals& r = k.residuals();
  c.report.metrics = {{"points", k.points()},
                      {"n", k.rank()},
                      {"min_diagonal", r.min_diagonal},
                      {"diagonal_imag", r.diagonal_imag},
                      {"hermitian", r.hermitian},
                      {"reproducing", r.reproducing}};
  emit(c, kernel_to_json(k));
  return finish(c, kExitOk);
}

int run_check_equiv(Context& c) {
  const QuadFrame f = read_frame(c, "frame_a", c.opt.frame);
  const QuadFrame g = read_frame(c, "frame_b", c.opt.frame_b);
  c.report.metrics["mode"] = c.opt.mode;
  bool verdict = false;
  if (c.opt.mode == "kernel") {
    const KernelEquivalence eq = kernel_equivalent(f, g, c.tol["equiv"]);
    const EquivalenceResiduals& r = eq.residuals;
    verdict = eq.equivalent;
    c.report.metrics.update({{"span_total", eq.span_total},
                             {"reconstruction", r.reconstruction},
                             {"operator_law", r.operator_law},
                             {"inverse", r.inverse},
                             {"unitarity", r.unitarity},
                             {"kernel_gauge", r.kernel_gauge},
                             {"detail", eq.detail}});
    if (verdict) {
      c.report.witness = {{"T", to_json(*eq.t)},
                          {"T_inverse", to_json(*eq.t_inverse)},
                          {"u", gauge_to_json(eq.u)["gauge"]}};
    }
  } else if (c.opt.mode == "gauge") {
    const GaugeRecovery rec = gauge_recover(f, g, c.tol["gauge"]);
    if (rec.status == GaugeStatus::kInconsistent) {
      throw NumericError("check-equiv: " + rec.detail);
    }
    verdict = rec.related();
    c.report.metrics.update({{"point_operator_mismatch", rec.s_mismatch},
                             {"unitarity", rec.unitarity_defect},
                             {"reconstruction", rec.reconstruction},
                             {"detail", rec.detail}});
    if (verdict) c.report.witness = {{"u", gauge_to_json(rec.u)["gauge"]}};
  } else if (c.opt.mode == "unitary") {
    const UnitaryEquivalence eq = unitary_equivalent(f, g, c.tol["equiv"]);
    verdict = eq.equivalent;
    c.report.metrics.update({{"unitarity", eq.unitarity_defect},
                             {"reconstruction", eq.reconstruction},
                             {"detail", eq.detail}});
    if (verdict) c.report.witness = {{"U", to_json(*eq.u)}};
  } else {
    const DualRelation rel = dual_related(f, g, c.tol["dual"]);
    verdict = rel.related;
    c.report.metrics["residual"] = rel.residual;
  }
  c.report.verdict = verdict;
  return finish(c, verdict ? kExitOk : kExitFalse);
}

int run_spectrum(Context& c) {
  const std::string bytes = read_file(c.opt.matrix);
  c.report.add_input("matrix", c.opt.matrix, bytes);
  const QMatrix a = matrix_from_json(parse_json(bytes));
  const SSpectrum s = s_spectrum(a);
  Json m = spectrum_to_json(s);
  m["op_norm"] = op_norm(a);
  m["self_adjoint"] = is_self_adjoint(a, tol::kStructure * std::max(1.0, a.max_abs()));
  c.report.metrics = std::move(m);
  return finish(c, kExitOk);
}

int run_random(Context& c) {
  const QuadFrame f = random_frame(c.opt.dim, c.opt.rank, c.opt.points, c.opt.seed);
  c.report.inputs = {{"dim", c.opt.dim}, {"rank", c.opt.rank}, {"points", c.opt.points},
                     {"seed", c.opt.seed}};
  c.report.metrics = bounds_metrics(f);
  emit(c, frame_to_json(f));
  return finish(c, kExitOk);
}

int run_verify(Context& c, bool seeded) {
  VerifyResult result;
  try {
    QuadFrame f = seeded ? random_frame(c.opt.dim, c.opt.rank, c.opt.points, c.opt.seed)
                         : read_frame(c, "frame", c.opt.frame);
    if (seeded) {
      c.report.inputs = {{"dim", c.opt.dim}, {"rank", c.opt.rank}, {"points", c.opt.points},
                         {"seed", c.opt.seed}};
    }
    result = verify_suite(f, c.tol, c.opt.seed);
  } catch (const IndependenceError& e) {
    result = construction_failure("point_independence", e.what());
  } catch (const NotAFrameError& e) {
    result = construction_failure("frame_operator_invertible", e.what());
  }
  c.report.metrics = result.to_json();
  c.report.verdict = result.passed();
  if (!result.passed()) {
    for (const auto& name : result.failures()) c.err << "verify: check failed: " << name << '\n';
  }
  return finish(c, result.passed() ? kExitOk : kExitFalse);
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quaternionic frames: analysis, transforms, kernels and equivalence checks",
               "qframe"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--tol", opt.tol, "Tolerance override name=value (repeatable)");

  auto* analyze = app.add_subcommand("analyze", "Frame bounds, width, tightness and S-spectrum");
  analyze->add_option("frame", opt.frame, "Frame file")->required();

  auto* dual = app.add_subcommand("dual", "Write the dual frame");
  dual->add_option("frame", opt.frame, "Frame file")->required();
  dual->add_option("-o,--output", opt.output, "Output frame file");

  auto* tight = app.add_subcommand("tight", "Write the canonical tight frame");
  tight->add_option("frame", opt.frame, "Frame file")->required();
  tight->add_option("-o,--output", opt.output, "Output frame file");

  auto* transform = app.add_subcommand("transform", "Apply an invertible operator to every vector");
  transform->add_option("frame", opt.frame, "Frame file")->required();
  transform->add_option("--op", opt.op, "Matrix file")->required();
  transform->add_flag("--unitary", opt.unitary, "Require the operator to be unitary");
  transform->add_option("-o,--output", opt.output, "Output frame file");

  auto* gauge = app.add_subcommand("gauge", "Mix each point's vectors by a unitary matrix");
  gauge->add_option("frame", opt.frame, "Frame file")->required();
  gauge->add_option("--gauge", opt.gauge, "Gauge file")->required();
  gauge->add_option("-o,--output", opt.output, "Output frame file");

  auto* kern = app.add_subcommand("kernel", "Export the frame kernel");
  kern->add_option("frame", opt.frame, "Frame file")->required();
  kern->add_option("-o,--output", opt.output, "Output kernel file");

  auto* equiv = app.add_subcommand("check-equiv", "Decide a relation between two frames");
  equiv->add_option("frame_a", opt.frame, "First frame file")->required();
  equiv->add_option("frame_b", opt.frame_b, "Second frame file")->required();
  equiv->add_option("--mode", opt.mode, "Relation to test")
      ->check(CLI::IsMember({"kernel", "gauge", "unitary", "dual"}));

  auto* spectrum = app.add_subcommand("spectrum", "S-spectrum of a square matrix");
  spectrum->add_option("matrix", opt.matrix, "Matrix file")->required();

  auto* random = app.add_subcommand("random", "Generate a seeded random frame");
  random->add_option("--dim", opt.dim, "Dimension d")->required();
  random->add_option("--rank", opt.rank, "Rank n")->required();
  random->add_option("--points", opt.points, "Number of points")->required();
  random->add_option("--seed", opt.seed, "Seed");
  random->add_option("-o,--output", opt.output, "Output frame file");

  auto* verify = app.add_subcommand("verify", "Run the invariant battery on a frame");
  verify->add_option("frame", opt.frame, "Frame file");
  auto* seed_opt = verify->add_option("--seed", opt.seed, "Seed for a random frame and for draws");
  opt.dim = 3;
  opt.rank = 2;
  opt.points = 10;
  verify->add_option("--dim", opt.dim, "Dimension of the random frame");
  verify->add_option("--rank", opt.rank, "Rank of the random frame");
  verify->add_option("--points", opt.points, "Points of the random frame");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "qframe: " << e.what() << '\n';
    return kExitUsage;
  }

  ToleranceSet tolerances;
  try {
    tolerances = ToleranceSet::from_environment();
    for (const auto& a : opt.tol) tolerances.assign(a);
  } catch (const ValidationError& e) {
    err << "qframe: " << e.what() << '\n';
    return kExitUsage;
  }

  const bool verify_seeded = verify->parsed() && opt.frame.empty();
  if (verify->parsed() && opt.frame.empty() && seed_opt->count() == 0) {
    err << "qframe: verify needs a frame file or --seed\n";
    return kExitUsage;
  }

  Context c{opt, tolerances, Report{}, out, err};
  const CLI::App* sub = app.get_subcommands().front();
  c.report.command = sub->get_name();
  c.report.tolerances = tolerances.to_json();

  const std::vector<std::pair<const CLI::App*, std::function<int(Context&)>>> handlers = {
      {analyze, run_analyze},
      {dual, run_dual},
      {tight, run_tight},
      {transform, run_transform},
      {gauge, run_gauge},
      {kern, run_kernel},
      {equiv, run_check_equiv},
      {spectrum, run_spectrum},
      {random, run_random},
      {verify, [verify_seeded](Context& ctx) { return run_verify(ctx, verify_seeded); }},
  };
  try {
    for (const auto& [app_ptr, handler] : handlers)
      if (app_ptr == sub) return handler(c);
  } catch (const Error& e) {
    err << "qframe " << c.report.command << ": " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::exception& e) {
    err << "qframe " << c.report.command << ": " << e.what() << '\n';
    return kExitNumeric;
  }
  err << "qframe: unknown subcommand\n";
  return kExitUsage;
}

}  // namespace qframe
