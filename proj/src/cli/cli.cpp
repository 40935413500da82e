#include "funcbody/cli.hpp"

#include "funcbody/errors.hpp"
#include "funcbody/io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <random>
#include <string>
#include <vector>

namespace funcbody {

namespace {

enum class LogLevel { Quiet, Info, Debug };

LogLevel log_level() {
  const char* env = std::getenv("FUNCBODY_LOG");
  if (!env) return LogLevel::Info;
  const std::string v(env);
  if (v == "quiet") return LogLevel::Quiet;
  if (v == "debug") return LogLevel::Debug;
  return LogLevel::Info;
}

std::string short_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

struct Options {
  std::string in, zeta, poly, op, kind, config, out, emit_mesh, emit_plot;
  std::vector<std::string> fns;
  double tol = 0.0;
  double check_tol = 0.0;
  int nodes = 0;
  std::uint64_t seed = 0x5EED;
  bool seed_set = false;
};

class Job {
 public:
  Job(const Options& o, std::ostream& out, std::ostream& err)
      : o_(o), out_(out), err_(err), level_(log_level()) {}

  void info(const std::string& msg) const {
    if (level_ != LogLevel::Quiet) err_ << "funcbody: " << msg << "\n";
  }
  void debug(const std::string& msg) const {
    if (level_ == LogLevel::Debug) err_ << "funcbody: " << msg << "\n";
  }

  QuadratureConfig config() const {
    QuadratureConfig cfg;
    if (!o_.config.empty()) cfg = io::parse_config(io::load_file(o_.config), cfg);
    if (o_.tol > 0.0) cfg.tolerance = o_.tol;
    if (o_.nodes > 0) cfg.nodes = o_.nodes;
    if (o_.seed_set) cfg.seed = o_.seed;
    cfg.validate();
    debug("quadrature nodes=" + std::to_string(cfg.nodes) +
          " tolerance=" + short_number(cfg.tolerance));
    return cfg;
  }

  WeightFunction zeta() const { return io::parse_weight(io::load_file(require(o_.zeta, "--zeta"))); }
  Polytope poly(const std::string& path, const char* flag) const {
    return io::parse_polytope(io::load_file(require(path, flag)));
  }
  PiecewiseAffineConvex fn(std::size_t i) const {
    if (o_.fns.size() <= i) throw ParseError("missing --fn");
    return io::parse_function(io::load_file(o_.fns[i]));
  }

  void emit(const io::Json& j) const {
    const std::string text = io::dump(j);
    if (o_.out.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(o_.out);
    if (!f) throw ParseError("cannot write " + o_.out);
    f << text;
    info("wrote " + o_.out);
  }

  void plot(const SupportBody& body) const {
    if (o_.emit_plot.empty()) return;
    std::ofstream f(o_.emit_plot);
    if (!f) throw ParseError("cannot write " + o_.emit_plot);
    io::write_support_csv(body, f);
    info("wrote " + o_.emit_plot);
  }

  void mesh(const Polytope* p) const {
    if (o_.emit_mesh.empty()) return;
    if (!p || p->ambient_dim() != 3) {
      info("mesh export skipped: output is not a 3D polytope");
      return;
    }
    std::ofstream f(o_.emit_mesh);
    if (!f) throw ParseError("cannot write " + o_.emit_mesh);
    write_off(*p, f);
    info("wrote " + o_.emit_mesh);
  }

  std::vector<Vector> directions(const QuadratureConfig& cfg, int n) const {
    return resolve_directions(cfg, n);
  }

  double check_tol(double fallback) const { return o_.check_tol > 0.0 ? o_.check_tol : fallback; }

  const Options& options() const { return o_; }

 private:
  static const std::string& require(const std::string& v, const char* flag) {
    if (v.empty()) throw ParseError(std::string("missing ") + flag);
    return v;
  }

  const Options& o_;
  std::ostream& out_;
  std::ostream& err_;
  LogLevel level_;
};

int run_body(const Job& job, const std::string& command) {
  const QuadratureConfig cfg = job.config();
  const WeightFunction zeta = job.zeta();
  const PiecewiseAffineConvex u = job.fn(0);
  if (command == "lyz-measure") {
    const LyzMeasure m = lyz_measure(zeta, u, cfg);
    job.info("LYZ measure with " + std::to_string(m.measure.atoms().size()) + " atoms");
    job.emit(io::to_json(m));
    return kExitOk;
  }
  BodyResult r;
  if (command == "projection-body") {
    r = functional_projection_body(zeta, u, cfg);
  } else if (command == "level-set-body") {
    r = level_set_body(zeta, u, cfg);
  } else {
    r = difference_level_set_body(zeta, u, cfg);
  }
  job.plot(r.body);
  job.mesh(nullptr);
  job.emit(io::to_json(r));
  return kExitOk;
}

int run_classical(const Job& job) {
  const QuadratureConfig cfg = job.config();
  const Polytope p = job.poly(job.options().in, "--in");
  const std::vector<Vector> dirs = job.directions(cfg, p.ambient_dim());
  const std::string& op = job.options().op;
  auto support_of = [&](const Polytope& body, const std::string& name) {
    std::vector<double> values;
    for (const auto& z : dirs) values.push_back(support(body, z));
    return SupportBody(dirs, std::move(values), name);
  };
  io::Json out;
  if (op == "projection-body" || op == "Pi") {
    const Polytope body = projection_body(p);
    const SupportBody s = support_of(body, "projection body");
    out = io::Json{{"support", io::to_json(s)}, {"error_estimate", 0.0}, {"polytope", io::to_json(body)}};
    job.plot(s);
    job.mesh(&body);
  } else if (op == "difference-body" || op == "D") {
    const Polytope body = difference_body(p);
    const SupportBody s = support_of(body, "difference body");
    out = io::Json{{"support", io::to_json(s)}, {"error_estimate", 0.0}, {"polytope", io::to_json(body)}};
    job.plot(s);
    job.mesh(&body);
  } else if (op == "moment-body" || op == "M") {
    const SupportBody s = moment_body(p, dirs);
    out = io::Json{{"support", io::to_json(s)}, {"error_estimate", 0.0}};
    job.plot(s);
    job.mesh(nullptr);
  } else if (op == "moment-vector" || op == "m") {
    out = io::Json{{"moment_vector", io::to_json(moment_vector(p))}, {"error_estimate", 0.0}};
  } else if (op == "sam" || op == "SAM") {
    out = io::to_json(surface_area_measure(p));
    out["error_estimate"] = 0.0;
  } else {
    throw ParseError("unknown classical operator \"" + op + "\"");
  }
  job.emit(out);
  return kExitOk;
}

OperatorHandle select_operator(const std::string& op, const WeightFunction& zeta,
                               const QuadratureConfig& cfg) {
  if (op.empty() || op == "projection-body" || op == "Pi") return projection_operator(zeta, cfg);
  if (op == "level-set-body") return level_set_operator(zeta, cfg);
  if (op == "difference-body" || op == "D") return difference_operator(zeta, cfg);
  if (op == "lyz-measure") return lyz_cosine_operator(zeta, cfg);
  throw ParseError("unknown operator \"" + op + "\"");
}

Report merge(std::string name, const std::vector<Report>& parts) {
  Report r;
  r.check = std::move(name);
  r.pass = true;
  for (const auto& p : parts) {
    r.residuals.insert(r.residuals.end(), p.residuals.begin(), p.residuals.end());
    r.tolerance = std::max(r.tolerance, p.tolerance);
    r.pass = r.pass && p.pass;
    r.witness[p.check + ".max_residual"] = p.max_residual;
    for (const auto& [k, v] : p.witness) r.witness[p.check + "." + k] = v;
    if (!p.note.empty()) r.note += (r.note.empty() ? "" : "; ") + p.note;
    r.max_residual = std::max(r.max_residual, p.max_residual);
  }
  return r;
}

int run_check(const Job& job) {
  const QuadratureConfig cfg = job.config();
  const std::string& kind = job.options().kind;
  Report report;
  if (kind == "radial") {
    const WeightFunction zeta = job.zeta();
    const Polytope k = job.poly(job.options().poly, "--poly");
    const RadialIdentity r = radial_identity_check(zeta, k, cfg);
    report.check = "radial";
    report.tolerance = job.check_tol(1e-6);
    report.residuals = {std::abs(r.lhs - r.rhs)};
    report.max_residual = report.residuals[0];
    report.pass = report.max_residual <= report.tolerance;
    report.witness = {{"lhs", r.lhs}, {"rhs", r.rhs}, {"error_estimate", r.error_estimate}};
  } else {
    const WeightFunction zeta = job.zeta();
    const OperatorHandle z = select_operator(job.options().op, zeta, cfg);
    if (kind == "valuation") {
      const LatticePair pair = pointwise_min_certified(job.fn(0), job.fn(1));
      if (!pair.certified) throw InvalidArgument("u ^ v is not convex on the probe levels");
      report = check_valuation(z, pair, job.directions(cfg, pair.u.dim()),
                               job.check_tol(4.0 * cfg.tolerance));
    } else if (kind == "equivariance") {
      const PiecewiseAffineConvex u = job.fn(0);
      const std::vector<Vector> dirs = job.directions(cfg, u.dim());
      const double tol = job.check_tol(2.0 * cfg.tolerance);
      std::vector<Report> parts{
          check_equivariance(z, u, random_special_linear_maps(u.dim(), 10, cfg.seed), dirs, tol)};
      if (z.translation_invariant) {
        std::mt19937_64 rng(cfg.seed);
        std::uniform_real_distribution<double> coord(-1.0, 1.0);
        std::vector<Vector> shifts;
        for (int k = 0; k < 10; ++k) {
          Vector x(u.dim());
          for (int i = 0; i < u.dim(); ++i) x[i] = coord(rng);
          shifts.push_back(x);
        }
        parts.push_back(check_translation_invariance(z, u, shifts, dirs, tol));
      }
      report = merge("equivariance/" + z.name, parts);
    } else if (kind == "growth") {
      const Polytope k = job.poly(job.options().poly, "--poly");
      const double h = 1.0 / 64.0;
      std::vector<double> grid;
      const double lo = zeta.first_breakpoint() - 0.25, hi = zeta.support_end() + 0.25;
      for (int i = 0; lo + i * h <= hi + 1e-12; ++i) grid.push_back(lo + i * h);
      const GrowthProfile g = extract_cone_growth(z, k, grid);
      const bool covariant = z.variance == Variance::Covariant;
      const double tol = job.check_tol(covariant ? 1e-4 : 1e-3);
      report = merge("growth/" + z.name,
                     {check_growth_derivative_law(g, zeta, k.ambient_dim(), z.variance, tol, 1.0 / 16),
                      check_growth_limit(g, zeta, 1e-8)});
      report.witness["cross_deviation"] = g.cross_deviation;
    } else if (kind == "indicator") {
      const Polytope p = job.poly(job.options().poly, "--poly");
      report = check_indicator_law(z, p, {0.0, 0.25, 0.5, 0.9}, job.directions(cfg, p.ambient_dim()),
                                   job.check_tol(cfg.tolerance));
    } else {
      throw ParseError("unknown check kind \"" + kind + "\"");
    }
  }
  job.info(report.check + (report.pass ? " passed" : " FAILED") +
           " (max residual " + short_number(report.max_residual) + ")");
  job.emit(io::to_json(report));
  return report.pass ? kExitOk : kExitCheckFailed;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--tol", o.tol, "quadrature tolerance");
  sub->add_option("--nodes", o.nodes, "Gauss-Legendre nodes per cell");
  sub->add_option_function<std::uint64_t>(
      "--seed", [&o](const std::uint64_t& s) { o.seed = s, o.seed_set = true; },
      "seed of the pseudorandom direction set");
  sub->add_option("--config", o.config, "JSON file with quadrature overrides");
  sub->add_option("--out", o.out, "output path (default stdout)");
  sub->add_option("--emit-plot", o.emit_plot, "CSV of direction angles and support values");
  sub->add_option("--emit-mesh", o.emit_mesh, "OFF mesh of a 3D polytopal output");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Functional projection, level set and difference bodies", "funcbody"};
  app.require_subcommand(1);
  std::vector<CLI::App*> bodies;
  for (const char* name : {"lyz-measure", "projection-body", "level-set-body", "difference-body"}) {
    CLI::App* sub = app.add_subcommand(name, std::string("compute the ") + name);
    sub->add_option("--zeta", o.zeta, "weight function JSON")->required();
    sub->add_option("--fn", o.fns, "convex function JSON")->required();
    add_common(sub, o);
    bodies.push_back(sub);
  }
  CLI::App* classical = app.add_subcommand("classical", "classical operators on a polytope");
  classical->add_option("--op", o.op, "projection-body|difference-body|moment-body|moment-vector|sam")
      ->required();
  classical->add_option("--in", o.in, "polytope JSON")->required();
  add_common(classical, o);
  CLI::App* check = app.add_subcommand("check", "run a verification check");
  check->add_option("--kind", o.kind, "valuation|equivariance|growth|indicator|radial")->required();
  check->add_option("--op", o.op, "operator under test (default projection-body)");
  check->add_option("--zeta", o.zeta, "weight function JSON");
  check->add_option("--fn", o.fns, "convex function JSON (twice for valuation)");
  check->add_option("--poly", o.poly, "polytope JSON");
  check->add_option("--check-tol", o.check_tol, "pass threshold override");
  add_common(check, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "funcbody: " << e.what() << "\n";
    return kExitBadInput;
  }

  const Job job(o, out, err);
  try {
    for (CLI::App* sub : bodies) {
      if (sub->parsed()) return run_body(job, sub->get_name());
    }
    if (classical->parsed()) return run_classical(job);
    return run_check(job);
  } catch (const ParseError& e) {
    err << "funcbody: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const InvalidArgument& e) {
    err << "funcbody: invalid input: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const QuadratureError& e) {
    err << "funcbody: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const Error& e) {
    err << "funcbody: numeric failure: " << e.what() << " (error estimate unavailable)\n";
    return kExitNumeric;
  } catch (const nlohmann::json::exception& e) {
    err << "funcbody: malformed payload: " << e.what() << "\n";
    return kExitBadInput;
  }
}

}  // namespace funcbody
