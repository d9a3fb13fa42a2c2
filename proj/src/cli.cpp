#include "projconst/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include "projconst/bounds.hpp"
#include "projconst/errors.hpp"
#include "projconst/json_io.hpp"
#include "projconst/line_system.hpp"
#include "projconst/minproj.hpp"
#include "projconst/norms.hpp"
#include "projconst/parallel.hpp"
#include "projconst/phi.hpp"

namespace projconst {

namespace {

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct Report {
  ordered_json body;     // command echo, config, results
  double wall_ms = 0.0;  // text output only, so json/csv stay byte-stable

  void reference(const std::string& name, double value, double expected) {
    if (!body.contains("references")) body["references"] = ordered_json::array();
    body["references"].push_back({{"name", name},
                                  {"value", value},
                                  {"expected", expected},
                                  {"deviation", std::abs(value - expected)}});
  }
};

void flatten(const ordered_json& j, const std::string& prefix,
             std::vector<std::pair<std::string, ordered_json>>& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_array() && !j.empty() && j[0].is_object()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out.emplace_back(prefix, j);
  }
}

void emit(const Report& rep, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << rep.body.dump(2) << "\n";
    return;
  }
  std::vector<std::pair<std::string, ordered_json>> rows;
  flatten(rep.body, "", rows);
  if (format == "csv") {
    out << "key,value\n";
    for (const auto& [k, v] : rows) {
      out << k << ",";
      if (v.is_number_float())
        out << fmt17(v.get<double>());
      else
        out << v.dump();
      out << "\n";
    }
    return;
  }
  for (const auto& [k, v] : rows) {
    out << k << " = ";
    if (v.is_number_float())
      out << fmt17(v.get<double>());
    else
      out << v.dump();
    out << "\n";
  }
  out << "wall_time_ms = " << rep.wall_ms << "\n";
}

std::vector<cx> parse_vector_arg(const std::string& text, Field field, std::size_t n) {
  std::vector<double> parts;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      parts.push_back(std::stod(tok));
    } catch (...) {
      throw SchemaError("cannot parse vector component \"" + tok + "\"");
    }
  }
  std::vector<cx> x;
  if (field == Field::Real) {
    for (double p : parts) x.emplace_back(p, 0.0);
  } else {
    if (parts.size() % 2 != 0)
      throw SchemaError("complex vectors are given as re,im interleaved pairs");
    for (std::size_t i = 0; i < parts.size(); i += 2) x.emplace_back(parts[i], parts[i + 1]);
  }
  if (x.size() != n)
    throw SchemaError("expected a vector of dimension " + std::to_string(n) + ", got " +
                      std::to_string(x.size()));
  return x;
}

LineSystem system_for_space(TableSpace sp) {
  return construct_known_system(space_dim(sp), space_field(sp));
}

ordered_json projection_json(const ProjectionResult& res, const std::string& method,
                             std::optional<double> lower_bound) {
  ordered_json j;
  j["value"] = res.norm;
  j["method"] = method;
  j["idempotency_residual"] = res.idempotency_residual;
  j["range_residual"] = res.range_residual;
  if (lower_bound)
    j["certificate"] = {{"lower_bound", *lower_bound}};
  else
    j["certificate"] = {{"lower_bound", nullptr}};
  return j;
}

struct CliOptions {
  std::size_t n = 2, N = 3, k = 4;
  std::string field = "real";
  std::uint64_t seed = 0;
  int restarts = 32;
  int iters = 0;  // 0: module default
  std::size_t grid = 10000;
  std::string space, input, output, format = "json", method = "auto", xarg;
  double tol = 1e-9;
  bool hessian = false;
};

int dispatch(const std::string& cmd, const CliOptions& o, std::ostream& out);

}  // namespace

namespace {

int dispatch(const std::string& cmd, const CliOptions& o, std::ostream& out) {
  const auto t0 = std::chrono::steady_clock::now();
  const Field field = field_from_name(o.field);
  Report rep;
  rep.body["command"] = cmd;
  ordered_json cfg;
  cfg["seed"] = o.seed;

  if (cmd == "bounds") {
    cfg["n"] = o.n;
    cfg["field"] = o.field;
    BoundsSummary b = bounds_summary(o.n, field);
    rep.body["config"] = cfg;
    rep.body["results"] = {{"G", b.g},
                           {"kadec_snobar", b.kadec_snobar},
                           {"asymptotic", b.asymptotic},
                           {"equality_chain", b.equality_chain}};
    struct Known {
      std::size_t n;
      Field f;
      double v;
    };
    const Known known[] = {{2, Field::Real, 4.0 / 3.0},
                           {3, Field::Real, (1.0 + std::sqrt(5.0)) / 2.0},
                           {7, Field::Real, 2.5},
                           {23, Field::Real, 14.0 / 3.0},
                           {2, Field::Complex, (1.0 + std::sqrt(3.0)) / 2.0},
                           {3, Field::Complex, 5.0 / 3.0}};
    for (const auto& kn : known)
      if (kn.n == o.n && kn.f == field) rep.reference("G", b.g, kn.v);
  } else if (cmd == "construct") {
    cfg["n"] = o.n;
    cfg["field"] = o.field;
    rep.body["config"] = cfg;
    LineSystem s = construct_known_system(o.n, field);
    EquiangularCertificate cert = verify_equiangular(s, o.tol);
    rep.body["results"] = {{"N", s.count()},
                           {"common_angle", cert.common_angle},
                           {"max_deviation", cert.max_deviation},
                           {"gerzon_saturated", cert.gerzon_saturated},
                           {"forced_angle_matched", cert.forced_angle_matched}};
    rep.body["system"] = line_system_to_json(s);
    if (!o.output.empty()) save_json_file(o.output, line_system_to_json(s));
    rep.reference("common_angle", cert.common_angle, extremal_parameters(o.n, field).alpha);
  } else if (cmd == "verify") {
    cfg["input"] = o.input;
    cfg["tol"] = o.tol;
    rep.body["config"] = cfg;
    LineSystem s = line_system_from_json(load_json_file(o.input));
    EquiangularCertificate cert = verify_equiangular(s, o.tol);
    ordered_json res = {{"n", s.n},
                        {"N", s.count()},
                        {"common_angle", cert.common_angle},
                        {"max_deviation", cert.max_deviation},
                        {"gerzon_saturated", cert.gerzon_saturated},
                        {"forced_angle_matched", cert.forced_angle_matched},
                        {"rank_one_independent", rank_one_independence(s)}};
    if (s.weights) res["tight_frame_residual"] = tight_frame_residual(s);
    rep.body["results"] = res;
  } else if (cmd == "minproj") {
    cfg["space"] = o.space;
    cfg["input"] = o.input;
    cfg["method"] = o.method;
    cfg["restarts"] = o.restarts;
    rep.body["config"] = cfg;

    SubspaceBasis basis;
    std::optional<double> lower;
    std::string method = o.method;
    if (!o.space.empty()) {
      TableSpace sp = parse_space_id(o.space);
      LineSystem s = system_for_space(sp);  // throws UnsupportedError for R23
      basis = embedding_basis(s);
      if (method == "auto") method = basis.field == Field::Real ? "lp-exact" : "descent";
      lower = trace_duality_lower_bound(make_witness(sign_gram_witness(s), basis), basis);
    } else if (!o.input.empty()) {
      basis = basis_from_json(load_json_file(o.input));
      if (method == "auto") method = basis.field == Field::Real ? "lp-exact" : "descent";
    } else {
      throw SchemaError("minproj: provide --space or --input");
    }
    DescentOptions dopts;
    dopts.restarts = o.restarts;
    if (o.iters > 0) dopts.iters = o.iters;
    dopts.seed = o.seed;
    dopts.threads = thread_cap();
    MinProjMethod m = MinProjMethod::Descent;
    if (method == "lp-exact")
      m = MinProjMethod::LpExact;
    else if (method != "descent")
      throw SchemaError("minproj: unknown method \"" + method + "\"");
    ProjectionResult res = minimal_projection(basis, m, dopts);
    rep.body["results"] = projection_json(res, method, lower);
    if (!o.space.empty()) {
      TableSpace sp = parse_space_id(o.space);
      rep.reference("value", res.norm, space_lambda_expected(sp));
    }
  } else if (cmd == "phi") {
    cfg["n"] = o.n;
    cfg["N"] = o.N;
    cfg["field"] = o.field;
    cfg["restarts"] = o.restarts;
    cfg["iters"] = o.iters;
    rep.body["config"] = cfg;
    PhiProblem prob{field, o.n, o.N};
    PhiConfig pc;
    pc.restarts = o.restarts;
    if (o.iters > 0) pc.ascent_iters = o.iters;
    pc.seed = o.seed;
    pc.threads = thread_cap();
    PhiState st = maximize_phi(prob, pc);
    KktDiagnostics kkt = kkt_diagnostics(st);
    double spread = 0.0;
    const double root_n = std::sqrt(double(st.n));
    for (std::size_t s = 0; s < st.N; ++s)
      if (st.lambda[s] * st.lambda[s] > 1e-10)
        spread = std::max(spread, std::abs(kkt.square_function[s] - root_n));
    rep.body["results"] = {{"objective", st.objective},
                           {"orthonormality_residual", st.orthonormality_residual},
                           {"mass_residual", st.mass_residual},
                           {"alpha_eigs", kkt.alpha_eigs},
                           {"beta", kkt.beta},
                           {"eigen_residual", kkt.eigen_residual},
                           {"square_function_spread", spread},
                           {"connectivity", kkt.connectivity}};
    if (o.hessian && field == Field::Real) {
      HessianCheck hc = projected_hessian_check(st);
      rep.body["results"]["max_tangent_eigenvalue"] = hc.max_tangent_eigenvalue;
    }
    rep.body["state"] = phi_state_to_json(st);
    if (!o.output.empty()) save_json_file(o.output, phi_state_to_json(st));
  } else if (cmd == "norm") {
    cfg["space"] = o.space;
    cfg["input"] = o.input;
    cfg["x"] = o.xarg;
    rep.body["config"] = cfg;
    double value = 0.0;
    if (!o.space.empty()) {
      TableSpace sp = parse_space_id(o.space);
      auto x = parse_vector_arg(o.xarg, space_field(sp), space_dim(sp));
      value = table_norm(sp, x);
    } else if (!o.input.empty()) {
      NormedSpaceSpec spec = spec_from_json(load_json_file(o.input));
      auto x = parse_vector_arg(o.xarg, spec.field, spec.n);
      value = norm_from_system(spec, x);
    } else {
      throw SchemaError("norm: provide --space or --input");
    }
    rep.body["results"] = {{"value", value}};
  } else if (cmd == "moments") {
    cfg["n"] = o.n;
    cfg["k"] = o.k;
    cfg["field"] = o.field;
    rep.body["config"] = cfg;
    rep.body["results"] = {{"value", sphere_moment(o.n, o.k, field)}};
  } else if (cmd == "gamma") {
    cfg["n"] = o.n;
    cfg["field"] = o.field;
    cfg["grid"] = o.grid;
    rep.body["config"] = cfg;
    GammaCoefficients g = gamma_tools(o.n, field);
    double min_margin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i <= o.grid; ++i) {
      const double u = -1.0 + 2.0 * double(i) / double(o.grid);
      min_margin = std::min(min_margin, gamma_majorization_margin(g, u));
    }
    const double touch = std::max(std::abs(gamma_majorization_margin(g, g.alpha)),
                                  std::abs(gamma_majorization_margin(g, 1.0)));
    const double ident = gamma_identity_value(o.n, field);
    rep.body["results"] = {{"gamma0", g.gamma0},
                           {"gamma2", g.gamma2},
                           {"gamma4", g.gamma4},
                           {"alpha", g.alpha},
                           {"beta_moment", g.beta_moment},
                           {"identity_value", ident},
                           {"majorization_min_margin", min_margin},
                           {"touch_deviation", touch}};
    rep.reference("identity_value", ident, bounds_summary(o.n, field).g);
  } else if (cmd == "r4") {
    cfg["grid"] = o.grid;
    rep.body["config"] = cfg;
    R4ScanResult scan = r4_example_scan(o.grid);
    double max_resid = 0.0;
    for (const auto& pt : scan.curve)
      max_resid = std::max(max_resid, tight_frame_residual(r4_system(pt[0])));
    rep.body["results"] = {{"alpha_star", scan.alpha_star},
                           {"value", scan.value},
                           {"upper_bound", (2.0 + 3.0 * std::sqrt(6.0)) / 5.0},
                           {"max_tight_frame_residual", max_resid},
                           {"curve_points", scan.curve.size()}};
    rep.reference("alpha_star", scan.alpha_star, 1.4592);
    rep.reference("value", scan.value, 1.8494);
    if (!o.output.empty()) {
      ordered_json curve = ordered_json::array();
      for (const auto& pt : scan.curve) curve.push_back({pt[0], pt[1]});
      save_json_file(o.output, curve);
    }
  } else if (cmd == "table") {
    cfg["seed"] = o.seed;
    rep.body["config"] = cfg;
    ordered_json rows = ordered_json::array();
    const TableSpace spaces[] = {TableSpace::R2Hexagon, TableSpace::R3Dodecahedron, TableSpace::R7,
                                 TableSpace::R23,       TableSpace::C2,             TableSpace::C3};
    for (TableSpace sp : spaces) {
      ordered_json row;
      row["space"] = space_id_name(sp);
      row["expected"] = space_lambda_expected(sp);
      if (sp == TableSpace::R23) {
        row["computed"] = "out of scope";
        row["method"] = "none";
      } else {
        LineSystem s = system_for_space(sp);
        if (space_field(sp) == Field::Real) {
          ProjectionResult res = minimal_projection(embedding_basis(s), MinProjMethod::LpExact);
          row["computed"] = res.norm;
          row["method"] = "lp-exact";
        } else {
          ProjectionResult res = orthogonal_projection(s);
          row["computed"] = res.norm;
          row["method"] = "orthogonal-row-sum";
        }
        row["deviation"] = std::abs(row["computed"].get<double>() - row["expected"].get<double>());
      }
      rows.push_back(std::move(row));
    }
    rep.body["results"] = {{"rows", rows}};
  } else {
    throw SchemaError("unknown command: " + cmd);
  }

  rep.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  emit(rep, o.format, out);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"projconst: projection constants of finite-dimensional normed spaces"};
  app.require_subcommand(1);

  CliOptions o;
  std::string cmd;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "random seed recorded in the report");
    sub->add_option("--format", o.format, "json | csv | text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--tol", o.tol, "tolerance override");
    sub->callback([&cmd, sub]() { cmd = sub->get_name(); });
  };

  auto* bounds = app.add_subcommand("bounds", "upper-bound summary for a dimension");
  bounds->add_option("--n", o.n)->required();
  bounds->add_option("--field", o.field)->check(CLI::IsMember({"real", "complex"}));
  add_common(bounds);

  auto* construct = app.add_subcommand("construct", "build a known equiangular system");
  construct->add_option("--n", o.n)->required();
  construct->add_option("--field", o.field)->check(CLI::IsMember({"real", "complex"}));
  construct->add_option("--output", o.output, "write the system JSON here");
  add_common(construct);

  auto* verify = app.add_subcommand("verify", "certify a line system from a JSON file");
  verify->add_option("--input", o.input)->required();
  add_common(verify);

  auto* minproj = app.add_subcommand("minproj", "relative projection constant of a subspace");
  minproj->add_option("--space", o.space, "named space id");
  minproj->add_option("--input", o.input, "SubspaceBasis JSON file");
  minproj->add_option("--method", o.method)->check(CLI::IsMember({"auto", "lp-exact", "descent"}));
  minproj->add_option("--restarts", o.restarts);
  minproj->add_option("--iters", o.iters);
  add_common(minproj);

  auto* phi = app.add_subcommand("phi", "maximize the weighted absolute-Gram functional");
  phi->add_option("--n", o.n)->required();
  phi->add_option("--N", o.N)->required();
  phi->add_option("--field", o.field)->check(CLI::IsMember({"real", "complex"}));
  phi->add_option("--restarts", o.restarts);
  phi->add_option("--iters", o.iters);
  phi->add_flag("--hessian", o.hessian, "include the second-order check (real field)");
  phi->add_option("--output", o.output, "write the state JSON here");
  add_common(phi);

  auto* norm = app.add_subcommand("norm", "evaluate a table or system norm");
  norm->add_option("--space", o.space);
  norm->add_option("--input", o.input, "NormedSpaceSpec JSON file");
  norm->add_option("x", o.xarg, "vector components, comma separated (re,im interleaved when complex)")
      ->required();
  add_common(norm);

  auto* moments = app.add_subcommand("moments", "sphere moment integral, closed form");
  moments->add_option("--n", o.n)->required();
  moments->add_option("--k", o.k)->required();
  moments->add_option("--field", o.field)->check(CLI::IsMember({"real", "complex"}));
  add_common(moments);

  auto* gamma = app.add_subcommand("gamma", "majorization coefficients and identity");
  gamma->add_option("--n", o.n)->required();
  gamma->add_option("--field", o.field)->check(CLI::IsMember({"real", "complex"}));
  gamma->add_option("--grid", o.grid);
  add_common(gamma);

  auto* r4 = app.add_subcommand("r4", "scan the ten-line family in R^4");
  r4->add_option("--grid", o.grid);
  r4->add_option("--output", o.output, "write the scan curve here");
  add_common(r4);

  auto* table = app.add_subcommand("table", "extremal spaces with computed constants");
  add_common(table);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    return dispatch(cmd, o, out);
  } catch (const SchemaError& e) {
    err << "schema error: " << e.what() << "\n";
    return 2;
  } catch (const SolverError& e) {
    err << "solver error: " << e.what() << "\n";
    return 3;
  } catch (const UnsupportedError& e) {
    err << "unsupported: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace projconst
