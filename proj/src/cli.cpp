#include "eulerspline/cli.hpp"

#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "eulerspline/descent.hpp"
#include "eulerspline/eulerian.hpp"
#include "eulerspline/geometry.hpp"
#include "eulerspline/splinecore.hpp"
#include "eulerspline/verify.hpp"

namespace eulerspline::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string format = "csv";
  std::uint64_t budget = EnumerationLimits{}.indexed_budget;

  std::uint64_t d = 1;
  std::uint64_t n = 1;
  std::uint64_t j = 0;
  std::uint64_t k = 0;
  std::uint64_t scale = 1;
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 0;
  std::uint64_t d_max = 6;
  std::uint64_t n_max = 3;
  std::string x;
  std::string a;
  std::string b;
  std::string lower;
  std::string upper;
  std::string route;
  bool all = false;

  [[nodiscard]] bool json_output() const { return format == "json"; }
  [[nodiscard]] EnumerationLimits limits() const {
    EnumerationLimits l;
    l.indexed_budget = budget;
    return l;
  }
};

std::string quote_csv(const std::string& field) {
  if (field.find_first_of(",\"") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

json strings(const std::vector<Integer>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

int report(std::ostream& out, const Options& opt, const std::vector<VerifyReport>& reports) {
  std::uint64_t run_total = 0;
  std::uint64_t failed_total = 0;
  for (const auto& r : reports) {
    run_total += r.cases_run;
    failed_total += r.cases_failed;
  }
  if (opt.json_output()) {
    json suites = json::array();
    for (const auto& r : reports) suites.push_back(to_json(r));
    emit(out, {{"suites", suites}, {"cases_run", run_total}, {"cases_failed", failed_total}});
  } else {
    for (const auto& r : reports) out << r.suite << ',' << r.cases_run << ',' << r.cases_failed << '\n';
    for (const auto& r : reports) {
      for (const auto& f : r.failures) {
        out << "failure," << r.suite << ',' << quote_csv(f.case_id) << ',' << f.expected << ',' << f.actual << '\n';
      }
    }
  }
  return failed_total == 0 ? kExitOk : kExitVerificationFailed;
}

int bspline_eval(std::ostream& out, const Options& opt) {
  const Rational x = Rational::parse(opt.x);
  const SplineOrder order(opt.d);
  const std::string route = opt.route.empty() ? "explicit" : opt.route;
  const Rational value = route == "recurrence" ? bspline_eval_recurrence(order, x) : bspline_eval_explicit(order, x);
  if (opt.json_output()) {
    emit(out, {{"d", opt.d}, {"x", x.to_string()}, {"route", route}, {"value", value.to_string()}});
  } else {
    out << x << ',' << value << '\n';
  }
  return kExitOk;
}

int bspline_piece_cmd(std::ostream& out, const Options& opt) {
  const PiecePoly piece = bspline_piece(SplineOrder(opt.d), opt.j);
  if (opt.json_output()) {
    emit(out, {{"d", opt.d}, {"j", opt.j}, {"coeffs", to_json(piece.poly)}});
  } else {
    for (std::size_t i = 0; i < piece.poly.coeffs().size(); ++i) out << i << ',' << piece.poly.coeffs()[i] << '\n';
  }
  return kExitOk;
}

int bspline_integrate_cmd(std::ostream& out, const Options& opt) {
  const Rational a = Rational::parse(opt.a);
  const Rational b = Rational::parse(opt.b);
  const Rational value = bspline_integrate(SplineOrder(opt.d), a, b);
  if (opt.json_output()) {
    emit(out, {{"d", opt.d}, {"a", a.to_string()}, {"b", b.to_string()}, {"value", value.to_string()}});
  } else {
    out << a << ',' << b << ',' << value << '\n';
  }
  return kExitOk;
}

int eulerian_row_cmd(std::ostream& out, const Options& opt) {
  const std::string route = opt.route.empty() ? "spline" : opt.route;
  const EulerianRow row = route == "brute" ? eulerian_bruteforce(opt.d, opt.limits()) : eulerian_row_spline(opt.d);
  if (opt.json_output()) {
    emit(out, {{"d", opt.d}, {"route", route}, {"values", strings(row.values)}});
  } else {
    for (std::size_t k = 0; k < row.values.size(); ++k) out << k + 1 << ',' << row.values[k] << '\n';
  }
  return kExitOk;
}

int eulerian_refined_cmd(std::ostream& out, const Options& opt) {
  const std::string route = opt.route.empty() ? "explicit" : opt.route;
  RefinedTriangle t;
  if (route == "brute") {
    t = refined_bruteforce(opt.d, opt.limits());
  } else if (route == "lambda") {
    t = refined_triangle_lambda(opt.d);
  } else {
    t = refined_triangle_explicit(opt.d);
  }
  if (opt.json_output()) {
    json rows = json::array();
    for (std::uint64_t k = 0; k <= t.d; ++k) {
      json row = json::array();
      for (std::uint64_t j = 0; j <= t.d; ++j) row.push_back(to_string(t.at(k, j)));
      rows.push_back(row);
    }
    emit(out, {{"d", opt.d}, {"route", route}, {"values", rows}});
  } else {
    for (std::uint64_t k = 0; k <= t.d; ++k) {
      for (std::uint64_t j = 0; j <= t.d; ++j) out << k << ',' << j << ',' << t.at(k, j) << '\n';
    }
  }
  return kExitOk;
}

int descent_table_cmd(std::ostream& out, const Options& opt) {
  const std::string route = opt.route.empty() ? "spline" : opt.route;
  const DescentTable table = descent_table(opt.d, opt.n, parse_descent_route(route), opt.limits());
  Integer sum;
  for (const auto& v : table.values()) sum += v;
  const Integer population = factorial(opt.d) * int_pow(Rational(Integer(opt.n)), opt.d).num();
  bool log_concave = true;
  for (const auto& w : log_concavity_verdict(table)) log_concave = log_concave && w.sign() >= 0;
  const bool conservation = sum == population;
  const bool first_entry = table.at(0) == 1;
  if (opt.json_output()) {
    emit(out, {{"d", opt.d},
               {"n", opt.n},
               {"route", route},
               {"values", strings(table.values())},
               {"checks", {{"conservation", conservation}, {"first_entry_one", first_entry}, {"log_concave", log_concave}}}});
  } else {
    for (std::size_t k = 0; k < table.values().size(); ++k) out << k << ',' << table.values()[k] << '\n';
  }
  return conservation && first_entry && log_concave ? kExitOk : kExitVerificationFailed;
}

int descent_poly_cmd(std::ostream& out, const Options& opt) {
  const DescentTable table = descent_table(opt.d, opt.n, DescentRoute::spline);
  if (opt.json_output()) {
    emit(out, {{"d", opt.d}, {"n", opt.n}, {"coeffs", to_json(table.polynomial())}});
  } else {
    const auto& c = table.polynomial().coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) out << (i == 0 ? "" : ",") << c[i];
    out << '\n';
  }
  return kExitOk;
}

int geometry_mc_cmd(std::ostream& out, const Options& opt) {
  const SliceSpec spec{opt.d, opt.scale, Rational::parse(opt.lower), Rational::parse(opt.upper)};
  const VolumeEstimate v = mc_volume(spec, opt.samples, opt.seed);
  if (opt.json_output()) {
    emit(out, {{"d", opt.d},
               {"scale", opt.scale},
               {"lower", spec.lower.to_string()},
               {"upper", spec.upper.to_string()},
               {"estimate", v.estimate.to_string()},
               {"standard_error", v.standard_error.to_string()},
               {"samples", v.samples},
               {"seed", v.seed}});
  } else {
    out << v.estimate << ',' << v.standard_error << ',' << v.samples << ',' << v.seed << '\n';
  }
  return kExitOk;
}

int geometry_minkowski_cmd(std::ostream& out, const Options& opt) {
  const Polynomial poly = minkowski_poly(opt.d, opt.k);
  if (opt.json_output()) {
    emit(out, {{"d", opt.d}, {"k", opt.k}, {"coeffs", to_json(poly)}});
  } else {
    for (std::size_t i = 0; i < poly.coeffs().size(); ++i) out << i << ',' << poly.coeffs()[i] << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Exact Eulerian numbers, descent polynomials and cardinal B-splines", "eulerspline"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--budget", opt.budget, "Indexed-permutation enumeration budget");

  auto* bspline = app.add_subcommand("bspline", "Cardinal B-spline evaluation")->require_subcommand(1);
  auto* b_eval = bspline->add_subcommand("eval", "Evaluate B_d(x)");
  b_eval->add_option("--d", opt.d)->required();
  b_eval->add_option("--x", opt.x)->required();
  b_eval->add_option("--route", opt.route)->check(CLI::IsMember({"explicit", "recurrence"}));
  auto* b_piece = bspline->add_subcommand("piece", "Polynomial piece of B_d on [j, j+1)");
  b_piece->add_option("--d", opt.d)->required();
  b_piece->add_option("--j", opt.j)->required();
  auto* b_int = bspline->add_subcommand("integrate", "Integral of B_d over [a, b]");
  b_int->add_option("--d", opt.d)->required();
  b_int->add_option("--a", opt.a)->required();
  b_int->add_option("--b", opt.b)->required();

  auto* eulerian = app.add_subcommand("eulerian", "Eulerian and refined Eulerian numbers")->require_subcommand(1);
  auto* e_row = eulerian->add_subcommand("row", "A_{d,k} for k = 1..d");
  e_row->add_option("--d", opt.d)->required();
  e_row->add_option("--route", opt.route)->check(CLI::IsMember({"spline", "brute"}));
  auto* e_refined = eulerian->add_subcommand("refined", "Refined Eulerian triangle keyed by (k, j)");
  e_refined->add_option("--d", opt.d)->required();
  e_refined->add_option("--route", opt.route)->check(CLI::IsMember({"explicit", "lambda", "brute"}));
  auto* e_verify = eulerian->add_subcommand("verify", "Cross-check every Eulerian route");
  e_verify->add_option("--d-max", opt.d_max);

  auto* descent = app.add_subcommand("descent", "Descent numbers of indexed permutations")->require_subcommand(1);
  auto* d_table = descent->add_subcommand("table", "D(d,n,k) for k = 0..d");
  d_table->add_option("--d", opt.d)->required();
  d_table->add_option("--n", opt.n)->required();
  d_table->add_option("--route", opt.route)
      ->check(CLI::IsMember({"spline", "explicit", "recurrence", "refined", "brute"}));
  auto* d_poly = descent->add_subcommand("poly", "Coefficients of the descent polynomial");
  d_poly->add_option("--d", opt.d)->required();
  d_poly->add_option("--n", opt.n)->required();
  auto* d_verify = descent->add_subcommand("verify", "Cross-check every descent route");
  d_verify->add_option("--d-max", opt.d_max);
  d_verify->add_option("--n-max", opt.n_max);

  auto* geometry = app.add_subcommand("geometry", "Slice volumes and mixed volumes")->require_subcommand(1);
  auto* g_mc = geometry->add_subcommand("mc", "Monte Carlo volume of a cube slab");
  g_mc->add_option("--d", opt.d)->required();
  g_mc->add_option("--scale", opt.scale);
  g_mc->add_option("--lower", opt.lower)->required();
  g_mc->add_option("--upper", opt.upper)->required();
  g_mc->add_option("--samples", opt.samples);
  g_mc->add_option("--seed", opt.seed);
  auto* g_mink = geometry->add_subcommand("minkowski", "Volume polynomial of lambda T_k + T_{k+1}");
  g_mink->add_option("--d", opt.d)->required();
  g_mink->add_option("--k", opt.k)->required();

  auto* verify = app.add_subcommand("verify", "Run every identity suite");
  verify->add_flag("--all", opt.all)->required();
  verify->add_option("--d-max", opt.d_max);
  verify->add_option("--n-max", opt.n_max);

  for (auto* sub : {bspline, eulerian, descent, geometry}) {
    sub->fallthrough();
    for (auto* leaf : sub->get_subcommands({})) leaf->fallthrough();
  }
  verify->fallthrough();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  try {
    if (b_eval->parsed()) return bspline_eval(out, opt);
    if (b_piece->parsed()) return bspline_piece_cmd(out, opt);
    if (b_int->parsed()) return bspline_integrate_cmd(out, opt);
    if (e_row->parsed()) return eulerian_row_cmd(out, opt);
    if (e_refined->parsed()) return eulerian_refined_cmd(out, opt);
    if (e_verify->parsed()) return report(out, opt, {verify_eulerian(opt.d_max, opt.limits())});
    if (d_table->parsed()) return descent_table_cmd(out, opt);
    if (d_poly->parsed()) return descent_poly_cmd(out, opt);
    if (d_verify->parsed()) return report(out, opt, {verify_descent(opt.d_max, opt.n_max, opt.limits())});
    if (g_mc->parsed()) return geometry_mc_cmd(out, opt);
    if (g_mink->parsed()) return geometry_minkowski_cmd(out, opt);
    if (verify->parsed()) return report(out, opt, verify_all(opt.d_max, opt.n_max, opt.limits()));
  } catch (const NonIntegerResult& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerificationFailed;
  } catch (const NegativeResult& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerificationFailed;
  } catch (const TooLarge& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace eulerspline::cli
