#include "eulerspline/verify.hpp"

#include <random>

#include "eulerspline/descent.hpp"
#include "eulerspline/eulerian.hpp"
#include "eulerspline/geometry.hpp"
#include "eulerspline/splinecore.hpp"

namespace eulerspline {

namespace {

std::string id(const std::string& name, std::initializer_list<std::int64_t> args) {
  std::string out = name + "(";
  bool first = true;
  for (auto a : args) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(a);
  }
  return out + ")";
}

std::int64_t s64(std::uint64_t v) { return static_cast<std::int64_t>(v); }

// Deterministic sample points so repeated runs emit identical reports.
std::vector<Rational> sample_points(std::uint64_t d, std::size_t count, std::uint64_t salt) {
  std::mt19937_64 rng(0x5eedULL + salt);
  std::uniform_int_distribution<long> den_dist(1, 29);
  std::vector<Rational> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const long den = den_dist(rng);
    std::uniform_int_distribution<long> num_dist(-den, static_cast<long>(d + 1) * den);
    out.emplace_back(Integer(num_dist(rng)), Integer(den));
  }
  return out;
}

}  // namespace

bool VerifyReport::check(const std::string& case_id, const Rational& expected, const Rational& actual) {
  return check_that(case_id, expected == actual, expected.to_string(), actual);
}

bool VerifyReport::check_that(const std::string& case_id, bool ok, const std::string& expected,
                              const Rational& actual) {
  ++cases_run;
  if (!ok) {
    ++cases_failed;
    failures.push_back({case_id, expected, actual.to_string()});
  }
  return ok;
}

nlohmann::json to_json(const VerifyReport& report) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"case", f.case_id}, {"expected", f.expected}, {"actual", f.actual}});
  }
  return {{"suite", report.suite},
          {"cases_run", report.cases_run},
          {"cases_failed", report.cases_failed},
          {"failures", failures}};
}

VerifyReport verify_bspline(std::uint64_t d_max) {
  VerifyReport r{"bspline", 0, 0, {}};
  for (std::uint64_t d = 1; d <= d_max; ++d) {
    const SplineOrder order(d);
    for (const auto& x : sample_points(d, 40, d)) {
      const std::string at = "(" + std::to_string(d) + "," + x.to_string() + ")";
      r.check("explicit_vs_recurrence" + at, bspline_eval_explicit(order, x), bspline_eval_recurrence(order, x));
      r.check("two_scale" + at, 0, two_scale_residual(order, x));
      r.check("partition" + at, 0, partition_residual(order, x));
      if (d >= 2) {
        r.check("symmetry" + at, bspline_eval_explicit(order, x),
                bspline_eval_explicit(order, Rational(Integer(d)) - x));
      }
    }
    for (std::uint64_t k = 1; k <= d; ++k) {
      r.check(id("integral_bridge", {s64(d), s64(k)}), bspline_eval_explicit(SplineOrder(d + 1), Rational(Integer(k))),
              bspline_integrate(order, Rational(Integer(k - 1)), Rational(Integer(k))));
    }
    r.check(id("unit_mass", {s64(d)}), 1, bspline_integrate(order, 0, Rational(Integer(d))));
    if (d >= 2) {
      for (std::uint64_t grid = 1; grid <= 4; ++grid) {
        const auto witness = log_concavity_witness(order, grid);
        for (std::size_t m = 0; m < witness.size(); ++m) {
          r.check_that(id("log_concave", {s64(d), s64(grid), static_cast<std::int64_t>(m + 1)}),
                       witness[m].sign() >= 0, ">=0", witness[m]);
        }
      }
    }
  }
  return r;
}

VerifyReport verify_eulerian(std::uint64_t d_max, const EnumerationLimits& limits) {
  VerifyReport r{"eulerian", 0, 0, {}};
  for (std::uint64_t d = 1; d <= d_max; ++d) {
    const EulerianRow spline = eulerian_row_spline(d);
    Integer row_sum;
    for (std::uint64_t k = 1; k <= d; ++k) {
      row_sum += spline.at(s64(k));
      r.check(id("symmetry", {s64(d), s64(k)}), spline.at(s64(k)), spline.at(s64(d + 1 - k)));
      r.check(id("two_scale", {s64(d), s64(k)}), 0, eulerian_two_scale_residual(d, s64(k)));
    }
    r.check(id("row_sum", {s64(d)}), factorial(d), row_sum);
    if (d <= limits.max_permutation_d) {
      const EulerianRow brute = eulerian_bruteforce(d, limits);
      for (std::uint64_t k = 1; k <= d; ++k) {
        r.check(id("spline_vs_brute", {s64(d), s64(k)}), brute.at(s64(k)), spline.at(s64(k)));
      }
    }
    const RefinedTriangle expl = refined_triangle_explicit(d);
    const RefinedTriangle lambda = refined_triangle_lambda(d);
    const bool brute_ok = d <= limits.max_refined_d;
    const RefinedTriangle brute = brute_ok ? refined_bruteforce(d, limits) : RefinedTriangle{};
    for (std::uint64_t k = 0; k <= d; ++k) {
      for (std::uint64_t j = 0; j <= d; ++j) {
        r.check(id("refined_explicit_vs_lambda", {s64(d), s64(k), s64(j)}), expl.at(k, j), lambda.at(k, j));
        if (brute_ok) {
          r.check(id("refined_explicit_vs_brute", {s64(d), s64(k), s64(j)}), brute.at(k, j), expl.at(k, j));
        }
      }
    }
    // Fixing the last letter leaves a copy of S_d.
    for (std::uint64_t j = 0; j <= d; ++j) {
      Integer column;
      for (std::uint64_t k = 0; k <= d; ++k) column += expl.at(k, j);
      r.check(id("refined_last_letter_sum", {s64(d), s64(j)}), factorial(d), column);
    }
  }
  return r;
}

VerifyReport verify_descent(std::uint64_t d_max, std::uint64_t n_max, const EnumerationLimits& limits) {
  VerifyReport r{"descent", 0, 0, {}};
  for (std::uint64_t d = 1; d <= d_max; ++d) {
    for (std::uint64_t n = 1; n <= n_max; ++n) {
      const DescentTable spline = descent_table(d, n, DescentRoute::spline);
      const DescentTable expl = descent_table(d, n, DescentRoute::explicit_sum);
      const DescentTable rec = descent_recurrence_table(d, n);
      const DescentTable refined = descent_table(d, n, DescentRoute::refined);
      const Integer population = factorial(d) * int_pow(Rational(Integer(n)), d).num();
      const bool brute_ok = population <= Integer(static_cast<unsigned long>(limits.indexed_budget));
      const DescentTable brute = brute_ok ? indexed_bruteforce(d, n, limits) : spline;
      Integer sum;
      for (std::uint64_t k = 0; k <= d; ++k) {
        const auto ks = s64(k);
        const Rational expected(spline.at(ks));
        r.check(id("spline_vs_explicit", {s64(d), s64(n), ks}), expected, expl.at(ks));
        r.check(id("spline_vs_recurrence", {s64(d), s64(n), ks}), expected, rec.at(ks));
        r.check(id("spline_vs_refined", {s64(d), s64(n), ks}), expected, refined.at(ks));
        if (brute_ok) r.check(id("spline_vs_brute", {s64(d), s64(n), ks}), brute.at(ks), expected);
        r.check(id("two_scale", {s64(d), s64(n), ks}), 0, descent_two_scale_residual(d, n, ks));
        sum += spline.at(ks);
      }
      r.check(id("conservation", {s64(d), s64(n)}), population, sum);
      r.check(id("poly_at_one", {s64(d), s64(n)}), population, spline.polynomial()(1));
      r.check(id("first_entry", {s64(d), s64(n)}), 1, spline.at(0));
      if (n == 1) {
        for (std::uint64_t k = 0; k <= d; ++k) {
          r.check(id("reduces_to_eulerian", {s64(d), s64(k)}), eulerian_spline(d, s64(k + 1)), spline.at(s64(k)));
        }
      }
      const auto verdict = log_concavity_verdict(spline);
      for (std::size_t k = 0; k < verdict.size(); ++k) {
        r.check_that(id("log_concave", {s64(d), s64(n), static_cast<std::int64_t>(k + 1)}), verdict[k].sign() >= 0,
                     ">=0", verdict[k]);
      }
    }
  }
  return r;
}

VerifyReport verify_geometry(std::uint64_t d_max, std::uint64_t n_max) {
  VerifyReport r{"geometry", 0, 0, {}};
  for (std::uint64_t d = 1; d <= d_max; ++d) {
    for (std::uint64_t k = 0; k <= d; ++k) {
      const Polynomial poly = minkowski_poly(d, k);
      r.check_that(id("degree", {s64(d), s64(k)}), poly.degree() <= static_cast<long>(d), "<=" + std::to_string(d),
                   Rational(Integer(poly.degree())));
      for (std::uint64_t j = 0; j <= d; ++j) {
        r.check(id("mixed_volume_coefficient", {s64(d), s64(k), s64(j)}),
                Rational(Integer(binomial(d, s64(j)) * refined_explicit(d, k, j))), poly.coefficient(j));
      }
      for (std::uint64_t n = 1; n <= n_max; ++n) {
        r.check(id("descent_at_lambda", {s64(d), s64(n), s64(k)}), descent_spline(d, n, s64(k)),
                poly(Rational(Integer(n - 1))));
      }
    }
  }
  return r;
}

std::vector<VerifyReport> verify_all(std::uint64_t d_max, std::uint64_t n_max, const EnumerationLimits& limits) {
  return {verify_bspline(d_max), verify_eulerian(d_max, limits), verify_descent(d_max, n_max, limits),
          verify_geometry(d_max, n_max)};
}

}  // namespace eulerspline
