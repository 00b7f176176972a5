#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "eulerspline/enumerate.hpp"
#include "eulerspline/numcore.hpp"

namespace eulerspline {

struct VerifyFailure {
  std::string case_id;
  std::string expected;
  std::string actual;
};

/// Outcome of one identity suite; cases_failed == failures.size().
struct VerifyReport {
  std::string suite;
  std::uint64_t cases_run = 0;
  std::uint64_t cases_failed = 0;
  std::vector<VerifyFailure> failures;

  /// Records one case; returns whether it passed.
  bool check(const std::string& case_id, const Rational& expected, const Rational& actual);
  /// Records a case whose expected value is a predicate, e.g. ">= 0".
  bool check_that(const std::string& case_id, bool ok, const std::string& expected, const Rational& actual);

  [[nodiscard]] bool passed() const { return cases_failed == 0; }
};

nlohmann::json to_json(const VerifyReport& report);

/// Route equivalence and identities for B_d, 1 <= d <= d_max.
VerifyReport verify_bspline(std::uint64_t d_max);
/// Eulerian and refined Eulerian routes, two-scale identity, symmetry, row sums.
VerifyReport verify_eulerian(std::uint64_t d_max, const EnumerationLimits& limits = {});
/// Descent routes, conservation, log-concavity and two-scale identity.
VerifyReport verify_descent(std::uint64_t d_max, std::uint64_t n_max, const EnumerationLimits& limits = {});
/// Minkowski polynomial against refined Eulerian and descent numbers.
VerifyReport verify_geometry(std::uint64_t d_max, std::uint64_t n_max);

std::vector<VerifyReport> verify_all(std::uint64_t d_max, std::uint64_t n_max, const EnumerationLimits& limits = {});

}  // namespace eulerspline
