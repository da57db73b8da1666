#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kronecker/laurent.hpp"

namespace kronecker {

struct VerifyFailure {
  std::string case_id;
  std::string expected;
  std::string actual;
};

struct VerifyReport {
  std::string suite;
  std::int64_t cases = 0;
  std::vector<VerifyFailure> failures;
  std::int64_t micros = 0;  // wall time

  bool ok() const { return failures.empty(); }
};

struct VerifyOptions {
  std::optional<int> max_n;  // suite-specific bound; each suite has a default
  std::uint64_t seed = 1;    // randomized suites only
};

/// recursion-vs-closed, canonical, chi-triple, subsets, functors, laurent,
/// tplus-identity, f-bridge.
const std::vector<std::string>& suite_names();

/// Throws UnknownSuite for names outside suite_names().
VerifyReport run_suite(const std::string& suite, const VerifyOptions& options);

/// One computed cluster variable, as recorded by explore.
struct ExploreRecord {
  std::int64_t b = 0;
  std::int64_t m = 0;
  DimVector denominator;
  std::size_t term_count = 0;
  Integer min_coeff;
  Integer max_coeff;
  bool positive = false;
  std::int64_t micros = 0;  // wall time
};

/// Computes x_m for m in [m_lo, m_hi] (skipping the initial cluster) with a
/// single shared context and hands each record to sink in increasing m. An
/// empty range produces no records. Requires b >= 2.
void explore(std::int64_t b, std::int64_t m_lo, std::int64_t m_hi,
             const std::function<void(const ExploreRecord&)>& sink);

}  // namespace kronecker
