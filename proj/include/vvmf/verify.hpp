#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "vvmf/arith.hpp"

namespace vvmf {

/// Parameters of a verification suite. Zero means "use the suite default".
struct SuiteOptions {
  i64 n_max = 0;
  i64 prec = 0;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
};

struct SuiteReport {
  std::string name;
  bool passed = true;
  std::int64_t cases = 0;
  std::optional<std::string> witness;  // first failure, ordered by N
};

struct SuiteInfo {
  std::string name;
  std::string summary;
  std::function<SuiteReport(const SuiteOptions&)> run;
};

/// Every identity suite, in a fixed order: eta, basis, ud, commute, xi,
/// hecke, cusp, degree, heegner, fricke.
const std::vector<SuiteInfo>& verification_suites();

/// Looks up a suite by name; nullptr if unknown.
const SuiteInfo* find_suite(const std::string& name);

/// Runs f(N) for N = 1..n_max over `jobs` threads. f returns the number of
/// checked cases and the first failure; results merge in order of N.
SuiteReport run_over_levels(const std::string& name, i64 n_max, unsigned jobs,
                            const std::function<std::pair<std::int64_t, std::optional<std::string>>(i64)>& f);

}  // namespace vvmf
