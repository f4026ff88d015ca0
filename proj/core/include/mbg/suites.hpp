#ifndef MBG_SUITES_HPP
#define MBG_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mbg/canonical.hpp"
#include "mbg/galgebra.hpp"
#include "mbg/groupoid.hpp"
#include "mbg/rng.hpp"

namespace mbg {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string name;
  std::vector<CheckResult> checks;

  bool pass() const;
  void add(const std::string& check, bool ok, const std::string& detail = "");
};

struct SuiteOptions {
  int sites = 8;       // lattice size for car/fock suites
  int samples = 500;   // randomized checks per property
  int arity = 2;       // groupoid / galgebra arity
  std::uint64_t seed = 7;
  double tol = 1e-12;
  PatternPtr pattern;  // optional user pattern for the groupoid/galgebra suites
};

// Randomized samplers shared by the suites and the test binaries.
GroupoidElement sample_arrow(const PatternPtr& pattern, int arity, SplitMix64& rng,
                             double spread = 3.0);
std::pair<GroupoidElement, GroupoidElement> sample_composable(const PatternPtr& pattern,
                                                              int arity, SplitMix64& rng,
                                                              double spread = 3.0);

/// Independent dense linear-scan evaluation of the pattern metric, used as
/// the oracle against the geometric-grid implementation.
double pattern_metric_oracle(const Pattern& a, const Pattern& b, int dense_grid = 20000);

SuiteReport suite_pattern(const SuiteOptions& opt);
SuiteReport suite_cover(const SuiteOptions& opt);
SuiteReport suite_groupoid(const SuiteOptions& opt);
SuiteReport suite_twoaction(const SuiteOptions& opt);
SuiteReport suite_car(const SuiteOptions& opt);
SuiteReport suite_fock(const SuiteOptions& opt);
SuiteReport suite_hamiltonian(const SuiteOptions& opt);
SuiteReport suite_galgebra(const SuiteOptions& opt);
SuiteReport suite_canonical(const SuiteOptions& opt);

/// Selector: all | pattern | cover | groupoid | twoaction | car | fock |
/// ham | galg | canon. Unknown selectors throw.
std::vector<SuiteReport> run_property_suites(const std::string& selector,
                                             const SuiteOptions& opt);

std::string suites_to_json(const std::vector<SuiteReport>& reports,
                           const std::string& selector, const SuiteOptions& opt);

}  // namespace mbg

#endif
