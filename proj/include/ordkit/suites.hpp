#ifndef ORDKIT_SUITES_HPP
#define ORDKIT_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace ordkit {

struct SuiteParams {
  int max_size = -1;       // corpus bound (posets / lattices)
  int samples = -1;        // randomized inputs per law
  int grid = -1;           // rational grid denominator
  int depth = -1;          // dyadic depth
  std::uint64_t seed = 424242;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  nlohmann::json counterexample;  // empty when passing; replayable via `ordkit replay`
};

struct SuiteReport {
  std::string suite;
  SuiteParams params;
  std::vector<CheckResult> checks;
  double wall_seconds = 0.0;

  bool all_pass() const;
  const CheckResult* find(const std::string& name) const;
  nlohmann::json to_json() const;
};

/// saturation | sound4 | cts-equiv | interpolation | hms | birkhoff |
/// umod-metric | stack | urysohn | gelfand-roundtrip
const std::vector<std::string>& suite_names();

SuiteReport run_suite(const std::string& name, SuiteParams params);

/// Re-runs the originating suite of a failure payload and reports the named
/// check again.
CheckResult replay(const nlohmann::json& counterexample);

}  // namespace ordkit

#endif
