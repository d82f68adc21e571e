#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace stablelab {

struct ScenarioCheck {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

/// A named example realized at group level: the groups, sigma, W data and
/// class sets it binds, the verdicts it is expected to produce, and the
/// arithmetic hypotheses the group model takes on trust.
struct Scenario {
  std::string name;
  std::string summary;
  std::vector<std::string> assumptions;
  nlohmann::json bindings;  // groups, sigma, W, class sets, exact values
  std::vector<ScenarioCheck> checks;

  bool pass() const;
};

struct ScenarioOptions {
  /// Sieve bound for scenarios with cyclotomic arithmetic.
  std::uint64_t bound = 1'000'000;
  unsigned jobs = 1;
};

const std::vector<std::string>& scenario_names();
/// Throws Error(UnknownName) for names outside scenario_names().
Scenario run_scenario(const std::string& name, const ScenarioOptions& opts = {});

}  // namespace stablelab
