#pragma once

#include <random>
#include <string>
#include <vector>

#include "rz/walk_model.hpp"

namespace rz {

struct CheckResult {
  std::string id;
  bool passed = false;
  std::string detail;  // failure diagnostics; empty on success
};

// Identifiers of the invariant suite, in execution order.
std::vector<std::string> verify_check_ids();

CheckResult run_check(const std::string& id);
std::vector<CheckResult> run_all_checks();

// deterministic random coin constructors shared with the test suite
CoinMatrix random_qw_coin(int d, std::mt19937& rng);
CoinMatrix random_rw_coin(int d, std::mt19937& rng);

}  // namespace rz
