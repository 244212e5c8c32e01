#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "nslattice/lattice.hpp"

namespace nslattice::selfcheck {

// Scan ranges for `nslattice selfcheck`. The defaults are the ranges of the
// acceptance suite.
struct Config {
  Int anticanonical_n_max = 50;
  Int fixed_mobile_n_max = 10;
  Int fixed_mobile_a_max = 10;
  Int monoid_n_max = 6;
  Int monoid_box = 8;
  Int monoid_copies = 16;
  Int random_classes = 10000;
  Int random_coeff = 20;
  Int lattice_n_max = 20;
  Int lattice_r_max = 12;
  Int enumeration_r_max = 8;
  Int degree_bound = 7;
  Int stability_bound = 12;
  std::uint64_t seed = 20111124;
};

// Missing keys keep their defaults; unknown keys are rejected.
Config config_from_json(const nlohmann::json& j);
nlohmann::ordered_json config_to_json(const Config& c);

struct CheckResult {
  std::string name;
  bool passed = true;
  Int cases = 0;
  std::string detail;  // first failure, empty when passed
};

std::vector<CheckResult> run_all(const Config& config);

}  // namespace nslattice::selfcheck
