#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace toggledyn {

struct SuiteOptions {
  int n_min = 2;
  int n_max = 6;
  std::optional<int> d;               // unset: every admissible d
  std::optional<long long> seeds;     // unset: every seed labeling
  std::uint64_t rng_seed = 1;
  unsigned threads = 1;
};

struct SuiteReport {
  std::string suite;
  std::size_t checked = 0;
  std::size_t failed = 0;
  nlohmann::json instances = nlohmann::json::array();

  bool ok() const { return failed == 0 && checked > 0; }
  void record(nlohmann::json instance, bool pass);
  nlohmann::json to_json() const;
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);
// Throws InvalidArgument for unknown suites.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts);

SuiteReport verify_thm_toric(const SuiteOptions& opts);
SuiteReport verify_thm_main(const SuiteOptions& opts);
SuiteReport verify_thm_broken_1d(const SuiteOptions& opts);
SuiteReport verify_thm_broken_r(const SuiteOptions& opts);
SuiteReport verify_prop_divisibility(const SuiteOptions& opts);
SuiteReport verify_prop_homomesy(const SuiteOptions& opts);
SuiteReport verify_prop_tpro_bro(const SuiteOptions& opts);
SuiteReport verify_omega_counts(const SuiteOptions& opts);
SuiteReport verify_fence_laws(const SuiteOptions& opts);
SuiteReport verify_phi_identities(const SuiteOptions& opts);
SuiteReport verify_rot_csp(const SuiteOptions& opts);

}  // namespace toggledyn
