#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace levym {

/// One check row of a verification suite. `margin` is the slack to the
/// asserted inequality (>= 0 iff pass) in the check's own units.
struct CheckResult {
  std::string suite;
  std::string name;
  bool pass = false;
  double margin = 0.0;
  std::string detail;
};

struct VerifyOptions {
  std::size_t mc_n = 100000;         // per domination MC cell
  std::size_t agreement_n = 1000000; // exact-vs-MC suite
  std::size_t harnack_paths = 100000;
  int harnack_seeds = 20;
  int harnack_steps = 2048;
  int index_draws = 100;
  std::uint64_t seed = 42;
  std::string family_filter;  // empty = all
};

/// bound >= exact/MC value (3 SE slack) over the family x bound x t matrix.
std::vector<CheckResult> run_domination_suite(const VerifyOptions& opts);

/// Sharpness and scaling identities: the bounded-variation bound against the
/// Gamma closed form, stable negative-moment scaling, symmetric-stable
/// moment scaling, large-t linearity, the exp-negative small-t exponent.
std::vector<CheckResult> run_sharpness_suite(const VerifyOptions& opts);

/// Every exact formula against its Monte Carlo oracle at 3 combined SE.
std::vector<CheckResult> run_agreement_suite(const VerifyOptions& opts);

/// Index recovery on stable families, ordering invariants and the
/// [0,2]-range of the low-frequency index on randomized draws, h4 => h2.
std::vector<CheckResult> run_index_suite(const VerifyOptions& opts);

/// The four divergence predicates on their canonical instances, plus the
/// independent numerical certificate for the exp-negative case.
std::vector<CheckResult> run_divergence_suite(const VerifyOptions& opts);

/// Shift-Harnack checks: the coupling inequality on the OU configuration
/// over repeated seeds (log and power), route consistency (exact <= bound),
/// and the structural monotonicity of the composed exponent.
std::vector<CheckResult> run_harnack_suite(const VerifyOptions& opts);

/// Dispatch by name: domination | sharpness | agreement | indices |
/// divergence | harnack | all.
std::vector<CheckResult> run_suite(const std::string& name, const VerifyOptions& opts);

}  // namespace levym
