#ifndef SDG_SIMULATE_HPP
#define SDG_SIMULATE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sdg/analysis.hpp"
#include "sdg/model.hpp"

namespace sdg {

struct PolicyTally {
  PolicyKind policy;
  std::uint64_t wins = 0;
  std::uint64_t losses = 0;
  std::uint64_t cancelled = 0;
  WinProbability exact;  // expected rates from the analysis module
};

/// Monte Carlo tallies next to their exact predictions, plus the 4-standard-
/// error agreement band for each win rate.
struct SimulationReport {
  std::string model_name;
  std::string initial;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<PolicyTally> tallies;

  static double rate(std::uint64_t count, std::uint64_t trials) {
    return static_cast<double>(count) / static_cast<double>(trials);
  }
  /// 4 * sqrt(p (1-p) / trials), the tolerance recorded alongside every rate.
  static double four_standard_errors(double p, std::uint64_t trials);
};

/// Runs `trials` independent games: draw theta from the prior, draw the
/// outcome from theta's column, score every policy on the same game.
/// Trial i uses its own generator seeded by trial_seed(seed, i), so the
/// report is identical for any thread count. `threads` 0 means hardware
/// concurrency. Throws UndefinedQuery if the prior puts weight on an
/// infeasible parameter.
SimulationReport simulate(const DiscreteModel& model, const Prior& prior,
                          const std::vector<PolicyKind>& policies, const std::string& initial,
                          std::uint64_t trials, std::uint64_t seed, unsigned threads = 1);

struct JointCell {
  std::string theta;
  std::string outcome;  // "(a1,a2)"
  std::uint64_t count = 0;
  Rational exact;  // prior x joint table probability
};

struct JointSimulationReport {
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<JointCell> cells;  // every (theta, outcome) pair with exact > 0 or count > 0
};

/// Samples (theta, A1, A2) under a uniform prior from the joint guard
/// model and compares empirical frequencies with the exact table.
JointSimulationReport simulate_joint(std::uint64_t trials, std::uint64_t seed,
                                     unsigned threads = 1);

}  // namespace sdg

#endif  // SDG_SIMULATE_HPP
