#ifndef SDG_SCENARIOS_HPP
#define SDG_SCENARIOS_HPP

#include <set>
#include <string>

#include "sdg/model.hpp"

namespace sdg {

/// Probability that the host opens Door 2 when the car is behind the
/// contestant's Door 1. 1/2 recovers the classic game.
struct HostBias {
  Rational q;

  explicit HostBias(Rational bias);
};

/// Which prisoners were told they will not be the first to be executed.
struct PromiseSet {
  std::set<std::string> told;  // subset of {"A", "B", "C"}

  explicit PromiseSet(std::set<std::string> labels);
};

/// Monty Hall: the host opens a goat door other than the contestant's
/// Door 1, choosing Door 2 with probability q when both are available.
DiscreteModel monty_hall(const HostBias& bias);

/// The host forgot where the car is and opens Door 2 or 3 uniformly at
/// random. The outcome is the remaining un-opened door, or y4 (game off)
/// when the car is revealed.
DiscreteModel forgetful_host();

/// Guard answers prisoner A with an executee: never A himself, never the
/// released prisoner, uniform when both answers are possible.
DiscreteModel prisoners_guard_single();

/// Joint answers (A1 to prisoner A, A2 to prisoner B) under the same
/// per-question constraints, independent given the released prisoner.
DiscreteModel prisoners_guard_joint();

/// The first prisoner reported executed, execution in uniform random order.
DiscreteModel news_random_order();

/// Random-order news conditioned on no promised prisoner being executed
/// first. A parameter whose two executees are both promised gets an
/// all-zero (infeasible) column.
DiscreteModel news_promised(const PromiseSet& promises);

/// Resolves a scenario reference: monty, monty-biased:<q>, forgetful,
/// guard-single, guard-joint, news, news-promised:<letters, may be empty>.
/// Throws std::invalid_argument for anything else.
DiscreteModel scenario_by_name(const std::string& ref);

}  // namespace sdg

#endif  // SDG_SCENARIOS_HPP
