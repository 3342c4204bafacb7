#ifndef SDG_MODEL_HPP
#define SDG_MODEL_HPP

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sdg/rational.hpp"

namespace sdg {

/// Model/table invariant violation (bad entry, bad column sum, bad shape).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Query that is well-formed but has no answer (impossible observation,
/// infeasible parameter, conditioning on a zero-probability event).
class UndefinedQuery : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One table row read as a function of the parameter: entries aligned with
/// the model's parameter order. Need not sum to 1.
using LikelihoodVector = std::vector<Rational>;

/// A discrete statistical model P(y | theta): one column per parameter
/// value, one row per outcome. Columns sum to exactly 1 (feasible
/// parameter) or exactly 0 (the scenario is self-contradictory under that
/// parameter).
///
/// `game_off` marks outcomes that cancel the game (nobody wins) and
/// `reveals` maps an outcome to the parameter it publicly rules out (the
/// door shown to hide a goat, the prisoner reported executed). Both are
/// scenario annotations used by policy evaluation; equality and the JSON /
/// text wire formats treat them as optional extras alongside the core
/// (name, params, outcomes, table).
struct DiscreteModel {
  std::string name;
  std::vector<std::string> params;
  std::vector<std::string> outcomes;
  std::vector<std::vector<Rational>> table;  // [outcome][param]
  std::set<std::string> game_off;
  std::map<std::string, std::string> reveals;  // outcome -> excluded param

  std::size_t param_index(const std::string& label) const;
  std::size_t outcome_index(const std::string& label) const;
  const Rational& at(const std::string& outcome, const std::string& param) const;

  Rational column_sum(std::size_t param_idx) const;
  bool feasible(const std::string& param) const;
  bool is_game_off(const std::string& outcome) const { return game_off.count(outcome) > 0; }

  bool operator==(const DiscreteModel& o) const = default;
};

struct ValidationReport {
  std::vector<std::string> feasible;
  std::vector<std::string> infeasible;
};

/// Checks shape, entry range and the column-sum invariant. Throws
/// ValidationError on any violation; otherwise reports each parameter as
/// feasible (column sums to 1) or infeasible (sums to 0).
ValidationReport validate(const DiscreteModel& model);

/// The table row for `outcome`, in parameter order.
LikelihoodVector likelihood(const DiscreteModel& model, const std::string& outcome);

/// The set of parameters attaining the row maximum, in parameter order.
/// Empty when the row is all zeros. Ties are never broken.
std::vector<std::string> mle(const DiscreteModel& model, const std::string& outcome);

enum class Verdict { Stay, Switch, Indifferent, Undefined };

std::string to_string(Verdict v);

struct Decision {
  Verdict verdict;
  std::vector<std::string> targets;  // the MLE set, in parameter order

  bool operator==(const Decision&) const = default;
};

/// Switch/stay verdict from the MLE set: Switch when the initial choice is
/// strictly beaten, Stay when it is the unique maximum, Indifferent on a
/// tie containing it, Undefined when the observation is impossible.
Decision decide(const DiscreteModel& model, const std::string& outcome,
                const std::string& initial);

/// The column for `theta` as a distribution over outcomes. Throws
/// UndefinedQuery when the column is infeasible.
std::vector<std::pair<std::string, Rational>> outcome_distribution(
    const DiscreteModel& model, const std::string& theta);

}  // namespace sdg

#endif  // SDG_MODEL_HPP
