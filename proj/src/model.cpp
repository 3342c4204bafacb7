#include "sdg/model.hpp"

#include <algorithm>

namespace sdg {

namespace {

std::size_t index_of(const std::vector<std::string>& labels, const std::string& label,
                     const char* what) {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) {
    throw std::invalid_argument(std::string("unknown ") + what + " label '" + label + "'");
  }
  return static_cast<std::size_t>(it - labels.begin());
}

}  // namespace

std::size_t DiscreteModel::param_index(const std::string& label) const {
  return index_of(params, label, "parameter");
}

std::size_t DiscreteModel::outcome_index(const std::string& label) const {
  return index_of(outcomes, label, "outcome");
}

const Rational& DiscreteModel::at(const std::string& outcome, const std::string& param) const {
  return table[outcome_index(outcome)][param_index(param)];
}

Rational DiscreteModel::column_sum(std::size_t param_idx) const {
  Rational sum;
  for (const auto& row : table) sum += row[param_idx];
  return sum;
}

bool DiscreteModel::feasible(const std::string& param) const {
  return column_sum(param_index(param)) == Rational(1);
}

ValidationReport validate(const DiscreteModel& model) {
  if (model.table.size() != model.outcomes.size()) {
    throw ValidationError("model '" + model.name + "': row count " +
                          std::to_string(model.table.size()) + " does not match " +
                          std::to_string(model.outcomes.size()) + " outcomes");
  }
  for (std::size_t r = 0; r < model.table.size(); ++r) {
    if (model.table[r].size() != model.params.size()) {
      throw ValidationError("model '" + model.name + "': row '" + model.outcomes[r] +
                            "' has " + std::to_string(model.table[r].size()) +
                            " entries, expected " + std::to_string(model.params.size()));
    }
    for (std::size_t c = 0; c < model.table[r].size(); ++c) {
      if (!model.table[r][c].is_probability()) {
        throw ValidationError("model '" + model.name + "': entry (" + model.outcomes[r] +
                              ", " + model.params[c] + ") = " + model.table[r][c].str() +
                              " is outside [0, 1]");
      }
    }
  }
  ValidationReport report;
  for (std::size_t c = 0; c < model.params.size(); ++c) {
    Rational sum = model.column_sum(c);
    if (sum == Rational(1)) {
      report.feasible.push_back(model.params[c]);
    } else if (sum == Rational(0)) {
      report.infeasible.push_back(model.params[c]);
    } else {
      throw ValidationError("model '" + model.name + "': column '" + model.params[c] +
                            "' sums to " + sum.str() + ", expected 0 or 1");
    }
  }
  if (report.feasible.empty()) {
    throw ValidationError("model '" + model.name + "': no feasible parameter");
  }
  return report;
}

LikelihoodVector likelihood(const DiscreteModel& model, const std::string& outcome) {
  return model.table[model.outcome_index(outcome)];
}

std::vector<std::string> mle(const DiscreteModel& model, const std::string& outcome) {
  const auto& row = model.table[model.outcome_index(outcome)];
  Rational best;
  for (const auto& v : row) best = std::max(best, v);
  std::vector<std::string> argmax;
  if (best.is_zero()) return argmax;
  for (std::size_t c = 0; c < row.size(); ++c) {
    if (row[c] == best) argmax.push_back(model.params[c]);
  }
  return argmax;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Stay: return "Stay";
    case Verdict::Switch: return "Switch";
    case Verdict::Indifferent: return "Indifferent";
    case Verdict::Undefined: return "Undefined";
  }
  return "?";
}

Decision decide(const DiscreteModel& model, const std::string& outcome,
                const std::string& initial) {
  model.param_index(initial);  // label check
  std::vector<std::string> targets = mle(model, outcome);
  if (targets.empty()) return {Verdict::Undefined, {}};
  bool holds_initial = std::find(targets.begin(), targets.end(), initial) != targets.end();
  if (holds_initial) {
    return {targets.size() == 1 ? Verdict::Stay : Verdict::Indifferent, std::move(targets)};
  }
  return {Verdict::Switch, std::move(targets)};
}

std::vector<std::pair<std::string, Rational>> outcome_distribution(
    const DiscreteModel& model, const std::string& theta) {
  std::size_t c = model.param_index(theta);
  if (model.column_sum(c) != Rational(1)) {
    throw UndefinedQuery("parameter '" + theta + "' is infeasible in model '" + model.name +
                         "'; its outcome distribution is undefined");
  }
  std::vector<std::pair<std::string, Rational>> dist;
  for (std::size_t r = 0; r < model.outcomes.size(); ++r) {
    dist.emplace_back(model.outcomes[r], model.table[r][c]);
  }
  return dist;
}

}  // namespace sdg
