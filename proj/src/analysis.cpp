#include "sdg/analysis.hpp"

#include <algorithm>

#include "sdg/scenarios.hpp"

namespace sdg {

Prior Prior::uniform(const DiscreteModel& model) {
  auto n = static_cast<long long>(model.params.size());
  return {std::vector<Rational>(model.params.size(), Rational(1) / Rational(n))};
}

Prior Prior::from_weights(const DiscreteModel& model, std::vector<Rational> weights) {
  if (weights.size() != model.params.size()) {
    throw std::invalid_argument("prior needs one weight per parameter");
  }
  Rational sum;
  for (const auto& w : weights) {
    if (w < Rational(0)) throw std::invalid_argument("prior weights must be nonnegative");
    sum += w;
  }
  if (sum != Rational(1)) {
    throw std::invalid_argument("prior weights must sum to 1, got " + sum.str());
  }
  return {std::move(weights)};
}

std::string to_string(PolicyKind p) {
  switch (p) {
    case PolicyKind::Stay: return "stay";
    case PolicyKind::AlwaysSwitch: return "switch";
    case PolicyKind::FollowMLE: return "mle";
  }
  return "?";
}

PolicyKind parse_policy(const std::string& name) {
  if (name == "stay") return PolicyKind::Stay;
  if (name == "switch") return PolicyKind::AlwaysSwitch;
  if (name == "mle") return PolicyKind::FollowMLE;
  throw std::invalid_argument("unknown policy '" + name + "' (expected stay, switch or mle)");
}

std::string policy_choice(const DiscreteModel& model, const std::string& outcome,
                          const std::string& initial, PolicyKind policy) {
  model.outcome_index(outcome);
  model.param_index(initial);
  switch (policy) {
    case PolicyKind::Stay:
      return initial;
    case PolicyKind::AlwaysSwitch: {
      auto it = model.reveals.find(outcome);
      if (it == model.reveals.end()) {
        throw UndefinedQuery("outcome '" + outcome + "' of model '" + model.name +
                             "' has no reveal annotation; switch target is undefined");
      }
      std::vector<std::string> alternatives;
      for (const auto& p : model.params) {
        if (p != initial && p != it->second) alternatives.push_back(p);
      }
      if (alternatives.size() != 1) {
        throw UndefinedQuery("no unique switch target after outcome '" + outcome + "'");
      }
      return alternatives[0];
    }
    case PolicyKind::FollowMLE: {
      auto targets = mle(model, outcome);
      if (targets.size() == 1) return targets[0];
      return initial;  // tie or impossible observation: no switch without strict evidence
    }
  }
  throw std::logic_error("unreachable");
}

std::vector<std::pair<std::string, Rational>> posterior(const DiscreteModel& model,
                                                        const Prior& prior,
                                                        const std::string& outcome) {
  LikelihoodVector lik = likelihood(model, outcome);
  std::vector<Rational> unnormalized(lik.size());
  Rational marginal;
  for (std::size_t i = 0; i < lik.size(); ++i) {
    unnormalized[i] = prior.weights[i] * lik[i];
    marginal += unnormalized[i];
  }
  if (marginal.is_zero()) {
    throw UndefinedQuery("outcome '" + outcome + "' has zero probability under the prior; "
                         "posterior is undefined");
  }
  std::vector<std::pair<std::string, Rational>> result;
  for (std::size_t i = 0; i < lik.size(); ++i) {
    result.emplace_back(model.params[i], unnormalized[i] / marginal);
  }
  return result;
}

WinProbability win_probability(const DiscreteModel& model, const Prior& prior,
                               PolicyKind policy, const std::string& initial) {
  model.param_index(initial);
  WinProbability result;
  for (std::size_t c = 0; c < model.params.size(); ++c) {
    const Rational& w = prior.weights[c];
    if (w.is_zero()) continue;
    if (model.column_sum(c) != Rational(1)) {
      throw UndefinedQuery("prior puts weight on infeasible parameter '" + model.params[c] +
                           "'");
    }
    for (std::size_t r = 0; r < model.outcomes.size(); ++r) {
      const Rational& p = model.table[r][c];
      if (p.is_zero()) continue;
      if (model.is_game_off(model.outcomes[r])) {
        result.cancelled += w * p;
      } else if (policy_choice(model, model.outcomes[r], initial, policy) == model.params[c]) {
        result.win += w * p;
      }
    }
  }
  return result;
}

EvidenceComparison compare_evidence(const DiscreteModel& a, const DiscreteModel& b,
                                    const std::string& outcome, const std::string& initial) {
  a.outcome_index(outcome);
  b.outcome_index(outcome);
  return {
      outcome,
      a.name,
      b.name,
      likelihood(a, outcome),
      likelihood(b, outcome),
      mle(a, outcome),
      mle(b, outcome),
      decide(a, outcome, initial),
      decide(b, outcome, initial),
  };
}

std::string to_string(SwapVerdict v) {
  switch (v) {
    case SwapVerdict::SwitchWithA: return "Switch with A";
    case SwapVerdict::SwitchWithB: return "Switch with B";
    case SwapVerdict::SwitchWithC: return "Switch with C";
    case SwapVerdict::DontSwitch: return "Don't switch!";
    case SwapVerdict::None: return "None";
  }
  return "?";
}

namespace {

// Best move for the prisoner holding `own` ("1" = A, "2" = B), read off
// the MLE set: a unique maximum names who to swap with, a tie means no
// move is better.
SwapVerdict best_move(const std::vector<std::string>& mle_set, const std::string& own) {
  if (mle_set.size() != 1) return SwapVerdict::None;
  const std::string& target = mle_set[0];
  if (target == own) return SwapVerdict::DontSwitch;
  if (target == "1") return SwapVerdict::SwitchWithA;
  if (target == "2") return SwapVerdict::SwitchWithB;
  return SwapVerdict::SwitchWithC;
}

}  // namespace

std::vector<ConsentRow> consent_table() {
  DiscreteModel joint = prisoners_guard_joint();
  std::vector<ConsentRow> rows;
  for (const auto& outcome : joint.outcomes) {
    LikelihoodVector lik = likelihood(joint, outcome);
    bool possible = std::any_of(lik.begin(), lik.end(),
                                [](const Rational& v) { return !v.is_zero(); });
    if (!possible) continue;
    auto mle_set = mle(joint, outcome);
    rows.push_back({outcome, std::move(lik), mle_set, best_move(mle_set, "1"),
                    best_move(mle_set, "2")});
  }
  return rows;
}

MutualConsentReport mutual_consent(const std::string& observed_a1, Willingness willingness) {
  if (observed_a1 == "1") {
    throw UndefinedQuery("the guard never answers A with A himself; A1=1 is inconsistent");
  }
  if (observed_a1 != "2" && observed_a1 != "3") {
    throw std::invalid_argument("A1 must be 2 or 3, got '" + observed_a1 + "'");
  }
  DiscreteModel joint = prisoners_guard_joint();
  MutualConsentReport report{observed_a1, willingness, {}, true};
  for (const auto& a2 : {"1", "2", "3"}) {
    std::string outcome = "(" + observed_a1 + "," + std::string(a2) + ")";
    LikelihoodVector lik = likelihood(joint, outcome);
    bool possible = std::any_of(lik.begin(), lik.end(),
                                [](const Rational& v) { return !v.is_zero(); });
    if (!possible) continue;
    const Rational& for_a = lik[0];  // P(A released | outcome) up to scale
    const Rational& for_b = lik[1];
    bool strict = willingness == Willingness::Strict;
    // A consents when swapping punishments with B is not a downgrade.
    bool a_willing = strict ? for_b > for_a : for_b >= for_a;
    bool b_willing = strict ? for_a > for_b : for_a >= for_b;
    bool mutual = a_willing && b_willing;
    bool neutral = for_a == for_b;
    if (mutual && !neutral) report.every_consented_swap_neutral = false;
    report.cases.push_back({outcome, std::move(lik), a_willing, b_willing, mutual, neutral});
  }
  return report;
}

}  // namespace sdg
