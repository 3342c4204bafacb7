#ifndef SDG_ANALYSIS_HPP
#define SDG_ANALYSIS_HPP

#include <string>
#include <utility>
#include <vector>

#include "sdg/model.hpp"

namespace sdg {

/// Analysis-side weighting over parameters. Models never carry one; the
/// likelihood machinery needs none, priors exist only to turn likelihoods
/// into win probabilities.
struct Prior {
  std::vector<Rational> weights;  // aligned with model params, >= 0, sum 1

  static Prior uniform(const DiscreteModel& model);
  static Prior from_weights(const DiscreteModel& model, std::vector<Rational> weights);
};

enum class PolicyKind { Stay, AlwaysSwitch, FollowMLE };

std::string to_string(PolicyKind p);
PolicyKind parse_policy(const std::string& name);  // stay | switch | mle

/// The parameter a policy finally holds after seeing `outcome`.
/// AlwaysSwitch needs the model's reveal annotation and a unique
/// un-eliminated alternative; FollowMLE stays put on ties (no switch
/// without strict evidence).
std::string policy_choice(const DiscreteModel& model, const std::string& outcome,
                          const std::string& initial, PolicyKind policy);

/// Exact posterior over parameters: prior[theta] * L(theta), normalized.
/// Throws UndefinedQuery when the outcome has zero marginal probability.
std::vector<std::pair<std::string, Rational>> posterior(const DiscreteModel& model,
                                                        const Prior& prior,
                                                        const std::string& outcome);

struct WinProbability {
  Rational win;
  Rational cancelled;

  Rational loss() const { return Rational(1) - win - cancelled; }
  bool operator==(const WinProbability&) const = default;
};

/// Overall exact probabilities, summing over parameters (prior) and
/// outcomes (model columns). Game-off outcomes count as cancelled.
/// Throws UndefinedQuery if the prior puts weight on an infeasible
/// parameter.
WinProbability win_probability(const DiscreteModel& model, const Prior& prior,
                               PolicyKind policy, const std::string& initial);

/// Side-by-side reading of the same observation under two models: the
/// intentional-vs-accidental comparison.
struct EvidenceComparison {
  std::string outcome;
  std::string name_a, name_b;
  LikelihoodVector likelihood_a, likelihood_b;
  std::vector<std::string> mle_a, mle_b;
  Decision decision_a, decision_b;
};

EvidenceComparison compare_evidence(const DiscreteModel& a, const DiscreteModel& b,
                                    const std::string& outcome, const std::string& initial);

enum class SwapVerdict { SwitchWithA, SwitchWithB, SwitchWithC, DontSwitch, None };

std::string to_string(SwapVerdict v);

/// One non-trivial joint outcome with each prisoner's best move.
struct ConsentRow {
  std::string outcome;  // "(a1,a2)"
  LikelihoodVector likelihoods;
  std::vector<std::string> mle_set;
  SwapVerdict better_for_a;
  SwapVerdict better_for_b;
};

/// The four non-trivial joint outcomes (2,1), (2,3), (3,1), (3,3) with
/// verdicts derived from the likelihoods.
std::vector<ConsentRow> consent_table();

enum class Willingness { Weak, Strict };

struct ConsentCase {
  std::string outcome;  // "(a1,a2)"
  LikelihoodVector likelihoods;
  bool a_willing;
  bool b_willing;
  bool mutual;
  bool neutral;  // equal release likelihood for A and B
};

struct MutualConsentReport {
  std::string observed_a1;
  Willingness willingness;
  std::vector<ConsentCase> cases;  // joint outcomes consistent with A1
  bool every_consented_swap_neutral;  // vacuously true when none consented
};

/// A knows only his answer A1; a swap with B needs both prisoners'
/// consent. Enumerates the joint outcomes consistent with A1 and shows
/// that every outcome both parties would consent to is neutral.
/// Throws UndefinedQuery for A1 = 1 (the guard never says "A").
MutualConsentReport mutual_consent(const std::string& observed_a1, Willingness willingness);

}  // namespace sdg

#endif  // SDG_ANALYSIS_HPP
