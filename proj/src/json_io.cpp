#include "sdg/json_io.hpp"

namespace sdg {

namespace {

Json rationals_to_json(const std::vector<Rational>& values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(v.str());
  return arr;
}

Json labelled_rationals(const std::vector<std::string>& labels,
                        const std::vector<Rational>& values) {
  Json obj = Json::object();
  for (std::size_t i = 0; i < labels.size(); ++i) obj[labels[i]] = values[i].str();
  return obj;
}

}  // namespace

Json model_to_json(const DiscreteModel& model) {
  Json j;
  j["name"] = model.name;
  j["params"] = model.params;
  j["outcomes"] = model.outcomes;
  Json table = Json::array();
  for (const auto& row : model.table) table.push_back(rationals_to_json(row));
  j["table"] = table;
  if (!model.game_off.empty()) j["game_off"] = model.game_off;
  if (!model.reveals.empty()) j["reveals"] = model.reveals;
  return j;
}

DiscreteModel model_from_json(const Json& j) {
  DiscreteModel m;
  m.name = j.at("name").get<std::string>();
  m.params = j.at("params").get<std::vector<std::string>>();
  m.outcomes = j.at("outcomes").get<std::vector<std::string>>();
  for (const auto& row : j.at("table")) {
    std::vector<Rational> values;
    for (const auto& cell : row) values.push_back(Rational::parse(cell.get<std::string>()));
    m.table.push_back(std::move(values));
  }
  if (j.contains("game_off")) m.game_off = j["game_off"].get<std::set<std::string>>();
  if (j.contains("reveals")) {
    m.reveals = j["reveals"].get<std::map<std::string, std::string>>();
  }
  validate(m);
  return m;
}

Json likelihood_to_json(const DiscreteModel& model, const std::string& outcome) {
  Json j;
  j["scenario"] = model.name;
  j["outcome"] = outcome;
  j["likelihood"] = labelled_rationals(model.params, likelihood(model, outcome));
  j["mle"] = mle(model, outcome);
  return j;
}

Json decision_to_json(const Decision& decision) {
  Json j;
  j["verdict"] = to_string(decision.verdict);
  j["targets"] = decision.targets;
  return j;
}

Json posterior_to_json(const std::vector<std::pair<std::string, Rational>>& post) {
  Json j = Json::object();
  for (const auto& [label, p] : post) j[label] = p.str();
  return j;
}

Json win_probability_to_json(PolicyKind policy, const WinProbability& wp) {
  Json j;
  j["policy"] = to_string(policy);
  j["win"] = wp.win.str();
  j["cancelled"] = wp.cancelled.str();
  j["loss"] = wp.loss().str();
  return j;
}

Json comparison_to_json(const EvidenceComparison& cmp) {
  auto half = [&](const std::string& name, const LikelihoodVector& lik,
                  const std::vector<std::string>& mle_set, const Decision& d) {
    Json j;
    j["scenario"] = name;
    j["likelihood"] = rationals_to_json(lik);
    j["mle"] = mle_set;
    j["decision"] = decision_to_json(d);
    return j;
  };
  Json j;
  j["outcome"] = cmp.outcome;
  j["a"] = half(cmp.name_a, cmp.likelihood_a, cmp.mle_a, cmp.decision_a);
  j["b"] = half(cmp.name_b, cmp.likelihood_b, cmp.mle_b, cmp.decision_b);
  return j;
}

Json consent_table_to_json(const std::vector<ConsentRow>& rows) {
  Json arr = Json::array();
  for (const auto& row : rows) {
    Json j;
    j["outcome"] = row.outcome;
    j["likelihood"] = rationals_to_json(row.likelihoods);
    j["mle"] = row.mle_set;
    j["better_for_a"] = to_string(row.better_for_a);
    j["better_for_b"] = to_string(row.better_for_b);
    arr.push_back(std::move(j));
  }
  return arr;
}

Json mutual_consent_to_json(const MutualConsentReport& report) {
  Json j;
  j["observed_a1"] = report.observed_a1;
  j["willingness"] = report.willingness == Willingness::Weak ? "weak" : "strict";
  Json cases = Json::array();
  for (const auto& c : report.cases) {
    Json cj;
    cj["outcome"] = c.outcome;
    cj["likelihood"] = rationals_to_json(c.likelihoods);
    cj["a_willing"] = c.a_willing;
    cj["b_willing"] = c.b_willing;
    cj["mutual_consent"] = c.mutual;
    cj["neutral"] = c.neutral;
    cases.push_back(std::move(cj));
  }
  j["cases"] = std::move(cases);
  j["every_consented_swap_neutral"] = report.every_consented_swap_neutral;
  return j;
}

Json simulation_to_json(const SimulationReport& report) {
  Json j;
  j["scenario"] = report.model_name;
  j["initial"] = report.initial;
  j["trials"] = report.trials;
  j["seed"] = report.seed;
  Json tallies = Json::array();
  for (const auto& t : report.tallies) {
    Json tj;
    tj["policy"] = to_string(t.policy);
    tj["wins"] = t.wins;
    tj["losses"] = t.losses;
    tj["cancelled"] = t.cancelled;
    tj["win_rate"] = std::to_string(SimulationReport::rate(t.wins, report.trials));
    tj["cancelled_rate"] = std::to_string(SimulationReport::rate(t.cancelled, report.trials));
    tj["exact_win"] = t.exact.win.str();
    tj["exact_cancelled"] = t.exact.cancelled.str();
    tj["tolerance_4se"] = std::to_string(
        SimulationReport::four_standard_errors(t.exact.win.to_double(), report.trials));
    tallies.push_back(std::move(tj));
  }
  j["policies"] = std::move(tallies);
  return j;
}

Json joint_simulation_to_json(const JointSimulationReport& report) {
  Json j;
  j["trials"] = report.trials;
  j["seed"] = report.seed;
  Json cells = Json::array();
  for (const auto& c : report.cells) {
    Json cj;
    cj["theta"] = c.theta;
    cj["outcome"] = c.outcome;
    cj["count"] = c.count;
    cj["frequency"] = std::to_string(SimulationReport::rate(c.count, report.trials));
    cj["exact"] = c.exact.str();
    cells.push_back(std::move(cj));
  }
  j["cells"] = std::move(cells);
  return j;
}

}  // namespace sdg
