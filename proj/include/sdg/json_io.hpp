#ifndef SDG_JSON_IO_HPP
#define SDG_JSON_IO_HPP

#include <json.hpp>

#include "sdg/analysis.hpp"
#include "sdg/model.hpp"
#include "sdg/simulate.hpp"

namespace sdg {

using Json = nlohmann::ordered_json;

// All rationals cross the JSON boundary as strings ("a/b", or "a" when the
// denominator is 1), never as floats.

Json model_to_json(const DiscreteModel& model);
DiscreteModel model_from_json(const Json& j);

Json likelihood_to_json(const DiscreteModel& model, const std::string& outcome);
Json decision_to_json(const Decision& decision);
Json posterior_to_json(const std::vector<std::pair<std::string, Rational>>& post);
Json win_probability_to_json(PolicyKind policy, const WinProbability& wp);
Json comparison_to_json(const EvidenceComparison& cmp);
Json consent_table_to_json(const std::vector<ConsentRow>& rows);
Json mutual_consent_to_json(const MutualConsentReport& report);
Json simulation_to_json(const SimulationReport& report);
Json joint_simulation_to_json(const JointSimulationReport& report);

}  // namespace sdg

#endif  // SDG_JSON_IO_HPP
