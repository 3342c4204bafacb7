#include <doctest.h>

#include <random>

#include "random_tables.hpp"
#include "sdg/analysis.hpp"
#include "sdg/dsl.hpp"
#include "sdg/json_io.hpp"
#include "sdg/model.hpp"
#include "sdg/scenarios.hpp"

using namespace sdg;

TEST_CASE("random valid tables satisfy the model invariants") {
  std::mt19937_64 gen(424242);
  for (int i = 0; i < 100; ++i) {
    DiscreteModel m = testgen::random_model(gen, i);
    ValidationReport report = validate(m);
    CHECK(report.feasible.size() + report.infeasible.size() == m.params.size());
    CHECK(!report.feasible.empty());

    for (std::size_t c = 0; c < m.params.size(); ++c) {
      Rational sum = m.column_sum(c);
      CHECK((sum == Rational(0) || sum == Rational(1)));
    }

    // row sums over outcomes equal 1 for every feasible parameter
    for (const auto& p : report.feasible) {
      Rational total;
      for (const auto& y : m.outcomes) total += likelihood(m, y)[m.param_index(p)];
      CHECK(total == Rational(1));
    }

    Prior uniform = Prior::uniform(m);
    for (const auto& y : m.outcomes) {
      auto mle_set = mle(m, y);

      // mle equals a direct brute-force argmax of the row
      const auto& row = m.table[m.outcome_index(y)];
      std::vector<std::string> brute;
      for (std::size_t c = 0; c < row.size(); ++c) {
        bool is_max = !row[c].is_zero();
        for (std::size_t d = 0; d < row.size(); ++d) is_max = is_max && row[c] >= row[d];
        if (is_max) brute.push_back(m.params[c]);
      }
      CHECK(brute == mle_set);

      if (mle_set.empty()) continue;

      // posterior under a uniform prior has the same argmax set
      auto post = posterior(m, uniform, y);
      Rational best;
      for (const auto& [l, p] : post) best = std::max(best, p);
      std::vector<std::string> post_argmax;
      for (const auto& [l, p] : post) {
        if (p == best) post_argmax.push_back(l);
      }
      CHECK(post_argmax == mle_set);

      // scaling the likelihood row leaves the argmax unchanged
      Rational scale = rational(3, 7);
      Rational scaled_best;
      std::vector<std::string> scaled_argmax;
      for (const auto& v : row) scaled_best = std::max(scaled_best, v * scale);
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (row[c] * scale == scaled_best && !scaled_best.is_zero()) {
          scaled_argmax.push_back(m.params[c]);
        }
      }
      CHECK(scaled_argmax == mle_set);
    }

    // the DSL and the JSON schema both round-trip every random model
    CHECK(compile(parse(render(m))) == m);
    CHECK(model_from_json(model_to_json(m)) == m);
  }
}

TEST_CASE("JSON round-trips every built-in, annotations included") {
  for (const auto& ref : {"monty", "forgetful", "guard-joint", "news-promised:AB"}) {
    DiscreteModel m = scenario_by_name(ref);
    CHECK(model_from_json(model_to_json(m)) == m);
  }
}
