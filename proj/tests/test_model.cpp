#include <doctest.h>

#include "sdg/model.hpp"
#include "sdg/scenarios.hpp"

using namespace sdg;

namespace {

const HostBias kFair{rational(1, 2)};

LikelihoodVector lv(std::initializer_list<Rational> values) { return LikelihoodVector(values); }

}  // namespace

TEST_CASE("validate reports feasible and infeasible columns") {
  ValidationReport monty = validate(monty_hall(kFair));
  CHECK(monty.feasible == std::vector<std::string>{"1", "2", "3"});
  CHECK(monty.infeasible.empty());

  ValidationReport promised = validate(news_promised(PromiseSet({"A", "B"})));
  CHECK(promised.feasible == std::vector<std::string>{"1", "2"});
  CHECK(promised.infeasible == std::vector<std::string>{"3"});
}

TEST_CASE("validate rejects bad tables") {
  DiscreteModel bad;
  bad.name = "bad";
  bad.params = {"1", "2"};
  bad.outcomes = {"a", "b"};
  bad.table = {{rational(1, 2), Rational(1)}, {Rational(0), Rational(0)}};
  // column 1 sums to 1/2
  CHECK_THROWS_AS(validate(bad), ValidationError);

  bad.table = {{rational(3, 2), Rational(1)}, {Rational(0), Rational(0)}};
  CHECK_THROWS_AS(validate(bad), ValidationError);  // entry out of [0,1]

  bad.table = {{Rational(1), Rational(1)}};
  CHECK_THROWS_AS(validate(bad), ValidationError);  // row/outcome mismatch

  DiscreteModel all_zero;
  all_zero.name = "void";
  all_zero.params = {"1"};
  all_zero.outcomes = {"a"};
  all_zero.table = {{Rational(0)}};
  CHECK_THROWS_AS(validate(all_zero), ValidationError);  // no feasible parameter
}

TEST_CASE("likelihood reads table rows") {
  DiscreteModel monty = monty_hall(kFair);
  CHECK(likelihood(monty, "y3") == lv({rational(1, 2), Rational(1), Rational(0)}));
  CHECK(likelihood(monty, "y1") == lv({Rational(0), Rational(0), Rational(0)}));
  CHECK(likelihood(forgetful_host(), "y2") ==
        lv({rational(1, 2), rational(1, 2), Rational(0)}));
  CHECK_THROWS_AS(likelihood(monty, "y9"), std::invalid_argument);
}

TEST_CASE("mle keeps ties as sets and returns empty for impossible rows") {
  DiscreteModel monty = monty_hall(kFair);
  CHECK(mle(monty, "y2") == std::vector<std::string>{"3"});
  CHECK(mle(monty, "y3") == std::vector<std::string>{"2"});
  CHECK(mle(monty, "y1").empty());
  CHECK(mle(forgetful_host(), "y3") == std::vector<std::string>{"1", "3"});
}

TEST_CASE("decide covers the four verdicts") {
  DiscreteModel monty = monty_hall(kFair);
  CHECK(decide(monty, "y3", "1") == Decision{Verdict::Switch, {"2"}});
  CHECK(decide(monty, "y3", "2") == Decision{Verdict::Stay, {"2"}});
  CHECK(decide(forgetful_host(), "y2", "1") == Decision{Verdict::Indifferent, {"1", "2"}});
  CHECK(decide(monty, "y1", "1") == Decision{Verdict::Undefined, {}});
  CHECK_THROWS_AS(decide(monty, "y3", "7"), std::invalid_argument);
}

TEST_CASE("outcome_distribution returns columns, rejecting infeasible parameters") {
  DiscreteModel monty = monty_hall(kFair);
  auto dist = outcome_distribution(monty, "2");
  REQUIRE(dist.size() == 3);
  CHECK(dist[0] == std::pair<std::string, Rational>{"y1", Rational(0)});
  CHECK(dist[1] == std::pair<std::string, Rational>{"y2", Rational(0)});
  CHECK(dist[2] == std::pair<std::string, Rational>{"y3", Rational(1)});

  auto news = news_random_order();
  auto under_1 = outcome_distribution(news, "1");
  CHECK(under_1[1].second == rational(1, 2));
  CHECK(under_1[2].second == rational(1, 2));

  CHECK_THROWS_AS(outcome_distribution(news_promised(PromiseSet({"A", "B"})), "3"),
                  UndefinedQuery);
}

TEST_CASE("row sums over feasible columns are exactly 1") {
  for (const auto& ref : {"monty", "forgetful", "guard-single", "guard-joint", "news",
                          "news-promised:A", "news-promised:AB"}) {
    DiscreteModel m = scenario_by_name(ref);
    for (std::size_t c = 0; c < m.params.size(); ++c) {
      Rational sum = m.column_sum(c);
      CHECK((sum == Rational(0) || sum == Rational(1)));
    }
  }
}

TEST_CASE("scaling a likelihood vector never moves the argmax set") {
  DiscreteModel models[] = {monty_hall(kFair), forgetful_host(), news_random_order()};
  for (const auto& m : models) {
    for (const auto& y : m.outcomes) {
      LikelihoodVector base = likelihood(m, y);
      for (const Rational& scale : {rational(1, 3), Rational(2), rational(7, 5)}) {
        LikelihoodVector scaled;
        for (const auto& v : base) scaled.push_back(v * scale);
        // argmax of the scaled vector, computed directly
        Rational best;
        for (const auto& v : scaled) best = std::max(best, v);
        std::vector<std::string> argmax;
        if (!best.is_zero()) {
          for (std::size_t i = 0; i < scaled.size(); ++i) {
            if (scaled[i] == best) argmax.push_back(m.params[i]);
          }
        }
        CHECK(argmax == mle(m, y));
      }
    }
  }
}
