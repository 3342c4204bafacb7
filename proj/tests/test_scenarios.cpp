#include <doctest.h>

#include <map>

#include "sdg/model.hpp"
#include "sdg/scenarios.hpp"

using namespace sdg;

namespace {

const Rational kHalf = rational(1, 2);
const Rational kZero(0);
const Rational kOne(1);

// Entry-by-entry comparison, ignoring labels.
bool same_table(const DiscreteModel& a, const DiscreteModel& b) {
  return a.table == b.table;
}

}  // namespace

TEST_CASE("monty table matches the classic game") {
  DiscreteModel m = monty_hall(HostBias(kHalf));
  CHECK(m.params == std::vector<std::string>{"1", "2", "3"});
  CHECK(m.outcomes == std::vector<std::string>{"y1", "y2", "y3"});
  CHECK(m.table == std::vector<std::vector<Rational>>{
                       {kZero, kZero, kZero},
                       {kHalf, kZero, kOne},
                       {kHalf, kOne, kZero},
                   });
}

TEST_CASE("biased hosts keep the forced rows") {
  CHECK(likelihood(monty_hall(HostBias(kZero)), "y2") ==
        LikelihoodVector{kZero, kZero, kOne});
  CHECK(likelihood(monty_hall(HostBias(kOne)), "y3") ==
        LikelihoodVector{kZero, kOne, kZero});
  DiscreteModel q34 = monty_hall(HostBias(rational(3, 4)));
  CHECK(likelihood(q34, "y2") == LikelihoodVector{rational(3, 4), kZero, kOne});
  CHECK(likelihood(q34, "y3") == LikelihoodVector{rational(1, 4), kOne, kZero});
  CHECK_THROWS_AS(HostBias(rational(3, 2)), std::invalid_argument);
}

TEST_CASE("forgetful host table, with the cancelled-game outcome") {
  DiscreteModel m = forgetful_host();
  CHECK(m.outcomes == std::vector<std::string>{"y2", "y3", "y4"});
  CHECK(m.table == std::vector<std::vector<Rational>>{
                       {kHalf, kHalf, kZero},
                       {kHalf, kZero, kHalf},
                       {kZero, kHalf, kHalf},
                   });
  CHECK(m.is_game_off("y4"));
  CHECK_FALSE(m.is_game_off("y2"));
  CHECK(validate(m).infeasible.empty());
}

TEST_CASE("guard answer to A reproduces the game-show table") {
  DiscreteModel m = prisoners_guard_single();
  CHECK(m.outcomes == std::vector<std::string>{"a1", "a2", "a3"});
  CHECK(likelihood(m, "a1") == LikelihoodVector{kZero, kZero, kZero});
  CHECK(likelihood(m, "a3") == LikelihoodVector{kHalf, kOne, kZero});
  CHECK(mle(m, "a2") == std::vector<std::string>{"3"});
  CHECK(same_table(m, monty_hall(HostBias(kHalf))));
}

TEST_CASE("joint guard table has exactly the five possible cells") {
  DiscreteModel m = prisoners_guard_joint();
  REQUIRE(m.outcomes.size() == 9);
  std::map<std::pair<std::string, std::string>, Rational> expected = {
      {{"(2,3)", "1"}, kHalf}, {{"(3,3)", "1"}, kHalf},
      {{"(3,1)", "2"}, kHalf}, {{"(3,3)", "2"}, kHalf},
      {{"(2,1)", "3"}, kOne},
  };
  for (const auto& outcome : m.outcomes) {
    for (const auto& param : m.params) {
      auto it = expected.find({outcome, param});
      CHECK(m.at(outcome, param) == (it == expected.end() ? kZero : it->second));
    }
  }
  CHECK(likelihood(m, "(3,3)") == LikelihoodVector{kHalf, kHalf, kZero});
}

TEST_CASE("marginalizing the joint answers recovers the single-question table") {
  DiscreteModel joint = prisoners_guard_joint();
  DiscreteModel single = prisoners_guard_single();
  for (const auto& a1 : {"1", "2", "3"}) {
    for (std::size_t c = 0; c < joint.params.size(); ++c) {
      Rational marginal;
      for (const auto& a2 : {"1", "2", "3"}) {
        marginal += joint.at("(" + std::string(a1) + "," + a2 + ")", joint.params[c]);
      }
      CHECK(marginal == single.at("a" + std::string(a1), single.params[c]));
    }
  }
  // A2's marginal is degenerate at the extremes: theta=1 forces A2=3,
  // theta=3 forces A2=1.
  Rational a2_3_given_1, a2_1_given_3;
  for (const auto& a1 : {"1", "2", "3"}) {
    a2_3_given_1 += joint.at("(" + std::string(a1) + ",3)", "1");
    a2_1_given_3 += joint.at("(" + std::string(a1) + ",1)", "3");
  }
  CHECK(a2_3_given_1 == kOne);
  CHECK(a2_1_given_3 == kOne);
}

TEST_CASE("news with random execution order") {
  DiscreteModel m = news_random_order();
  CHECK(m.table == std::vector<std::vector<Rational>>{
                       {kZero, kHalf, kHalf},
                       {kHalf, kZero, kHalf},
                       {kHalf, kHalf, kZero},
                   });
  CHECK(mle(m, "y1") == std::vector<std::string>{"2", "3"});
  CHECK(mle(m, "y3") == std::vector<std::string>{"1", "2"});
  CHECK(validate(m).infeasible.empty());
}

TEST_CASE("one promise turns the news into the game-show table") {
  DiscreteModel m = news_promised(PromiseSet({"A"}));
  CHECK(m.table == std::vector<std::vector<Rational>>{
                       {kZero, kZero, kZero},
                       {kHalf, kZero, kOne},
                       {kHalf, kOne, kZero},
                   });
  CHECK(same_table(m, monty_hall(HostBias(kHalf))));
}

TEST_CASE("two promises leave an infeasible parameter") {
  DiscreteModel m = news_promised(PromiseSet({"A", "B"}));
  CHECK(likelihood(m, "y1") == LikelihoodVector{kZero, kZero, kZero});
  CHECK(likelihood(m, "y2") == LikelihoodVector{kZero, kZero, kZero});
  CHECK(likelihood(m, "y3") == LikelihoodVector{kOne, kOne, kZero});
  CHECK(m.column_sum(2) == kZero);
  CHECK(validate(m).infeasible == std::vector<std::string>{"3"});
}

TEST_CASE("no promises means plain random order") {
  CHECK(news_promised(PromiseSet({})).table == news_random_order().table);
  CHECK_THROWS_AS(PromiseSet({"D"}), std::invalid_argument);
}

TEST_CASE("every builder output validates") {
  for (const auto& ref : {"monty", "monty-biased:0", "monty-biased:1", "monty-biased:3/4",
                          "forgetful", "guard-single", "guard-joint", "news",
                          "news-promised:A", "news-promised:AB", "news-promised:"}) {
    CHECK_NOTHROW(validate(scenario_by_name(ref)));
  }
}

TEST_CASE("scenario_by_name rejects unknown references") {
  CHECK_THROWS_AS(scenario_by_name("monty-hall"), std::invalid_argument);
  CHECK_THROWS_AS(scenario_by_name("monty-biased"), std::invalid_argument);
  CHECK_THROWS_AS(scenario_by_name("monty-biased:2"), std::invalid_argument);
  CHECK_THROWS_AS(scenario_by_name("news-promised:Q"), std::invalid_argument);
}

TEST_CASE("the initial door is never the unique MLE, whatever the host bias") {
  for (int i = 0; i <= 10; ++i) {
    DiscreteModel m = monty_hall(HostBias(rational(i, 10)));
    for (const auto& y : {"y2", "y3"}) {
      auto argmax = mle(m, y);
      if (argmax.empty()) continue;  // impossible observation at q = 0 or 1
      CHECK_FALSE(argmax == std::vector<std::string>{"1"});
    }
  }
}
