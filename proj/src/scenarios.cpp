#include "sdg/scenarios.hpp"

#include <algorithm>
#include <array>

namespace sdg {

namespace {

const Rational kZero(0);
const Rational kOne(1);
const Rational kHalf = rational(1, 2);

const std::array<std::string, 3> kDoors = {"1", "2", "3"};
const std::array<std::string, 3> kPrisoners = {"A", "B", "C"};

void finish(DiscreteModel& m) { validate(m); }

void add_mass(DiscreteModel& m, const std::string& outcome, std::size_t param_idx,
              const Rational& p) {
  m.table[m.outcome_index(outcome)][param_idx] += p;
}

}  // namespace

HostBias::HostBias(Rational bias) : q(std::move(bias)) {
  if (!q.is_probability()) {
    throw std::invalid_argument("host bias must lie in [0, 1], got " + q.str());
  }
}

PromiseSet::PromiseSet(std::set<std::string> labels) : told(std::move(labels)) {
  for (const auto& l : told) {
    if (std::find(kPrisoners.begin(), kPrisoners.end(), l) == kPrisoners.end()) {
      throw std::invalid_argument("promise set may only contain A, B, C; got '" + l + "'");
    }
  }
}

DiscreteModel monty_hall(const HostBias& bias) {
  DiscreteModel m;
  m.name = bias.q == kHalf ? "monty" : "monty-biased:" + bias.q.str();
  m.params = {kDoors.begin(), kDoors.end()};
  m.outcomes = {"y1", "y2", "y3"};
  m.table.assign(3, std::vector<Rational>(3, kZero));
  m.reveals = {{"y2", "2"}, {"y3", "3"}};
  // Contestant holds Door 1. The host opens a door that is neither the
  // contestant's nor the car's; only theta = 1 leaves him a choice.
  for (std::size_t t = 0; t < 3; ++t) {
    const std::string& car = m.params[t];
    if (car == "1") {
      add_mass(m, "y2", t, bias.q);
      add_mass(m, "y3", t, kOne - bias.q);
    } else {
      add_mass(m, car == "2" ? "y3" : "y2", t, kOne);
    }
  }
  finish(m);
  return m;
}

DiscreteModel forgetful_host() {
  DiscreteModel m;
  m.name = "forgetful";
  m.params = {kDoors.begin(), kDoors.end()};
  m.outcomes = {"y2", "y3", "y4"};
  m.table.assign(3, std::vector<Rational>(3, kZero));
  m.game_off = {"y4"};
  m.reveals = {{"y2", "3"}, {"y3", "2"}};
  // Host opens Door 2 or 3 uniformly. Opening the car door cancels the
  // game (y4); otherwise the outcome is the door left un-opened.
  for (std::size_t t = 0; t < 3; ++t) {
    const std::string& car = m.params[t];
    for (const std::string& opened : {"2", "3"}) {
      std::string outcome = opened == car ? "y4" : (opened == "2" ? "y3" : "y2");
      add_mass(m, outcome, t, kHalf);
    }
  }
  finish(m);
  return m;
}

namespace {

// Answers the guard may give to `asker`: an executee other than the asker
// himself, uniform when two answers are possible.
std::vector<std::string> guard_answers(const std::string& released, const std::string& asker) {
  std::vector<std::string> allowed;
  for (const auto& p : kDoors) {
    if (p != released && p != asker) allowed.push_back(p);
  }
  return allowed;
}

}  // namespace

DiscreteModel prisoners_guard_single() {
  DiscreteModel m;
  m.name = "guard-single";
  m.params = {kDoors.begin(), kDoors.end()};
  m.outcomes = {"a1", "a2", "a3"};
  m.table.assign(3, std::vector<Rational>(3, kZero));
  m.reveals = {{"a2", "2"}, {"a3", "3"}};
  for (std::size_t t = 0; t < 3; ++t) {
    auto answers = guard_answers(m.params[t], "1");
    Rational p = kOne / Rational(static_cast<long long>(answers.size()));
    for (const auto& a : answers) add_mass(m, "a" + a, t, p);
  }
  finish(m);
  return m;
}

DiscreteModel prisoners_guard_joint() {
  DiscreteModel m;
  m.name = "guard-joint";
  m.params = {kDoors.begin(), kDoors.end()};
  for (const auto& a1 : kDoors) {
    for (const auto& a2 : kDoors) {
      m.outcomes.push_back("(" + a1 + "," + a2 + ")");
    }
  }
  m.table.assign(m.outcomes.size(), std::vector<Rational>(3, kZero));
  // Given the released prisoner, the two answers are independent, each
  // uniform over its allowed set.
  for (std::size_t t = 0; t < 3; ++t) {
    auto first = guard_answers(m.params[t], "1");
    auto second = guard_answers(m.params[t], "2");
    Rational p = kOne / Rational(static_cast<long long>(first.size() * second.size()));
    for (const auto& a1 : first) {
      for (const auto& a2 : second) {
        add_mass(m, "(" + a1 + "," + a2 + ")", t, p);
      }
    }
  }
  finish(m);
  return m;
}

DiscreteModel news_random_order() { return news_promised(PromiseSet({})); }

DiscreteModel news_promised(const PromiseSet& promises) {
  DiscreteModel m;
  m.name = "news";
  if (!promises.told.empty()) {
    m.name = "news-promised:";
    for (const auto& p : promises.told) m.name += p;
  }
  m.params = {kDoors.begin(), kDoors.end()};
  m.outcomes = {"y1", "y2", "y3"};
  m.table.assign(3, std::vector<Rational>(3, kZero));
  m.reveals = {{"y1", "1"}, {"y2", "2"}, {"y3", "3"}};
  // Uniform execution order over the two non-released prisoners,
  // conditioned on no promised prisoner going first. If both executees
  // were promised the condition is unsatisfiable and the column stays
  // all-zero.
  for (std::size_t t = 0; t < 3; ++t) {
    std::vector<std::string> allowed_first;
    for (std::size_t p = 0; p < 3; ++p) {
      if (p == t) continue;
      if (promises.told.count(kPrisoners[p]) > 0) continue;
      allowed_first.push_back(m.params[p]);
    }
    if (allowed_first.empty()) continue;
    Rational p = kOne / Rational(static_cast<long long>(allowed_first.size()));
    for (const auto& f : allowed_first) add_mass(m, "y" + f, t, p);
  }
  finish(m);
  return m;
}

DiscreteModel scenario_by_name(const std::string& ref) {
  std::string head = ref;
  std::string arg;
  bool has_arg = false;
  if (auto colon = ref.find(':'); colon != std::string::npos) {
    head = ref.substr(0, colon);
    arg = ref.substr(colon + 1);
    has_arg = true;
  }
  if (head == "monty" && !has_arg) return monty_hall(HostBias(kHalf));
  if (head == "monty-biased") {
    if (!has_arg) throw std::invalid_argument("monty-biased needs a bias, e.g. monty-biased:3/4");
    return monty_hall(HostBias(Rational::parse(arg)));
  }
  if (head == "forgetful" && !has_arg) return forgetful_host();
  if (head == "guard-single" && !has_arg) return prisoners_guard_single();
  if (head == "guard-joint" && !has_arg) return prisoners_guard_joint();
  if (head == "news" && !has_arg) return news_random_order();
  if (head == "news-promised") {
    std::set<std::string> told;
    for (char c : arg) told.insert(std::string(1, c));
    return news_promised(PromiseSet(std::move(told)));
  }
  throw std::invalid_argument("unknown scenario '" + ref + "'");
}

}  // namespace sdg
