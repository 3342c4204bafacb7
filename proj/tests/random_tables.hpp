// Seeded generator of random valid models for the property suite.
#ifndef SDG_TESTS_RANDOM_TABLES_HPP
#define SDG_TESTS_RANDOM_TABLES_HPP

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "sdg/model.hpp"

namespace testgen {

// A valid model: 2-4 params, 2-5 outcomes, each column either all zero or
// a random exact composition of d/d over the outcomes. At least one
// column is feasible.
inline sdg::DiscreteModel random_model(std::mt19937_64& gen, int index) {
  auto pick = [&](int lo, int hi) {
    return lo + static_cast<int>(gen() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  sdg::DiscreteModel m;
  m.name = "random-" + std::to_string(index);
  int n_params = pick(2, 4);
  int n_outcomes = pick(2, 5);
  for (int p = 1; p <= n_params; ++p) m.params.push_back("p" + std::to_string(p));
  for (int o = 1; o <= n_outcomes; ++o) m.outcomes.push_back("o" + std::to_string(o));
  m.table.assign(n_outcomes, std::vector<sdg::Rational>(n_params, sdg::Rational(0)));

  for (int c = 0; c < n_params; ++c) {
    bool infeasible = c > 0 && pick(1, 10) == 1;  // column 0 always feasible
    if (infeasible) continue;
    long long den = pick(1, 12);
    // Distribute `den` unit masses over the outcomes.
    std::vector<long long> units(n_outcomes, 0);
    for (long long u = 0; u < den; ++u) ++units[pick(0, n_outcomes - 1)];
    for (int r = 0; r < n_outcomes; ++r) {
      m.table[r][c] = sdg::rational(units[r], den);
    }
  }
  return m;
}

}  // namespace testgen

#endif  // SDG_TESTS_RANDOM_TABLES_HPP
