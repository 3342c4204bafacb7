#include "sdg/simulate.hpp"

#include <cmath>
#include <thread>

#include "sdg/rng.hpp"
#include "sdg/scenarios.hpp"

namespace sdg {

double SimulationReport::four_standard_errors(double p, std::uint64_t trials) {
  return 4.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

namespace {

unsigned resolve_threads(unsigned threads, std::uint64_t trials) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::uint64_t>(threads, trials));
}

// Runs worker(trial_index) over [0, trials) partitioned in contiguous
// blocks; each tally vector is merged by addition, so the partition does
// not affect the result.
template <typename Tally, typename Worker>
std::vector<Tally> run_partitioned(std::uint64_t trials, unsigned threads,
                                   std::vector<Tally> init, Worker worker) {
  threads = resolve_threads(threads, trials);
  std::vector<std::vector<Tally>> partial(threads, init);
  std::vector<std::thread> pool;
  std::uint64_t chunk = trials / threads;
  std::uint64_t rem = trials % threads;
  std::uint64_t begin = 0;
  for (unsigned t = 0; t < threads; ++t) {
    std::uint64_t end = begin + chunk + (t < rem ? 1 : 0);
    pool.emplace_back([&, t, begin, end] {
      for (std::uint64_t i = begin; i < end; ++i) worker(i, partial[t]);
    });
    begin = end;
  }
  for (auto& th : pool) th.join();
  for (unsigned t = 1; t < threads; ++t) {
    for (std::size_t k = 0; k < init.size(); ++k) partial[0][k] += partial[t][k];
  }
  return partial[0];
}

struct Counts {
  std::uint64_t wins = 0, losses = 0, cancelled = 0;
  Counts& operator+=(const Counts& o) {
    wins += o.wins;
    losses += o.losses;
    cancelled += o.cancelled;
    return *this;
  }
};

}  // namespace

SimulationReport simulate(const DiscreteModel& model, const Prior& prior,
                          const std::vector<PolicyKind>& policies, const std::string& initial,
                          std::uint64_t trials, std::uint64_t seed, unsigned threads) {
  if (trials == 0) throw std::invalid_argument("simulate: trials must be >= 1");
  SimulationReport report{model.name, initial, trials, seed, {}};
  for (PolicyKind p : policies) {
    // Also validates the prior against infeasible parameters up front.
    report.tallies.push_back({p, 0, 0, 0, win_probability(model, prior, p, initial)});
  }

  // Precompute each policy's final choice per (outcome, game-on) so the
  // trial loop is label-free.
  std::vector<std::vector<std::size_t>> final_choice(policies.size());  // [policy][outcome]
  std::vector<bool> off(model.outcomes.size());
  constexpr std::size_t kCancelled = static_cast<std::size_t>(-1);
  for (std::size_t r = 0; r < model.outcomes.size(); ++r) {
    off[r] = model.is_game_off(model.outcomes[r]);
  }
  for (std::size_t k = 0; k < policies.size(); ++k) {
    final_choice[k].assign(model.outcomes.size(), kCancelled);
    for (std::size_t r = 0; r < model.outcomes.size(); ++r) {
      if (off[r]) continue;
      bool reachable = false;
      for (const auto& v : model.table[r]) reachable = reachable || !v.is_zero();
      if (!reachable) continue;
      final_choice[k][r] =
          model.param_index(policy_choice(model, model.outcomes[r], initial, policies[k]));
    }
  }

  auto counts = run_partitioned<Counts>(
      trials, threads, std::vector<Counts>(policies.size()),
      [&](std::uint64_t i, std::vector<Counts>& tally) {
        SeededRng rng(trial_seed(seed, i));
        std::size_t theta = sample_categorical(rng, prior.weights);
        std::vector<Rational> column(model.outcomes.size());
        for (std::size_t r = 0; r < model.outcomes.size(); ++r) column[r] = model.table[r][theta];
        std::size_t outcome = sample_categorical(rng, column);
        for (std::size_t k = 0; k < policies.size(); ++k) {
          if (off[outcome]) {
            ++tally[k].cancelled;
          } else if (final_choice[k][outcome] == theta) {
            ++tally[k].wins;
          } else {
            ++tally[k].losses;
          }
        }
      });

  for (std::size_t k = 0; k < policies.size(); ++k) {
    report.tallies[k].wins = counts[k].wins;
    report.tallies[k].losses = counts[k].losses;
    report.tallies[k].cancelled = counts[k].cancelled;
  }
  return report;
}

JointSimulationReport simulate_joint(std::uint64_t trials, std::uint64_t seed,
                                     unsigned threads) {
  if (trials == 0) throw std::invalid_argument("simulate_joint: trials must be >= 1");
  DiscreteModel joint = prisoners_guard_joint();
  Prior prior = Prior::uniform(joint);

  JointSimulationReport report{trials, seed, {}};
  const std::size_t n_cells = joint.params.size() * joint.outcomes.size();
  auto counts = run_partitioned<std::uint64_t>(
      trials, threads, std::vector<std::uint64_t>(n_cells, 0),
      [&](std::uint64_t i, std::vector<std::uint64_t>& tally) {
        SeededRng rng(trial_seed(seed, i));
        std::size_t theta = sample_categorical(rng, prior.weights);
        std::vector<Rational> column(joint.outcomes.size());
        for (std::size_t r = 0; r < joint.outcomes.size(); ++r) column[r] = joint.table[r][theta];
        std::size_t outcome = sample_categorical(rng, column);
        ++tally[theta * joint.outcomes.size() + outcome];
      });

  for (std::size_t t = 0; t < joint.params.size(); ++t) {
    for (std::size_t r = 0; r < joint.outcomes.size(); ++r) {
      Rational exact = prior.weights[t] * joint.table[r][t];
      std::uint64_t count = counts[t * joint.outcomes.size() + r];
      if (exact.is_zero() && count == 0) continue;
      report.cells.push_back({joint.params[t], joint.outcomes[r], count, exact});
    }
  }
  return report;
}

}  // namespace sdg
