#include "sdg/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "sdg/analysis.hpp"
#include "sdg/dsl.hpp"
#include "sdg/json_io.hpp"
#include "sdg/model.hpp"
#include "sdg/scenarios.hpp"
#include "sdg/simulate.hpp"

namespace sdg::cli {

namespace {

struct CommandError {
  int code;
  std::string message;
};

DiscreteModel load_scenario(const std::string& ref) {
  if (ref.size() > 4 && ref.ends_with(".sdg")) {
    std::ifstream in(ref);
    if (!in) throw CommandError{kUsage, "cannot open scenario file '" + ref + "'"};
    std::ostringstream buf;
    buf << in.rdbuf();
    return compile(parse(buf.str()));  // ParseError/ValidationError -> kInvalid
  }
  try {
    return scenario_by_name(ref);
  } catch (const std::invalid_argument& e) {
    throw CommandError{kUsage, e.what()};
  }
}

Prior make_prior(const DiscreteModel& model, const std::vector<std::string>& weights) {
  if (weights.empty()) return Prior::uniform(model);
  std::vector<Rational> values;
  for (const auto& w : weights) values.push_back(Rational::parse(w));
  return Prior::from_weights(model, values);
}

std::string brace_set(const std::vector<std::string>& labels) {
  std::string s = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i > 0) s += ",";
    s += labels[i];
  }
  return s + "}";
}

void print_aligned(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c >= width.size()) width.push_back(0);
      width[c] = std::max(width[c], row[c].size());
    }
  }
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << row[c];
      if (c + 1 < row.size()) out << std::string(width[c] - row[c].size() + 2, ' ');
    }
    out << "\n";
  }
}

std::string decision_line(const Decision& d) {
  return to_string(d.verdict) + " -> " + brace_set(d.targets);
}

void print_model_table(std::ostream& out, const DiscreteModel& model) {
  out << "scenario: " << model.name << "\n";
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header = {""};
  for (const auto& p : model.params) header.push_back("theta=" + p);
  rows.push_back(header);
  for (std::size_t r = 0; r < model.outcomes.size(); ++r) {
    std::vector<std::string> row = {model.outcomes[r] +
                                    (model.is_game_off(model.outcomes[r]) ? " [game off]" : "")};
    for (const auto& v : model.table[r]) row.push_back(v.str());
    rows.push_back(std::move(row));
  }
  std::vector<std::string> total = {"Total"};
  for (std::size_t c = 0; c < model.params.size(); ++c) {
    Rational sum = model.column_sum(c);
    total.push_back(sum.str() + (sum.is_zero() ? " (infeasible)" : ""));
  }
  rows.push_back(std::move(total));
  print_aligned(out, rows);
}

void print_simulation(std::ostream& out, const SimulationReport& report) {
  out << "scenario: " << report.model_name << "  initial: " << report.initial
      << "  trials: " << report.trials << "  seed: " << report.seed << "\n";
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"policy", "wins", "losses", "cancelled", "win rate", "exact win",
                  "cancel rate", "exact cancel", "4se band"});
  auto fmt = [](double v) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(6) << v;
    return s.str();
  };
  for (const auto& t : report.tallies) {
    rows.push_back({to_string(t.policy), std::to_string(t.wins), std::to_string(t.losses),
                    std::to_string(t.cancelled),
                    fmt(SimulationReport::rate(t.wins, report.trials)), t.exact.win.str(),
                    fmt(SimulationReport::rate(t.cancelled, report.trials)),
                    t.exact.cancelled.str(),
                    fmt(SimulationReport::four_standard_errors(t.exact.win.to_double(),
                                                               report.trials))});
  }
  print_aligned(out, rows);
}

void print_mutual_consent(std::ostream& out, const MutualConsentReport& report) {
  out << "A1=" << report.observed_a1 << " ("
      << (report.willingness == Willingness::Weak ? "weak" : "strict") << " willingness):\n";
  for (const auto& c : report.cases) {
    out << "  " << c.outcome << ": A " << (c.a_willing ? "willing" : "unwilling") << ", B "
        << (c.b_willing ? "willing" : "unwilling");
    if (c.mutual) out << " -> mutual consent, " << (c.neutral ? "neutral" : "NOT neutral");
    out << "\n";
  }
  out << "  every consented swap neutral: "
      << (report.every_consented_swap_neutral ? "yes" : "no") << "\n";
}

struct Options {
  std::string scenario;
  std::string scenario_b;
  std::string obs;
  std::string initial = "1";
  std::vector<std::string> prior;
  std::vector<std::string> policies;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 42;
  unsigned threads = 1;
  bool strict = false;
  bool joint = false;
  std::string format = "text";
  std::string output_path;
  std::string file;
};

int dispatch(const std::string& command, const Options& opt, std::ostream& out,
             std::ostream& err) {
  Json json;
  std::ostringstream text;
  int code = kOk;

  if (command == "table") {
    DiscreteModel model = load_scenario(opt.scenario);
    ValidationReport report = validate(model);
    json = model_to_json(model);
    json["feasible"] = report.feasible;
    json["infeasible"] = report.infeasible;
    print_model_table(text, model);
  } else if (command == "likelihood") {
    DiscreteModel model = load_scenario(opt.scenario);
    auto lik = likelihood(model, opt.obs);
    auto mle_set = mle(model, opt.obs);
    json = likelihood_to_json(model, opt.obs);
    std::vector<std::vector<std::string>> rows{{"theta", "likelihood"}};
    for (std::size_t i = 0; i < model.params.size(); ++i) {
      rows.push_back({model.params[i], lik[i].str()});
    }
    text << "scenario: " << model.name << "  outcome: " << opt.obs << "\n";
    print_aligned(text, rows);
    text << "mle: " << brace_set(mle_set) << "\n";
    if (mle_set.empty()) code = kUndefined;
  } else if (command == "decide") {
    DiscreteModel model = load_scenario(opt.scenario);
    Decision d = decide(model, opt.obs, opt.initial);
    json = decision_to_json(d);
    text << decision_line(d) << "\n";
    if (d.verdict == Verdict::Undefined) code = kUndefined;
  } else if (command == "posterior") {
    DiscreteModel model = load_scenario(opt.scenario);
    auto post = posterior(model, make_prior(model, opt.prior), opt.obs);
    json = posterior_to_json(post);
    std::vector<std::vector<std::string>> rows{{"theta", "posterior"}};
    for (const auto& [label, p] : post) rows.push_back({label, p.str()});
    print_aligned(text, rows);
  } else if (command == "winprob") {
    DiscreteModel model = load_scenario(opt.scenario);
    Prior prior = make_prior(model, opt.prior);
    json = Json::array();
    for (const auto& name : opt.policies) {
      PolicyKind policy = parse_policy(name);
      WinProbability wp = win_probability(model, prior, policy, opt.initial);
      json.push_back(win_probability_to_json(policy, wp));
      text << "policy: " << name << "  win: " << wp.win << "  cancelled: " << wp.cancelled
           << "  loss: " << wp.loss() << "\n";
    }
  } else if (command == "compare") {
    DiscreteModel a = load_scenario(opt.scenario);
    DiscreteModel b = load_scenario(opt.scenario_b);
    EvidenceComparison cmp = compare_evidence(a, b, opt.obs, opt.initial);
    json = comparison_to_json(cmp);
    text << "outcome: " << cmp.outcome << "\n";
    text << cmp.name_a << ": mle " << brace_set(cmp.mle_a) << ", "
         << decision_line(cmp.decision_a) << "\n";
    text << cmp.name_b << ": mle " << brace_set(cmp.mle_b) << ", "
         << decision_line(cmp.decision_b) << "\n";
  } else if (command == "paradox") {
    Willingness will = opt.strict ? Willingness::Strict : Willingness::Weak;
    auto table = consent_table();
    auto consent_a1_2 = mutual_consent("2", will);
    auto consent_a1_3 = mutual_consent("3", will);
    json["consent_table"] = consent_table_to_json(table);
    json["mutual_consent"] = Json::array({mutual_consent_to_json(consent_a1_2),
                                          mutual_consent_to_json(consent_a1_3)});
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"(A1,A2)", "theta=1", "theta=2", "theta=3", "mle", "Better for A",
                    "Better for B"});
    for (const auto& row : table) {
      rows.push_back({row.outcome, row.likelihoods[0].str(), row.likelihoods[1].str(),
                      row.likelihoods[2].str(), brace_set(row.mle_set),
                      to_string(row.better_for_a), to_string(row.better_for_b)});
    }
    print_aligned(text, rows);
    text << "\nA swap of punishments needs mutual consent:\n";
    print_mutual_consent(text, consent_a1_2);
    print_mutual_consent(text, consent_a1_3);
  } else if (command == "simulate") {
    if (opt.joint) {
      JointSimulationReport report = simulate_joint(opt.trials, opt.seed, opt.threads);
      json = joint_simulation_to_json(report);
      text << "joint guard model, trials: " << report.trials << "  seed: " << report.seed
           << "\n";
      std::vector<std::vector<std::string>> rows{
          {"theta", "(A1,A2)", "count", "frequency", "exact"}};
      for (const auto& c : report.cells) {
        std::ostringstream freq;
        freq << std::fixed << std::setprecision(6)
             << SimulationReport::rate(c.count, report.trials);
        rows.push_back({c.theta, c.outcome, std::to_string(c.count), freq.str(), c.exact.str()});
      }
      print_aligned(text, rows);
    } else {
      DiscreteModel model = load_scenario(opt.scenario);
      Prior prior = make_prior(model, opt.prior);
      std::vector<PolicyKind> policies;
      for (const auto& name : opt.policies) policies.push_back(parse_policy(name));
      SimulationReport report =
          simulate(model, prior, policies, opt.initial, opt.trials, opt.seed, opt.threads);
      json = simulation_to_json(report);
      print_simulation(text, report);
    }
  } else if (command == "check") {
    std::ifstream in(opt.file);
    if (!in) throw CommandError{kUsage, "cannot open scenario file '" + opt.file + "'"};
    std::ostringstream buf;
    buf << in.rdbuf();
    DiscreteModel model = compile(parse(buf.str()));
    ValidationReport report = validate(model);
    json = model_to_json(model);
    json["feasible"] = report.feasible;
    json["infeasible"] = report.infeasible;
    text << "OK: " << model.name << " (" << model.params.size() << " params, "
         << model.outcomes.size() << " outcomes";
    if (!report.infeasible.empty()) {
      text << "; infeasible: " << brace_set(report.infeasible);
    }
    text << ")\n";
  } else {
    throw CommandError{kUsage, "unknown subcommand '" + command + "'"};
  }

  std::string rendered = opt.format == "json" ? json.dump(2) + "\n" : text.str();
  if (!opt.output_path.empty()) {
    std::ofstream file(opt.output_path);
    if (!file) throw CommandError{kUsage, "cannot write to '" + opt.output_path + "'"};
    file << rendered;
  } else {
    out << rendered;
  }
  (void)err;
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact likelihood analysis of selective disclosure games "
               "(Monty Hall, three prisoners)"};
  app.require_subcommand(1);

  Options opt;
  std::string command;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--output", opt.output_path, "Write output to a file instead of stdout");
    sub->parse_complete_callback([&, sub] { command = sub->get_name(); });
  };
  auto add_scenario = [&](CLI::App* sub) {
    sub->add_option("scenario", opt.scenario,
                    "Built-in scenario (monty, monty-biased:<q>, forgetful, guard-single, "
                    "guard-joint, news, news-promised:<letters>) or a .sdg file path")
        ->required();
  };

  auto* table = app.add_subcommand("table", "Print the probability table with a Total row");
  add_scenario(table);
  add_common(table);

  auto* lik = app.add_subcommand("likelihood", "Likelihood vector and MLE set for an outcome");
  add_scenario(lik);
  lik->add_option("--obs", opt.obs, "Observed outcome label")->required();
  add_common(lik);

  auto* dec = app.add_subcommand("decide", "Switch/stay decision for an observation");
  add_scenario(dec);
  dec->add_option("--obs", opt.obs, "Observed outcome label")->required();
  dec->add_option("--initial", opt.initial, "Initial choice (default 1)");
  add_common(dec);

  auto* post = app.add_subcommand("posterior", "Exact posterior over parameters");
  add_scenario(post);
  post->add_option("--obs", opt.obs, "Observed outcome label")->required();
  post->add_option("--prior", opt.prior,
                   "Prior weights per parameter, e.g. --prior 1/2 1/4 1/4 (default uniform)");
  add_common(post);

  auto* win = app.add_subcommand("winprob", "Exact win/cancel probabilities for policies");
  add_scenario(win);
  win->add_option("--policy", opt.policies, "Policies: stay, switch, mle")
      ->required()
      ->delimiter(',');
  win->add_option("--initial", opt.initial, "Initial choice (default 1)");
  win->add_option("--prior", opt.prior, "Prior weights per parameter (default uniform)");
  add_common(win);

  auto* cmp = app.add_subcommand("compare", "Same observation under two models");
  add_scenario(cmp);
  cmp->add_option("scenario_b", opt.scenario_b, "Second scenario")->required();
  cmp->add_option("--obs", opt.obs, "Observed outcome label")->required();
  cmp->add_option("--initial", opt.initial, "Initial choice (default 1)");
  add_common(cmp);

  auto* par = app.add_subcommand("paradox",
                                 "Two-prisoner consent table and mutual-consent analysis");
  par->add_flag("--strict", opt.strict, "Require strict advantage for willingness");
  add_common(par);

  auto* sim = app.add_subcommand("simulate", "Seeded Monte Carlo verification");
  sim->add_option("scenario", opt.scenario, "Scenario to simulate (unless --joint)");
  sim->add_option("--policy", opt.policies, "Policies: stay, switch, mle")->delimiter(',');
  sim->add_option("--trials", opt.trials, "Number of trials (default 100000)");
  sim->add_option("--seed", opt.seed, "Run seed (default 42)");
  sim->add_option("--threads", opt.threads, "Worker threads, 0 = hardware (default 1)");
  sim->add_option("--initial", opt.initial, "Initial choice (default 1)");
  sim->add_option("--prior", opt.prior, "Prior weights per parameter (default uniform)");
  sim->add_flag("--joint", opt.joint, "Sample the joint guard model (theta, A1, A2)");
  add_common(sim);

  auto* chk = app.add_subcommand("check", "Parse and validate a .sdg file");
  chk->add_option("file", opt.file, "Scenario file")->required();
  add_common(chk);

  std::vector<const char*> argv;
  argv.push_back("sdg");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (command == "simulate" && !opt.joint) {
      if (opt.scenario.empty()) throw CommandError{kUsage, "simulate needs a scenario or --joint"};
      if (opt.policies.empty()) throw CommandError{kUsage, "simulate needs --policy"};
    }
    return dispatch(command, opt, out, err);
  } catch (const CommandError& e) {
    err << "error: " << e.message << "\n";
    return e.code;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const UndefinedQuery& e) {
    err << "error: " << e.what() << "\n";
    return kUndefined;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace sdg::cli
