#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "campaign/flow.hpp"
#include "campaign/instances.hpp"
#include "campaign/io.hpp"
#include "campaign/rng.hpp"
#include "campaign/shift.hpp"
#include "campaign/single_peaked.hpp"
#include "campaign/support.hpp"

namespace {

using namespace campaign;

constexpr int kOk = 0;
constexpr int kInfeasible = 1;
constexpr int kUsage = 2;

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

RuleId pick_rule(const InstanceFile& file, const std::string& flag) {
  if (flag.empty()) return file.rule;
  auto rule = rule_from_name(flag);
  if (!rule) throw std::runtime_error("unknown rule `" + flag + "`");
  return *rule;
}

std::string join_ints(const std::vector<int>& xs) {
  std::ostringstream out;
  for (size_t i = 0; i < xs.size(); ++i) out << (i ? " " : "") << xs[i];
  return out.str();
}

void print_report(const RuleId& rule, const WinnerReport& rep) {
  std::cout << "rule: " << rule_name(rule) << "\n";
  std::cout << "winners: " << join_ints(rep.winners) << "\n";
  std::cout << "winning-round: "
            << (rep.winning_round ? std::to_string(*rep.winning_round) : std::string("approval"))
            << "\n";
  std::cout << "scores: " << join_ints(rep.scores) << "\n";
}

int print_solution(const RuleId& rule, const BriberySolution& sol, bool destructive,
                   std::optional<std::pair<std::uint64_t, int>> seed_info = std::nullopt) {
  std::cout << "mode: " << (destructive ? "destructive" : "constructive") << "\n";
  std::cout << "rule: " << rule_name(rule) << "\n";
  std::cout << "status: " << (sol.cost.is_infinite() ? "infeasible" : "ok") << "\n";
  std::cout << "cost: " << sol.cost.str() << "\n";
  if (std::holds_alternative<ShiftAction>(sol.action))
    std::cout << "action-shift: " << join_ints(std::get<ShiftAction>(sol.action).shifts) << "\n";
  else
    std::cout << "action-push: " << join_ints(std::get<PushAction>(sol.action).deltas) << "\n";
  std::cout << "winners: " << join_ints(sol.certificate.winners) << "\n";
  std::cout << "winning-round: "
            << (sol.certificate.winning_round ? std::to_string(*sol.certificate.winning_round)
                                              : std::string("approval"))
            << "\n";
  if (seed_info) {
    std::cout << "seed: " << seed_info->first << "\n";
    std::cout << "trials: " << seed_info->second << "\n";
  }
  return sol.cost.is_infinite() ? kInfeasible : kOk;
}

int run(int argc, char** argv) {
  CLI::App app{"campaign bribery solvers for approval-driven voting rules"};
  app.require_subcommand(1);

  std::string file, rule_flag, action_file, graph_file;
  std::uint64_t seed = 1;
  int trials = 0, beta_prime = 6;

  auto* winners_cmd = app.add_subcommand("winners", "winner determination");
  winners_cmd->add_option("file", file)->required();
  winners_cmd->add_option("--rule", rule_flag);

  auto* axis_cmd = app.add_subcommand("axis", "single-peakedness detection");
  axis_cmd->add_option("file", file)->required();

  auto* shift_cmd = app.add_subcommand("shift-solve", "optimal shift bribery");
  shift_cmd->add_option("file", file)->required();
  shift_cmd->add_option("--rule", rule_flag);
  bool use_oracle = false;
  shift_cmd->add_flag("--oracle", use_oracle, "use the brute-force oracle");

  auto* support_cmd = app.add_subcommand("support-solve", "optimal support bribery (one-sided costs)");
  support_cmd->add_option("file", file)->required();
  support_cmd->add_option("--rule", rule_flag);
  support_cmd->add_option("--beta-prime", beta_prime, "maximum total approval-count change");
  support_cmd->add_option("--seed", seed);
  support_cmd->add_option("--trials", trials);
  support_cmd->add_flag("--oracle", use_oracle, "use the brute-force oracle");

  auto* approx_cmd = app.add_subcommand("support-approx",
                                        "(1+eps)-approximate SP-AV support bribery, single-peaked");
  approx_cmd->add_option("file", file)->required();
  double epsilon = 0.25;
  std::string budget_flag;
  approx_cmd->add_option("--epsilon", epsilon)->required();
  approx_cmd->add_option("--budget", budget_flag)->required();
  approx_cmd->add_option("--beta-prime", beta_prime);
  approx_cmd->add_option("--seed", seed);
  approx_cmd->add_option("--trials", trials);

  auto* destr_cmd = app.add_subcommand("destructive", "destructive support bribery");
  destr_cmd->add_option("file", file)->required();
  destr_cmd->add_option("--rule", rule_flag);
  destr_cmd->add_flag("--oracle", use_oracle, "use the brute-force oracle");

  auto* params_cmd = app.add_subcommand("params", "alpha / beta / beta' of an instance");
  params_cmd->add_option("file", file)->required();
  params_cmd->add_option("--rule", rule_flag);

  auto* verify_cmd = app.add_subcommand("verify", "replay a solver report against an instance");
  verify_cmd->add_option("file", file)->required();
  verify_cmd->add_option("actionfile", action_file)->required();
  verify_cmd->add_option("--rule", rule_flag);

  auto* gen_cmd = app.add_subcommand("gen", "instance generators");
  gen_cmd->require_subcommand(1);
  int gm = 4, gn = 5, gk = 2;
  std::string approval_law = "uniform", costs_kind = "unit", variant = "negative";
  std::string gen_rule = "fallback";
  auto* gen_random_cmd = gen_cmd->add_subcommand("random", "uniformly random election");
  gen_random_cmd->add_option("--m", gm)->required();
  gen_random_cmd->add_option("--n", gn)->required();
  gen_random_cmd->add_option("--seed", seed);
  gen_random_cmd->add_option("--approvals", approval_law, "`uniform` or `fixed:K`");
  gen_random_cmd->add_option("--costs", costs_kind, "unit|random|positive|negative");
  gen_random_cmd->add_option("--rule", gen_rule);
  auto* gen_sp_cmd = gen_cmd->add_subcommand("sp", "random single-peaked election");
  gen_sp_cmd->add_option("--m", gm)->required();
  gen_sp_cmd->add_option("--n", gn)->required();
  gen_sp_cmd->add_option("--seed", seed);
  gen_sp_cmd->add_option("--costs", costs_kind);
  gen_sp_cmd->add_option("--rule", gen_rule);
  auto* gen_dom_cmd = gen_cmd->add_subcommand("domset", "dominating-set reduction instance");
  gen_dom_cmd->add_option("graph", graph_file)->required();
  gen_dom_cmd->add_option("-k", gk)->required();
  gen_dom_cmd->add_option("--variant", variant, "positive|negative");
  gen_dom_cmd->add_option("--rule", gen_rule);
  auto* gen_mcc_cmd = gen_cmd->add_subcommand("mcclique", "multicolored-clique reduction instance");
  gen_mcc_cmd->add_option("graph", graph_file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (*winners_cmd) {
    InstanceFile inst = parse_instance(read_file(file));
    RuleId rule = pick_rule(inst, rule_flag);
    print_report(rule, winners(inst.election, rule));
    return kOk;
  }

  if (*axis_cmd) {
    InstanceFile inst = parse_instance(read_file(file));
    auto axis = single_peaked_axis(inst.election);
    if (!axis) {
      std::cout << "axis: none\n";
      return kInfeasible;
    }
    std::cout << "axis: " << join_ints(axis->order) << "\n";
    return kOk;
  }

  if (*shift_cmd) {
    InstanceFile inst = parse_instance(read_file(file));
    RuleId rule = pick_rule(inst, rule_flag);
    if (!inst.shift_costs) throw std::runtime_error("instance has no shiftcost section");
    ShiftInstance si{inst.election, *inst.shift_costs, rule};
    BriberySolution sol = use_oracle ? brute_force_shift(si) : solve_shift(si);
    return print_solution(rule, sol, false);
  }

  if (*support_cmd) {
    InstanceFile inst = parse_instance(read_file(file));
    RuleId rule = pick_rule(inst, rule_flag);
    if (!inst.support_costs) throw std::runtime_error("instance has no supportcost section");
    SupportInstance si{inst.election, *inst.support_costs, rule, inst.budget};
    BriberySolution sol =
        use_oracle ? brute_force_support(si) : solve_support_fpt(si, beta_prime, seed, trials);
    std::optional<std::pair<std::uint64_t, int>> seed_info;
    if (!use_oracle) seed_info = {seed, trials};
    return print_solution(rule, sol, false, seed_info);
  }

  if (*approx_cmd) {
    InstanceFile inst = parse_instance(read_file(file));
    if (!inst.support_costs) throw std::runtime_error("instance has no supportcost section");
    // epsilon as an exact rational with denominator 1e6
    int den = 1000000;
    int num = static_cast<int>(epsilon * den + 0.5);
    if (num <= 0) throw std::runtime_error("epsilon must be positive");
    Cost budget = budget_flag == "inf" ? Cost::infinite() : Cost(std::stoll(budget_flag));
    SupportInstance si{inst.election, *inst.support_costs, RuleId::spav(), budget};
    BriberySolution sol =
        approx_spav_single_peaked(si, num, den, budget, beta_prime, seed, trials);
    return print_solution(RuleId::spav(), sol, false, std::optional(std::pair(seed, trials)));
  }

  if (*destr_cmd) {
    InstanceFile inst = parse_instance(read_file(file));
    RuleId rule = pick_rule(inst, rule_flag);
    if (!inst.support_costs) throw std::runtime_error("instance has no supportcost section");
    BriberySolution sol;
    if (use_oracle) {
      SupportInstance si{inst.election, *inst.support_costs, rule, inst.budget};
      sol = brute_force_destructive(si);
    } else {
      sol = solve_destructive_support(inst.election, *inst.support_costs, rule);
    }
    return print_solution(rule, sol, true);
  }

  if (*params_cmd) {
    InstanceFile inst = parse_instance(read_file(file));
    RuleId rule = pick_rule(inst, rule_flag);
    if (!inst.support_costs) throw std::runtime_error("instance has no supportcost section");
    SupportInstance si{inst.election, *inst.support_costs, rule, inst.budget};
    auto stats = compute_parameters(si);
    if (!stats) {
      std::cout << "status: infeasible\n";
      return kInfeasible;
    }
    std::cout << "alpha: " << stats->alpha << "\n";
    std::cout << "beta: " << stats->beta << "\n";
    std::cout << "beta-prime: " << stats->beta_prime << "\n";
    return kOk;
  }

  if (*verify_cmd) {
    InstanceFile inst = parse_instance(read_file(file));
    RuleId rule = pick_rule(inst, rule_flag);
    std::istringstream in(read_file(action_file));
    std::string line;
    std::optional<ShiftAction> shift;
    std::optional<PushAction> push;
    std::optional<Cost> stated_cost;
    bool destructive = false;
    while (std::getline(in, line)) {
      std::istringstream ls(line);
      std::string kw;
      ls >> kw;
      if (kw == "action-shift:") {
        ShiftAction a;
        int x;
        while (ls >> x) a.shifts.push_back(x);
        shift = std::move(a);
      } else if (kw == "action-push:") {
        PushAction a;
        int x;
        while (ls >> x) a.deltas.push_back(x);
        push = std::move(a);
      } else if (kw == "cost:") {
        std::string tok;
        ls >> tok;
        if (tok != "inf") stated_cost = Cost(std::stoll(tok));
      } else if (kw == "mode:") {
        std::string tok;
        ls >> tok;
        destructive = tok == "destructive";
      } else if (kw == "rule:") {
        std::string name, arg;
        ls >> name;
        if (ls >> arg) name += " " + arg;
        if (rule_flag.empty()) {
          auto r = rule_from_name(name);
          if (r) rule = *r;
        }
      }
    }
    if (!shift && !push) throw std::runtime_error("action file has no action-shift/action-push line");
    Election after = shift ? apply_shift(inst.election, *shift) : apply_push(inst.election, *push);
    WinnerReport rep = winners(after, rule);
    bool success = destructive ? !rep.contains(inst.election.designated)
                               : rep.contains(inst.election.designated);
    if (stated_cost) {
      Cost actual = shift ? shift_cost(*inst.shift_costs, *shift)
                          : support_cost(inst.election, *inst.support_costs, *push);
      if (actual != *stated_cost) {
        std::cout << "verify: cost mismatch (stated " << stated_cost->str() << ", actual "
                  << actual.str() << ")\n";
        return kInfeasible;
      }
    }
    std::cout << "verify: " << (success ? "ok" : "failed") << "\n";
    std::cout << "winners: " << join_ints(rep.winners) << "\n";
    return success ? kOk : kInfeasible;
  }

  // gen subcommands
  InstanceFile out;
  if (*gen_random_cmd || *gen_sp_cmd) {
    auto rule = rule_from_name(gen_rule);
    if (!rule) throw std::runtime_error("unknown rule `" + gen_rule + "`");
    out.rule = *rule;
    if (*gen_random_cmd) {
      std::optional<int> fixed;
      if (approval_law.rfind("fixed:", 0) == 0) fixed = std::stoi(approval_law.substr(6));
      else if (approval_law != "uniform")
        throw std::runtime_error("approval law must be `uniform` or `fixed:K`");
      out.election = gen_random(gm, gn, seed, fixed);
    } else {
      out.election = gen_single_peaked(gm, gn, seed).first;
    }
    if (costs_kind == "unit") {
      out.shift_costs = unit_shift_costs(out.election);
      out.support_costs = unit_support_costs(out.election);
    } else if (costs_kind == "random") {
      out.shift_costs = random_shift_costs(out.election, Rng::child_seed(seed, 1), 5, 10);
      out.support_costs = random_support_costs(out.election, Rng::child_seed(seed, 2), 5, 10);
    } else if (costs_kind == "positive" || costs_kind == "negative") {
      out.shift_costs = unit_shift_costs(out.election);
      out.support_costs = one_sided_support_costs(out.election, costs_kind == "positive");
    } else {
      throw std::runtime_error("unknown cost kind `" + costs_kind + "`");
    }
  } else if (*gen_dom_cmd) {
    GraphInstance g = parse_graph(read_file(graph_file));
    auto rule = rule_from_name(gen_rule);
    if (!rule) throw std::runtime_error("unknown rule `" + gen_rule + "`");
    if (variant != "positive" && variant != "negative")
      throw std::runtime_error("variant must be `positive` or `negative`");
    SupportInstance si = reduce_dominating_set(g, gk, variant == "positive", *rule);
    out.election = std::move(si.election);
    out.support_costs = std::move(si.costs);
    out.rule = si.rule;
    out.budget = si.budget;
  } else if (*gen_mcc_cmd) {
    GraphInstance g = parse_graph(read_file(graph_file));
    if (g.partition.empty())
      throw std::runtime_error("mcclique generator needs a partitioned graph");
    auto [si, budget] = reduce_multicolored_clique(g, static_cast<int>(g.partition.size()));
    out.election = std::move(si.election);
    out.support_costs = std::move(si.costs);
    out.rule = si.rule;
    out.budget = budget;
  }
  std::cout << serialize_instance(out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::ParseError&) {
    return kUsage;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kUsage;
  }
}
