#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "campaign/flow.hpp"
#include "campaign/instances.hpp"
#include "campaign/io.hpp"
#include "campaign/shift.hpp"
#include "campaign/single_peaked.hpp"
#include "campaign/support.hpp"

namespace py = pybind11;
using namespace campaign;

namespace {

RuleId rule_arg(const std::string& name) {
  auto rule = rule_from_name(name);
  if (!rule) throw std::invalid_argument("unknown rule `" + name + "`");
  return *rule;
}

Election make_election(int m, int designated,
                       const std::vector<std::pair<std::vector<int>, int>>& voters) {
  Election e;
  e.num_candidates = m;
  e.designated = designated;
  for (const auto& [pref, ell] : voters) e.voters.push_back({pref, ell});
  validate(e);
  return e;
}

py::dict report_dict(const WinnerReport& rep) {
  py::dict d;
  d["winners"] = rep.winners;
  d["winning_round"] = rep.winning_round ? py::cast(*rep.winning_round) : py::none();
  d["scores"] = rep.scores;
  return d;
}

py::dict solution_dict(const BriberySolution& sol) {
  py::dict d;
  d["cost"] = sol.cost.is_infinite() ? py::none() : py::cast(sol.cost.value());
  if (std::holds_alternative<ShiftAction>(sol.action))
    d["shifts"] = std::get<ShiftAction>(sol.action).shifts;
  else
    d["deltas"] = std::get<PushAction>(sol.action).deltas;
  d["certificate"] = report_dict(sol.certificate);
  return d;
}

ShiftCostProfile shift_profile(const Election& e, const std::vector<std::vector<long long>>& rows) {
  ShiftCostProfile p;
  for (const auto& row : rows) {
    std::vector<Cost> r;
    for (long long v : row) r.push_back(v < 0 ? Cost::infinite() : Cost(v));
    p.rows.push_back(std::move(r));
  }
  validate(e, p);
  return p;
}

SupportCostProfile support_profile(const Election& e,
                                   const std::vector<std::vector<long long>>& rows) {
  SupportCostProfile p;
  for (const auto& row : rows) {
    std::vector<Cost> r;
    for (long long v : row) r.push_back(v < 0 ? Cost::infinite() : Cost(v));
    p.values.push_back(std::move(r));
  }
  validate(e, p);
  return p;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "campaign-management (bribery) solvers for approval-driven voting rules";

  py::class_<Election>(mod, "Election")
      .def(py::init(&make_election), py::arg("num_candidates"), py::arg("designated"),
           py::arg("voters"))
      .def_readonly("num_candidates", &Election::num_candidates)
      .def_readonly("designated", &Election::designated)
      .def_property_readonly("voters",
                             [](const Election& e) {
                               std::vector<std::pair<std::vector<int>, int>> out;
                               for (const Voter& v : e.voters)
                                 out.push_back({v.preference, v.approval_count});
                               return out;
                             })
      .def("__repr__", [](const Election& e) {
        return "<Election m=" + std::to_string(e.m()) + " n=" + std::to_string(e.n()) + ">";
      });

  mod.def("winners", [](const Election& e, const std::string& rule) {
    return report_dict(winners(e, rule_arg(rule)));
  });
  mod.def("rank", &rank, py::arg("election"), py::arg("candidate"), py::arg("voter"));
  mod.def("k_approval_scores", &k_approval_scores);
  mod.def("approval_scores", &approval_scores);
  mod.def("single_peaked_axis", [](const Election& e) -> py::object {
    auto axis = single_peaked_axis(e);
    return axis ? py::cast(axis->order) : py::none();
  });
  mod.def("apply_shift", [](const Election& e, const std::vector<int>& shifts) {
    return apply_shift(e, ShiftAction{shifts});
  });
  mod.def("apply_push", [](const Election& e, const std::vector<int>& deltas) {
    return apply_push(e, PushAction{deltas});
  });

  mod.def("solve_shift",
          [](const Election& e, const std::vector<std::vector<long long>>& costs,
             const std::string& rule) {
            ShiftInstance inst{e, shift_profile(e, costs), rule_arg(rule)};
            return solution_dict(solve_shift(inst));
          },
          py::arg("election"), py::arg("costs"), py::arg("rule"));
  mod.def("brute_force_shift",
          [](const Election& e, const std::vector<std::vector<long long>>& costs,
             const std::string& rule) {
            ShiftInstance inst{e, shift_profile(e, costs), rule_arg(rule)};
            return solution_dict(brute_force_shift(inst));
          });
  mod.def("solve_support",
          [](const Election& e, const std::vector<std::vector<long long>>& costs,
             const std::string& rule, int max_beta_prime, std::uint64_t seed, int trials) {
            SupportInstance inst{e, support_profile(e, costs), rule_arg(rule), std::nullopt};
            return solution_dict(solve_support_fpt(inst, max_beta_prime, seed, trials));
          },
          py::arg("election"), py::arg("costs"), py::arg("rule"), py::arg("max_beta_prime") = 6,
          py::arg("seed") = 1, py::arg("trials") = 0);
  mod.def("brute_force_support",
          [](const Election& e, const std::vector<std::vector<long long>>& costs,
             const std::string& rule) {
            SupportInstance inst{e, support_profile(e, costs), rule_arg(rule), std::nullopt};
            return solution_dict(brute_force_support(inst));
          });
  mod.def("solve_destructive",
          [](const Election& e, const std::vector<std::vector<long long>>& costs,
             const std::string& rule) {
            return solution_dict(solve_destructive_support(e, support_profile(e, costs),
                                                           rule_arg(rule)));
          });
  mod.def("approx_spav_single_peaked",
          [](const Election& e, const std::vector<std::vector<long long>>& costs, int eps_num,
             int eps_den, long long budget, int beta_prime, std::uint64_t seed, int trials) {
            SupportInstance inst{e, support_profile(e, costs), RuleId::spav(), Cost(budget)};
            return solution_dict(
                approx_spav_single_peaked(inst, eps_num, eps_den, Cost(budget), beta_prime,
                                          seed, trials));
          },
          py::arg("election"), py::arg("costs"), py::arg("eps_num"), py::arg("eps_den"),
          py::arg("budget"), py::arg("beta_prime"), py::arg("seed") = 1, py::arg("trials") = 0);
  mod.def("compute_parameters",
          [](const Election& e, const std::vector<std::vector<long long>>& costs,
             const std::string& rule) -> py::object {
            SupportInstance inst{e, support_profile(e, costs), rule_arg(rule), std::nullopt};
            auto stats = compute_parameters(inst);
            if (!stats) return py::none();
            py::dict d;
            d["alpha"] = stats->alpha;
            d["beta"] = stats->beta;
            d["beta_prime"] = stats->beta_prime;
            return d;
          });

  mod.def("gen_random",
          [](int m, int n, std::uint64_t seed, std::optional<int> fixed_approvals) {
            return gen_random(m, n, seed, fixed_approvals);
          },
          py::arg("m"), py::arg("n"), py::arg("seed"), py::arg("fixed_approvals") = py::none());
  mod.def("gen_single_peaked", [](int m, int n, std::uint64_t seed) {
    auto [e, axis] = gen_single_peaked(m, n, seed);
    return py::make_tuple(e, axis.order);
  });
  mod.def("unit_support_costs", [](const Election& e) {
    std::vector<std::vector<long long>> out;
    for (const auto& row : unit_support_costs(e).values) {
      std::vector<long long> r;
      for (const Cost& c : row) r.push_back(c.is_infinite() ? -1 : c.value());
      out.push_back(std::move(r));
    }
    return out;
  });
  mod.def("unit_shift_costs", [](const Election& e) {
    std::vector<std::vector<long long>> out;
    for (const auto& row : unit_shift_costs(e).rows) {
      std::vector<long long> r;
      for (const Cost& c : row) r.push_back(c.is_infinite() ? -1 : c.value());
      out.push_back(std::move(r));
    }
    return out;
  });

  mod.def("parse_instance", [](const std::string& text) {
    InstanceFile f = parse_instance(text);
    py::dict d;
    d["election"] = f.election;
    d["rule"] = rule_name(f.rule);
    d["names"] = f.names;
    d["budget"] = f.budget ? (f.budget->is_infinite() ? py::none() : py::cast(f.budget->value()))
                           : py::none();
    return d;
  });
  mod.def("roundtrip_instance",
          [](const std::string& text) { return serialize_instance(parse_instance(text)); });
}
