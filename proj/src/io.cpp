#include "campaign/io.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace campaign {

namespace {

struct Line {
  int number;
  std::string text;
};

std::vector<Line> significant_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    size_t h = line.find('#');
    if (h != std::string::npos) line = line.substr(0, h);
    std::istringstream probe(line);
    std::string tok;
    if (probe >> tok) out.push_back({number, line});
  }
  return out;
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw std::runtime_error("line " + std::to_string(line) + ": " + msg);
}

Cost parse_cost(const std::string& tok, int line) {
  if (tok == "inf") return Cost::infinite();
  try {
    size_t used = 0;
    long long v = std::stoll(tok, &used);
    if (used != tok.size() || v < 0) fail(line, "bad cost value `" + tok + "`");
    return Cost(v);
  } catch (const std::runtime_error&) {
    throw;
  } catch (const std::exception&) {
    fail(line, "bad cost value `" + tok + "`");
  }
}

}  // namespace

InstanceFile parse_instance(const std::string& text) {
  std::vector<Line> lines = significant_lines(text);
  size_t at = 0;
  auto next = [&](const std::string& what) -> const Line& {
    if (at >= lines.size())
      throw std::runtime_error("line " + std::to_string(lines.empty() ? 1 : lines.back().number) +
                               ": unexpected end of file, expected " + what);
    return lines[at++];
  };

  InstanceFile f;
  int m = 0, n = 0;
  {
    const Line& l = next("`election M N`");
    std::istringstream in(l.text);
    std::string kw;
    in >> kw;
    if (kw != "election" || !(in >> m >> n) || m < 1 || n < 1)
      fail(l.number, "expected `election M N` with M, N >= 1");
  }
  {
    const Line& l = next("`rule ...`");
    std::istringstream in(l.text);
    std::string kw, name, arg;
    in >> kw >> name;
    if (in >> arg) name += " " + arg;
    auto rule = kw == "rule" ? rule_from_name(name) : std::nullopt;
    if (!rule) fail(l.number, "unknown rule `" + name + "`");
    if (rule->kind == RuleKind::k_approval && rule->k > m)
      fail(l.number, "k-approval round exceeds candidate count");
    f.rule = *rule;
  }
  std::string designated_token;
  int designated_line = 0;
  {
    const Line& l = next("`designated C`");
    std::istringstream in(l.text);
    std::string kw;
    in >> kw >> designated_token;
    if (kw != "designated" || designated_token.empty()) fail(l.number, "expected `designated C`");
    designated_line = l.number;
  }
  if (at < lines.size()) {
    std::istringstream in(lines[at].text);
    std::string kw;
    in >> kw;
    if (kw == "candidates:") {
      std::string name;
      while (in >> name) f.names.push_back(name);
      if (static_cast<int>(f.names.size()) != m)
        fail(lines[at].number, "candidates line must list exactly M names");
      ++at;
    }
  }
  auto candidate_index = [&](const std::string& tok, int line) -> int {
    if (!f.names.empty()) {
      auto it = std::find(f.names.begin(), f.names.end(), tok);
      if (it != f.names.end()) return static_cast<int>(it - f.names.begin());
    }
    try {
      size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used == tok.size() && v >= 0 && v < m) return v;
    } catch (const std::exception&) {
    }
    fail(line, "unknown candidate `" + tok + "`");
  };

  f.election.num_candidates = m;
  f.election.designated = candidate_index(designated_token, designated_line);

  for (int i = 0; i < n; ++i) {
    const Line& l = next("`vote: ...`");
    std::istringstream in(l.text);
    std::string kw;
    in >> kw;
    if (kw != "vote:") fail(l.number, "expected `vote: c1 ... cM | ELL`");
    Voter v;
    std::vector<char> seen(m, 0);
    for (int j = 0; j < m; ++j) {
      std::string tok;
      if (!(in >> tok)) fail(l.number, "vote lists fewer than M candidates");
      int c = candidate_index(tok, l.number);
      if (seen[c]) fail(l.number, "vote is not a permutation: repeated candidate");
      seen[c] = 1;
      v.preference.push_back(c);
    }
    std::string bar;
    if (!(in >> bar) || bar != "|") fail(l.number, "expected `|` before the approval count");
    if (!(in >> v.approval_count) || v.approval_count < 0 || v.approval_count > m)
      fail(l.number, "approval count out of range [0, M]");
    f.election.voters.push_back(std::move(v));
  }

  while (at < lines.size()) {
    std::istringstream probe(lines[at].text);
    std::string kw;
    probe >> kw;
    if (kw == "shiftcost:") {
      ShiftCostProfile p;
      for (int i = 0; i < n; ++i) {
        const Line& l = next("`shiftcost: ...`");
        std::istringstream in(l.text);
        std::string kw2, tok;
        in >> kw2;
        if (kw2 != "shiftcost:") fail(l.number, "expected N shiftcost lines");
        std::vector<Cost> row;
        while (in >> tok) row.push_back(parse_cost(tok, l.number));
        if (static_cast<int>(row.size()) != m + 1)
          fail(l.number, "shiftcost row must list M+1 values");
        if (row[0] != Cost(0)) fail(l.number, "shift cost at 0 must be 0");
        for (int t = 1; t <= m; ++t)
          if (row[t] < row[t - 1]) fail(l.number, "shift costs must be non-decreasing");
        p.rows.push_back(std::move(row));
      }
      f.shift_costs = std::move(p);
    } else if (kw == "supportcost:") {
      SupportCostProfile p;
      for (int i = 0; i < n; ++i) {
        const Line& l = next("`supportcost: ...`");
        std::istringstream in(l.text);
        std::string kw2, tok;
        in >> kw2;
        if (kw2 != "supportcost:") fail(l.number, "expected N supportcost lines");
        std::vector<Cost> row;
        while (in >> tok) row.push_back(parse_cost(tok, l.number));
        if (static_cast<int>(row.size()) != m + 1)
          fail(l.number, "supportcost row must list M+1 values");
        int l0 = f.election.voters[i].approval_count;
        if (row[l0] != Cost(0)) fail(l.number, "support cost at 0 must be 0");
        for (int c = l0 + 1; c <= m; ++c)
          if (row[c] < row[c - 1]) fail(l.number, "support costs must be monotone away from 0");
        for (int c = l0 - 1; c >= 0; --c)
          if (row[c] < row[c + 1]) fail(l.number, "support costs must be monotone away from 0");
        p.values.push_back(std::move(row));
      }
      f.support_costs = std::move(p);
    } else if (kw == "budget:") {
      const Line& l = next("`budget: B`");
      std::istringstream in(l.text);
      std::string kw2, tok;
      in >> kw2 >> tok;
      if (tok.empty()) fail(l.number, "expected `budget: B`");
      f.budget = parse_cost(tok, l.number);
    } else {
      fail(lines[at].number, "unexpected line `" + kw + "`");
    }
  }

  validate(f.election);
  return f;
}

std::string serialize_instance(const InstanceFile& f) {
  const Election& e = f.election;
  std::ostringstream out;
  auto cand = [&](int c) {
    return f.names.empty() ? std::to_string(c) : f.names[c];
  };
  out << "election " << e.m() << " " << e.n() << "\n";
  out << "rule " << rule_name(f.rule) << "\n";
  out << "designated " << cand(e.designated) << "\n";
  if (!f.names.empty()) {
    out << "candidates:";
    for (const std::string& name : f.names) out << " " << name;
    out << "\n";
  }
  for (const Voter& v : e.voters) {
    out << "vote:";
    for (int c : v.preference) out << " " << cand(c);
    out << " | " << v.approval_count << "\n";
  }
  if (f.shift_costs) {
    for (const auto& row : f.shift_costs->rows) {
      out << "shiftcost:";
      for (const Cost& c : row) out << " " << c.str();
      out << "\n";
    }
  }
  if (f.support_costs) {
    for (const auto& row : f.support_costs->values) {
      out << "supportcost:";
      for (const Cost& c : row) out << " " << c.str();
      out << "\n";
    }
  }
  if (f.budget) out << "budget: " << f.budget->str() << "\n";
  return out.str();
}

}  // namespace campaign
