#include <algorithm>
#include <map>
#include <set>

#include "stablenorm/cfg.hpp"

namespace stablenorm {

namespace {

std::string unique_name(const std::vector<std::string>& taken, const std::string& base) {
  std::set<std::string> names(taken.begin(), taken.end());
  std::string candidate = base;
  for (std::size_t i = 1; names.contains(candidate); ++i) {
    candidate = base + std::to_string(i);
  }
  return candidate;
}

std::vector<char> nullable_variables(std::size_t nv, const std::vector<Rule>& rules) {
  std::vector<char> nullable(nv, 0);
  for (bool changed = true; changed;) {
    changed = false;
    for (const Rule& rule : rules) {
      if (nullable[rule.lhs]) {
        continue;
      }
      const bool all = std::all_of(rule.rhs.begin(), rule.rhs.end(), [&](const Symbol& s) {
        return s.is_variable() && nullable[s.id];
      });
      if (all) {
        nullable[rule.lhs] = 1;
        changed = true;
      }
    }
  }
  return nullable;
}

}  // namespace

Cfg to_cnf(const Cfg& g) {
  std::vector<std::string> names = g.variables();
  std::vector<Rule> rules;

  // START: a fresh start that never occurs on a right side
  const auto start = static_cast<std::uint32_t>(names.size());
  names.push_back(unique_name(g.variables(), "S0"));
  rules.push_back(Rule{start, {Symbol::variable(g.start())}});

  // TERM: terminals inside long right sides go through pre-terminals
  std::map<Terminal, std::uint32_t> preterminal;
  for (const Rule& rule : g.rules()) {
    Rule lifted = rule;
    if (lifted.rhs.size() >= 2) {
      for (Symbol& s : lifted.rhs) {
        if (!s.is_terminal()) {
          continue;
        }
        auto it = preterminal.find(s.id);
        if (it == preterminal.end()) {
          const auto v = static_cast<std::uint32_t>(names.size());
          names.push_back(unique_name(names, "T<" + g.terminals()[s.id] + ">"));
          it = preterminal.emplace(s.id, v).first;
        }
        s = Symbol::variable(it->second);
      }
    }
    rules.push_back(std::move(lifted));
  }
  for (auto [t, v] : preterminal) {
    rules.push_back(Rule{v, {Symbol::terminal(t)}});
  }

  // BIN
  Cfg binary = binarize(Cfg(g.terminals(), names, rules, start));
  names = binary.variables();
  rules = binary.rules();

  // DEL: drop eps-rules, adding the variants that skip nullable symbols
  const auto nullable = nullable_variables(names.size(), rules);
  std::set<Rule> without_eps;
  for (const Rule& rule : rules) {
    if (rule.rhs.empty()) {
      continue;
    }
    without_eps.insert(rule);
    if (rule.rhs.size() == 2) {
      const Symbol a = rule.rhs[0];
      const Symbol b = rule.rhs[1];
      if (a.is_variable() && nullable[a.id]) {
        without_eps.insert(Rule{rule.lhs, {b}});
      }
      if (b.is_variable() && nullable[b.id]) {
        without_eps.insert(Rule{rule.lhs, {a}});
      }
    }
  }

  // UNIT: replace A -> B chains by the non-unit rules reachable through them
  const std::size_t nv = names.size();
  std::vector<std::vector<std::uint32_t>> unit_succ(nv);
  std::vector<std::vector<const Rule*>> proper(nv);
  for (const Rule& rule : without_eps) {
    if (rule.rhs.size() == 1 && rule.rhs[0].is_variable()) {
      unit_succ[rule.lhs].push_back(rule.rhs[0].id);
    } else {
      proper[rule.lhs].push_back(&rule);
    }
  }
  std::set<Rule> final_rules;
  for (std::uint32_t a = 0; a < nv; ++a) {
    std::vector<char> seen(nv, 0);
    std::vector<std::uint32_t> stack{a};
    seen[a] = 1;
    while (!stack.empty()) {
      const auto b = stack.back();
      stack.pop_back();
      for (const Rule* rule : proper[b]) {
        final_rules.insert(Rule{a, rule->rhs});
      }
      for (auto c : unit_succ[b]) {
        if (!seen[c]) {
          seen[c] = 1;
          stack.push_back(c);
        }
      }
    }
  }
  if (nullable[start]) {
    final_rules.insert(Rule{start, {}});
  }
  return prune(Cfg(g.terminals(), std::move(names),
                   std::vector<Rule>(final_rules.begin(), final_rules.end()), start));
}

bool is_cnf(const Cfg& g) {
  for (const Rule& rule : g.rules()) {
    if (rule.rhs.empty()) {
      if (rule.lhs != g.start()) {
        return false;
      }
      continue;
    }
    if (rule.rhs.size() == 1) {
      if (!rule.rhs[0].is_terminal()) {
        return false;
      }
      continue;
    }
    if (rule.rhs.size() != 2) {
      return false;
    }
    for (const Symbol& s : rule.rhs) {
      if (!s.is_variable() || s.id == g.start()) {
        return false;
      }
    }
  }
  return true;
}

ChartParser::ChartParser(const Cfg& g) : cnf_(is_cnf(g) ? g : to_cnf(g)) {
  by_terminal_.resize(cnf_.terminals().size());
  for (const Rule& rule : cnf_.rules()) {
    if (rule.rhs.empty()) {
      accepts_empty_ = true;
    } else if (rule.rhs.size() == 1) {
      by_terminal_[rule.rhs[0].id].push_back(rule.lhs);
    } else {
      binary_.push_back(Binary{rule.lhs, rule.rhs[0].id, rule.rhs[1].id});
    }
  }
}

bool ChartParser::accepts(std::span<const Terminal> word) const {
  const std::size_t n = word.size();
  if (n == 0) {
    return accepts_empty_;
  }
  const std::size_t nv = cnf_.variables().size();
  // chart[(i * (n + 1) + len) * nv + A]
  std::vector<char> chart((n + 1) * (n + 1) * nv, 0);
  auto cell = [&](std::size_t i, std::size_t len) { return &chart[(i * (n + 1) + len) * nv]; };
  for (std::size_t i = 0; i < n; ++i) {
    if (word[i] >= by_terminal_.size()) {
      return false;
    }
    for (auto a : by_terminal_[word[i]]) {
      cell(i, 1)[a] = 1;
    }
  }
  for (std::size_t len = 2; len <= n; ++len) {
    for (std::size_t i = 0; i + len <= n; ++i) {
      char* target = cell(i, len);
      for (std::size_t k = 1; k < len; ++k) {
        const char* left = cell(i, k);
        const char* right = cell(i + k, len - k);
        for (const Binary& r : binary_) {
          if (left[r.left] && right[r.right]) {
            target[r.lhs] = 1;
          }
        }
      }
    }
  }
  return cell(0, n)[cnf_.start()] != 0;
}

ExtNat ChartParser::deletion_distance(std::span<const Terminal> word) const {
  const std::size_t n = word.size();
  const ExtNat empty_cost = accepts_empty_ ? ExtNat(n) : ExtNat::infinity();
  if (n == 0) {
    return empty_cost;
  }
  constexpr std::uint32_t kInf = UINT32_MAX;
  const std::size_t nv = cnf_.variables().size();
  // cost of turning word[i, i+len) into a word derived from A by deletions
  std::vector<std::uint32_t> chart((n + 1) * (n + 1) * nv, kInf);
  auto cell = [&](std::size_t i, std::size_t len) { return &chart[(i * (n + 1) + len) * nv]; };
  for (std::size_t i = 0; i < n; ++i) {
    if (word[i] < by_terminal_.size()) {
      for (auto a : by_terminal_[word[i]]) {
        cell(i, 1)[a] = 0;
      }
    }
  }
  for (std::size_t len = 2; len <= n; ++len) {
    for (std::size_t i = 0; i + len <= n; ++i) {
      std::uint32_t* target = cell(i, len);
      // skip the first or the last letter of the span
      const std::uint32_t* drop_first = cell(i + 1, len - 1);
      const std::uint32_t* drop_last = cell(i, len - 1);
      for (std::size_t a = 0; a < nv; ++a) {
        const std::uint32_t best = std::min(drop_first[a], drop_last[a]);
        if (best != kInf) {
          target[a] = best + 1;
        }
      }
      for (std::size_t k = 1; k < len; ++k) {
        const std::uint32_t* left = cell(i, k);
        const std::uint32_t* right = cell(i + k, len - k);
        for (const Binary& r : binary_) {
          const std::uint32_t l = left[r.left];
          const std::uint32_t rr = right[r.right];
          if (l == kInf || rr == kInf) {
            continue;
          }
          target[r.lhs] = std::min(target[r.lhs], l + rr);
        }
      }
    }
  }
  const std::uint32_t best = cell(0, n)[cnf_.start()];
  return min(best == kInf ? ExtNat::infinity() : ExtNat(best), empty_cost);
}

bool cyk_membership(const Cfg& g, std::span<const Terminal> word) {
  return ChartParser(g).accepts(word);
}

ExtNat deletion_distance(const Cfg& g, std::span<const Terminal> word) {
  return ChartParser(g).deletion_distance(word);
}

std::vector<TerminalString> enumerate_language(const Cfg& g, std::size_t max_length) {
  const Cfg cnf = is_cnf(g) ? g : to_cnf(g);
  const std::size_t nv = cnf.variables().size();
  // words[A][len]
  std::vector<std::vector<std::set<TerminalString>>> words(
      nv, std::vector<std::set<TerminalString>>(max_length + 1));
  for (const Rule& rule : cnf.rules()) {
    if (rule.rhs.size() == 1 && max_length >= 1) {
      words[rule.lhs][1].insert(TerminalString{rule.rhs[0].id});
    }
  }
  for (std::size_t len = 2; len <= max_length; ++len) {
    for (const Rule& rule : cnf.rules()) {
      if (rule.rhs.size() != 2) {
        continue;
      }
      for (std::size_t k = 1; k < len; ++k) {
        for (const auto& u : words[rule.rhs[0].id][k]) {
          for (const auto& v : words[rule.rhs[1].id][len - k]) {
            TerminalString uv = u;
            uv.insert(uv.end(), v.begin(), v.end());
            words[rule.lhs][len].insert(std::move(uv));
          }
        }
      }
    }
  }
  std::vector<TerminalString> out;
  for (const Rule& rule : cnf.rules()) {
    if (rule.rhs.empty()) {
      out.emplace_back();
      break;
    }
  }
  for (std::size_t len = 1; len <= max_length; ++len) {
    out.insert(out.end(), words[cnf.start()][len].begin(), words[cnf.start()][len].end());
  }
  return out;
}

}  // namespace stablenorm
