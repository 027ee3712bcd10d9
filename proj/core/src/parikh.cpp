#include "stablenorm/parikh.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace stablenorm {

namespace {

class Semiring {
 public:
  Semiring(std::vector<std::string> coordinates, ParikhLimits limits, ParikhStats& stats)
      : coordinates_(std::move(coordinates)), limits_(limits), stats_(stats) {}

  SemilinearSet zero() const { return SemilinearSet::empty_set(coordinates_); }
  SemilinearSet one() const {
    return SemilinearSet::singleton(coordinates_, VectorN(coordinates_.size(), 0));
  }
  SemilinearSet point(VectorN v) const { return SemilinearSet::singleton(coordinates_, std::move(v)); }

  SemilinearSet plus(const SemilinearSet& a, const SemilinearSet& b) {
    if (a.is_empty()) {
      return b;
    }
    if (b.is_empty()) {
      return a;
    }
    const std::size_t n = a.components().size() + b.components().size();
    charge(n * n);
    return record(simplify(sl_union(a, b)));
  }

  SemilinearSet times(const SemilinearSet& a, const SemilinearSet& b) {
    if (a.is_empty() || b.is_empty()) {
      return zero();
    }
    const std::size_t n = a.components().size() * b.components().size();
    charge(n * n);
    return record(sl_sum(a, b));
  }

  // (L_1 u ... u L_n)* = L_1* + ... + L_n*
  SemilinearSet star(const SemilinearSet& a) {
    SemilinearSet out = one();
    for (const LinearSet& l : a.components()) {
      out = times(out, sl_star(SemilinearSet(coordinates_, {l})));
    }
    return out;
  }

 private:
  void charge(std::size_t amount) {
    stats_.work += std::max<std::size_t>(amount, 1);
    if (stats_.work > limits_.max_work) {
      throw BudgetExceeded("parikh", "semiring work above " + std::to_string(limits_.max_work));
    }
  }

  SemilinearSet record(SemilinearSet s) {
    stats_.largest_component_count =
        std::max(stats_.largest_component_count, s.components().size());
    return s;
  }

  std::vector<std::string> coordinates_;
  ParikhLimits limits_;
  ParikhStats& stats_;
};

// Tarjan's algorithm; components come out callees first.
std::vector<std::vector<std::uint32_t>> strongly_connected(
    const std::vector<std::vector<std::uint32_t>>& succ) {
  const std::size_t n = succ.size();
  std::vector<std::int64_t> index(n, -1);
  std::vector<std::int64_t> low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<std::uint32_t> stack;
  std::vector<std::vector<std::uint32_t>> out;
  std::int64_t counter = 0;

  // iterative DFS: (vertex, next successor position)
  std::vector<std::pair<std::uint32_t, std::size_t>> frames;
  for (std::uint32_t root = 0; root < n; ++root) {
    if (index[root] >= 0) {
      continue;
    }
    frames.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      if (pos < succ[v].size()) {
        const std::uint32_t w = succ[v][pos++];
        if (index[w] < 0) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const std::uint32_t done = v;
      frames.pop_back();
      if (!frames.empty()) {
        const std::uint32_t parent = frames.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == index[done]) {
        std::vector<std::uint32_t> component;
        std::uint32_t w = 0;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          component.push_back(w);
        } while (w != done);
        std::sort(component.begin(), component.end());
        out.push_back(std::move(component));
      }
    }
  }
  return out;
}

struct Monomial {
  VectorN constant;
  std::vector<std::uint32_t> variables;
};

class NewtonSolver {
 public:
  NewtonSolver(const Cfg& g, ParikhLimits limits, ParikhStats& stats)
      : ring_(g.terminals(), limits, stats), stats_(stats) {
    const std::size_t nv = g.variables().size();
    rules_.resize(nv);
    succ_.resize(nv);
    for (const Rule& rule : g.rules()) {
      Monomial m{VectorN(g.terminals().size(), 0), {}};
      for (const Symbol& s : rule.rhs) {
        if (s.is_terminal()) {
          ++m.constant[s.id];
        } else {
          m.variables.push_back(s.id);
          succ_[rule.lhs].push_back(s.id);
        }
      }
      rules_[rule.lhs].push_back(std::move(m));
    }
    for (auto& s : succ_) {
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
    }
    values_.assign(nv, ring_.zero());
  }

  SemilinearSet solve(std::uint32_t start) {
    for (const auto& group : strongly_connected(succ_)) {
      solve_group(group);
    }
    return values_[start];
  }

 private:
  // f_A evaluated with `current` for the variables of the group
  SemilinearSet evaluate(std::uint32_t a, const std::map<std::uint32_t, SemilinearSet>& current) {
    SemilinearSet total = ring_.zero();
    for (const Monomial& m : rules_[a]) {
      SemilinearSet term = ring_.point(m.constant);
      for (auto v : m.variables) {
        term = ring_.times(term, lookup(v, current));
        if (term.is_empty()) {
          break;
        }
      }
      total = ring_.plus(total, term);
    }
    return total;
  }

  const SemilinearSet& lookup(std::uint32_t v,
                              const std::map<std::uint32_t, SemilinearSet>& current) const {
    auto it = current.find(v);
    return it == current.end() ? values_[v] : it->second;
  }

  void solve_group(const std::vector<std::uint32_t>& group) {
    std::map<std::uint32_t, std::uint32_t> local;
    for (std::uint32_t i = 0; i < group.size(); ++i) {
      local.emplace(group[i], i);
    }
    std::map<std::uint32_t, SemilinearSet> nu;
    for (auto v : group) {
      nu.emplace(v, ring_.zero());
    }
    const bool recursive = group.size() > 1 || std::binary_search(succ_[group[0]].begin(),
                                                                  succ_[group[0]].end(), group[0]);
    {
      std::map<std::uint32_t, SemilinearSet> next;
      for (auto v : group) {
        next.emplace(v, evaluate(v, nu));
      }
      nu = std::move(next);
    }
    if (recursive) {
      // Newton reaches the least solution within |group| steps here
      for (std::size_t step = 0; step < group.size(); ++step) {
        ++stats_.newton_iterations;
        auto next = newton_step(group, local, nu);
        if (next == nu) {
          break;
        }
        nu = std::move(next);
      }
    }
    for (auto& [v, value] : nu) {
      values_[v] = std::move(value);
    }
  }

  // Least solution of X = f(nu) + Df|nu (X).
  std::map<std::uint32_t, SemilinearSet> newton_step(
      const std::vector<std::uint32_t>& group, const std::map<std::uint32_t, std::uint32_t>& local,
      const std::map<std::uint32_t, SemilinearSet>& nu) {
    const std::size_t n = group.size();
    std::vector<SemilinearSet> b;
    std::vector<std::map<std::uint32_t, SemilinearSet>> m(n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint32_t a = group[i];
      b.push_back(evaluate(a, nu));
      for (const Monomial& mono : rules_[a]) {
        for (std::size_t j = 0; j < mono.variables.size(); ++j) {
          auto it = local.find(mono.variables[j]);
          if (it == local.end()) {
            continue;
          }
          SemilinearSet coefficient = ring_.point(mono.constant);
          for (std::size_t l = 0; l < mono.variables.size() && !coefficient.is_empty(); ++l) {
            if (l != j) {
              coefficient = ring_.times(coefficient, lookup(mono.variables[l], nu));
            }
          }
          if (coefficient.is_empty()) {
            continue;
          }
          auto [slot, fresh] = m[i].try_emplace(it->second, coefficient);
          if (!fresh) {
            slot->second = ring_.plus(slot->second, coefficient);
          }
        }
      }
    }

    // Gauss-Jordan elimination: X_k = M_kk* (b_k + sum_j M_kj X_j)
    for (std::uint32_t k = 0; k < n; ++k) {
      if (auto self = m[k].find(k); self != m[k].end()) {
        const SemilinearSet loop = ring_.star(self->second);
        m[k].erase(self);
        b[k] = ring_.times(loop, b[k]);
        for (auto& [j, coefficient] : m[k]) {
          coefficient = ring_.times(loop, coefficient);
        }
      }
      for (std::uint32_t i = 0; i < n; ++i) {
        if (i == k) {
          continue;
        }
        auto via = m[i].find(k);
        if (via == m[i].end()) {
          continue;
        }
        const SemilinearSet factor = std::move(via->second);
        m[i].erase(via);
        b[i] = ring_.plus(b[i], ring_.times(factor, b[k]));
        for (const auto& [j, coefficient] : m[k]) {
          SemilinearSet add = ring_.times(factor, coefficient);
          auto [slot, fresh] = m[i].try_emplace(j, add);
          if (!fresh) {
            slot->second = ring_.plus(slot->second, add);
          }
        }
      }
    }
    std::map<std::uint32_t, SemilinearSet> out;
    for (std::size_t i = 0; i < n; ++i) {
      out.emplace(group[i], std::move(b[i]));
    }
    return out;
  }

  Semiring ring_;
  ParikhStats& stats_;
  std::vector<std::vector<Monomial>> rules_;
  std::vector<std::vector<std::uint32_t>> succ_;
  std::vector<SemilinearSet> values_;
};

}  // namespace

SemilinearSet parikh_cfg(const Cfg& g, ParikhLimits limits, ParikhStats* stats) {
  ParikhStats local;
  ParikhStats& s = stats ? *stats : local;
  const Cfg pruned = prune(g);
  return NewtonSolver(pruned, limits, s).solve(pruned.start());
}

SemilinearSet parikh_nfa(const Nfa& a, ParikhLimits limits, ParikhStats* stats) {
  // one variable per state plus a fresh start
  std::vector<std::string> names;
  for (std::size_t q = 0; q < a.num_states(); ++q) {
    names.push_back("q" + std::to_string(q));
  }
  const auto start = static_cast<std::uint32_t>(names.size());
  names.emplace_back("<S>");
  std::vector<Rule> rules;
  for (auto q : a.initial()) {
    rules.push_back(Rule{start, {Symbol::variable(q)}});
  }
  for (auto q : a.accepting()) {
    rules.push_back(Rule{q, {}});
  }
  for (const auto& t : a.transitions()) {
    if (t.label == Nfa::kEpsilon) {
      rules.push_back(Rule{t.from, {Symbol::variable(t.to)}});
    } else {
      rules.push_back(Rule{t.from, {Symbol::terminal(t.label), Symbol::variable(t.to)}});
    }
  }
  return parikh_cfg(Cfg(a.alphabet(), std::move(names), std::move(rules), start), limits, stats);
}

}  // namespace stablenorm
