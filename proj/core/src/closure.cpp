#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "stablenorm/cfg.hpp"

namespace stablenorm {

namespace {

// Permutation taking `from` indices to `to` indices by letter name.
std::vector<Terminal> alphabet_map(const std::vector<std::string>& from,
                                   const std::vector<std::string>& to, const char* what) {
  if (from.size() != to.size()) {
    throw std::invalid_argument(std::string(what) + ": alphabets differ");
  }
  std::vector<Terminal> out(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) {
    auto it = std::find(to.begin(), to.end(), from[i]);
    if (it == to.end()) {
      throw std::invalid_argument(std::string(what) + ": alphabets differ");
    }
    out[i] = static_cast<Terminal>(it - to.begin());
  }
  return out;
}

}  // namespace

Cfg inverse_hom(const Cfg& g, const StringHom& h) {
  const auto to_grammar = alphabet_map(h.target(), g.terminals(), "inverse_hom");
  const Cfg bin = binarize(g);
  const auto& source = h.source();

  // Decoding automaton over the grammar's alphabet: state 0 sits between
  // images; reading the last letter of h(x) back into state 0 emits x.
  struct Move {
    std::uint32_t from;
    Terminal letter;  // grammar terminal
    std::uint32_t to;
    std::optional<Terminal> emit;  // source letter
  };
  std::vector<Move> moves;
  std::vector<Terminal> erased;
  std::uint32_t states = 1;
  for (Terminal x = 0; x < source.size(); ++x) {
    const auto& image = h.images()[x];
    if (image.empty()) {
      erased.push_back(x);
      continue;
    }
    std::uint32_t current = 0;
    for (std::size_t j = 0; j < image.size(); ++j) {
      const bool last = j + 1 == image.size();
      const std::uint32_t next = last ? 0 : states++;
      moves.push_back(Move{current, to_grammar[image[j]], next,
                           last ? std::optional<Terminal>(x) : std::nullopt});
      current = next;
    }
  }

  const std::size_t nv = bin.variables().size();
  const std::size_t nt = bin.terminals().size();
  const bool single_state = states == 1;
  std::vector<std::string> names;
  std::vector<Rule> rules;

  auto triple_name = [&](std::uint32_t p, const std::string& body, std::uint32_t q) {
    if (single_state) {
      return body;
    }
    return "[" + std::to_string(p) + ":" + body + ":" + std::to_string(q) + "]";
  };
  // variable ids: triples of grammar variables first, then triples of
  // grammar terminals, then the insertion variable and the new start
  auto var_id = [&](std::uint32_t p, std::uint32_t a, std::uint32_t q) {
    return static_cast<std::uint32_t>((static_cast<std::size_t>(p) * nv + a) * states + q);
  };
  const std::size_t term_base = static_cast<std::size_t>(states) * nv * states;
  auto term_id = [&](std::uint32_t p, Terminal t, std::uint32_t q) {
    return static_cast<std::uint32_t>(term_base +
                                      (static_cast<std::size_t>(p) * nt + t) * states + q);
  };
  names.resize(term_base + static_cast<std::size_t>(states) * nt * states);
  for (std::uint32_t p = 0; p < states; ++p) {
    for (std::uint32_t q = 0; q < states; ++q) {
      for (std::uint32_t a = 0; a < nv; ++a) {
        names[var_id(p, a, q)] = triple_name(p, bin.variables()[a], q);
      }
      for (Terminal t = 0; t < nt; ++t) {
        names[term_id(p, t, q)] = triple_name(p, "'" + bin.terminals()[t] + "'", q);
      }
    }
  }
  std::vector<std::string> taken = bin.variables();
  auto fresh = [&](const std::string& base) {
    std::string candidate = base;
    for (int i = 1; std::find(taken.begin(), taken.end(), candidate) != taken.end(); ++i) {
      candidate = base + std::to_string(i);
    }
    taken.push_back(candidate);
    return candidate;
  };
  std::optional<std::uint32_t> insertion;
  if (!erased.empty()) {
    insertion = static_cast<std::uint32_t>(names.size());
    names.push_back(fresh("<I>"));
    rules.push_back(Rule{*insertion, {}});
    for (Terminal x : erased) {
      rules.push_back(Rule{*insertion, {Symbol::terminal(x), Symbol::variable(*insertion)}});
    }
  }
  const auto start = static_cast<std::uint32_t>(names.size());
  names.push_back(fresh("<S>"));
  {
    Rule start_rule{start, {}};
    if (insertion) {
      start_rule.rhs.push_back(Symbol::variable(*insertion));
    }
    start_rule.rhs.push_back(Symbol::variable(var_id(0, bin.start(), 0)));
    rules.push_back(std::move(start_rule));
  }

  for (const Move& m : moves) {
    Rule rule{term_id(m.from, m.letter, m.to), {}};
    if (m.emit) {
      rule.rhs.push_back(Symbol::terminal(*m.emit));
    }
    if (m.to == 0 && insertion) {
      rule.rhs.push_back(Symbol::variable(*insertion));
    }
    rules.push_back(std::move(rule));
  }

  auto lift = [&](const Symbol& s, std::uint32_t p, std::uint32_t q) {
    return s.is_terminal() ? Symbol::variable(term_id(p, s.id, q))
                           : Symbol::variable(var_id(p, s.id, q));
  };
  for (const Rule& rule : bin.rules()) {
    for (std::uint32_t p = 0; p < states; ++p) {
      if (rule.rhs.empty()) {
        rules.push_back(Rule{var_id(p, rule.lhs, p), {}});
        continue;
      }
      for (std::uint32_t q = 0; q < states; ++q) {
        if (rule.rhs.size() == 1) {
          rules.push_back(Rule{var_id(p, rule.lhs, q), {lift(rule.rhs[0], p, q)}});
          continue;
        }
        for (std::uint32_t r = 0; r < states; ++r) {
          rules.push_back(Rule{var_id(p, rule.lhs, q),
                               {lift(rule.rhs[0], p, r), lift(rule.rhs[1], r, q)}});
        }
      }
    }
  }
  return prune(Cfg(source, std::move(names), std::move(rules), start));
}

namespace {

struct TripleKey {
  std::uint32_t p, sym, q;
  friend bool operator==(const TripleKey&, const TripleKey&) = default;
};

struct TripleHash {
  std::size_t operator()(const TripleKey& k) const noexcept {
    std::size_t h = k.p;
    h = h * 1000003u ^ k.sym;
    h = h * 1000003u ^ k.q;
    return h;
  }
};

}  // namespace

Cfg intersect_regular(const Cfg& g, const Nfa& a, ProductLimits limits) {
  const auto letter_map = alphabet_map(a.alphabet(), g.terminals(), "intersect_regular");
  const Nfa nfa = a.without_epsilon();
  const Cfg bin = binarize(g);
  const std::size_t nv = bin.variables().size();
  const std::size_t nt = bin.terminals().size();
  const std::size_t ns = nfa.num_states();

  // Symbols are numbered terminals first, then variables.
  auto sym_of = [&](const Symbol& s) {
    return s.is_terminal() ? s.id : static_cast<std::uint32_t>(nt + s.id);
  };
  const std::size_t nsym = nt + nv;

  std::vector<std::vector<std::uint32_t>> unit_by(nsym);
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> first_by(nsym);
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> second_by(nsym);
  std::vector<std::uint32_t> nullable_rules;
  for (const Rule& rule : bin.rules()) {
    if (rule.rhs.empty()) {
      nullable_rules.push_back(rule.lhs);
    } else if (rule.rhs.size() == 1) {
      unit_by[sym_of(rule.rhs[0])].push_back(rule.lhs);
    } else {
      const auto x = sym_of(rule.rhs[0]);
      const auto z = sym_of(rule.rhs[1]);
      first_by[x].emplace_back(rule.lhs, z);
      second_by[z].emplace_back(rule.lhs, x);
    }
  }

  // Saturation of facts (p, X, q): X derives a word leading p to q.
  std::unordered_map<TripleKey, std::uint32_t, TripleHash> facts;
  std::vector<TripleKey> fact_list;
  // out_[sym * ns + p] -> q values; in_[sym * ns + q] -> p values
  std::vector<std::vector<std::uint32_t>> out(nsym * ns), in(nsym * ns);
  std::vector<TripleKey> work;
  auto add = [&](std::uint32_t p, std::uint32_t sym, std::uint32_t q) {
    TripleKey key{p, sym, q};
    if (facts.contains(key)) {
      return;
    }
    if (fact_list.size() >= limits.max_items) {
      throw BudgetExceeded("intersect_regular",
                           "more than " + std::to_string(limits.max_items) + " triples");
    }
    facts.emplace(key, static_cast<std::uint32_t>(fact_list.size()));
    fact_list.push_back(key);
    out[sym * ns + p].push_back(q);
    in[sym * ns + q].push_back(p);
    work.push_back(key);
  };
  for (const auto& t : nfa.transitions()) {
    add(t.from, letter_map[t.label], t.to);
  }
  for (auto lhs : nullable_rules) {
    for (std::uint32_t p = 0; p < ns; ++p) {
      add(p, static_cast<std::uint32_t>(nt + lhs), p);
    }
  }
  while (!work.empty()) {
    const TripleKey f = work.back();
    work.pop_back();
    for (auto lhs : unit_by[f.sym]) {
      add(f.p, static_cast<std::uint32_t>(nt + lhs), f.q);
    }
    for (auto [lhs, z] : first_by[f.sym]) {
      const auto targets = out[z * ns + f.q];
      for (auto r : targets) {
        add(f.p, static_cast<std::uint32_t>(nt + lhs), r);
      }
    }
    for (auto [lhs, x] : second_by[f.sym]) {
      const auto sources = in[x * ns + f.p];
      for (auto o : sources) {
        add(o, static_cast<std::uint32_t>(nt + lhs), f.q);
      }
    }
  }

  // One grammar variable per variable fact, plus a fresh start.
  std::vector<std::string> names;
  std::unordered_map<TripleKey, std::uint32_t, TripleHash> var_of;
  for (const auto& f : fact_list) {
    if (f.sym < nt) {
      continue;
    }
    var_of.emplace(f, static_cast<std::uint32_t>(names.size()));
    names.push_back("[" + std::to_string(f.p) + ":" + bin.variables()[f.sym - nt] + ":" +
                    std::to_string(f.q) + "]");
  }
  const auto start = static_cast<std::uint32_t>(names.size());
  names.push_back("<S>");

  auto symbol_for = [&](std::uint32_t p, std::uint32_t sym, std::uint32_t q) {
    return sym < nt ? Symbol::terminal(sym) : Symbol::variable(var_of.at(TripleKey{p, sym, q}));
  };
  std::vector<Rule> rules;
  std::vector<std::vector<const Rule*>> rules_of(nv);
  for (const Rule& rule : bin.rules()) {
    rules_of[rule.lhs].push_back(&rule);
  }
  for (const auto& [f, id] : var_of) {
    for (const Rule* rule : rules_of[f.sym - nt]) {
      if (rule->rhs.empty()) {
        if (f.p == f.q) {
          rules.push_back(Rule{id, {}});
        }
      } else if (rule->rhs.size() == 1) {
        const auto x = sym_of(rule->rhs[0]);
        if (facts.contains(TripleKey{f.p, x, f.q})) {
          rules.push_back(Rule{id, {symbol_for(f.p, x, f.q)}});
        }
      } else {
        const auto x = sym_of(rule->rhs[0]);
        const auto z = sym_of(rule->rhs[1]);
        for (auto r : out[x * ns + f.p]) {
          if (facts.contains(TripleKey{r, z, f.q})) {
            rules.push_back(Rule{id, {symbol_for(f.p, x, r), symbol_for(r, z, f.q)}});
          }
        }
      }
    }
  }
  const auto g_start = static_cast<std::uint32_t>(nt + bin.start());
  for (auto i : nfa.initial()) {
    for (auto f : nfa.accepting()) {
      if (auto it = var_of.find(TripleKey{i, g_start, f}); it != var_of.end()) {
        rules.push_back(Rule{start, {Symbol::variable(it->second)}});
      }
    }
  }
  std::sort(rules.begin(), rules.end());
  return prune(Cfg(bin.terminals(), std::move(names), std::move(rules), start));
}

}  // namespace stablenorm
