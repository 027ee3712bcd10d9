#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "stablenorm/cfg.hpp"

namespace stablenorm {

Cfg::Cfg(std::vector<std::string> terminals, std::vector<std::string> variables,
         std::vector<Rule> rules, std::uint32_t start)
    : terminals_(std::move(terminals)),
      variables_(std::move(variables)),
      rules_(std::move(rules)),
      start_(start) {
  if (start_ >= variables_.size()) {
    throw std::invalid_argument("Cfg: start variable out of range");
  }
  for (const Rule& rule : rules_) {
    if (rule.lhs >= variables_.size()) {
      throw std::invalid_argument("Cfg: rule left side out of range");
    }
    for (const Symbol& s : rule.rhs) {
      const std::size_t bound = s.is_terminal() ? terminals_.size() : variables_.size();
      if (s.id >= bound) {
        throw std::invalid_argument("Cfg: rule symbol out of range");
      }
    }
  }
}

std::optional<Terminal> Cfg::find_terminal(std::string_view name) const {
  for (std::size_t i = 0; i < terminals_.size(); ++i) {
    if (terminals_[i] == name) {
      return static_cast<Terminal>(i);
    }
  }
  return std::nullopt;
}

TerminalString Cfg::encode(std::span<const std::string> tokens) const {
  TerminalString out;
  out.reserve(tokens.size());
  for (const auto& token : tokens) {
    auto t = find_terminal(token);
    if (!t) {
      throw ParseError("token '" + token + "' is not a terminal of the grammar");
    }
    out.push_back(*t);
  }
  return out;
}

std::string Cfg::to_dsl() const {
  std::vector<std::vector<const Rule*>> by_lhs(variables_.size());
  for (const Rule& rule : rules_) {
    by_lhs[rule.lhs].push_back(&rule);
  }
  std::vector<std::uint32_t> order;
  order.push_back(start_);
  for (std::uint32_t v = 0; v < variables_.size(); ++v) {
    if (v != start_) {
      order.push_back(v);
    }
  }
  std::ostringstream out;
  for (std::uint32_t v : order) {
    out << variables_[v] << " ->";
    if (by_lhs[v].empty()) {
      // keeps v a variable with an empty language
      out << ' ' << variables_[v] << '\n';
      continue;
    }
    bool first = true;
    for (const Rule* rule : by_lhs[v]) {
      if (!first) {
        out << " |";
      }
      first = false;
      if (rule->rhs.empty()) {
        out << " _";
      }
      for (const Symbol& s : rule->rhs) {
        out << ' ' << (s.is_terminal() ? terminals_[s.id] : variables_[s.id]);
      }
    }
    out << '\n';
  }
  return out.str();
}

std::size_t Cfg::size() const {
  std::size_t total = rules_.size();
  for (const Rule& rule : rules_) {
    total += rule.rhs.size();
  }
  return total;
}

namespace {

std::vector<std::string> split_ws(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    out.push_back(token);
  }
  return out;
}

std::string_view trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) {
    return {};
  }
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

Cfg parse_grammar(std::string_view text, std::optional<std::vector<std::string>> alphabet) {
  struct RawRule {
    std::string lhs;
    std::vector<std::string> rhs;
  };
  std::vector<RawRule> raw;
  std::vector<std::string> variables;
  std::map<std::string, std::uint32_t, std::less<>> variable_index;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto comment = line.find("//"); comment != std::string_view::npos) {
      line = line.substr(0, comment);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    const auto arrow = line.find("->");
    if (arrow == std::string_view::npos) {
      throw ParseError("grammar line " + std::to_string(line_no) + ": missing '->'");
    }
    const auto lhs_tokens = split_ws(line.substr(0, arrow));
    if (lhs_tokens.size() != 1) {
      throw ParseError("grammar line " + std::to_string(line_no) +
                       ": left side must be a single variable");
    }
    const std::string& lhs = lhs_tokens.front();
    if (lhs == "_" || lhs == "|") {
      throw ParseError("grammar line " + std::to_string(line_no) + ": invalid variable name");
    }
    if (!variable_index.contains(lhs)) {
      variable_index.emplace(lhs, static_cast<std::uint32_t>(variables.size()));
      variables.push_back(lhs);
    }
    std::string_view body = line.substr(arrow + 2);
    std::size_t start = 0;
    while (true) {
      auto bar = body.find('|', start);
      auto alt = body.substr(start, bar == std::string_view::npos ? std::string_view::npos
                                                                   : bar - start);
      auto tokens = split_ws(alt);
      if (tokens.empty()) {
        throw ParseError("grammar line " + std::to_string(line_no) +
                         ": empty alternative (use '_' for the empty word)");
      }
      std::erase(tokens, std::string("_"));
      raw.push_back(RawRule{lhs, std::move(tokens)});
      if (bar == std::string_view::npos) {
        break;
      }
      start = bar + 1;
    }
  }
  if (variables.empty()) {
    throw ParseError("grammar has no rules");
  }

  std::vector<std::string> terminals;
  std::map<std::string, std::uint32_t, std::less<>> terminal_index;
  if (alphabet) {
    terminals = *alphabet;
    for (std::uint32_t i = 0; i < terminals.size(); ++i) {
      terminal_index.emplace(terminals[i], i);
    }
  }
  std::vector<Rule> rules;
  rules.reserve(raw.size());
  for (const RawRule& r : raw) {
    Rule rule{variable_index.at(r.lhs), {}};
    for (const std::string& token : r.rhs) {
      if (auto v = variable_index.find(token); v != variable_index.end()) {
        rule.rhs.push_back(Symbol::variable(v->second));
        continue;
      }
      auto t = terminal_index.find(token);
      if (t == terminal_index.end()) {
        if (alphabet) {
          throw ParseError("grammar terminal '" + token + "' is not in the alphabet");
        }
        t = terminal_index.emplace(token, static_cast<std::uint32_t>(terminals.size())).first;
        terminals.push_back(token);
      }
      rule.rhs.push_back(Symbol::terminal(t->second));
    }
    rules.push_back(std::move(rule));
  }
  return Cfg(std::move(terminals), std::move(variables), std::move(rules), 0);
}

Cfg prune(const Cfg& g) {
  const std::size_t nv = g.variables().size();
  std::vector<char> productive(nv, 0);
  for (bool changed = true; changed;) {
    changed = false;
    for (const Rule& rule : g.rules()) {
      if (productive[rule.lhs]) {
        continue;
      }
      const bool ok = std::all_of(rule.rhs.begin(), rule.rhs.end(), [&](const Symbol& s) {
        return s.is_terminal() || productive[s.id];
      });
      if (ok) {
        productive[rule.lhs] = 1;
        changed = true;
      }
    }
  }
  auto rule_ok = [&](const Rule& rule) {
    return productive[rule.lhs] &&
           std::all_of(rule.rhs.begin(), rule.rhs.end(), [&](const Symbol& s) {
             return s.is_terminal() || productive[s.id];
           });
  };

  std::vector<char> reachable(nv, 0);
  std::vector<std::vector<const Rule*>> by_lhs(nv);
  for (const Rule& rule : g.rules()) {
    if (rule_ok(rule)) {
      by_lhs[rule.lhs].push_back(&rule);
    }
  }
  std::vector<std::uint32_t> stack{g.start()};
  reachable[g.start()] = 1;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (const Rule* rule : by_lhs[v]) {
      for (const Symbol& s : rule->rhs) {
        if (s.is_variable() && !reachable[s.id]) {
          reachable[s.id] = 1;
          stack.push_back(s.id);
        }
      }
    }
  }

  std::vector<std::uint32_t> remap(nv, UINT32_MAX);
  std::vector<std::string> names;
  for (std::uint32_t v = 0; v < nv; ++v) {
    if (reachable[v] && (productive[v] || v == g.start())) {
      remap[v] = static_cast<std::uint32_t>(names.size());
      names.push_back(g.variables()[v]);
    }
  }
  std::set<Rule> seen;
  std::vector<Rule> rules;
  for (const Rule& rule : g.rules()) {
    if (!rule_ok(rule) || !reachable[rule.lhs]) {
      continue;
    }
    Rule mapped{remap[rule.lhs], rule.rhs};
    for (Symbol& s : mapped.rhs) {
      if (s.is_variable()) {
        s.id = remap[s.id];
      }
    }
    if (seen.insert(mapped).second) {
      rules.push_back(std::move(mapped));
    }
  }
  return Cfg(g.terminals(), std::move(names), std::move(rules), remap[g.start()]);
}

Cfg binarize(const Cfg& g) {
  std::vector<std::string> names = g.variables();
  std::vector<Rule> rules;
  std::size_t fresh = 0;
  for (const Rule& rule : g.rules()) {
    if (rule.rhs.size() <= 2) {
      rules.push_back(rule);
      continue;
    }
    std::uint32_t current = rule.lhs;
    for (std::size_t i = 0; i + 2 < rule.rhs.size(); ++i) {
      const auto next = static_cast<std::uint32_t>(names.size());
      names.push_back("<" + g.variables()[rule.lhs] + "#" + std::to_string(fresh++) + ">");
      rules.push_back(Rule{current, {rule.rhs[i], Symbol::variable(next)}});
      current = next;
    }
    rules.push_back(Rule{current, {rule.rhs[rule.rhs.size() - 2], rule.rhs.back()}});
  }
  return Cfg(g.terminals(), std::move(names), std::move(rules), g.start());
}

StringHom::StringHom(std::vector<std::string> source, std::vector<std::string> target,
                     std::vector<TerminalString> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_.size()) {
    throw std::invalid_argument("StringHom: one image per source letter required");
  }
  for (const auto& image : images_) {
    for (Terminal t : image) {
      if (t >= target_.size()) {
        throw std::invalid_argument("StringHom: image letter outside target alphabet");
      }
    }
  }
}

StringHom StringHom::projection(std::vector<std::string> source, std::vector<std::string> kept) {
  std::vector<TerminalString> images(source.size());
  for (std::size_t i = 0; i < source.size(); ++i) {
    auto it = std::find(kept.begin(), kept.end(), source[i]);
    if (it != kept.end()) {
      images[i] = {static_cast<Terminal>(it - kept.begin())};
    }
  }
  return StringHom(std::move(source), std::move(kept), std::move(images));
}

StringHom StringHom::identity(std::vector<std::string> alphabet) {
  std::vector<TerminalString> images(alphabet.size());
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    images[i] = {static_cast<Terminal>(i)};
  }
  auto copy = alphabet;
  return StringHom(std::move(alphabet), std::move(copy), std::move(images));
}

TerminalString StringHom::apply(std::span<const Terminal> word) const {
  TerminalString out;
  for (Terminal t : word) {
    if (t >= images_.size()) {
      throw std::out_of_range("StringHom: letter outside source alphabet");
    }
    out.insert(out.end(), images_[t].begin(), images_[t].end());
  }
  return out;
}

TerminalString project(const StringHom& h, std::span<const Terminal> word) {
  return h.apply(word);
}

std::vector<std::string> fresh_markers(std::size_t count) {
  std::vector<std::string> out;
  out.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) {
    out.push_back("#y" + std::to_string(i));
  }
  return out;
}

}  // namespace stablenorm
