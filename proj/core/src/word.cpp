#include "stablenorm/word.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace stablenorm {

Word Word::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (Letter& l : out) {
    l = l.inverse();
  }
  return Word(std::move(out));
}

Word Word::rotate(std::size_t shift) const {
  if (letters_.empty()) {
    return *this;
  }
  std::vector<Letter> out = letters_;
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(shift % out.size()),
              out.end());
  return Word(std::move(out));
}

Word& Word::operator+=(const Word& rhs) {
  letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return *this;
}

namespace {

constexpr std::string_view kInverseSuffix = "^-1";

void check_distinct(const std::vector<std::string>& generators) {
  std::set<std::string> seen;
  for (const auto& g : generators) {
    if (g.empty() || g == "e" || g.find_first_of(" \t^|") != std::string::npos) {
      throw std::invalid_argument("invalid generator name '" + g + "'");
    }
    if (!seen.insert(g).second) {
      throw std::invalid_argument("duplicate generator '" + g + "'");
    }
  }
}

}  // namespace

Presentation Presentation::free_group(std::size_t rank) {
  std::vector<std::string> names;
  for (char c = 'a'; names.size() < rank; ++c) {
    if (c > 'z') {
      throw std::invalid_argument("free_group: rank above 25 needs explicit names");
    }
    if (c != 'e') {
      names.emplace_back(1, c);
    }
  }
  return free_group(std::move(names));
}

Presentation Presentation::free_group(std::vector<std::string> generators) {
  check_distinct(generators);
  Presentation p;
  p.kind_ = GroupKind::kFreeGroup;
  p.generators_ = std::move(generators);
  p.build_alphabet();
  return p;
}

Presentation Presentation::universal_coxeter(std::size_t rank) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= rank; ++i) {
    names.push_back("s" + std::to_string(i));
  }
  Presentation p = universal_coxeter(std::move(names));
  if (rank == 1) {
    p.aliases_.emplace("s", 0);
  }
  return p;
}

Presentation Presentation::universal_coxeter(std::vector<std::string> generators) {
  check_distinct(generators);
  Presentation p;
  p.kind_ = GroupKind::kUniversalCoxeter;
  p.generators_ = std::move(generators);
  p.build_alphabet();
  return p;
}

Presentation Presentation::custom(Cfg word_problem) {
  Presentation p;
  p.kind_ = GroupKind::kCustomVF;
  std::map<std::string, std::uint32_t, std::less<>> gen_index;
  for (Terminal t = 0; t < word_problem.terminals().size(); ++t) {
    std::string_view token = word_problem.terminals()[t];
    int sign = 1;
    if (token.ends_with(kInverseSuffix)) {
      sign = -1;
      token.remove_suffix(kInverseSuffix.size());
    }
    if (token.empty() || token == "e") {
      throw std::invalid_argument("custom grammar: invalid terminal '" +
                                  word_problem.terminals()[t] + "'");
    }
    auto it = gen_index.find(token);
    if (it == gen_index.end()) {
      it = gen_index.emplace(std::string(token), static_cast<std::uint32_t>(p.generators_.size()))
               .first;
      p.generators_.emplace_back(token);
    }
    if (!p.index_.emplace(Letter{it->second, sign}, t).second) {
      throw std::invalid_argument("custom grammar: duplicate terminal");
    }
  }
  p.alphabet_ = word_problem.terminals();
  p.grammar_ = std::move(word_problem);
  return p;
}

void Presentation::build_alphabet() {
  alphabet_.clear();
  index_.clear();
  for (std::uint32_t g = 0; g < generators_.size(); ++g) {
    index_.emplace(Letter{g, 1}, static_cast<Terminal>(alphabet_.size()));
    alphabet_.push_back(generators_[g]);
    if (kind_ == GroupKind::kFreeGroup) {
      index_.emplace(Letter{g, -1}, static_cast<Terminal>(alphabet_.size()));
      alphabet_.push_back(generators_[g] + std::string(kInverseSuffix));
    }
  }
}

std::optional<Terminal> Presentation::letter_index(Letter letter) const {
  auto it = index_.find(letter);
  if (it == index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

Letter Presentation::letter_at(Terminal index) const {
  for (const auto& [letter, t] : index_) {
    if (t == index) {
      return letter;
    }
  }
  throw std::out_of_range("letter index outside the alphabet");
}

std::string Presentation::token(Letter letter) const {
  std::string out = generators_.at(letter.generator);
  if (letter.sign < 0) {
    out += kInverseSuffix;
  }
  return out;
}

TerminalString Presentation::encode(const Word& w) const {
  TerminalString out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    auto t = letter_index(l);
    if (!t) {
      throw std::invalid_argument("letter outside the presentation's alphabet");
    }
    out.push_back(*t);
  }
  return out;
}

Word Presentation::decode(std::span<const Terminal> letters) const {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (Terminal t : letters) {
    out.push_back(letter_at(t));
  }
  return Word(std::move(out));
}

bool Presentation::cancels(Letter x, Letter y) const {
  if (x.generator != y.generator) {
    return false;
  }
  switch (kind_) {
    case GroupKind::kFreeGroup:
      return x.sign == -y.sign;
    case GroupKind::kUniversalCoxeter:
      return true;
    case GroupKind::kCustomVF:
      break;
  }
  throw std::logic_error("cancels: not defined for grammar-only presentations");
}

std::optional<std::uint32_t> Presentation::find_generator(std::string_view name) const {
  for (std::uint32_t g = 0; g < generators_.size(); ++g) {
    if (generators_[g] == name) {
      return g;
    }
  }
  if (auto it = aliases_.find(name); it != aliases_.end()) {
    return it->second;
  }
  return std::nullopt;
}

std::string Presentation::describe() const {
  switch (kind_) {
    case GroupKind::kFreeGroup:
      return "free:" + std::to_string(rank());
    case GroupKind::kUniversalCoxeter:
      return "coxeter:" + std::to_string(rank());
    case GroupKind::kCustomVF:
      return "custom";
  }
  return "unknown";
}

Presentation parse_presentation(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("presentation '" + std::string(text) +
                     "' must be free:<rank>, coxeter:<n> or custom:<file>");
  }
  const std::string_view kind = text.substr(0, colon);
  const std::string_view arg = text.substr(colon + 1);
  auto parse_rank = [&]() {
    std::size_t rank = 0;
    auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), rank);
    if (ec != std::errc() || ptr != arg.data() + arg.size() || rank == 0) {
      throw ParseError("presentation rank must be a positive integer, got '" +
                       std::string(arg) + "'");
    }
    return rank;
  };
  try {
    if (kind == "free") {
      return Presentation::free_group(parse_rank());
    }
    if (kind == "coxeter") {
      return Presentation::universal_coxeter(parse_rank());
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  if (kind == "custom") {
    std::ifstream in{std::string(arg)};
    if (!in) {
      throw ParseError("cannot open grammar file '" + std::string(arg) + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
      return Presentation::custom(parse_grammar(buffer.str()));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("unknown presentation kind '" + std::string(kind) + "'");
}

Word parse_word(const Presentation& p, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string token;
  std::vector<std::string> tokens;
  while (in >> token) {
    tokens.push_back(token);
  }
  if (tokens.size() == 1 && tokens.front() == "e") {
    return Word();
  }
  std::vector<Letter> letters;
  for (const auto& t : tokens) {
    if (t == "e") {
      continue;
    }
    std::string_view name = t;
    int sign = 1;
    if (name.ends_with(kInverseSuffix)) {
      sign = -1;
      name.remove_suffix(kInverseSuffix.size());
    }
    auto g = p.find_generator(name);
    if (!g) {
      throw ParseError("unknown generator '" + std::string(name) + "' in word '" +
                       std::string(text) + "'");
    }
    if (p.kind() == GroupKind::kUniversalCoxeter) {
      sign = 1;
    }
    Letter letter{*g, sign};
    if (!p.letter_index(letter)) {
      throw ParseError("letter '" + t + "' is not in the alphabet");
    }
    letters.push_back(letter);
  }
  return Word(std::move(letters));
}

std::string format_word(const Presentation& p, const Word& w) {
  if (w.empty()) {
    return "e";
  }
  std::string out;
  for (const Letter& l : w) {
    if (!out.empty()) {
      out += ' ';
    }
    out += p.token(l);
  }
  return out;
}

namespace {

void require_builtin(const Presentation& p, const char* op) {
  if (p.kind() == GroupKind::kCustomVF) {
    throw std::logic_error(std::string(op) +
                           ": grammar-only presentations have no built-in word problem");
  }
}

}  // namespace

Word free_reduce(const Presentation& p, const Word& w) {
  require_builtin(p, "free_reduce");
  std::vector<Letter> stack;
  for (const Letter& l : w) {
    if (!stack.empty() && p.cancels(stack.back(), l)) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return Word(std::move(stack));
}

Word power_word(std::span<const Word> words, std::size_t k) {
  Word out;
  for (const Word& w : words) {
    for (std::size_t i = 0; i < k; ++i) {
      out += w;
    }
  }
  return out;
}

namespace {

// cost[(i, j)] for the half-open interval [i, j) of an n-letter word.
class NormTable {
 public:
  NormTable(const Presentation& p, const Word& w) : n_(w.size()), cost_((n_ + 1) * (n_ + 1), 0) {
    partners_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t q = i + 1; q < n_; ++q) {
        if (p.cancels(w[i], w[q])) {
          partners_[i].push_back(static_cast<std::uint32_t>(q));
        }
      }
    }
    for (std::size_t len = 1; len <= n_; ++len) {
      for (std::size_t i = 0; i + len <= n_; ++i) {
        const std::size_t j = i + len;
        std::uint32_t best = at(i + 1, j) + 1;
        for (std::uint32_t q : partners_[i]) {
          if (q >= j) {
            break;
          }
          best = std::min(best, at(i + 1, q) + at(q + 1, j));
        }
        cost_[(i * (n_ + 1)) + j] = best;
      }
    }
  }

  std::uint32_t at(std::size_t i, std::size_t j) const {
    return i >= j ? 0 : cost_[(i * (n_ + 1)) + j];
  }
  std::size_t size() const { return n_; }

  void witness(std::size_t i, std::size_t j, std::vector<std::size_t>& deleted) const {
    while (i < j) {
      const std::uint32_t target = at(i, j);
      if (at(i + 1, j) + 1 == target) {
        deleted.push_back(i);
        ++i;
        continue;
      }
      bool matched = false;
      for (std::uint32_t q : partners_[i]) {
        if (q >= j) {
          break;
        }
        if (at(i + 1, q) + at(q + 1, j) == target) {
          witness(i + 1, q, deleted);
          i = q + 1;
          matched = true;
          break;
        }
      }
      if (!matched) {
        throw std::logic_error("cancellation_witness: inconsistent table");
      }
    }
  }

 private:
  std::size_t n_;
  std::vector<std::uint32_t> cost_;
  std::vector<std::vector<std::uint32_t>> partners_;
};

}  // namespace

std::uint64_t cancellation_norm(const Presentation& p, const Word& w) {
  require_builtin(p, "cancellation_norm");
  return NormTable(p, w).at(0, w.size());
}

std::vector<std::size_t> cancellation_witness(const Presentation& p, const Word& w) {
  require_builtin(p, "cancellation_witness");
  NormTable table(p, w);
  std::vector<std::size_t> deleted;
  table.witness(0, w.size(), deleted);
  std::sort(deleted.begin(), deleted.end());
  return deleted;
}

std::uint64_t brute_force_norm(const Presentation& p, const Word& w, std::size_t cap) {
  require_builtin(p, "brute_force_norm");
  if (w.size() > cap) {
    throw std::length_error("brute_force_norm: word longer than the oracle cap");
  }
  const std::size_t n = w.size();
  std::size_t best_kept = 0;
  std::vector<Letter> stack;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const auto kept = static_cast<std::size_t>(std::popcount(mask));
    if (kept <= best_kept) {
      continue;
    }
    stack.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask >> i & 1)) {
        continue;
      }
      if (!stack.empty() && p.cancels(stack.back(), w[i])) {
        stack.pop_back();
      } else {
        stack.push_back(w[i]);
      }
    }
    if (stack.empty()) {
      best_kept = kept;
    }
  }
  return n - best_kept;
}

std::int64_t turn_quasimorphism(const Presentation& p, const Word& w) {
  if (p.kind() != GroupKind::kFreeGroup || p.rank() != 2) {
    throw std::invalid_argument("turn_quasimorphism: needs a free group of rank 2");
  }
  if (free_reduce(p, w).size() != w.size()) {
    throw std::invalid_argument("turn_quasimorphism: word is not reduced");
  }
  auto direction = [](const Letter& l) {
    return l.generator == 0 ? std::pair<int, int>{l.sign, 0} : std::pair<int, int>{0, l.sign};
  };
  std::int64_t turns = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    const auto [x0, y0] = direction(w[i]);
    const auto [x1, y1] = direction(w[i + 1]);
    turns += x0 * y1 - y0 * x1;
  }
  return turns;
}

Cfg wp_grammar(const Presentation& p) {
  if (p.kind() == GroupKind::kCustomVF) {
    return *p.grammar();
  }
  const auto t = Symbol::variable(0);
  std::vector<Rule> rules{Rule{0, {}}, Rule{0, {t, t}}};
  for (std::uint32_t g = 0; g < p.rank(); ++g) {
    const auto x = Symbol::terminal(*p.letter_index(Letter{g, 1}));
    if (p.kind() == GroupKind::kUniversalCoxeter) {
      rules.push_back(Rule{0, {x, t, x}});
      continue;
    }
    const auto x_inv = Symbol::terminal(*p.letter_index(Letter{g, -1}));
    rules.push_back(Rule{0, {x, t, x_inv}});
    rules.push_back(Rule{0, {x_inv, t, x}});
  }
  return Cfg(p.alphabet(), {"T"}, std::move(rules), 0);
}

ExtNat deletion_distance(const Cfg& g, const Presentation& p, const Word& w) {
  std::vector<std::string> tokens;
  tokens.reserve(w.size());
  for (const Letter& l : w) {
    tokens.push_back(p.token(l));
  }
  return deletion_distance(g, g.encode(tokens));
}

}  // namespace stablenorm
