#pragma once

// Context-free grammars, finite automata and string homomorphisms together
// with the closure constructions used by the symbolic pipeline.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "stablenorm/ext_nat.hpp"

namespace stablenorm {

/// Index into an alphabet of terminal tokens.
using Terminal = std::uint32_t;
using TerminalString = std::vector<Terminal>;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a construction exceeds its configured resource budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::string stage, const std::string& detail)
      : std::runtime_error(stage + ": " + detail), stage_(std::move(stage)) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

struct Symbol {
  enum class Kind : std::uint8_t { kTerminal, kVariable };
  Kind kind = Kind::kTerminal;
  std::uint32_t id = 0;

  static Symbol terminal(std::uint32_t id) { return {Kind::kTerminal, id}; }
  static Symbol variable(std::uint32_t id) { return {Kind::kVariable, id}; }
  bool is_terminal() const { return kind == Kind::kTerminal; }
  bool is_variable() const { return kind == Kind::kVariable; }

  friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

struct Rule {
  std::uint32_t lhs = 0;
  std::vector<Symbol> rhs;

  friend auto operator<=>(const Rule&, const Rule&) = default;
};

/// Context-free grammar (V \ X, X, R, v0). Terminals and variables are
/// named; symbols refer to them by index.
class Cfg {
 public:
  /// Throws std::invalid_argument on out-of-range indices.
  Cfg(std::vector<std::string> terminals, std::vector<std::string> variables,
      std::vector<Rule> rules, std::uint32_t start);

  const std::vector<std::string>& terminals() const { return terminals_; }
  const std::vector<std::string>& variables() const { return variables_; }
  const std::vector<Rule>& rules() const { return rules_; }
  std::uint32_t start() const { return start_; }

  std::optional<Terminal> find_terminal(std::string_view name) const;

  /// Maps token names onto this grammar's terminal indices; throws
  /// ParseError for a token outside the alphabet.
  TerminalString encode(std::span<const std::string> tokens) const;

  /// Grammar DSL text; parse_grammar(to_dsl()) denotes the same grammar.
  std::string to_dsl() const;

  /// Number of rule symbols plus rules, a rough size measure.
  std::size_t size() const;

 private:
  std::vector<std::string> terminals_;
  std::vector<std::string> variables_;
  std::vector<Rule> rules_;
  std::uint32_t start_;
};

/// Parses the grammar DSL: one `Var -> sym sym | sym ...` per line, `_`
/// for the empty word, `//` comments. The first left side is the start;
/// every symbol that never occurs on a left side is a terminal. When
/// `alphabet` is given, terminal indices follow it and any other terminal
/// is a ParseError.
Cfg parse_grammar(std::string_view text,
                  std::optional<std::vector<std::string>> alphabet = std::nullopt);

/// Removes variables that derive no terminal word or are unreachable from
/// the start, together with every rule mentioning them.
Cfg prune(const Cfg& g);

/// Splits right sides longer than two symbols with fresh variables.
Cfg binarize(const Cfg& g);

/// Chomsky normal form: every rule is A -> B C or A -> t, B and C never the
/// start; the start additionally has A -> eps iff eps is in L(g).
Cfg to_cnf(const Cfg& g);

/// True iff `g` is in the shape produced by to_cnf.
bool is_cnf(const Cfg& g);

/// CYK recogniser and deletion-distance chart parser over the CNF of a
/// grammar; the conversion is done once at construction.
class ChartParser {
 public:
  explicit ChartParser(const Cfg& g);

  bool accepts(std::span<const Terminal> word) const;
  ExtNat deletion_distance(std::span<const Terminal> word) const;

  const Cfg& cnf() const { return cnf_; }

 private:
  struct Binary {
    std::uint32_t lhs, left, right;
  };
  Cfg cnf_;
  bool accepts_empty_ = false;
  std::vector<Binary> binary_;
  // by_terminal_[t] lists variables A with A -> t
  std::vector<std::vector<std::uint32_t>> by_terminal_;
};

bool cyk_membership(const Cfg& g, std::span<const Terminal> word);

/// Least number of letters to delete from `word` so the rest lies in L(g);
/// infinity when no subword does.
ExtNat deletion_distance(const Cfg& g, std::span<const Terminal> word);

/// Nondeterministic automaton with epsilon moves.
class Nfa {
 public:
  static constexpr Terminal kEpsilon = std::numeric_limits<Terminal>::max();

  struct Transition {
    std::uint32_t from = 0;
    Terminal label = kEpsilon;
    std::uint32_t to = 0;
    friend auto operator<=>(const Transition&, const Transition&) = default;
  };

  /// Throws std::invalid_argument when a transition references an unknown
  /// state or letter.
  Nfa(std::vector<std::string> alphabet, std::size_t num_states,
      std::vector<Transition> transitions, std::vector<std::uint32_t> initial,
      std::vector<std::uint32_t> accepting);

  const std::vector<std::string>& alphabet() const { return alphabet_; }
  std::size_t num_states() const { return num_states_; }
  const std::vector<Transition>& transitions() const { return transitions_; }
  const std::vector<std::uint32_t>& initial() const { return initial_; }
  const std::vector<std::uint32_t>& accepting() const { return accepting_; }

  bool accepts(std::span<const Terminal> word) const;

  /// Equivalent automaton without epsilon moves, restricted to states that
  /// are reachable and co-reachable.
  Nfa without_epsilon() const;

 private:
  std::vector<std::string> alphabet_;
  std::size_t num_states_;
  std::vector<Transition> transitions_;
  std::vector<std::uint32_t> initial_;
  std::vector<std::uint32_t> accepting_;
};

/// Automaton of every subword (subsequence) of `word`.
Nfa subword_nfa(std::vector<std::string> alphabet, std::span<const Terminal> word);

/// (P(w_1) y_1)* ... (P(w_n) y_n)* over the alphabet extended by the
/// markers (appended in order after `alphabet`). Throws
/// std::invalid_argument on a marker that collides with the alphabet or
/// with another marker, or when markers.size() != words.size().
Nfa enumeration_nfa(const std::vector<std::string>& alphabet,
                    const std::vector<TerminalString>& words,
                    const std::vector<std::string>& markers);

/// Marker names `#y1`, `#y2`, ...
std::vector<std::string> fresh_markers(std::size_t count);

/// Monoid homomorphism X* -> Y* given on letters.
class StringHom {
 public:
  /// Throws std::invalid_argument if images.size() != source.size() or an
  /// image letter is outside the target alphabet.
  StringHom(std::vector<std::string> source, std::vector<std::string> target,
            std::vector<TerminalString> images);

  /// Keeps the letters of `kept` (matched by name) and erases the rest.
  static StringHom projection(std::vector<std::string> source, std::vector<std::string> kept);
  static StringHom identity(std::vector<std::string> alphabet);

  const std::vector<std::string>& source() const { return source_; }
  const std::vector<std::string>& target() const { return target_; }
  const std::vector<TerminalString>& images() const { return images_; }

  /// Throws std::out_of_range for a letter outside the source alphabet.
  TerminalString apply(std::span<const Terminal> word) const;

 private:
  std::vector<std::string> source_;
  std::vector<std::string> target_;
  std::vector<TerminalString> images_;
};

TerminalString project(const StringHom& h, std::span<const Terminal> word);

/// Grammar over h.source() for h^{-1}(L(g)); g's terminals must be h.target().
Cfg inverse_hom(const Cfg& g, const StringHom& h);

struct ProductLimits {
  std::size_t max_items = 5'000'000;
};

/// Triple construction for L(g) n L(a), pruned to useful variables. The
/// automaton's alphabet must equal the grammar's terminal list. Throws
/// BudgetExceeded when more than limits.max_items triples are derived.
Cfg intersect_regular(const Cfg& g, const Nfa& a, ProductLimits limits = {});

/// Every word of L(g) up to `max_length`, in length-then-lexicographic
/// order. For tests and diagnostics only.
std::vector<TerminalString> enumerate_language(const Cfg& g, std::size_t max_length);

}  // namespace stablenorm
