#pragma once

// Group presentations, words, and the cancellation norm.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stablenorm/cfg.hpp"
#include "stablenorm/ext_nat.hpp"

namespace stablenorm {

enum class GroupKind { kFreeGroup, kUniversalCoxeter, kCustomVF };

struct Letter {
  std::uint32_t generator = 0;
  int sign = 1;  // +1 or -1; always +1 in a universal Coxeter group

  Letter inverse() const { return Letter{generator, -sign}; }
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const { return letters_; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  /// Formal inverse: reversed order, inverted letters.
  Word inverse() const;
  /// Rotation moving the first `shift` letters to the end.
  Word rotate(std::size_t shift) const;
  Word& operator+=(const Word& rhs);
  friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }

  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Presentation of a free group, a universal Coxeter group, or a group
/// described only by a grammar for its word problem.
class Presentation {
 public:
  /// Generators a, b, c, d, f, ... ('e' is reserved for the empty word).
  static Presentation free_group(std::size_t rank);
  static Presentation free_group(std::vector<std::string> generators);
  /// Generators s1, ..., sn; for n = 1 the generator is also accepted as `s`.
  static Presentation universal_coxeter(std::size_t rank);
  static Presentation universal_coxeter(std::vector<std::string> generators);
  /// The alphabet S is the grammar's terminal list; a token `x^-1` is the
  /// inverse letter of generator x.
  static Presentation custom(Cfg word_problem);

  GroupKind kind() const { return kind_; }
  const std::vector<std::string>& generators() const { return generators_; }
  std::size_t rank() const { return generators_.size(); }
  /// Word-problem grammar; present iff kind() == kCustomVF.
  const std::optional<Cfg>& grammar() const { return grammar_; }

  /// The letters S in a fixed order; letter_index() indexes this list.
  const std::vector<std::string>& alphabet() const { return alphabet_; }
  std::optional<Terminal> letter_index(Letter letter) const;
  Letter letter_at(Terminal index) const;
  std::string token(Letter letter) const;

  /// Maps every letter to its index in alphabet(); throws
  /// std::invalid_argument for a letter outside S.
  TerminalString encode(const Word& w) const;
  Word decode(std::span<const Terminal> letters) const;

  /// Two letters cancel when their product is the identity.
  bool cancels(Letter x, Letter y) const;

  std::optional<std::uint32_t> find_generator(std::string_view name) const;

  /// "free:2", "coxeter:3", "custom".
  std::string describe() const;

 private:
  Presentation() = default;
  void build_alphabet();

  GroupKind kind_ = GroupKind::kFreeGroup;
  std::vector<std::string> generators_;
  std::map<std::string, std::uint32_t, std::less<>> aliases_;
  std::optional<Cfg> grammar_;
  std::vector<std::string> alphabet_;
  std::map<Letter, Terminal> index_;
};

/// `free:<rank>`, `coxeter:<n>`, or `custom:<grammar-file>`; throws ParseError.
Presentation parse_presentation(std::string_view text);

/// Whitespace-separated tokens, generator optionally followed by `^-1`;
/// `e` is the empty word. Throws ParseError.
Word parse_word(const Presentation& p, std::string_view text);
std::string format_word(const Presentation& p, const Word& w);

/// Free (or involution) reduction. Throws std::logic_error for kCustomVF.
Word free_reduce(const Presentation& p, const Word& w);

/// w_1^k ... w_n^k.
Word power_word(std::span<const Word> words, std::size_t k);

/// Least number of letters whose deletion leaves a word representing the
/// identity, by interval dynamic programming. Throws std::logic_error for
/// kCustomVF (use deletion_distance with the grammar).
std::uint64_t cancellation_norm(const Presentation& p, const Word& w);

/// Positions deleted by one optimal cancellation, in increasing order.
std::vector<std::size_t> cancellation_witness(const Presentation& p, const Word& w);

inline constexpr std::size_t kBruteForceCap = 16;

/// Exhaustive search over all subwords. Throws std::length_error when
/// |w| > cap and std::logic_error for kCustomVF.
std::uint64_t brute_force_norm(const Presentation& p, const Word& w,
                               std::size_t cap = kBruteForceCap);

/// Left turns minus right turns along the abelianised lattice path of a
/// reduced word in a free group of rank 2. Throws std::invalid_argument for
/// other presentations or a non-reduced word.
std::int64_t turn_quasimorphism(const Presentation& p, const Word& w);

/// Grammar for the words representing the identity (the stored grammar for
/// kCustomVF). Terminals follow p.alphabet().
Cfg wp_grammar(const Presentation& p);

/// Deletion distance of a group word to L(g), g over p.alphabet().
ExtNat deletion_distance(const Cfg& g, const Presentation& p, const Word& w);

}  // namespace stablenorm
