#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "stablenorm/cfg.hpp"
#include "stablenorm/word.hpp"

namespace stablenorm {
namespace {

std::set<TerminalString> language(const Cfg& g, std::size_t max_length) {
  const auto words = enumerate_language(g, max_length);
  return {words.begin(), words.end()};
}

TerminalString encode(const Cfg& g, std::initializer_list<std::string> tokens) {
  const std::vector<std::string> v(tokens);
  return g.encode(v);
}

// every string over n letters of length <= max_length
std::vector<TerminalString> all_strings(std::size_t n, std::size_t max_length) {
  std::vector<TerminalString> out{{}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].size() == max_length) {
      continue;
    }
    for (Terminal t = 0; t < n; ++t) {
      auto next = out[i];
      next.push_back(t);
      out.push_back(std::move(next));
    }
  }
  return out;
}

TEST(Grammar, DslRoundTrip) {
  const auto g = parse_grammar("S -> a S b | _\n// comment\n");
  EXPECT_EQ(g.terminals(), (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(g.variables(), (std::vector<std::string>{"S"}));
  const auto again = parse_grammar(g.to_dsl());
  EXPECT_EQ(language(g, 8), language(again, 8));
  EXPECT_THROW(parse_grammar("S a b"), ParseError);
  EXPECT_THROW(parse_grammar("S -> a c", std::vector<std::string>{"a", "b"}), ParseError);
}

TEST(Cnf, WordProblemOfRankOne) {
  const auto g = wp_grammar(Presentation::free_group(1));
  const auto cnf = to_cnf(g);
  EXPECT_TRUE(is_cnf(cnf));
  EXPECT_FALSE(is_cnf(g));
  EXPECT_EQ(language(g, 8), language(cnf, 8));
}

TEST(Cnf, EmptyWordOnly) {
  const auto cnf = to_cnf(parse_grammar("S -> _"));
  EXPECT_TRUE(is_cnf(cnf));
  ASSERT_EQ(cnf.rules().size(), 1U);
  EXPECT_TRUE(cnf.rules()[0].rhs.empty());
  EXPECT_EQ(language(cnf, 4), (std::set<TerminalString>{{}}));
}

TEST(Cnf, SingleWord) {
  const auto g = parse_grammar("S -> a b");
  const auto cnf = to_cnf(g);
  EXPECT_TRUE(is_cnf(cnf));
  EXPECT_EQ(language(cnf, 5), (std::set<TerminalString>{encode(g, {"a", "b"})}));
}

TEST(Cnf, RandomGrammarsKeepLanguage) {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<int> pick(0, 4);
  for (int trial = 0; trial < 40; ++trial) {
    std::string text;
    for (const char* lhs : {"S", "A", "B"}) {
      text += lhs;
      text += " ->";
      for (int alt = 0; alt < 3; ++alt) {
        text += alt == 0 ? " " : " | ";
        const int len = pick(rng) % 4;
        if (len == 0) {
          text += "_";
        }
        for (int i = 0; i < len; ++i) {
          static const char* symbols[] = {"a", "b", "S", "A", "B"};
          text += symbols[pick(rng)];
          text += " ";
        }
      }
      text += "\n";
    }
    const auto g = parse_grammar(text, std::vector<std::string>{"a", "b"});
    const auto cnf = to_cnf(g);
    EXPECT_TRUE(is_cnf(cnf)) << text;
    EXPECT_EQ(language(g, 6), language(cnf, 6)) << text;
  }
}

TEST(Cyk, Examples) {
  const auto f2 = Presentation::free_group(2);
  const auto g = wp_grammar(f2);
  EXPECT_FALSE(cyk_membership(g, f2.encode(parse_word(f2, "a b a^-1 b^-1"))));
  EXPECT_TRUE(cyk_membership(g, f2.encode(parse_word(f2, "a b b^-1 a^-1"))));
  const auto st = Presentation::universal_coxeter(2);
  EXPECT_TRUE(cyk_membership(wp_grammar(st), st.encode(parse_word(st, "s1 s2 s2 s1"))));
}

TEST(DeletionDistance, Examples) {
  const auto f2 = Presentation::free_group(2);
  const auto word = parse_word(f2, "a b a^-1 b^-1 a b a^-1 b^-1");
  EXPECT_EQ(deletion_distance(wp_grammar(f2), f2.encode(word)), ExtNat(4));
  EXPECT_EQ(deletion_distance(wp_grammar(f2), TerminalString{}), ExtNat(0));
  const auto ab = parse_grammar("S -> a b");
  // no subword of "b a" is "a b"
  EXPECT_EQ(deletion_distance(ab, encode(ab, {"b", "a"})), ExtNat::infinity());
  EXPECT_EQ(deletion_distance(ab, encode(ab, {"a", "a", "b"})), ExtNat(1));
  EXPECT_EQ(deletion_distance(ab, TerminalString{}), ExtNat::infinity());
}

TEST(DeletionDistance, MatchesSubwordSearch) {
  const auto g = parse_grammar("S -> a S b | b | S S");
  const ChartParser parser(g);
  for (const auto& w : all_strings(2, 7)) {
    ExtNat best = ExtNat::infinity();
    for (std::uint32_t mask = 0; mask < (1U << w.size()); ++mask) {
      TerminalString sub;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (mask >> i & 1) {
          sub.push_back(w[i]);
        }
      }
      if (parser.accepts(sub)) {
        best = min(best, ExtNat(w.size() - sub.size()));
      }
    }
    ASSERT_EQ(parser.deletion_distance(w), best);
  }
}

TEST(SubwordNfa, AcceptsSubsequences) {
  const std::vector<std::string> alphabet{"a", "b"};
  const TerminalString word{0, 1, 0};
  const auto nfa = subword_nfa(alphabet, word);
  EXPECT_EQ(nfa.num_states(), 4U);
  for (const auto& w : all_strings(2, 4)) {
    bool subsequence = false;
    std::size_t j = 0;
    for (Terminal t : word) {
      if (j < w.size() && w[j] == t) {
        ++j;
      }
    }
    subsequence = j == w.size();
    EXPECT_EQ(nfa.accepts(w), subsequence);
    EXPECT_EQ(nfa.without_epsilon().accepts(w), subsequence);
  }
}

TEST(EnumerationNfa, Shape) {
  const std::vector<std::string> alphabet{"a", "b"};
  const std::vector<TerminalString> words{{0, 1}};
  const auto nfa = enumeration_nfa(alphabet, words, fresh_markers(1));
  EXPECT_EQ(nfa.alphabet(), (std::vector<std::string>{"a", "b", "#y1"}));
  const Terminal y = 2;
  EXPECT_TRUE(nfa.accepts(TerminalString{}));
  EXPECT_TRUE(nfa.accepts(TerminalString{0, 1, y}));
  EXPECT_TRUE(nfa.accepts(TerminalString{0, y, 1, y}));
  EXPECT_TRUE(nfa.accepts(TerminalString{y, y}));
  EXPECT_FALSE(nfa.accepts(TerminalString{1, 0, y}));
  EXPECT_FALSE(nfa.accepts(TerminalString{0}));
  EXPECT_THROW(enumeration_nfa(alphabet, words, {"a"}), std::invalid_argument);
  EXPECT_THROW(enumeration_nfa(alphabet, words, {"#y1", "#y2"}), std::invalid_argument);
}

TEST(EnumerationNfa, TwoBlocksInOrder) {
  const std::vector<std::string> alphabet{"a", "b"};
  const std::vector<TerminalString> words{{0}, {1}};
  const auto nfa = enumeration_nfa(alphabet, words, fresh_markers(2));
  const Terminal y1 = 2;
  const Terminal y2 = 3;
  EXPECT_TRUE(nfa.accepts(TerminalString{0, y1, y1, 1, y2}));
  EXPECT_FALSE(nfa.accepts(TerminalString{1, y2, 0, y1}));
}

TEST(InverseHom, Identity) {
  const auto g = wp_grammar(Presentation::free_group(1));
  const auto pre = inverse_hom(g, StringHom::identity(g.terminals()));
  EXPECT_EQ(language(g, 8), language(pre, 8));
}

TEST(InverseHom, EverythingToEmpty) {
  const auto g = parse_grammar("S -> _ | a");
  const StringHom h({"x", "y"}, g.terminals(), {{}, {}});
  const auto pre = inverse_hom(g, h);
  EXPECT_EQ(language(pre, 4).size(), all_strings(2, 4).size());
}

TEST(InverseHom, MatchesPointwiseCheck) {
  const auto g = parse_grammar("S -> a S b | _");
  const StringHom h({"x", "y", "z"}, g.terminals(), {{0}, {1}, {0, 1}});
  const auto pre = inverse_hom(g, h);
  for (const auto& w : all_strings(3, 5)) {
    ASSERT_EQ(cyk_membership(pre, w), cyk_membership(g, h.apply(w)));
  }
}

TEST(IntersectRegular, Examples) {
  const auto g = wp_grammar(Presentation::free_group(1));
  const Nfa empty(g.terminals(), 1, {}, {0}, {});
  EXPECT_TRUE(language(intersect_regular(g, empty), 6).empty());
  const Nfa universal(g.terminals(), 1, {{0, 0, 0}, {0, 1, 0}}, {0}, {0});
  EXPECT_EQ(language(intersect_regular(g, universal), 8), language(g, 8));
  // a* a^-1*
  const Nfa sorted(g.terminals(), 2, {{0, 0, 0}, {0, 1, 1}, {1, 1, 1}}, {0}, {0, 1});
  for (const auto& w : language(intersect_regular(g, sorted), 8)) {
    EXPECT_TRUE(std::is_sorted(w.begin(), w.end()));
  }
  EXPECT_EQ(language(intersect_regular(g, sorted), 8).size(), 5U);
  EXPECT_THROW(intersect_regular(g, universal, ProductLimits{1}), BudgetExceeded);
}

TEST(Project, Examples) {
  const auto h = StringHom::projection({"a", "b", "y1", "y2"}, {"a", "b"});
  EXPECT_EQ(project(h, TerminalString{0, 2, 1, 3}), (TerminalString{0, 1}));
  EXPECT_TRUE(project(h, TerminalString{}).empty());
  EXPECT_THROW(project(h, TerminalString{7}), std::out_of_range);
}

TEST(Prune, DropsUselessVariables) {
  const auto g = parse_grammar("S -> a | A\nA -> A b\nB -> a");
  const auto p = prune(g);
  EXPECT_EQ(p.variables(), (std::vector<std::string>{"S"}));
  EXPECT_EQ(language(p, 4), language(g, 4));
}

}  // namespace
}  // namespace stablenorm
