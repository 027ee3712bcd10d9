#pragma once

// Parikh images of context-free and regular languages.

#include <cstddef>

#include "stablenorm/cfg.hpp"
#include "stablenorm/semilinear.hpp"

namespace stablenorm {

struct ParikhLimits {
  /// Upper bound on semiring work (component pairings and simplification
  /// steps) before BudgetExceeded("parikh", ...) is thrown.
  std::size_t max_work = 1'000'000;
};

struct ParikhStats {
  std::size_t work = 0;
  std::size_t newton_iterations = 0;
  std::size_t largest_component_count = 0;
};

/// psi(L(g)) over the coordinates g.terminals(). Solves the commutative
/// grammar equations with Newton's method, one strongly connected group of
/// variables at a time.
SemilinearSet parikh_cfg(const Cfg& g, ParikhLimits limits = {}, ParikhStats* stats = nullptr);

/// psi(L(a)) over the coordinates a.alphabet(), through the right-linear
/// grammar of the automaton.
SemilinearSet parikh_nfa(const Nfa& a, ParikhLimits limits = {}, ParikhStats* stats = nullptr);

}  // namespace stablenorm
