#pragma once

// The empirical and symbolic routes to the stable cancellation length.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stablenorm/ext_nat.hpp"
#include "stablenorm/sequence.hpp"
#include "stablenorm/word.hpp"

namespace stablenorm {

/// The sequence k -> |w_1^k ... w_n^k|.
struct NormQuery {
  Presentation presentation;
  std::vector<Word> words;
};

enum class Verdict { kCertified, kHeuristic, kMismatch };

std::string to_string(Verdict v);

struct EmpiricalOptions {
  std::size_t kmax = 40;
  std::size_t max_period = 8;
  std::size_t min_tail_reps = 3;
  /// 0 picks std::thread::hardware_concurrency().
  std::size_t threads = 0;
};

enum class ParikhCoordinates {
  /// One coordinate per letter of S and per marker.
  kFull,
  /// The letters of S share one coordinate; the markers keep theirs.
  kMerged,
};

struct Budgets {
  std::size_t product_items = 5'000'000;
  std::size_t parikh_work = 10'000'000;
  std::size_t diophantine_nodes = 2'000'000;
  ParikhCoordinates coordinates = ParikhCoordinates::kMerged;
};

struct EmpiricalResult {
  std::vector<ExtNat> values;
  std::optional<FittedForm> fitted;
  std::uint64_t step_bound = 0;
};

struct StageSize {
  std::string stage;
  std::size_t size = 0;
};

struct SymbolicResult {
  /// "complete" or "budget_exceeded".
  std::string status;
  /// The stage that ran out of budget; empty when complete.
  std::string stage;
  std::string detail;
  std::vector<StageSize> sizes;
  std::optional<SemiArithmeticForm> envelope;

  bool complete() const { return envelope.has_value(); }
};

struct PipelineReport {
  NormQuery query;
  std::optional<EmpiricalResult> empirical;
  std::optional<SymbolicResult> symbolic;
  std::optional<Rational> tau;
  Verdict verdict = Verdict::kHeuristic;
  /// Largest k at which the two routes were compared.
  std::optional<std::size_t> compared_up_to;
  std::vector<std::string> notes;
};

/// The grammars the symbolic route builds before taking the Parikh image.
struct SymbolicGrammars {
  Cfg word_problem;
  /// Words over S and the markers whose S-part represents the identity.
  Cfg preimage;
  /// preimage intersected with the enumeration language.
  Cfg product;
  /// product with every letter of S renamed to the single terminal "letters".
  Cfg merged;
};

/// Throws BudgetExceeded when the product exceeds budgets.product_items.
SymbolicGrammars symbolic_grammars(const NormQuery& q, const Budgets& budgets = {});

/// values[k] for k = 0..kmax; entries are computed concurrently.
std::vector<ExtNat> empirical_sequence(const NormQuery& q, std::size_t kmax,
                                       std::size_t threads = 0);

/// Empirical route only; the verdict is heuristic.
PipelineReport empirical_tau(const NormQuery& q, const EmpiricalOptions& options = {});

/// The formal-language route. A stage that runs out of budget yields
/// status "budget_exceeded" naming the stage and a heuristic verdict.
PipelineReport symbolic_tau(const NormQuery& q, const Budgets& budgets = {});

/// Runs both routes and compares them for every k up to
/// max(12, 2 m (min_tail_reps + 2), T + 2 m) unless `compare_up_to` is set.
PipelineReport cross_check(const NormQuery& q, const EmpiricalOptions& options = {},
                           const Budgets& budgets = {},
                           std::optional<std::size_t> compare_up_to = std::nullopt);

/// Recomputes tau, the verdict and compared_up_to from the empirical and
/// symbolic parts of `report`.
PipelineReport judge(PipelineReport report, std::optional<std::size_t> compare_up_to,
                     std::size_t min_tail_reps = 3);

/// 0 for certified or heuristic, 3 for mismatch, 4 when the symbolic route
/// was the only one requested and ran out of budget.
int exit_code_for(const PipelineReport& report);

}  // namespace stablenorm
