#include "stablenorm/stable_norm.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "stablenorm/cfg.hpp"
#include "stablenorm/envelope.hpp"
#include "stablenorm/parikh.hpp"
#include "stablenorm/semilinear.hpp"

namespace stablenorm {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kCertified:
      return "certified";
    case Verdict::kHeuristic:
      return "heuristic";
    case Verdict::kMismatch:
      return "mismatch";
  }
  return "unknown";
}

namespace {

void require_words(const NormQuery& q) {
  if (q.words.empty()) {
    throw std::invalid_argument("a norm query needs at least one word");
  }
}

std::uint64_t total_length(const NormQuery& q) {
  std::uint64_t d = 0;
  for (const Word& w : q.words) {
    d += w.size();
  }
  return d;
}

std::size_t default_compare_bound(const PipelineReport& report, std::size_t min_tail_reps) {
  std::size_t bound = 12;
  if (report.empirical && report.empirical->fitted) {
    bound = std::max(bound, 2 * report.empirical->fitted->form.period() * (min_tail_reps + 2));
  }
  if (report.symbolic && report.symbolic->envelope) {
    const auto& env = *report.symbolic->envelope;
    bound = std::max(bound, env.preperiod_length() + 2 * env.period());
  }
  return bound;
}

std::optional<Rational> tau_of(const SemiArithmeticForm& form) {
  if (!form.uniform() || !form.eventually_finite()) {
    return std::nullopt;
  }
  return limit_tau(form);
}

EmpiricalResult run_empirical(const NormQuery& q, std::size_t kmax,
                              const EmpiricalOptions& options, std::vector<std::string>& notes) {
  EmpiricalResult out;
  out.values = empirical_sequence(q, kmax, options.threads);
  out.step_bound = total_length(q);
  if (q.presentation.kind() != GroupKind::kCustomVF) {
    if (std::any_of(out.values.begin(), out.values.end(),
                    [](ExtNat v) { return v.is_infinite(); })) {
      throw std::logic_error("empirical route: infinite norm in a built-in group");
    }
    if (!check_step_bound(out.values, out.step_bound)) {
      throw std::logic_error("empirical route: step bound D = " + std::to_string(out.step_bound) +
                             " violated");
    }
  }
  try {
    out.fitted = fit_semi_arithmetic(out.values, options.max_period, options.min_tail_reps);
  } catch (const std::invalid_argument& e) {
    notes.push_back(std::string("no fit attempted: ") + e.what());
  }
  return out;
}

Cfg merge_letters(const Cfg& g, std::size_t letters, const std::vector<std::string>& markers) {
  std::vector<std::string> terminals{"letters"};
  terminals.insert(terminals.end(), markers.begin(), markers.end());
  std::vector<Rule> rules = g.rules();
  for (Rule& rule : rules) {
    for (Symbol& s : rule.rhs) {
      if (s.is_terminal()) {
        s.id = s.id < letters ? 0 : static_cast<std::uint32_t>(s.id - letters + 1);
      }
    }
  }
  return Cfg(std::move(terminals), g.variables(), std::move(rules), g.start());
}

Nfa build_enumeration(const NormQuery& q, const std::vector<std::string>& markers) {
  std::vector<TerminalString> encoded;
  for (const Word& w : q.words) {
    encoded.push_back(q.presentation.encode(w));
  }
  return enumeration_nfa(q.presentation.alphabet(), encoded, markers);
}

Cfg build_preimage(const Presentation& p, const Nfa& r) {
  return inverse_hom(wp_grammar(p), StringHom::projection(r.alphabet(), p.alphabet()));
}

SymbolicResult run_symbolic(const NormQuery& q, const Budgets& budgets) {
  require_words(q);
  const Presentation& p = q.presentation;
  SymbolicResult out;
  std::string stage;
  try {
    stage = "enumeration_nfa";
    const std::vector<std::string> markers = fresh_markers(q.words.size());
    const Nfa r = build_enumeration(q, markers);
    out.sizes.push_back({stage, r.num_states() + r.transitions().size()});

    stage = "preimage_grammar";
    const Cfg preimage = build_preimage(p, r);
    out.sizes.push_back({stage, preimage.size()});

    stage = "product_grammar";
    const Cfg m = intersect_regular(preimage, r, ProductLimits{budgets.product_items});
    out.sizes.push_back({stage, m.size()});

    stage = "parikh_image";
    std::vector<std::string> letter_coordinates = p.alphabet();
    Cfg counted = m;
    if (budgets.coordinates == ParikhCoordinates::kMerged) {
      counted = merge_letters(m, p.alphabet().size(), markers);
      letter_coordinates = {"letters"};
    }
    const SemilinearSet image = parikh_cfg(counted, ParikhLimits{budgets.parikh_work});
    out.sizes.push_back({stage, image.size()});

    stage = "diagonal_intersection";
    const SemilinearSet constraint =
        sl_product(SemilinearSet::full(letter_coordinates), sl_diagonal(markers));
    const SemilinearSet diagonal =
        sl_intersect(image, constraint, DiophantineLimits{budgets.diophantine_nodes});
    out.sizes.push_back({stage, diagonal.size()});

    stage = "xi_image";
    const std::size_t nl = letter_coordinates.size();
    IntMatrix rows(2, std::vector<std::int64_t>(nl + markers.size(), 0));
    rows[0][nl] = 1;
    for (std::size_t c = 0; c < nl; ++c) {
      rows[1][c] = -1;
    }
    for (std::size_t i = 0; i < q.words.size(); ++i) {
      rows[1][nl + i] = static_cast<std::int64_t>(q.words[i].size());
    }
    const MonoidLinearMap xi({"k", "norm"}, nl + markers.size(), std::move(rows));
    SemilinearSet u = SemilinearSet::empty_set({"k", "norm"});
    try {
      u = sl_image(diagonal, xi);
    } catch (const std::domain_error& e) {
      throw std::logic_error(std::string("symbolic route: xi leaves N^2 (") + e.what() + ")");
    }
    out.sizes.push_back({stage, u.size()});

    stage = "envelope";
    out.envelope = envelope_semilinear(u);
    out.sizes.push_back(
        {stage, out.envelope->preperiod_length() + out.envelope->period()});
    out.status = "complete";
  } catch (const BudgetExceeded& e) {
    out.status = "budget_exceeded";
    out.stage = stage;
    out.detail = e.what();
  }
  return out;
}

}  // namespace

SymbolicGrammars symbolic_grammars(const NormQuery& q, const Budgets& budgets) {
  require_words(q);
  const auto markers = fresh_markers(q.words.size());
  const Nfa r = build_enumeration(q, markers);
  Cfg preimage = build_preimage(q.presentation, r);
  Cfg product = intersect_regular(preimage, r, ProductLimits{budgets.product_items});
  Cfg merged = merge_letters(product, q.presentation.alphabet().size(), markers);
  return {wp_grammar(q.presentation), std::move(preimage), std::move(product), std::move(merged)};
}

std::vector<ExtNat> empirical_sequence(const NormQuery& q, std::size_t kmax, std::size_t threads) {
  require_words(q);
  const Presentation& p = q.presentation;
  std::optional<ChartParser> parser;
  if (p.kind() == GroupKind::kCustomVF) {
    parser.emplace(*p.grammar());
  }
  std::vector<ExtNat> values(kmax + 1, ExtNat(0));
  std::atomic<std::size_t> next{1};
  auto worker = [&] {
    for (std::size_t k = next++; k <= kmax; k = next++) {
      const Word w = power_word(q.words, k);
      values[k] = parser ? parser->deletion_distance(p.encode(w))
                         : ExtNat(cancellation_norm(p, w));
    }
  };
  if (threads == 0) {
    threads = std::max(1U, std::thread::hardware_concurrency());
  }
  threads = std::min(threads, std::max<std::size_t>(kmax, 1));
  std::vector<std::thread> pool;
  for (std::size_t i = 1; i < threads; ++i) {
    pool.emplace_back(worker);
  }
  worker();
  for (auto& t : pool) {
    t.join();
  }
  if (parser) {
    values[0] = parser->deletion_distance({});
  }
  return values;
}

PipelineReport empirical_tau(const NormQuery& q, const EmpiricalOptions& options) {
  PipelineReport report{q, {}, {}, {}, Verdict::kHeuristic, {}, {}};
  report.empirical = run_empirical(q, options.kmax, options, report.notes);
  return judge(std::move(report), std::nullopt, options.min_tail_reps);
}

PipelineReport symbolic_tau(const NormQuery& q, const Budgets& budgets) {
  PipelineReport report{q, {}, {}, {}, Verdict::kHeuristic, {}, {}};
  report.symbolic = run_symbolic(q, budgets);
  if (q.presentation.kind() == GroupKind::kCustomVF) {
    report.notes.emplace_back("stable cancellation length relative to the supplied language");
  }
  return judge(std::move(report), std::nullopt);
}

PipelineReport cross_check(const NormQuery& q, const EmpiricalOptions& options,
                           const Budgets& budgets, std::optional<std::size_t> compare_up_to) {
  PipelineReport report = symbolic_tau(q, budgets);
  std::vector<std::string> notes;
  report.empirical = run_empirical(q, options.kmax, options, notes);
  const std::size_t bound =
      compare_up_to.value_or(default_compare_bound(report, options.min_tail_reps));
  if (bound > options.kmax) {
    notes.clear();
    report.empirical = run_empirical(q, bound, options, notes);
  }
  report.notes.insert(report.notes.end(), notes.begin(), notes.end());
  return judge(std::move(report), bound, options.min_tail_reps);
}

PipelineReport judge(PipelineReport report, std::optional<std::size_t> compare_up_to,
                     std::size_t min_tail_reps) {
  report.tau.reset();
  report.compared_up_to.reset();
  report.verdict = Verdict::kHeuristic;
  if (report.symbolic && report.symbolic->envelope) {
    const SemiArithmeticForm& env = *report.symbolic->envelope;
    if (!env.uniform()) {
      report.verdict = Verdict::kMismatch;
      report.notes.emplace_back("symbolic envelope is not uniformly semi-arithmetic");
      return report;
    }
    if (report.empirical) {
      const auto& values = report.empirical->values;
      const std::size_t bound =
          std::min(compare_up_to.value_or(default_compare_bound(report, min_tail_reps)),
                   values.size() - 1);
      report.compared_up_to = bound;
      for (std::size_t k = 0; k <= bound; ++k) {
        if (env.eval(k) != values[k]) {
          report.verdict = Verdict::kMismatch;
          report.notes.push_back("routes differ at k = " + std::to_string(k) + ": envelope " +
                                 env.eval(k).to_string() + ", empirical " +
                                 values[k].to_string());
          return report;
        }
      }
      report.verdict = Verdict::kCertified;
    }
    report.tau = tau_of(env);
    return report;
  }
  if (report.empirical && report.empirical->fitted) {
    report.tau = tau_of(report.empirical->fitted->form);
  }
  return report;
}

int exit_code_for(const PipelineReport& report) {
  if (report.verdict == Verdict::kMismatch) {
    return 3;
  }
  if (report.symbolic && !report.symbolic->complete() && !report.empirical) {
    return 4;
  }
  return 0;
}

}  // namespace stablenorm
