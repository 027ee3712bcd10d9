#include <benchmark/benchmark.h>

#include <random>

#include "stablenorm/envelope.hpp"
#include "stablenorm/semilinear.hpp"
#include "stablenorm/sequence.hpp"
#include "stablenorm/stable_norm.hpp"
#include "stablenorm/word.hpp"

namespace {

using namespace stablenorm;

Word random_word(const Presentation& p, std::size_t length, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, p.alphabet().size() - 1);
  std::vector<Letter> letters;
  for (std::size_t i = 0; i < length; ++i) {
    letters.push_back(p.letter_at(static_cast<Terminal>(pick(rng))));
  }
  return Word(std::move(letters));
}

void BM_CancellationNorm(benchmark::State& state) {
  const auto p = Presentation::free_group(2);
  const auto w = random_word(p, static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cancellation_norm(p, w));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CancellationNorm)->RangeMultiplier(2)->Range(32, 512)->Complexity();

void BM_CommutatorSequence(benchmark::State& state) {
  const auto p = Presentation::free_group(2);
  const NormQuery q{p, {parse_word(p, "a b a^-1 b^-1")}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(empirical_sequence(q, static_cast<std::size_t>(state.range(0)), 1));
  }
}
BENCHMARK(BM_CommutatorSequence)->Arg(20)->Arg(40);

void BM_MinForms(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  std::vector<ResidueTail> f_tails;
  std::vector<ResidueTail> g_tails;
  for (std::size_t n = 0; n < m; ++n) {
    f_tails.push_back(ResidueTail::arithmetic(static_cast<std::int64_t>(n % 5), 3));
    g_tails.push_back(ResidueTail::arithmetic(static_cast<std::int64_t>(40 - n % 7), 2));
  }
  const SemiArithmeticForm f({}, m, f_tails);
  const SemiArithmeticForm g({ExtNat(1), ExtNat(2)}, m + 1,
                             [&] {
                               auto t = g_tails;
                               t.push_back(ResidueTail::infinity());
                               return t;
                             }());
  for (auto _ : state) {
    benchmark::DoNotOptimize(min_forms(f, g));
  }
}
BENCHMARK(BM_MinForms)->Arg(2)->Arg(8)->Arg(32);

void BM_EnvelopeMonoid(benchmark::State& state) {
  const std::vector<Point2> gens{{7, 11}, {5, 8}, {3, 5}, {11, 17}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(envelope_monoid(gens));
  }
}
BENCHMARK(BM_EnvelopeMonoid);

void BM_HilbertBasis(benchmark::State& state) {
  const IntMatrix a{{3, 5, -4, -7}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(hilbert_basis(a, 4));
  }
}
BENCHMARK(BM_HilbertBasis);

void BM_SymbolicPipeline(benchmark::State& state) {
  const auto p = Presentation::free_group(2);
  const NormQuery q{p, {parse_word(p, state.range(0) == 0 ? "a b" : "a b a^-1 b^-1")}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(symbolic_tau(q));
  }
}
BENCHMARK(BM_SymbolicPipeline)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
