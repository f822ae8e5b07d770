#include <benchmark/benchmark.h>

#include <random>
#include <set>
#include <vector>

#include "ktss/canonical.hpp"
#include "ktss/clustering.hpp"
#include "ktss/dfa.hpp"
#include "ktss/test_vector.hpp"
#include "ktss/word.hpp"

namespace {

using ktss::KTestVector;
using ktss::Symbol;
using ktss::Word;
using ktss::WordSet;

std::vector<Symbol> alphabet(std::size_t n) {
  std::vector<Symbol> sigma;
  for (std::size_t i = 0; i < n; ++i) sigma.push_back(U'a' + i);
  return sigma;
}

Word random_word(std::mt19937_64& rng, std::span<const Symbol> sigma,
                 std::size_t length) {
  std::uniform_int_distribution<std::size_t> pick(0, sigma.size() - 1);
  Word out;
  out.reserve(length);
  for (std::size_t i = 0; i < length; ++i) out.push_back(sigma[pick(rng)]);
  return out;
}

// A vector with `segment_count` distinct random segments plus sampled
// boundary sets, the shape the compatibility decision sees in production.
KTestVector segment_heavy_vector(std::mt19937_64& rng,
                                 std::span<const Symbol> sigma,
                                 std::size_t segment_count) {
  std::set<Word> segments;
  while (segments.size() < segment_count) {
    segments.insert(random_word(rng, sigma, 3));
  }
  WordSet t(segments.begin(), segments.end());
  WordSet i, f;
  for (std::size_t n = 0; n < t.size(); n += 97) {
    i.push_back(t[n].substr(0, 2));
    f.push_back(t[n].substr(1));
  }
  ktss::normalize_set(i);
  ktss::normalize_set(f);
  return KTestVector::make(3, std::move(i), std::move(f), std::move(t), {});
}

void BM_Extract(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto sigma = alphabet(10);
  const Word w = random_word(rng, sigma, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto v = ktss::extract(3, std::span<const Word>(&w, 1));
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_Extract)->Arg(16)->Arg(256)->Arg(4096);

void BM_Membership(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto sigma = alphabet(4);
  const Word base = random_word(rng, sigma, 512);
  const auto v = ktss::extract(3, std::span<const Word>(&base, 1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(v.contains(base));
  }
}
BENCHMARK(BM_Membership);

void BM_Distance(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const auto sigma = alphabet(10);
  const auto a = segment_heavy_vector(rng, sigma,
                                      static_cast<std::size_t>(state.range(0)));
  const auto b = segment_heavy_vector(rng, sigma,
                                      static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ktss::distance(a, b));
  }
}
BENCHMARK(BM_Distance)->Arg(100)->Arg(1000);

void BM_Canonicalize(benchmark::State& state) {
  std::mt19937_64 rng(4);
  const auto sigma = alphabet(10);
  const auto v = segment_heavy_vector(rng, sigma,
                                      static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto c = ktss::canonicalize(v);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_Canonicalize)->Arg(100)->Arg(1000);

void BM_UnionIsExact(benchmark::State& state) {
  std::mt19937_64 rng(5);
  const auto sigma = alphabet(50);
  const auto a = segment_heavy_vector(rng, sigma,
                                      static_cast<std::size_t>(state.range(0)));
  const auto b = segment_heavy_vector(rng, sigma,
                                      static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ktss::union_is_exact(a, b));
  }
}
BENCHMARK(BM_UnionIsExact)->Arg(1000)->Arg(10000);

void BM_ToDfa(benchmark::State& state) {
  std::mt19937_64 rng(6);
  const auto sigma = alphabet(10);
  const auto v = segment_heavy_vector(rng, sigma, 1000);
  for (auto _ : state) {
    auto dfa = ktss::to_dfa(v);
    benchmark::DoNotOptimize(dfa);
  }
}
BENCHMARK(BM_ToDfa);

void BM_LearnPipeline(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const auto sigma = alphabet(10);
  std::vector<Word> sample;
  std::uniform_int_distribution<std::size_t> len(5, 15);
  for (std::int64_t i = 0; i < state.range(0); ++i) {
    sample.push_back(random_word(rng, sigma, len(rng)));
  }
  for (auto _ : state) {
    auto result = ktss::learn_union(sample, 3);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_LearnPipeline)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
