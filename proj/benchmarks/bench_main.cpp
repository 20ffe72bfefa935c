#include <benchmark/benchmark.h>

#include "qw22/expression.hpp"
#include "qw22/hopf.hpp"
#include "qw22/oscillator.hpp"
#include "qw22/sampling.hpp"

using namespace qw22;

namespace {

using G = GeneratorSymbol;

Word descending_word(int len) {
  Word w;
  for (int i = len / 2; i > len / 2 - len; --i) w.push_back(G::L(i));
  return w;
}

void BM_LaurentMultiply(benchmark::State& state) {
  const LaurentPoly a = q_int(state.range(0)) * q_int(3);
  const LaurentPoly b = q_int(state.range(0) + 1);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_LaurentMultiply)->Arg(8)->Arg(64)->Arg(512);

void BM_NormalizeDescending(benchmark::State& state) {
  const Word w = descending_word(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(normalize(w));
}
BENCHMARK(BM_NormalizeDescending)->DenseRange(2, 8, 2);

void BM_NormalizeRandom(benchmark::State& state) {
  Rng rng(5);
  const WordShape shape{static_cast<int>(state.range(0)), 6, true};
  std::vector<Word> words;
  for (int i = 0; i < 64; ++i) words.push_back(random_word(rng, shape));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(normalize(words[i++ % words.size()]));
}
BENCHMARK(BM_NormalizeRandom)->Arg(3)->Arg(6);

void BM_Multiply(benchmark::State& state) {
  Rng rng(6);
  const WordShape shape{3, 4, true};
  const Element x = random_element(rng, shape);
  const Element y = random_element(rng, shape);
  for (auto _ : state) benchmark::DoNotOptimize(multiply(x, y));
}
BENCHMARK(BM_Multiply);

void BM_CoproductPower(benchmark::State& state) {
  const Element x = power(element_from(G::L(2)), state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(coproduct(x));
}
BENCHMARK(BM_CoproductPower)->DenseRange(1, 6);

void BM_Antipode(benchmark::State& state) {
  const Element x = normalize({G::T(), G::L(3), G::L(1), G::W(-2)});
  for (auto _ : state) benchmark::DoNotOptimize(antipode(x));
}
BENCHMARK(BM_Antipode);

void BM_ParseElement(benchmark::State& state) {
  const std::string text = "qbr(L[0], L[1]; q^-1, q) * (W[2] - 3*T^-1) + q^2 L[-3] W[1]";
  for (auto _ : state) benchmark::DoNotOptimize(parse_element(text));
}
BENCHMARK(BM_ParseElement);

void BM_OscillatorAction(benchmark::State& state) {
  const Element x = normalize({G::L(2), G::L(1), G::W(-1)});
  const ModuleVector v = ModuleVector::basis(5, 0);
  for (auto _ : state) benchmark::DoNotOptimize(apply_element(x, v, OscProfile::q_deformed));
}
BENCHMARK(BM_OscillatorAction);

}  // namespace

BENCHMARK_MAIN();
