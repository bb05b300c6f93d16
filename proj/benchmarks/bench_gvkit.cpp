#include <benchmark/benchmark.h>

#include "gvkit/localmult.hpp"
#include "gvkit/parse.hpp"
#include "gvkit/potential.hpp"
#include "gvkit/typeamat.hpp"

using namespace gvkit;

namespace {

// (y - x^k, y + x^k - x^(2k)) meet with multiplicity k.
std::pair<BiPoly, BiPoly> tangent_pair(unsigned k) {
  const BiPoly xk = parse_poly("x").pow(k);
  return {parse_poly("y") - xk, parse_poly("y") + xk - xk.pow(2)};
}

void BM_MultFulton(benchmark::State& state) {
  auto [p, q] = tangent_pair(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mult(p, q));
}
BENCHMARK(BM_MultFulton)->DenseRange(2, 12, 5);

void BM_MultJetOracle(benchmark::State& state) {
  const auto k = static_cast<unsigned>(state.range(0));
  auto [p, q] = tangent_pair(k);
  for (auto _ : state) benchmark::DoNotOptimize(mult_jet_oracle(p, q, k + 2));
}
BENCHMARK(BM_MultJetOracle)->DenseRange(2, 12, 5);

void BM_DetSym(benchmark::State& state) {
  const auto j = static_cast<unsigned>(state.range(0));
  const auto d = static_cast<unsigned>(state.range(1));
  const AMatrix a = build_A(5, 1, j, d);
  for (auto _ : state) benchmark::DoNotOptimize(det_sym(a));
}
BENCHMARK(BM_DetSym)->Args({5, 2})->Args({9, 2})->Args({5, 4})->Args({9, 5});

void BM_HSequenceExact(benchmark::State& state) {
  const auto e = static_cast<unsigned>(state.range(0));
  Potential::Coeffs c;
  for (unsigned i = 1; i <= 5; ++i) c[{i, e}] = Rat(static_cast<long>(i));
  const Potential pot(3, c);
  for (auto _ : state) benchmark::DoNotOptimize(h_sequence(pot, 0, 6));
}
BENCHMARK(BM_HSequenceExact)->Arg(2)->Arg(3)->Arg(4);

void BM_RealizeFlag(benchmark::State& state) {
  const Potential pot(3, {{{1, 3}, 1}, {{2, 2}, 1}, {{3, 4}, 2}, {{4, 3}, 1}, {{5, 2}, 1}});
  const auto trunc = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(realize_flag(pot, trunc, 0));
}
BENCHMARK(BM_RealizeFlag)->Arg(16)->Arg(32)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
