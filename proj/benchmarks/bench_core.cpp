#include <benchmark/benchmark.h>

#include <random>

#include "monideal/monideal.hpp"

namespace {

using namespace monideal;

MonomialIdeal random_ideal(std::mt19937_64& rng, std::size_t dim, std::size_t gens, Exponent max_exp) {
  std::uniform_int_distribution<Exponent> pick(0, max_exp);
  std::vector<Monomial> out;
  while (out.size() < gens) {
    std::vector<Exponent> e(dim);
    for (Exponent& x : e) x = pick(rng);
    Monomial m(std::move(e));
    if (!m.is_one()) out.push_back(std::move(m));
  }
  return MonomialIdeal::from_generators(dim, std::move(out));
}

void BM_Decompose(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  const MonomialIdeal ideal = random_ideal(rng, dim, 6, 4);
  for (auto _ : state) benchmark::DoNotOptimize(decompose(ideal));
}
BENCHMARK(BM_Decompose)->DenseRange(2, 6);

void BM_SymbolicGeneral(benchmark::State& state) {
  const MonomialIdeal cycle = parse_ideal("(x1*x2, x2*x3, x3*x4, x4*x5, x1*x5)");
  const auto k = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(symbolic_power_general(cycle, k));
}
BENCHMARK(BM_SymbolicGeneral)->DenseRange(1, 4);

void BM_SymbolicSquarefree(benchmark::State& state) {
  const MonomialIdeal cycle = parse_ideal("(x1*x2, x2*x3, x3*x4, x4*x5, x1*x5)");
  const auto k = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(symbolic_power_squarefree(cycle, k));
}
BENCHMARK(BM_SymbolicSquarefree)->DenseRange(1, 4);

void BM_IntegralClosure(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(11);
  const MonomialIdeal ideal = random_ideal(rng, dim, 3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(integral_closure(ideal));
}
BENCHMARK(BM_IntegralClosure)->DenseRange(2, 4);

void BM_NewtonMembership(benchmark::State& state) {
  const MonomialIdeal ideal = parse_ideal("(x1^5, x2^4*x3, x3^3*x4^2, x1*x4^4, x2^2*x3^2)");
  const Monomial m = parse_monomial("x1^2*x2^2*x3*x4^2", 4);
  for (auto _ : state) benchmark::DoNotOptimize(in_newton_polyhedron(ideal.generators(), m));
}
BENCHMARK(BM_NewtonMembership);

}  // namespace

BENCHMARK_MAIN();
