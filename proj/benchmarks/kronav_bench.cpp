#include <benchmark/benchmark.h>

#include "kronav/exactnum/field.hpp"
#include "kronav/fieldlat/lattice.hpp"
#include "kronav/geometry/minima.hpp"
#include "kronav/io/problem.hpp"
#include "kronav/kronecker/kr.hpp"
#include "kronav/kronecker/solve.hpp"

namespace {

using namespace kronav;

FieldPtr sqrt2_field() { return NumberField::create(IntPoly({Integer(-2), Integer(0), Integer(1)}), 1, 2); }

std::string data(const char* name) { return std::string(KRONAV_TEST_DATA) + "/" + name; }

void BM_KrSearchSqrt2(benchmark::State& state) {
  const FieldPtr e = sqrt2_field();
  const std::vector<FieldElement> theta{FieldElement::generator(e)};
  const std::vector<FieldElement> target{FieldElement(e, Rational(1, 2))};
  const Rational eps(1, state.range(0));
  KrSearchOptions o;
  o.cap = Integer(100) * state.range(0);
  o.threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(kr_search(theta, target, eps, o));
}
BENCHMARK(BM_KrSearchSqrt2)->Args({20, 1})->Args({1000, 1})->Args({100000, 1})->Args({100000, 4});

void BM_SuccessiveMinima(benchmark::State& state) {
  const auto r = static_cast<std::size_t>(state.range(0));
  std::vector<std::vector<Rational>> cols(r, std::vector<Rational>(r, Rational(0)));
  for (std::size_t i = 0; i < r; ++i) {
    cols[i][i] = static_cast<long>(i) + 2;
    for (std::size_t j = 0; j < i; ++j) cols[i][j] = static_cast<long>((i * 7 + j * 3) % 5) - 2;
  }
  const EmbeddedLattice lattice = EmbeddedLattice::from_rational_columns(NumberField::create(IntPoly({Integer(0), Integer(1)}), 0, 0), cols);
  for (auto _ : state) benchmark::DoNotOptimize(successive_minima(lattice));
}
BENCHMARK(BM_SuccessiveMinima)->DenseRange(2, 5);

void BM_SolveDemo(benchmark::State& state) {
  const Problem p = load_problem(data(state.range(0) == 1 ? "demo_theorem1.json" : "demo_theorem2.json"));
  const int theorem = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve(p, theorem));
}
BENCHMARK(BM_SolveDemo)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
