#include <benchmark/benchmark.h>

#include <random>

#include "rbx/algebra.hpp"
#include "rbx/linalg.hpp"
#include "rbx/rb.hpp"
#include "rbx/search.hpp"

using namespace rbx;

namespace {

Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, std::mt19937_64& g) {
  std::uniform_int_distribution<int> d(-9, 9);
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = f.from_int(d(g));
  return m;
}

void BM_RrefRationals(benchmark::State& state) {
  const Field q = Field::rationals();
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 g(7);
  const Matrix base = random_matrix(q, n, n, g);
  for (auto _ : state) {
    Matrix m = base;
    benchmark::DoNotOptimize(rref(m));
  }
}
BENCHMARK(BM_RrefRationals)->Arg(4)->Arg(8)->Arg(16);

void BM_RrefPrime(benchmark::State& state) {
  const Field f = Field::prime(101);
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 g(7);
  const Matrix base = random_matrix(f, n, n, g);
  for (auto _ : state) {
    Matrix m = base;
    benchmark::DoNotOptimize(rref(m));
  }
}
BENCHMARK(BM_RrefPrime)->Arg(8)->Arg(16)->Arg(32);

void BM_CheckRb(benchmark::State& state) {
  const Field f = Field::prime(5);
  const auto a = matrix_algebra(f, 2);
  std::mt19937_64 g(11);
  const LinearOperator op = make_operator(a, random_matrix(f, 4, 4, g));
  for (auto _ : state) benchmark::DoNotOptimize(check_rb(op, f.one()));
}
BENCHMARK(BM_CheckRb);

void BM_CheckRbOctonions(benchmark::State& state) {
  const Field f = Field::prime(5);
  const auto a = cayley_dickson(f, {f.from_int(-1), f.from_int(-1), f.from_int(-1)});
  const LinearOperator op = make_operator(a, Matrix(f, a->dim(), a->dim()));
  for (auto _ : state) benchmark::DoNotOptimize(check_rb(op, f.zero()));
}
BENCHMARK(BM_CheckRbOctonions);

void BM_EnumerateM2F3(benchmark::State& state) {
  const Field f = Field::prime(3);
  const EnumSpec spec{matrix_algebra(f, 2), f.zero()};
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_rb(spec).size());
}
BENCHMARK(BM_EnumerateM2F3)->Unit(benchmark::kMillisecond);

// 0 = pruned, 1 = raw
void BM_EnumerateJ3F3(benchmark::State& state) {
  const Field f = Field::prime(3);
  EnumSpec spec{jordan_form(f, {f.one(), f.one()}), f.one()};
  if (state.range(0) == 1) spec.strategy = SearchStrategy::raw;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_rb(spec).size());
}
BENCHMARK(BM_EnumerateJ3F3)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
