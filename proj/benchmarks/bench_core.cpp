/// @file bench_core.cpp
/// @brief Micro-benchmarks for the exact scalar field and matrix kernels.

#include <benchmark/benchmark.h>

#include "qso4/scalar.hpp"
#include "qso4/matrix.hpp"

namespace {

using qso4::GaussRat;
using qso4::HalfInt;
using qso4::Matrix;
using qso4::Scalar;

/// Multiply two symmetric q-integers; exercises polynomial gcd reduction.
void BM_ScalarMultiply(benchmark::State& state) {
  const Scalar a = qso4::qint(HalfInt(3));
  const Scalar b = qso4::qplus(HalfInt::from_twice(5));
  for (auto _ : state) {
    Scalar c = a * b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_ScalarMultiply);

/// Add two rational functions with distinct denominators.
void BM_ScalarAdd(benchmark::State& state) {
  const Scalar a = qso4::qint(HalfInt::from_twice(1)).inverse();
  const Scalar b = qso4::qplus(HalfInt(2));
  for (auto _ : state) {
    Scalar c = a + b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_ScalarAdd);

/// Dense product of diagonal-heavy exact matrices, the shape that dominates
/// relation verification.
void BM_MatrixMultiply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Matrix<Scalar> a = Matrix<Scalar>::identity(n);
  Matrix<Scalar> b(n, n);
  for (int r = 0; r < n; ++r) {
    a(r, r) = qso4::qint(HalfInt(r + 1));
    if (r + 1 < n) b(r, r + 1) = qso4::qplus(HalfInt(r));
    if (r > 0) b(r, r - 1) = qso4::qint(HalfInt(r));
  }
  for (auto _ : state) {
    Matrix<Scalar> c = a * b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_MatrixMultiply)->Arg(4)->Arg(12);

/// Exact Gauss-Jordan rank over the rational-function field.
void BM_MatrixRank(benchmark::State& state) {
  const int n = 6;
  Matrix<Scalar> m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      m(r, c) = qso4::qint(HalfInt(((r * c) % 3) + 1)) +
                Scalar(GaussRat(mpq_class(r - c)));
  for (auto _ : state) {
    std::size_t rk = m.rank();
    benchmark::DoNotOptimize(rk);
  }
}
BENCHMARK(BM_MatrixRank);

}  // namespace

BENCHMARK_MAIN();
