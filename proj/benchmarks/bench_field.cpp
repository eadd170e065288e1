#include <benchmark/benchmark.h>

#include "agpir/field.hpp"
#include "agpir/poly.hpp"
#include "agpir/rng.hpp"

using namespace agpir;

namespace {

const Field& byte_field() {
  static const Field f{FieldSpec{2, 8, {1, 0, 1, 1, 1, 0, 0, 0, 1}}};
  return f;
}

const Field& prime_field() {
  static const Field f{FieldSpec{13, 1, {}}};
  return f;
}

void bench_mul_gf256(benchmark::State& state) {
  const Field& f = byte_field();
  Rng rng(1);
  FieldElem a = rng.uniform(f), b = 1 + rng.below(255);
  for (auto _ : state) {
    a = f.mul(a, b);
    benchmark::DoNotOptimize(a);
  }
}

void bench_inv_gf256(benchmark::State& state) {
  const Field& f = byte_field();
  FieldElem a = 29;
  for (auto _ : state) {
    a = f.inv(a);
    benchmark::DoNotOptimize(a);
    a = a ? a : 1;
  }
}

void bench_mul_f13(benchmark::State& state) {
  const Field& f = prime_field();
  FieldElem a = 7;
  for (auto _ : state) {
    a = f.mul(a, 6);
    benchmark::DoNotOptimize(a);
    a = a ? a : 1;
  }
}

void bench_poly_divrem(benchmark::State& state) {
  const Field& f = prime_field();
  Rng rng(5);
  Poly a, b;
  a.coef.resize(state.range(0));
  b.coef.resize(state.range(0) / 2);
  for (auto& c : a.coef) c = rng.uniform(f);
  for (auto& c : b.coef) c = rng.uniform(f);
  a.coef.back() = 1;
  b.coef.back() = 1;
  for (auto _ : state) {
    auto qr = poly_divrem(f, a, b);
    benchmark::DoNotOptimize(qr);
  }
}

}  // namespace

BENCHMARK(bench_mul_gf256);
BENCHMARK(bench_inv_gf256);
BENCHMARK(bench_mul_f13);
BENCHMARK(bench_poly_divrem)->Arg(32)->Arg(128);

BENCHMARK_MAIN();
