#include <benchmark/benchmark.h>

#include "agpir/curve.hpp"
#include "agpir/lincode.hpp"
#include "agpir/pir.hpp"
#include "agpir/rng.hpp"

using namespace agpir;

namespace {

const Field& f13() {
  static const Field f{FieldSpec{13, 1, {}}};
  return f;
}

const HyperellipticCurve& genus2_curve() {
  static const HyperellipticCurve c{f13(), 2, Poly{{1, 2, 4, 0, 1, 1}}, Poly{}};
  return c;
}

void bench_enumerate_points_f256(benchmark::State& state) {
  const Field f{FieldSpec{2, 8, {1, 0, 1, 1, 1, 0, 0, 0, 1}}};
  const HyperellipticCurve c{f, 1, Poly{{0, 0, 0, 1}}, Poly{{80, 2}}};
  for (auto _ : state) {
    auto pts = c.enumerate_points();
    benchmark::DoNotOptimize(pts);
  }
}

void bench_plan_genus2(benchmark::State& state) {
  for (auto _ : state) {
    PirScheme scheme = plan_scheme(genus2_curve(), 1, 1, 2, 2);
    benchmark::DoNotOptimize(scheme);
  }
}

void bench_protocol_round_trip(benchmark::State& state) {
  const PirScheme scheme = plan_scheme(genus2_curve(), 1, 1, 2, 2);
  Rng rng(3);
  std::vector<std::vector<FieldElem>> files(2, std::vector<FieldElem>(scheme.params.L));
  for (auto& file : files) {
    for (auto& v : file) v = rng.uniform(scheme.params.field);
  }
  for (auto _ : state) {
    const StorageState storage = encode_storage(scheme, files, rng.next());
    const QuerySet queries = make_queries(scheme, 1, rng.next());
    const ResponseVector responses = respond_all(scheme, storage, queries);
    auto decoded = decode(scheme, responses);
    benchmark::DoNotOptimize(decoded);
  }
}

void bench_min_distance(benchmark::State& state) {
  std::vector<Poly> fns;
  for (int i = 0; i < 4; ++i) fns.push_back(Poly::monomial(i));
  std::vector<FieldElem> alphas;
  for (FieldElem a = 0; a < 10; ++a) alphas.push_back(a);
  const LinearCode code = code_from_polys(f13(), fns, alphas);
  for (auto _ : state) {
    const int d = min_distance(f13(), code);
    benchmark::DoNotOptimize(d);
  }
}

void bench_sigma_profile(benchmark::State& state) {
  const HyperellipticCurve& c = genus2_curve();
  std::vector<FuncElem> fns;
  for (const FuncElem& u : rr_basis(c, 7).elements) {
    fns.push_back(ff_mul(c, FuncElem::y_func(), u));
  }
  std::vector<CurvePoint> pts;
  for (const CurvePoint& p : c.enumerate_points()) {
    if (!p.at_infinity && p.y != 0) pts.push_back(p);
  }
  const LinearCode code = code_from_functions(c, fns, pts);
  for (auto _ : state) {
    const SigmaPoint sp = sigma_profile(f13(), code, state.range(0));
    benchmark::DoNotOptimize(sp);
  }
}

}  // namespace

BENCHMARK(bench_enumerate_points_f256)->Unit(benchmark::kMicrosecond);
BENCHMARK(bench_plan_genus2)->Unit(benchmark::kMicrosecond);
BENCHMARK(bench_protocol_round_trip)->Unit(benchmark::kMicrosecond);
BENCHMARK(bench_min_distance)->Unit(benchmark::kMillisecond);
BENCHMARK(bench_sigma_profile)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
