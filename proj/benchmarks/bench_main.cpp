#include <benchmark/benchmark.h>

#include "qsign/bessel.hpp"
#include "qsign/complex_hp.hpp"
#include "qsign/enclosure.hpp"
#include "qsign/family.hpp"
#include "qsign/modular.hpp"
#include "qsign/modular_forms.hpp"
#include "qsign/product_spec.hpp"
#include "qsign/qseries.hpp"

using namespace qsign;

static void BM_ExpandProduct(benchmark::State& state, const char* name) {
  const ProductSpec& spec = SpecRegistry::builtin().at(name);
  const auto N = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    QSeries s = expand_product(spec, N);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK_CAPTURE(BM_ExpandProduct, A, "A")->Arg(250)->Arg(500)->Arg(1000)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ExpandProduct, D, "D")->Arg(2000)->Arg(5000)->Unit(benchmark::kMillisecond);

static void BM_DedekindSum(benchmark::State& state) {
  const long c = state.range(0);
  for (auto _ : state) {
    for (long d = 1; d < 50; ++d) benchmark::DoNotOptimize(dedekind_sum(d * 7 + 1, c));
  }
}
BENCHMARK(BM_DedekindSum)->Arg(997)->Arg(100003);

static void BM_DedekindDefinitional(benchmark::State& state) {
  const long c = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(dedekind_sum_definitional(353, c));
}
BENCHMARK(BM_DedekindDefinitional)->Arg(997)->Arg(100003);

static void BM_BesselI1(benchmark::State& state) {
  const Enclosure x = Enclosure::from_rational(Rational(state.range(0), 3), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(bessel_Im1(x, state.range(1)));
}
BENCHMARK(BM_BesselI1)->Args({100, 192})->Args({1000, 192})->Args({1000, 1024});

static void BM_Dominance(benchmark::State& state) {
  const FamilyModel fam = family_model(state.range(0) == 0 ? "A" : "D");
  const long n = state.range(0) == 0 ? 805 : 19006;
  for (auto _ : state) benchmark::DoNotOptimize(dominance(fam, n, default_precision_bits));
}
BENCHMARK(BM_Dominance)->Arg(0)->Arg(1);

static void BM_Eta(benchmark::State& state) {
  const ComplexHP tau = ComplexHP::from_rationals(Rational(1, 7), Rational(1, state.range(0)), default_precision_bits);
  for (auto _ : state) benchmark::DoNotOptimize(eta(tau));
}
BENCHMARK(BM_Eta)->Arg(1)->Arg(10)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
