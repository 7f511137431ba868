#include "triples/classify.hpp"
#include "triples/quiver.hpp"
#include "triples/support.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace triples;

namespace {

std::vector<Matrix2> star_matrices(int count) {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> num(-12, 12), den(1, 6);
  std::vector<Matrix2> out;
  while (static_cast<int>(out.size()) < count) {
    Matrix2 m{Rat(num(rng), den(rng)), Rat(num(rng), den(rng)),
              Rat(num(rng), den(rng)), Rat(num(rng), den(rng))};
    if (!(m.c > 0) || !(m.det() > 0)) continue;
    if (!(m.det() + m.trace() + 1 > 0)) continue;
    out.push_back(m);
  }
  return out;
}

void BM_Trichotomy(benchmark::State& state) {
  const auto ms = star_matrices(256);
  size_t i = 0;
  for (auto _ : state) {
    const Verdict v = trichotomy({ms[i++ & 255], -0.5});
    benchmark::DoNotOptimize(v.tag);
  }
}
BENCHMARK(BM_Trichotomy);

void BM_EvalLift(benchmark::State& state) {
  const LiftedElement g{Matrix2{2, 1, Rat(1, 3), 1}, 0};
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_lift(g, t));
    t += 1e-3;
    if (t > 2.0) t = 0.0;
  }
}
BENCHMARK(BM_EvalLift);

void BM_RhoRoundTrip(benchmark::State& state) {
  const auto ms = star_matrices(64);
  size_t i = 0;
  for (auto _ : state) {
    const LiftedElement g{ms[i++ & 63], -1};
    benchmark::DoNotOptimize(rho_inverse(rho(g)).branch);
  }
}
BENCHMARK(BM_RhoRoundTrip);

void BM_KernelCertify(benchmark::State& state) {
  const GammaParams p{0, -1, 0, -1};
  const QuadForm4 Q = build_Q(GammaEuler{p, 1});
  const StabDescriptor desc = StabDescriptor::tilted(p);
  for (auto _ : state)
    benchmark::DoNotOptimize(kernel_negdef(Q, desc).certified);
}
BENCHMARK(BM_KernelCertify);

void BM_OracleHn(benchmark::State& state) {
  using namespace triples::oracle;
  const DimCharge Z{QC{-1, 0}, QC{0, 1}};
  const auto reps = all_reps(2, 2, 2);
  size_t i = 0;
  for (auto _ : state) {
    const auto& r = reps[i++ % reps.size()];
    if (r.is_zero()) continue;
    benchmark::DoNotOptimize(hn_filtration(r, Z).size());
  }
}
BENCHMARK(BM_OracleHn);

void BM_EulerPair(benchmark::State& state) {
  const Genus g1(1);
  long long k = 0;
  for (auto _ : state) {
    const TripleClass e{k, k + 1, k + 2, k + 3};
    benchmark::DoNotOptimize(euler_pair(g1, e, e));
    k = (k + 1) & 1023;
  }
}
BENCHMARK(BM_EulerPair);

}  // namespace

BENCHMARK_MAIN();
