#include <benchmark/benchmark.h>

#include "syzkit/eisenbud.hpp"
#include "syzkit/report.hpp"

namespace {

using namespace syz;

CIRing codim2_ring() {
  RingPtr q = make_poly_ring(101, {"x", "y", "z"});
  return make_ring(q, {poly_parse("x^2", *q), poly_parse("y^2", *q)});
}

Presentation residue_field(const CIRing& A) {
  std::vector<std::vector<Polynomial>> cols;
  for (const std::string& v : A.q->vars) cols.push_back({poly_parse(v, *A.q)});
  return present(A, {0}, cols);
}

void BM_Buchberger(benchmark::State& state) {
  CIRing A = codim2_ring();
  Presentation k = residue_field(A);
  Resolution R = resolve(A, k, {.steps = static_cast<int>(state.range(0)), .over = Over::A});
  const Presentation& tail = R.steps.back().pres;
  for (auto _ : state) {
    GroebnerBasis gb = defining_groebner(A, tail, Over::A);
    benchmark::DoNotOptimize(gb.gens.size());
  }
}
BENCHMARK(BM_Buchberger)->Arg(4)->Arg(8);

void BM_NextSyzygy(benchmark::State& state) {
  CIRing A = codim2_ring();
  Presentation k = residue_field(A);
  Resolution R = resolve(A, k, {.steps = static_cast<int>(state.range(0)), .over = Over::A});
  const Presentation& tail = R.steps.back().pres;
  for (auto _ : state) {
    Presentation next = next_syzygy(A, tail);
    benchmark::DoNotOptimize(next.rank());
  }
}
BENCHMARK(BM_NextSyzygy)->Arg(4)->Arg(8);

void BM_HilbertSeries(benchmark::State& state) {
  CIRing A = codim2_ring();
  Presentation k = residue_field(A);
  Resolution R = resolve(A, k, {.steps = 8, .over = Over::A});
  const Presentation& tail = R.steps.back().pres;
  for (auto _ : state) {
    HilbertData H = hilbert_series(A, tail);
    benchmark::DoNotOptimize(H.e);
  }
}
BENCHMARK(BM_HilbertSeries);

void BM_DenseOracle(benchmark::State& state) {
  CIRing A = codim2_ring();
  Presentation k = residue_field(A);
  Resolution R = resolve(A, k, {.steps = 8, .over = Over::A});
  const Presentation& tail = R.steps.back().pres;
  for (auto _ : state) {
    long long d = oracle_dim(A, tail, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_DenseOracle)->Arg(8)->Arg(12);

void BM_FullResolve(benchmark::State& state) {
  CIRing A = codim2_ring();
  Presentation k = residue_field(A);
  for (auto _ : state) {
    Resolution R = resolve(A, k, {.steps = 12, .over = Over::A});
    benchmark::DoNotOptimize(R.computed_steps());
  }
}
BENCHMARK(BM_FullResolve);

}  // namespace

BENCHMARK_MAIN();
