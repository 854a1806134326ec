#include <benchmark/benchmark.h>

#include "mldmj/classify.hpp"
#include "mldmj/groebner.hpp"
#include "mldmj/jets.hpp"
#include "mldmj/newton.hpp"

using namespace mldmj;

namespace {

std::vector<Coeff> origin(std::size_t n, unsigned long p) {
  return std::vector<Coeff>(n, Coeff::zero(p));
}

void BM_buchberger_cyclic3(benchmark::State& state) {
  RingPtr r = make_ring({"x", "y", "z"}, 0);
  std::vector<Poly> gens = {parse_poly("x + y + z", r),
                            parse_poly("x*y + y*z + z*x", r),
                            parse_poly("x*y*z - 1", r)};
  for (auto _ : state) benchmark::DoNotOptimize(groebner_basis(gens));
}
BENCHMARK(BM_buchberger_cyclic3);

void BM_mld_polygon(benchmark::State& state) {
  NewtonPolygon g({{2, 0, 0}, {0, 3, 1}, {0, 0, 5}, {1, 1, 1}});
  for (auto _ : state) benchmark::DoNotOptimize(mld_polygon(g));
}
BENCHMARK(BM_mld_polygon);

void BM_jet_equations(benchmark::State& state) {
  RingPtr r = make_ring({"x", "y", "z"}, 0);
  Poly f = parse_poly("x^2 + y^3 + z^7", r);
  int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(jet_equations({f}, m));
}
BENCHMARK(BM_jet_equations)->Arg(4)->Arg(8)->Arg(16);

void BM_s_m_cusp(benchmark::State& state) {
  RingPtr r = make_ring({"x", "y"}, 0);
  Poly f = parse_poly("x^2 - y^3", r);
  int m = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(s_m_at({f}, 1, origin(2, 0), m));
}
BENCHMARK(BM_s_m_cusp)->Arg(2)->Arg(4)->Arg(5);

void BM_classify_surface(benchmark::State& state) {
  RingPtr r = make_ring({"x", "y", "z"}, 0);
  Poly f = parse_poly("x^2 + x*y*z + y^3 + z^7", r);
  for (auto _ : state) benchmark::DoNotOptimize(classify_surface_double(f));
}
BENCHMARK(BM_classify_surface);

}  // namespace

BENCHMARK_MAIN();
