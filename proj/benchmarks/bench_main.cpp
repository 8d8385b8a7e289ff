#include <benchmark/benchmark.h>

#include <frobkit/frobkit.hpp>

using namespace frobkit;

namespace {

Ring xy(std::uint64_t p) { return RingCtx::make({"x", "y", "z"}, PrimeModulus(p)); }

void BM_Groebner(benchmark::State& state) {
  auto R = xy(static_cast<std::uint64_t>(state.range(0)));
  std::vector<Polynomial> gens{parse_poly("x^3*y + y^4 + z^2*x", R), parse_poly("x^2*z^2 + y^3 + x", R),
                               parse_poly("x*y*z + z^3 + 1", R)};
  for (auto _ : state) benchmark::DoNotOptimize(groebner(gens));
}
BENCHMARK(BM_Groebner)->Arg(3)->Arg(101)->Unit(benchmark::kMillisecond);

void BM_BracketRoot(benchmark::State& state) {
  auto R = xy(3);
  const auto e = static_cast<unsigned>(state.range(0));
  auto f = pow(parse_poly("x^2 + y^3 + x*y*z", R), 20);
  for (auto _ : state) benchmark::DoNotOptimize(bracket_root(Ideal::principal(f), e));
}
BENCHMARK(BM_BracketRoot)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_TauCell(benchmark::State& state) {
  auto R = RingCtx::make({"x", "y"}, PrimeModulus(3));
  auto full = CartierAlgebraSpec::make_full(R);
  MixedPair pair({Ideal::principal(parse_poly("x+y", R)), Ideal::principal(parse_poly("x*y", R))},
                 {Rational(13, 81), Rational(71, 81)});
  for (auto _ : state) benchmark::DoNotOptimize(tau_mixed(pair, full));
}
BENCHMARK(BM_TauCell)->Unit(benchmark::kMillisecond);

void BM_XiExhaustive(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_det_identity(3, 2, 0));
}
BENCHMARK(BM_XiExhaustive)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
