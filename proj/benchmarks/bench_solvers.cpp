#include "support.hpp"

#include "hyptmp/oracle.hpp"
#include "hyptmp/solve.hpp"

#include <benchmark/benchmark.h>

using namespace hyptmp;

namespace {

CurveType curve_for(int tag) {
  switch (tag) {
    case 0: return CurveType::hyp1();
    case 1: return CurveType::hyp2();
    default: return CurveType::hyp3(Rat(2));
  }
}

BivSeq example(int tag) {
  static const char* names[] = {"/example_type1.json", "/example_type2.json", "/example_type3.json"};
  return test::load_instance(std::string(HYPTMP_TEST_DATA) + names[tag]);
}

void BM_DecideExample(benchmark::State& st) {
  int tag = static_cast<int>(st.range(0));
  BivSeq s = example(tag);
  CurveType c = curve_for(tag);
  for (auto _ : st) benchmark::DoNotOptimize(decide(s, c));
}
BENCHMARK(BM_DecideExample)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_ConstructExample(benchmark::State& st) {
  int tag = static_cast<int>(st.range(0)) + 1;
  BivSeq s = example(tag);
  CurveType c = curve_for(tag);
  for (auto _ : st) benchmark::DoNotOptimize(construct_measure(s, c, 256));
}
BENCHMARK(BM_ConstructExample)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);

// Random split measures with 3 line and 6 conic atoms, k = 3 and 4.
void BM_RoundTrip(benchmark::State& st) {
  CurveType c = curve_for(static_cast<int>(st.range(0)));
  int k = static_cast<int>(st.range(1));
  std::vector<BivSeq> pool;
  for (std::uint64_t seed = 1; seed <= 16; ++seed) pool.push_back(random_curve_measure(c, k, 3, 6, seed).moments);
  std::size_t i = 0;
  for (auto _ : st) {
    const BivSeq& s = pool[i++ % pool.size()];
    benchmark::DoNotOptimize(construct_measure(s, c, 256));
  }
}
BENCHMARK(BM_RoundTrip)->ArgsProduct({{0, 1, 2}, {3, 4}})->Unit(benchmark::kMillisecond);

void BM_Pinv(benchmark::State& st) {
  std::mt19937_64 rng(1);
  Index n = st.range(0);
  RatMat m = test::random_psd(rng, n, n - 1);
  for (auto _ : st) benchmark::DoNotOptimize(pinv(m));
}
BENCHMARK(BM_Pinv)->RangeMultiplier(2)->Range(4, 16)->Unit(benchmark::kMicrosecond);

void BM_ExtractLine(benchmark::State& st) {
  std::mt19937_64 rng(2);
  int m = static_cast<int>(st.range(0));
  std::vector<std::pair<Rat, Rat>> atoms;
  for (int i = 0; i < m + 1; ++i) atoms.push_back({Rat(2 * i + 1, 3) - m, test::draw(rng, 9, true)});
  UniSeq<Rat> g = test::power_sums(atoms, m);
  for (auto _ : st) benchmark::DoNotOptimize(extract_line_measure(g, false, 256));
}
BENCHMARK(BM_ExtractLine)->DenseRange(2, 6, 2)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
