#include <benchmark/benchmark.h>

#include <cstdlib>

#include "pseudoreal/classify.hpp"

using namespace pseudoreal;

namespace {

std::string data_dir() {
  const char* env = std::getenv("PSEUDOREAL_DATA");
  return env ? env : "data";
}

const Catalog& catalog() {
  static Catalog cat = load_catalog(data_dir() + "/catalog.txt");
  return cat;
}

void BM_AutomorphismsElementaryAbelian16(benchmark::State& state) {
  Group g = make_abelian({2, 2, 2, 2});
  for (auto _ : state) benchmark::DoNotOptimize(automorphisms(g).size());
}
BENCHMARK(BM_AutomorphismsElementaryAbelian16);

void BM_ExtensionClassesD4(benchmark::State& state) {
  Group g = make_dihedral(4);
  for (auto _ : state) benchmark::DoNotOptimize(eg_classes(g).size());
}
BENCHMARK(BM_ExtensionClassesD4);

void BM_IsIsomorphicOrder32(benchmark::State& state) {
  auto list = catalog().of_order(32);
  for (auto _ : state) {
    int hits = 0;
    for (size_t i = 0; i + 1 < list.size(); i += 7)
      if (is_isomorphic(*list[i]->group, *list[i + 1]->group)) ++hits;
    benchmark::DoNotOptimize(hits);
  }
}
BENCHMARK(BM_IsIsomorphicOrder32);

void BM_FuchsianSearchD4Genus3(benchmark::State& state) {
  Group g = make_dihedral(4);
  auto s = make_fuchsian(0, {2, 2, 4, 4});
  for (auto _ : state)
    benchmark::DoNotOptimize(fuchsian_vectors(g, s, SearchMode::All).size());
}
BENCHMARK(BM_FuchsianSearchD4Genus3);

void BM_NecSearchQ8(benchmark::State& state) {
  Group q8 = make_dicyclic(8);
  Subgroup conf = closure(q8, {q8.generators()[0]});
  auto n = make_nec(1, {2, 4, 4});
  for (auto _ : state)
    benchmark::DoNotOptimize(nec_vectors(q8, conf, n, SearchMode::All).size());
}
BENCHMARK(BM_NecSearchQ8);

void BM_ClassifyGenus5(benchmark::State& state) {
  ClassifyOptions opt;
  opt.jobs = int(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(classify_genus(5, catalog(), opt).size());
}
BENCHMARK(BM_ClassifyGenus5)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ClassifyGenus9(benchmark::State& state) {
  ClassifyOptions opt;
  opt.jobs = int(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(classify_genus(9, catalog(), opt).size());
}
BENCHMARK(BM_ClassifyGenus9)->Arg(4)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
