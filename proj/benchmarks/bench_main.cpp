#include <benchmark/benchmark.h>

#include "bipoly/bipartite.hpp"
#include "bipoly/case_analysis.hpp"
#include "bipoly/catalog.hpp"
#include "bipoly/near_miss.hpp"
#include "bipoly/predicates.hpp"
#include "bipoly/symmetry.hpp"

using namespace bipoly;

namespace {

const Polytope& instance(int i) {
  static const std::vector<Polytope> ps{cube(3), rhombic_triacontahedron(), permutahedron(parse_group("B3")),
                                        permutahedron(parse_group("H3")), hyperprism(4, 2)};
  return ps.at(static_cast<std::size_t>(i));
}

void BM_DeriveEdges(benchmark::State& state) {
  const Polytope& p = instance(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(derive_edges(p));
  state.SetLabel(std::to_string(p.num_vertices()) + " vertices");
}
BENCHMARK(BM_DeriveEdges)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_SymmetryGroup(benchmark::State& state) {
  const Polytope& p = instance(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(symmetry_group(p).order);
  state.SetLabel(std::to_string(p.num_vertices()) + " vertices");
}
BENCHMARK(BM_SymmetryGroup)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_AnalyzeBipartite(benchmark::State& state) {
  const Polytope& p = instance(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(analyze_bipartite(p).report.has_value());
}
BENCHMARK(BM_AnalyzeBipartite)->DenseRange(0, 4)->Unit(benchmark::kMicrosecond);

void BM_ConstructQ(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(construct_Q(NearMissVariant::kEquilateral).num_vertices());
}
BENCHMARK(BM_ConstructQ)->Unit(benchmark::kMillisecond);

void BM_ReproduceTables(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(reproduce_tables(static_cast<int>(state.range(0))).tables.size());
}
BENCHMARK(BM_ReproduceTables)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
