#include <benchmark/benchmark.h>

#include "lattol/construction.hpp"
#include "lattol/quotient.hpp"
#include "lattol/tolerance.hpp"

using lattol::BinaryRelation;
using lattol::Lattice;

namespace {

BinaryRelation glued_chain(int n) {
  BinaryRelation r = BinaryRelation::diagonal(n);
  for (int x = 0; x + 1 < n; ++x) {
    r.add_symmetric(x, x + 1);
  }
  return r;
}

void BM_enumerate_tolerances_chain(benchmark::State& state) {
  Lattice L = Lattice::chain(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lattol::enumerate_tolerances(L));
  }
}
BENCHMARK(BM_enumerate_tolerances_chain)->Arg(4)->Arg(5)->Arg(6);

void BM_enumerate_congruences_grid(benchmark::State& state) {
  Lattice L = Lattice::direct_product(Lattice::chain(2), Lattice::chain(3));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lattol::enumerate_congruences(L));
  }
}
BENCHMARK(BM_enumerate_congruences_grid);

void BM_block_lattice_full_cube(benchmark::State& state) {
  Lattice L = Lattice::boolean_cube(3);
  BinaryRelation full = BinaryRelation::full(L.size());
  for (auto _ : state) {
    benchmark::DoNotOptimize(lattol::BlockLattice(L, full));
  }
}
BENCHMARK(BM_block_lattice_full_cube);

void BM_build_paired_lattice(benchmark::State& state) {
  Lattice L = Lattice::chain(static_cast<int>(state.range(0)));
  BinaryRelation rho = glued_chain(L.size());
  for (auto _ : state) {
    benchmark::DoNotOptimize(lattol::PairedLattice(L, rho));
  }
}
BENCHMARK(BM_build_paired_lattice)->Arg(4)->Arg(6);

void BM_theorem2_converse(benchmark::State& state) {
  Lattice K = Lattice::chain(static_cast<int>(state.range(0)));
  BinaryRelation tau = glued_chain(K.size());
  for (auto _ : state) {
    benchmark::DoNotOptimize(lattol::verify_theorem2_converse(K, tau));
  }
}
BENCHMARK(BM_theorem2_converse)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
