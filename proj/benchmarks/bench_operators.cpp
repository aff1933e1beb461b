#include <benchmark/benchmark.h>

#include "qsu2/approx.hpp"
#include "qsu2/regrep.hpp"
#include "qsu2/spingeom.hpp"

using namespace qsu2;

namespace {

HalfInteger cutoff(const benchmark::State& state) { return HalfInteger::from_int(static_cast<int>(state.range(0))); }

void BM_SpinorBasis(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_basis(BasisKind::spinor, cutoff(state)));
}
BENCHMARK(BM_SpinorBasis)->Arg(8)->Arg(16);

void BM_BuildPiPrime(benchmark::State& state) {
  const BasisPtr basis = enumerate_basis(BasisKind::spinor, cutoff(state));
  const Deformation d(0.5);
  for (auto _ : state) benchmark::DoNotOptimize(build_pi_prime(Gen::a, basis, d));
}
BENCHMARK(BM_BuildPiPrime)->Arg(8)->Arg(16);

void BM_BuildPiPrimeVerified(benchmark::State& state) {
  const BasisPtr basis = enumerate_basis(BasisKind::spinor, cutoff(state));
  const Deformation d(0.5);
  for (auto _ : state) benchmark::DoNotOptimize(build_pi_prime(Gen::a, basis, d, true));
}
BENCHMARK(BM_BuildPiPrimeVerified)->Arg(8);

void BM_BuildPiop(benchmark::State& state) {
  const BasisPtr basis = enumerate_basis(BasisKind::regular, cutoff(state));
  const Deformation d(0.5);
  for (auto _ : state) benchmark::DoNotOptimize(build_piop(Gen::b, basis, d));
}
BENCHMARK(BM_BuildPiop)->Arg(8);

void BM_CommutatorNorm(benchmark::State& state) {
  const BasisPtr basis = enumerate_basis(BasisKind::spinor, cutoff(state));
  const Deformation d(0.5);
  const Operator c = commutator(build_dirac(DiracSpec::isospectral(), basis, d), build_pi_prime(Gen::a, basis, d));
  for (auto _ : state) benchmark::DoNotOptimize(interior_residual(c, 1));
}
BENCHMARK(BM_CommutatorNorm)->Arg(8)->Arg(16);

void BM_CertifyCommutant(benchmark::State& state) {
  const BasisPtr basis = enumerate_basis(BasisKind::spinor, cutoff(state));
  const Deformation d(0.5);
  const Operator c = commutator(build_piiop(Gen::a, basis, d), build_pi_prime(Gen::b, basis, d));
  for (auto _ : state) benchmark::DoNotOptimize(certify_Kq(c, "commutant", 0.5, 2.0));
}
BENCHMARK(BM_CertifyCommutant)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
