#include <benchmark/benchmark.h>

#include "sympolar/capacity.hpp"
#include "sympolar/ellipsoid.hpp"
#include "sympolar/gaussian.hpp"
#include "sympolar/generators.hpp"
#include "sympolar/matcore.hpp"
#include "sympolar/oracle.hpp"
#include "sympolar/rng.hpp"
#include "sympolar/symplectic.hpp"

using namespace sympolar;

namespace {

Ellipsoid bench_ellipsoid(int dof) {
  Rng rng(42);
  return gen::random_ellipsoid(2 * dof, 1.0, 0.4, 2.5, rng);
}

void bm_sym_eigen(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Rng rng(7);
  const PosDefMatrix m = gen::random_posdef(d, 0.5, 2.0, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sym_eigen(SymMatrix(m.mat())));
  }
}
BENCHMARK(bm_sym_eigen)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void bm_williamson(benchmark::State& state) {
  const Ellipsoid omega = bench_ellipsoid(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(williamson(omega.shape()));
  }
}
BENCHMARK(bm_williamson)->Arg(1)->Arg(2)->Arg(4)->Arg(8);

void bm_symplectic_eigenvalues(benchmark::State& state) {
  const Ellipsoid omega = bench_ellipsoid(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(symplectic_eigenvalues(omega.shape()));
  }
}
BENCHMARK(bm_symplectic_eigenvalues)->Arg(1)->Arg(2)->Arg(4)->Arg(8);

void bm_blob_check(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Ellipsoid omega = blob_from_symplectic(random_symplectic(n, 3), 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_blob(omega));
  }
}
BENCHMARK(bm_blob_check)->Arg(1)->Arg(2)->Arg(4)->Arg(8);

void bm_capacity(benchmark::State& state) {
  const Ellipsoid omega = bench_ellipsoid(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(capacity_ellipsoid(omega));
  }
}
BENCHMARK(bm_capacity)->Arg(1)->Arg(2)->Arg(4)->Arg(8);

void bm_thm1_check(benchmark::State& state) {
  const Ellipsoid omega = bench_ellipsoid(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(thm1_check(omega));
  }
}
BENCHMARK(bm_thm1_check)->Arg(1)->Arg(2)->Arg(4)->Arg(8);

void bm_quantum_check(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(11);
  std::vector<double> nu(n);
  for (int j = 0; j < n; ++j) nu[j] = rng.uniform(1.0, 3.0);
  const MixedGaussian rho = gen::sigma_with_spectrum(nu, 1.0, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(quantum_check(rho));
  }
}
BENCHMARK(bm_quantum_check)->Arg(1)->Arg(2)->Arg(4)->Arg(8);

void bm_wigner_numeric(benchmark::State& state) {
  Rng rng(5);
  const PureGaussian psi = gen::random_pure_gaussian(1, 1.0, rng);
  oracle::OracleConfig cfg;
  cfg.quadrature_order = static_cast<int>(state.range(0));
  const std::vector<double> z{0.3, -0.2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::wigner_numeric(psi, z, cfg));
  }
}
BENCHMARK(bm_wigner_numeric)->Arg(16)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
