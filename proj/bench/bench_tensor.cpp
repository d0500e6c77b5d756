// Serial vs OpenMP tensor dispatch over many summand pairs.
#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "gwa/acceptance.hpp"
#include "gwa/tensor.hpp"

using namespace gwa;

int main(int argc, char** argv) {
  const int p = argc > 1 ? std::atoi(argv[1]) : 3;
  const int n = argc > 2 ? std::atoi(argv[2]) : 24;
  const int reps = argc > 3 ? std::atoi(argv[3]) : 3;
  OrbitConfig cfg(p, p % 2 ? p : 2 * p);
  std::mt19937_64 rng(42);
  TParam ta = TParam::single(p, 0), tb = TParam::single(p, p - 1);
  Decomposition a, b;
  while (a.count() < n) {
    Module m = random_module(cfg, ta, rng, 3 * p, 2);
    if (m.is_path() && m.has_zero()) continue;
    a.add(m);
  }
  while (b.count() < n) {
    // paths only on the right, so no product spectrum needs new roots
    Module m = random_module(cfg, tb, rng, 3 * p, 2);
    if (!m.is_path() || m.has_zero()) continue;
    b.add(m);
  }
  auto time = [&](bool parallel, Decomposition& out) {
    TensorOptions o;
    o.parallel = parallel;
    auto t0 = std::chrono::steady_clock::now();
    for (int r = 0; r < reps; ++r) out = tensor(a, b, cfg, o).decomposition;
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / reps;
  };
  Decomposition ds, dp;
  double s = time(false, ds);
  double par = time(true, dp);
  std::printf("p=%d pairs=%d threads=%d openmp=%s\n", p, n * n, openmp_threads(), openmp_enabled() ? "yes" : "no");
  std::printf("serial   %.4fs\nparallel %.4fs\nspeedup  %.2fx\nresults  %s (%d summands, dim %d)\n", s, par, s / par,
              ds == dp ? "identical" : "DIFFERENT", ds.count(), ds.total_dim());
  return ds == dp ? 0 : 1;
}
