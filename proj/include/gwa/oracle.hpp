#pragma once

#include <cstdint>
#include <vector>

#include "gwa/modules.hpp"

namespace gwa {

// Weight spaces V_0..V_{p-1}; X[k]: V_k -> V_{k+1}, Y[k]: V_{k+1} -> V_k.
struct ExplicitModule {
  OrbitConfig cfg;
  TParam t;
  std::vector<int> dims;
  std::vector<Matrix> X, Y;

  int total_dim() const;
  // Y_k X_k = t(q^k) on V_k and X_k Y_k = t(q^k) on V_{k+1}
  void check_relations() const;
};

ExplicitModule zero_module(const OrbitConfig& cfg, const TParam& t);
ExplicitModule realize(const Module& m, const OrbitConfig& cfg);
ExplicitModule realize(const Decomposition& d, const OrbitConfig& cfg, const TParam& t);
ExplicitModule direct_sum(const ExplicitModule& a, const ExplicitModule& b);
ExplicitModule kronecker_tensor(const ExplicitModule& a, const ExplicitModule& b);

Decomposition oracle_decompose(const ExplicitModule& e);
std::vector<Module> oracle_composition_series(const ExplicitModule& e, std::uint64_t seed);

}  // namespace gwa
