#pragma once

#include "gwa/modules.hpp"

namespace gwa {

struct TensorOptions {
  bool presplit = true;   // split inputs into indecomposables before dispatch
  bool parallel = true;   // OpenMP over summand pairs when available
};

struct TensorResult {
  TParam product_t;
  Decomposition decomposition;
};

// Individual product rules.  Inputs must be valid; results are split into
// indecomposables and normalized.
Decomposition tensor_cycle_cycle_nobreak(const Module& a, const Module& b, const OrbitConfig& cfg);
Decomposition tensor_unit_cycle(const Module& unit, const Module& c, const OrbitConfig& cfg);
Decomposition tensor_cycle_cycle(const Module& a, const Module& b, const OrbitConfig& cfg);
Decomposition tensor_path_path(const Module& a, const Module& b, const OrbitConfig& cfg);
Decomposition tensor_path_cycle(const Module& a, const Module& b, const OrbitConfig& cfg);
Decomposition tensor_path_nobreak(const Module& a, const Module& b, const OrbitConfig& cfg);

// Dispatch for one pair of modules (either may be decomposable).
Decomposition tensor_pair(const Module& a, const Module& b, const OrbitConfig& cfg);

TensorResult tensor(const Module& a, const Module& b, const OrbitConfig& cfg, const TensorOptions& opt = {});
TensorResult tensor(const Decomposition& a, const Decomposition& b, const OrbitConfig& cfg, const TensorOptions& opt = {});

bool openmp_enabled();
int openmp_threads();

}  // namespace gwa
