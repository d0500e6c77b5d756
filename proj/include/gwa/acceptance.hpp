#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gwa/graphmod.hpp"

namespace gwa {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  double limit = 0;  // wall-clock budget in seconds
};

struct AcceptanceOptions {
  std::uint64_t seed = 20240601;
  bool parallel = true;  // run criteria concurrently (results are reported in order)
};

CriterionResult run_criterion(int id, const AcceptanceOptions& opt);
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt);
std::string format_result(const CriterionResult& r);

// Samplers shared with the tests and the benchmark.
TParam random_tparam(int p, std::mt19937_64& rng);
// Valid path or cycle module for t with word length <= max_len and Jordan blocks of size <= max_block.
Module random_module(const OrbitConfig& cfg, const TParam& t, std::mt19937_64& rng, int max_len, int max_block);
// Conversion of a random module with diagonal monodromy, then rescaled.
GraphModule random_graph(const OrbitConfig& cfg, std::mt19937_64& rng, int max_len);

}  // namespace gwa
