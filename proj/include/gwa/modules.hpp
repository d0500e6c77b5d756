#pragma once

#include <string>
#include <vector>

#include "gwa/orbit.hpp"

namespace gwa {

enum class ModuleKind { Path, Cycle };

// V^t(i, w) for paths, V^t(w, F) for cycles.  Cycle words start at index 1,
// path words at index i+1.
struct Module {
  ModuleKind kind = ModuleKind::Path;
  TParam t;
  int i = 0;
  std::string w;
  JordanType F;

  static Module path(TParam t, int i, std::string w);
  static Module cycle(TParam t, std::string w, JordanType F);
  static Module cycle(TParam t, std::string w, const Cyclo& xi, int size = 1);

  bool is_path() const { return kind == ModuleKind::Path; }
  bool is_cycle() const { return kind == ModuleKind::Cycle; }
  int p() const { return t.p(); }
  int r() const { return static_cast<int>(w.size()) / p(); }
  int dim() const;
  bool has_zero() const { return w.find('0') != std::string::npos; }

  // Canonical key; equal keys mean isomorphic indecomposables.
  std::string key() const;
  std::string str() const;
  bool operator==(const Module& o) const { return key() == o.key(); }
  bool operator<(const Module& o) const { return key() < o.key(); }
};

struct Summand {
  Module m;
  int mult = 1;
};

struct Decomposition {
  std::vector<Summand> summands;

  void add(const Module& m, int mult = 1);
  void add(const Decomposition& d, int mult = 1);
  void normalize();  // merge equal keys, sort
  int total_dim() const;
  int count() const;
  bool operator==(const Decomposition& o) const;
  std::string str() const;
};

void validate(const Module& m, const OrbitConfig& cfg);
std::vector<int> dimension_vector(const Module& m);

Decomposition split_path_at_zeros(const Module& m);
Decomposition split_cycle(const Module& m, const OrbitConfig& cfg);
Decomposition split_module(const Module& m, const OrbitConfig& cfg);

// Rotates a cycle word to its canonical shift; F is unchanged because
// rotating the base point conjugates the monodromy.
Module canonicalize(const Module& m);

bool is_indecomposable(const Module& m);
bool is_simple(const Module& m);
std::vector<Module> composition_factors(const Module& m, const OrbitConfig& cfg);
std::vector<Module> composition_factors(const Decomposition& d, const OrbitConfig& cfg);
bool is_isomorphic(const Module& a, const Module& b);

}  // namespace gwa
