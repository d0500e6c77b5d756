#pragma once

#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "gwa/modules.hpp"

namespace gwa {

// Normal-form basis monomials of the Grothendieck ring.
//   XIJ:  x[i,j] * prod x[k]^a[k], every k with a[k] > 0 outside the open arc (i, j)
//   XPOW: x[i]^a[i]
//   U:    u[xi]
//   UY:   u[xi] * prod y[k]^a[k]
//   UYS:  u[xi] * prod ys[k]^a[k]
enum class GKind { XIJ, XPOW, U, UY, UYS };

struct GrothMonomial {
  GKind kind = GKind::U;
  int i = 0, j = 0;
  std::vector<int> a;  // length p
  Cyclo xi;            // only for U, UY, UYS

  std::vector<int> multidegree() const;  // exponents of t
  std::string key() const;
  std::string str() const;
  bool operator<(const GrothMonomial& o) const { return key() < o.key(); }
  bool operator==(const GrothMonomial& o) const { return key() == o.key(); }
};

struct GrothElement {
  std::map<GrothMonomial, mpq_class> terms;

  void add(const GrothMonomial& m, const mpq_class& c);
  void add(const GrothElement& e, const mpq_class& c = 1);
  bool is_zero() const { return terms.empty(); }
  bool operator==(const GrothElement& o) const { return terms == o.terms; }
  std::string str() const;
};

// A formal product of generators, not yet normalized.
struct GrothWord {
  Cyclo u;
  std::vector<int> x, y, ys;
  std::vector<std::pair<int, int>> xij;

  static GrothWord unit(const OrbitConfig& cfg);
  GrothWord operator*(const GrothWord& o) const;
};

GrothWord to_word(const GrothMonomial& m, const OrbitConfig& cfg);

// Generators as elements.
GrothElement gen_u(const OrbitConfig& cfg, const Cyclo& xi);
GrothElement gen_x(const OrbitConfig& cfg, int i);
GrothElement gen_xij(const OrbitConfig& cfg, int i, int j);
GrothElement gen_y(const OrbitConfig& cfg, int i);
GrothElement gen_ys(const OrbitConfig& cfg, int i);

// Rewrites a formal product to the basis with the ring relations.
GrothElement normal_form(const GrothWord& w, const OrbitConfig& cfg);

GrothElement groth_mul_rewrite(const GrothElement& a, const GrothElement& b, const OrbitConfig& cfg);
GrothElement groth_mul_modules(const GrothElement& a, const GrothElement& b, const OrbitConfig& cfg);

Module monomial_to_module(const GrothMonomial& m, const OrbitConfig& cfg);
GrothMonomial module_to_monomial(const Module& simple, const OrbitConfig& cfg);
GrothElement class_of(const Decomposition& d, const OrbitConfig& cfg);

// Eigenvalue of the product of y (letter 'x') or ys (letter 'y') generators with
// exponents a, computed from the explicit realization.
Cyclo twist_nu(const OrbitConfig& cfg, const std::vector<int>& a, char letter);

// Strict cyclic betweenness: k lies in the open arc from i to j (i == j means the full circle minus i).
bool cyc_between(int p, int i, int k, int j);
// Chain of cyclic inequalities v0 R1 v1 R2 ... ; strict[m] is the relation before v[m+1].
// A closed chain (last value is the first symbol again) goes around exactly once.
bool cyc_chain(int p, const std::vector<int>& v, const std::vector<bool>& strict, bool closed);

// Quotient by u = 1.
long basis_dimension(int p, const std::vector<int>& d);
long hilbert_enumerated(int p, int deg);
long hilbert_closed_form(int p, int deg);

GrothMonomial random_monomial(const OrbitConfig& cfg, std::mt19937_64& rng, const std::vector<Cyclo>& xis, int maxdeg);

struct RelationInstance {
  std::string relation;  // short tag such as "same-index"
  std::string text;
  bool modules_hold = false;
  bool routes_agree = false;
};

// Every instance of the ring relations for the given scalar sample.
std::vector<RelationInstance> certify_relations(const OrbitConfig& cfg, const std::vector<Cyclo>& xis);

}  // namespace gwa
