#pragma once

#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "gwa/modules.hpp"

namespace gwa {

// Finite rational combination of basis symbols; T needs key() and str().
template <class T>
struct LinComb {
  std::map<std::string, std::pair<T, mpq_class>> terms;

  void add(const T& m, const mpq_class& c) {
    if (c == 0) return;
    auto k = m.key();
    auto it = terms.find(k);
    if (it == terms.end()) {
      terms.emplace(k, std::make_pair(m, c));
      return;
    }
    it->second.second += c;
    if (it->second.second == 0) terms.erase(it);
  }
  void add(const LinComb& o, const mpq_class& c = 1) {
    for (const auto& [k, v] : o.terms) add(v.first, v.second * c);
  }
  bool is_zero() const { return terms.empty(); }
  bool operator==(const LinComb& o) const {
    if (terms.size() != o.terms.size()) return false;
    for (const auto& [k, v] : terms) {
      auto it = o.terms.find(k);
      if (it == o.terms.end() || it->second.second != v.second) return false;
    }
    return true;
  }
  std::string str() const {
    if (terms.empty()) return "0";
    std::string s;
    for (const auto& [k, v] : terms) {
      const mpq_class& c = v.second;
      if (!s.empty()) s += c < 0 ? " - " : " + ";
      else if (c < 0) s += "-";
      mpq_class a = abs(c);
      if (a != 1) s += a.get_str() + "*";
      s += v.first.str();
    }
    return s;
  }
};

// ---------------------------------------------------------------- trivial monoid

// u(xi, a) = [V^1(1^p, (x - xi)^a)]
struct TrivialMonomial {
  Cyclo xi;
  int a = 1;
  std::string key() const { return std::to_string(a) + "|" + xi.str(); }
  std::string str() const { return "u[" + xi.str() + "," + std::to_string(a) + "]"; }
};
using TrivialElement = LinComb<TrivialMonomial>;

// u(xi, 1) * u(1, 2)^k, the polynomial presentation
struct TrivialGenMonomial {
  Cyclo xi;
  int k = 0;
  std::string key() const { return std::to_string(k) + "|" + xi.str(); }
  std::string str() const;
};
using TrivialGenElement = LinComb<TrivialGenMonomial>;

TrivialElement trivial_mul(const TrivialMonomial& a, const TrivialMonomial& b);
TrivialElement trivial_mul(const TrivialElement& a, const TrivialElement& b);
TrivialElement trivial_mul_modules(const TrivialElement& a, const TrivialElement& b, const OrbitConfig& cfg);
// Coefficients of u(1, a) as a polynomial in u(1, 2), lowest degree first.
std::vector<mpq_class> chebyshev_in_u12(int a);
TrivialGenElement trivial_to_generators(const TrivialElement& e);
TrivialElement trivial_from_generators(const TrivialGenElement& e);

// ---------------------------------------------------------------- ideal and quotient

// Path-family classes span the ideal.
bool ideal_membership(const Module& indecomposable);

// Basis of the quotient by the ideal for the monoid generated by (z - 1):
//   no y:  u[xi] * u[1,2]^a
//   y:     (xi^r stored as `inv`) * u[1,2]^a * yw[w]^n, w canonical, non-periodic, length r p
struct QuotientMonomial {
  bool has_y = false;
  Cyclo inv;  // xi without y, xi^r with y
  int a = 0;
  std::string w;
  int n = 0;

  int r(int p) const { return has_y ? static_cast<int>(w.size()) / p : 1; }
  std::string key() const;
  std::string str() const;
};
using QuotientElement = LinComb<QuotientMonomial>;

QuotientMonomial quotient_u(const OrbitConfig& cfg, const Cyclo& xi);
QuotientMonomial quotient_u12(const OrbitConfig& cfg);
QuotientMonomial quotient_y(const OrbitConfig& cfg, const std::string& w);

QuotientElement quotient_mul(const QuotientMonomial& a, const QuotientMonomial& b, const OrbitConfig& cfg);
QuotientElement quotient_mul(const QuotientElement& a, const QuotientElement& b, const OrbitConfig& cfg);
// Classes of indecomposables (cycle family) and back.
LinComb<Module> quotient_to_classes(const QuotientMonomial& m, const OrbitConfig& cfg);
QuotientElement quotient_from_classes(const LinComb<Module>& c, const OrbitConfig& cfg);
QuotientElement quotient_mul_modules(const QuotientElement& a, const QuotientElement& b, const OrbitConfig& cfg);
// An r-th root of the stored invariant inside Q(zeta_N); throws RootExtractionNeeded.
Cyclo quotient_u_root(const QuotientMonomial& m, const OrbitConfig& cfg);

// ---------------------------------------------------------------- semisimple section

enum class SKind { U, X, Y, YS };

struct SemisimpleMonomial {
  SKind kind = SKind::U;
  int a = 0;
  Cyclo xi;
  std::string key() const;
  std::string str() const;
};
using SemisimpleElement = LinComb<SemisimpleMonomial>;

SemisimpleElement semisimple_mul(const SemisimpleMonomial& a, const SemisimpleMonomial& b, const OrbitConfig& cfg);
SemisimpleElement semisimple_mul(const SemisimpleElement& a, const SemisimpleElement& b, const OrbitConfig& cfg);
Module semisimple_to_module(const SemisimpleMonomial& m, const OrbitConfig& cfg);
SemisimpleMonomial module_to_semisimple(const Module& simple, const OrbitConfig& cfg);
// Class of the direct sum of the simple subquotients.
SemisimpleElement section_alpha(const Decomposition& d, const OrbitConfig& cfg);
SemisimpleElement semisimple_mul_modules(const SemisimpleElement& a, const SemisimpleElement& b, const OrbitConfig& cfg);

// Sampling helpers shared by tests and the acceptance suite.
std::vector<std::string> nonperiodic_words(int p, int r);
QuotientMonomial random_quotient_monomial(const OrbitConfig& cfg, std::mt19937_64& rng, const std::vector<Cyclo>& xis);
SemisimpleMonomial random_semisimple_monomial(const OrbitConfig& cfg, std::mt19937_64& rng, const std::vector<Cyclo>& xis);

}  // namespace gwa
