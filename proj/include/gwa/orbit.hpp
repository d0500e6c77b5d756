#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gwa/scalars.hpp"

namespace gwa {

// Finite orbit of size p inside Q(zeta_N); q = zeta_N^{N/p}.
struct OrbitConfig {
  int p = 1;
  int N = 1;
  OrbitConfig() = default;
  OrbitConfig(int p, int N);
  Cyclo q() const { return qpow(1); }
  Cyclo qpow(long k) const;
  int mod(long k) const { return static_cast<int>(((k % p) + p) % p); }
  Cyclo one() const { return Cyclo(N, mpq_class(1)); }
  bool operator==(const OrbitConfig& o) const { return p == o.p && N == o.N; }
};

// t = prod_i (z - q^i)^{e_i}
struct TParam {
  std::vector<int> e;

  TParam() = default;
  explicit TParam(std::vector<int> exps) : e(std::move(exps)) {}
  static TParam one(int p) { return TParam(std::vector<int>(p, 0)); }
  static TParam single(int p, int i, int a = 1);

  int p() const { return static_cast<int>(e.size()); }
  bool is_break(long i) const;
  std::vector<int> breaks() const;
  bool breakless() const { return breaks().empty(); }
  TParam operator*(const TParam& o) const;
  bool operator==(const TParam& o) const { return e == o.e; }
  bool operator<(const TParam& o) const { return e < o.e; }

  // value of t at z = q^k, i.e. the scalar by which t acts on weight k
  Cyclo at(const OrbitConfig& cfg, long k) const;

  std::string str() const;  // "0:1,2:1"
  static TParam parse(const std::string& s, int p);
};

char letter_mul(char a, char b);
bool is_letter(char c);

// Letter k (1-based) of the result is w_k * w2_k read cyclically.
std::string word_tensor(const std::string& w, const std::string& w2);
std::string word_shift(const std::string& w, int p, long j);
int primitive_period(const std::string& w, int p);  // in units of p
bool word_is_periodic(const std::string& w, int p);
std::pair<std::string, int> canonical_shift(const std::string& w, int p);

// Letters w_start, w_{start+1}, ... are 1 exactly at non-break positions.
bool word_valid(const TParam& t, const std::string& w, long start);

// prod of u(q^j) over 1 <= j <= L with w_j = 1 and w2_j = x
Cyclo scalar_twist_product(const OrbitConfig& cfg, const TParam& u, const std::string& w, const std::string& w2);

}  // namespace gwa
