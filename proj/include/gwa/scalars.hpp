#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gwa/errors.hpp"

namespace gwa {

// Per-conductor data for Q(zeta_N): phi(N), the cyclotomic polynomial and
// reductions of zeta^k into the power basis for 0 <= k < N.
struct CycloField {
  int N = 1;
  int phi = 1;
  std::vector<long> Phi;                   // monic, degree phi, lowest first
  std::vector<std::vector<long>> reduced;  // reduced[k] has length phi
  static const CycloField& get(int N);
};

int euler_phi(int n);
std::vector<long> cyclotomic_poly(int n);

// Exact element of Q(zeta_N) in the power basis 1, z, ..., z^{phi-1}.
class Cyclo {
 public:
  Cyclo();
  explicit Cyclo(int N);
  Cyclo(int N, const mpq_class& r);
  Cyclo(int N, std::vector<mpq_class> coeffs);

  static Cyclo root(int N, long k);

  int conductor() const { return f_->N; }
  const CycloField& field() const { return *f_; }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  mpq_class rational_part() const { return c_[0]; }

  Cyclo operator-() const;
  Cyclo& operator+=(const Cyclo& o);
  Cyclo& operator-=(const Cyclo& o);
  Cyclo& operator*=(const Cyclo& o);
  Cyclo& operator/=(const Cyclo& o);
  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
  friend Cyclo operator/(Cyclo a, const Cyclo& b) { return a /= b; }

  Cyclo inv() const;
  Cyclo pow(long e) const;

  bool operator==(const Cyclo& o) const;
  bool operator!=(const Cyclo& o) const { return !(*this == o); }
  // Arbitrary total order, used only for canonical sorting.
  int compare(const Cyclo& o) const;
  bool operator<(const Cyclo& o) const { return compare(o) < 0; }

  std::string str() const;
  nlohmann::json to_json() const;
  static Cyclo from_json(const nlohmann::json& j);

 private:
  const CycloField* f_;
  std::vector<mpq_class> c_;
  void check_same(const Cyclo& o) const;
};

std::ostream& operator<<(std::ostream& os, const Cyclo& c);

class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Cyclo> c);
  static Poly constant(const Cyclo& c);
  static Poly x_minus(const Cyclo& a);  // x - a
  static Poly monomial(const Cyclo& c, int deg);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Cyclo>& coeffs() const { return c_; }
  const Cyclo& operator[](int i) const { return c_[i]; }
  const Cyclo& lead() const { return c_.back(); }
  int conductor() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scale(const Cyclo& s) const;
  bool operator==(const Poly& o) const { return c_ == o.c_; }

  std::pair<Poly, Poly> divmod(const Poly& d) const;
  Poly monic() const;
  Poly derivative() const;
  Cyclo eval(const Cyclo& x) const;
  Poly pow(int e) const;

  std::string str() const;

 private:
  std::vector<Cyclo> c_;
  void trim();
};

Poly poly_gcd(Poly a, Poly b);

class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, int N);
  static Matrix identity(int n, int N);
  static Matrix diag(const std::vector<Cyclo>& d);

  int rows() const { return r_; }
  int cols() const { return c_; }
  int conductor() const { return N_; }
  Cyclo& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
  const Cyclo& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scale(const Cyclo& s) const;
  Matrix transpose() const;
  Matrix pow(long e) const;
  bool operator==(const Matrix& o) const;
  bool is_zero() const;

  Matrix block(int r0, int c0, int nr, int nc) const;
  static Matrix hcat(const Matrix& a, const Matrix& b);
  static Matrix vcat(const Matrix& a, const Matrix& b);
  Matrix col(int j) const;

  std::string str() const;

 private:
  int r_ = 0, c_ = 0, N_ = 1;
  std::vector<Cyclo> a_;
};

Matrix kron(const Matrix& a, const Matrix& b);

// Row echelon helpers.  rref returns the reduced form and the pivot columns.
std::pair<Matrix, std::vector<int>> rref(const Matrix& m);
int rank(const Matrix& m);
Matrix nullspace(const Matrix& m);  // columns form a basis of ker m
Matrix inverse(const Matrix& m);     // throws SingularMatrix
Cyclo determinant(const Matrix& m);
// Solves m * x = b for one x (columns of b), or returns false.
bool solve(const Matrix& m, const Matrix& b, Matrix& x);

Poly charpoly(const Matrix& m);

struct JordanBlock {
  Cyclo eigenvalue;
  int size = 1;
  bool operator==(const JordanBlock& o) const { return size == o.size && eigenvalue == o.eigenvalue; }
  bool operator<(const JordanBlock& o) const;
};

// Multiset of Jordan blocks kept in canonical sorted order.
struct JordanType {
  std::vector<JordanBlock> blocks;
  JordanType() = default;
  explicit JordanType(std::vector<JordanBlock> b);
  void normalize();
  int dim() const;
  bool operator==(const JordanType& o) const { return blocks == o.blocks; }
  bool operator<(const JordanType& o) const;
  std::string str() const;
  Matrix to_matrix(int N) const;
};

// Exact distinct roots of f in Q(zeta_N); throws NonSplitSpectrum when f
// does not split into linear factors.  conductor 0 means the polynomial's own.
std::vector<Cyclo> split_roots(const Poly& f, int conductor = 0);

Cyclo cyclo_embed(long n_root, int N);
Matrix companion(const Poly& f);
JordanType jordan_decompose(const Matrix& m);
JordanType jordan_of_power(const JordanType& j, long n);
JordanType jordan_kron(const JordanType& a, const JordanType& b);
JordanType jordan_scale(const JordanType& j, const Cyclo& c);
Poly poly_power_bracket(const Poly& f, int n);
Matrix matrix_sigma_twist(const Matrix& m, int k);

}  // namespace gwa
