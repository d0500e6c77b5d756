#include "gwa/scalars.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>

namespace gwa {

int euler_phi(int n) {
  int r = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  }
  if (n > 1) r -= r / n;
  return r;
}

namespace {

using IPoly = std::vector<long>;

IPoly ipoly_divexact(IPoly num, const IPoly& den) {
  int dn = static_cast<int>(num.size()) - 1, dd = static_cast<int>(den.size()) - 1;
  IPoly q(dn - dd + 1, 0);
  for (int i = dn; i >= dd; --i) {
    long c = num[i] / den[dd];
    q[i - dd] = c;
    for (int j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  return q;
}

}  // namespace

std::vector<long> cyclotomic_poly(int n) {
  IPoly num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) num = ipoly_divexact(num, cyclotomic_poly(d));
  return num;
}

namespace {
std::mutex g_field_mu;
std::map<int, std::unique_ptr<CycloField>> g_fields;
}  // namespace

const CycloField& CycloField::get(int N) {
  if (N < 1) throw validation_error("InvalidConductor", "conductor must be positive, got " + std::to_string(N));
  std::lock_guard<std::mutex> lk(g_field_mu);
  auto it = g_fields.find(N);
  if (it != g_fields.end()) return *it->second;
  auto f = std::make_unique<CycloField>();
  f->N = N;
  f->phi = euler_phi(N);
  f->Phi = cyclotomic_poly(N);
  const int phi = f->phi;
  std::vector<long> cur(phi, 0);
  cur[0] = 1;
  for (int k = 0; k < N; ++k) {
    f->reduced.push_back(cur);
    // multiply by z and reduce
    long top = cur[phi - 1];
    for (int j = phi - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    for (int j = 0; j < phi; ++j) cur[j] -= top * f->Phi[j];
  }
  const CycloField& ref = *f;
  g_fields.emplace(N, std::move(f));
  return ref;
}

// ---------------------------------------------------------------- Cyclo

Cyclo::Cyclo() : f_(&CycloField::get(1)), c_(1) {}
Cyclo::Cyclo(int N) : f_(&CycloField::get(N)), c_(f_->phi) {}
Cyclo::Cyclo(int N, const mpq_class& r) : f_(&CycloField::get(N)), c_(f_->phi) { c_[0] = r; }
Cyclo::Cyclo(int N, std::vector<mpq_class> coeffs) : f_(&CycloField::get(N)), c_(std::move(coeffs)) {
  if (static_cast<int>(c_.size()) > f_->phi) {
    // reduce higher powers
    std::vector<mpq_class> red(f_->phi);
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (c_[k] == 0) continue;
      const auto& r = f_->reduced[k % f_->N];
      for (int j = 0; j < f_->phi; ++j)
        if (r[j]) red[j] += c_[k] * r[j];
    }
    c_ = std::move(red);
  }
  c_.resize(f_->phi);
}

Cyclo Cyclo::root(int N, long k) {
  Cyclo r(N);
  const auto& f = r.field();
  long kk = ((k % N) + N) % N;
  for (int j = 0; j < f.phi; ++j) r.c_[j] = f.reduced[kk][j];
  return r;
}

bool Cyclo::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

bool Cyclo::is_rational() const {
  for (std::size_t j = 1; j < c_.size(); ++j)
    if (c_[j] != 0) return false;
  return true;
}

bool Cyclo::is_one() const { return c_[0] == 1 && is_rational(); }

void Cyclo::check_same(const Cyclo& o) const {
  if (f_ != o.f_)
    throw math_error("ConductorMismatch", "conductors " + std::to_string(f_->N) + " and " + std::to_string(o.f_->N));
}

Cyclo Cyclo::operator-() const {
  Cyclo r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
  if (f_ != o.f_) {
    if (o.is_rational()) {
      c_[0] += o.c_[0];
      return *this;
    }
    if (!is_rational()) check_same(o);
    mpq_class r = c_[0];
    *this = o;
    c_[0] += r;
    return *this;
  }
  for (std::size_t j = 0; j < c_.size(); ++j)
    if (o.c_[j] != 0) c_[j] += o.c_[j];
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) { return *this += -o; }

Cyclo& Cyclo::operator*=(const Cyclo& o) {
  if (o.is_rational()) {
    const mpq_class s = o.c_[0];
    if (s == 0) {
      for (auto& c : c_) c = 0;
    } else if (s != 1) {
      for (auto& c : c_)
        if (c != 0) c *= s;
    }
    return *this;
  }
  if (is_rational()) {
    const mpq_class s = c_[0];
    *this = o;
    return *this *= Cyclo(f_->N == o.f_->N ? f_->N : o.f_->N, s);
  }
  check_same(o);
  const int phi = f_->phi;
  std::vector<mpq_class> prod(2 * phi - 1);
  for (int i = 0; i < phi; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < phi; ++j)
      if (o.c_[j] != 0) prod[i + j] += c_[i] * o.c_[j];
  }
  std::vector<mpq_class> res(prod.begin(), prod.begin() + phi);
  for (int k = phi; k < 2 * phi - 1; ++k) {
    if (prod[k] == 0) continue;
    const auto& r = f_->reduced[k % f_->N];
    for (int j = 0; j < phi; ++j)
      if (r[j]) res[j] += prod[k] * r[j];
  }
  c_ = std::move(res);
  return *this;
}

Cyclo& Cyclo::operator/=(const Cyclo& o) { return *this *= o.inv(); }

namespace {

// Solves A x = b over Q by Gaussian elimination; A square and invertible.
std::vector<mpq_class> solve_rational(std::vector<std::vector<mpq_class>> a, std::vector<mpq_class> b) {
  const int n = static_cast<int>(b.size());
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw math_error("DivisionByZero", "singular rational system");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    mpq_class inv = 1 / a[col][col];
    for (int j = col; j < n; ++j) a[col][j] *= inv;
    b[col] *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      mpq_class f = a[i][col];
      for (int j = col; j < n; ++j) a[i][j] -= f * a[col][j];
      b[i] -= f * b[col];
    }
  }
  return b;
}

}  // namespace

Cyclo Cyclo::inv() const {
  if (is_rational()) {
    if (c_[0] == 0) throw math_error("DivisionByZero", "inverse of zero");
    return Cyclo(f_->N, 1 / c_[0]);
  }
  const int phi = f_->phi;
  std::vector<std::vector<mpq_class>> a(phi, std::vector<mpq_class>(phi));
  for (int j = 0; j < phi; ++j) {
    Cyclo col = *this * Cyclo::root(f_->N, j);
    for (int i = 0; i < phi; ++i) a[i][j] = col.c_[i];
  }
  std::vector<mpq_class> b(phi);
  b[0] = 1;
  return Cyclo(f_->N, solve_rational(std::move(a), std::move(b)));
}

Cyclo Cyclo::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  Cyclo result(f_->N, mpq_class(1));
  Cyclo base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

bool Cyclo::operator==(const Cyclo& o) const {
  if (f_ != o.f_) return is_rational() && o.is_rational() && c_[0] == o.c_[0];
  return c_ == o.c_;
}

int Cyclo::compare(const Cyclo& o) const {
  bool ra = is_rational(), rb = o.is_rational();
  if (ra && rb) return c_[0] < o.c_[0] ? -1 : (c_[0] == o.c_[0] ? 0 : 1);
  if (ra != rb) return ra ? -1 : 1;
  if (f_->N != o.f_->N) return f_->N < o.f_->N ? -1 : 1;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] < o.c_[j]) return -1;
    if (o.c_[j] < c_[j]) return 1;
  }
  return 0;
}

std::string Cyclo::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    mpq_class c = c_[j];
    bool neg = c < 0;
    if (neg) c = -c;
    std::string term;
    if (j == 0) {
      term = c.get_str();
    } else {
      term = (c == 1 ? "" : c.get_str() + "*") + "z^" + std::to_string(j);
    }
    if (out.empty()) {
      out = (neg ? "-" : "") + term;
    } else {
      out += (neg ? "-" : "+") + term;
    }
  }
  return out;
}

nlohmann::json Cyclo::to_json() const {
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : c_) cs.push_back(c.get_str());
  return {{"conductor", f_->N}, {"coeffs", cs}};
}

Cyclo Cyclo::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("conductor") || !j.contains("coeffs"))
    throw ParseError(0, "scalar JSON needs conductor and coeffs");
  int N = j.at("conductor").get<int>();
  std::vector<mpq_class> cs;
  for (const auto& s : j.at("coeffs")) {
    mpq_class q;
    if (q.set_str(s.get<std::string>(), 10) != 0) throw ParseError(0, "bad rational " + s.get<std::string>());
    q.canonicalize();
    cs.push_back(q);
  }
  return Cyclo(N, std::move(cs));
}

std::ostream& operator<<(std::ostream& os, const Cyclo& c) { return os << c.str(); }

// ---------------------------------------------------------------- Poly

Poly::Poly(std::vector<Cyclo> c) : c_(std::move(c)) { trim(); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const Cyclo& c) { return Poly({c}); }
Poly Poly::x_minus(const Cyclo& a) { return Poly({-a, Cyclo(a.conductor(), mpq_class(1))}); }
Poly Poly::monomial(const Cyclo& c, int deg) {
  std::vector<Cyclo> v(deg + 1, Cyclo(c.conductor()));
  v[deg] = c;
  return Poly(std::move(v));
}

int Poly::conductor() const {
  int N = 1;
  for (const auto& c : c_)
    if (!c.is_rational()) return c.conductor();
    else N = std::max(N, c.conductor());
  return N;
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Cyclo> r(std::max(c_.size(), o.c_.size()), Cyclo(std::max(conductor(), o.conductor())));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + o.scale(Cyclo(1, mpq_class(-1))); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<Cyclo> r(c_.size() + o.c_.size() - 1, Cyclo(std::max(conductor(), o.conductor())));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      if (!o.c_[j].is_zero()) r[i + j] += c_[i] * o.c_[j];
  }
  return Poly(std::move(r));
}

Poly Poly::scale(const Cyclo& s) const {
  std::vector<Cyclo> r = c_;
  for (auto& c : r) c *= s;
  return Poly(std::move(r));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) throw math_error("DivisionByZero", "polynomial division by zero");
  if (degree() < d.degree()) return {Poly(), *this};
  std::vector<Cyclo> rem = c_;
  const int dd = d.degree();
  std::vector<Cyclo> q(degree() - dd + 1, Cyclo(conductor()));
  Cyclo li = d.lead().inv();
  for (int i = degree(); i >= dd; --i) {
    if (rem[i].is_zero()) continue;
    Cyclo c = rem[i] * li;
    q[i - dd] = c;
    for (int j = 0; j <= dd; ++j)
      if (!d.c_[j].is_zero()) rem[i - dd + j] -= c * d.c_[j];
  }
  return {Poly(std::move(q)), Poly(std::move(rem))};
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scale(lead().inv());
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Cyclo> r;
  for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * Cyclo(1, mpq_class(static_cast<long>(i))));
  return Poly(std::move(r));
}

Cyclo Poly::eval(const Cyclo& x) const {
  Cyclo r(x.conductor());
  for (int i = degree(); i >= 0; --i) r = r * x + c_[i];
  return r;
}

Poly Poly::pow(int e) const {
  Poly r = Poly::constant(Cyclo(conductor(), mpq_class(1)));
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string cs = c_[i].str();
    if (i == 0) {
      out += cs;
    } else {
      if (!c_[i].is_one()) out += "(" + cs + ")*";
      out += i == 1 ? "x" : "x^" + std::to_string(i);
    }
  }
  return out;
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(int rows, int cols, int N)
    : r_(rows), c_(cols), N_(N), a_(static_cast<std::size_t>(rows) * cols, Cyclo(N)) {}

Matrix Matrix::identity(int n, int N) {
  Matrix m(n, n, N);
  for (int i = 0; i < n; ++i) m(i, i) = Cyclo(N, mpq_class(1));
  return m;
}

Matrix Matrix::diag(const std::vector<Cyclo>& d) {
  int N = d.empty() ? 1 : d[0].conductor();
  Matrix m(static_cast<int>(d.size()), static_cast<int>(d.size()), N);
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (c_ != o.r_) throw internal_error("matrix shape mismatch in product");
  Matrix m(r_, o.c_, std::max(N_, o.N_));
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      const Cyclo& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.c_; ++j) {
        const Cyclo& b = o(k, j);
        if (!b.is_zero()) m(i, j) += a * b;
      }
    }
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw internal_error("matrix shape mismatch in sum");
  Matrix m = *this;
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (!o.a_[i].is_zero()) m.a_[i] += o.a_[i];
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + o.scale(Cyclo(1, mpq_class(-1))); }

Matrix Matrix::scale(const Cyclo& s) const {
  Matrix m = *this;
  for (auto& x : m.a_)
    if (!x.is_zero()) x *= s;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix m(c_, r_, N_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

Matrix Matrix::pow(long e) const {
  if (e < 0) return inverse(*this).pow(-e);
  Matrix result = identity(r_, N_);
  Matrix base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool Matrix::operator==(const Matrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

Matrix Matrix::block(int r0, int c0, int nr, int nc) const {
  Matrix m(nr, nc, N_);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
  return m;
}

Matrix Matrix::hcat(const Matrix& a, const Matrix& b) {
  if (a.r_ != b.r_) throw internal_error("hcat row mismatch");
  Matrix m(a.r_, a.c_ + b.c_, std::max(a.N_, b.N_));
  for (int i = 0; i < a.r_; ++i) {
    for (int j = 0; j < a.c_; ++j) m(i, j) = a(i, j);
    for (int j = 0; j < b.c_; ++j) m(i, a.c_ + j) = b(i, j);
  }
  return m;
}

Matrix Matrix::vcat(const Matrix& a, const Matrix& b) {
  if (a.c_ != b.c_) throw internal_error("vcat column mismatch");
  Matrix m(a.r_ + b.r_, a.c_, std::max(a.N_, b.N_));
  for (int j = 0; j < a.c_; ++j) {
    for (int i = 0; i < a.r_; ++i) m(i, j) = a(i, j);
    for (int i = 0; i < b.r_; ++i) m(a.r_ + i, j) = b(i, j);
  }
  return m;
}

Matrix Matrix::col(int j) const { return block(0, j, r_, 1); }

std::string Matrix::str() const {
  std::string out = "[";
  for (int i = 0; i < r_; ++i) {
    out += i ? ",[" : "[";
    for (int j = 0; j < c_; ++j) out += (j ? "," : "") + (*this)(i, j).str();
    out += "]";
  }
  return out + "]";
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() * b.rows(), a.cols() * b.cols(), std::max(a.conductor(), b.conductor()));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const Cyclo& x = a(i, j);
      if (x.is_zero()) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          if (!b(k, l).is_zero()) m(i * b.rows() + k, j * b.cols() + l) = x * b(k, l);
    }
  return m;
}

namespace {

// In-place Gauss-Jordan on the first `ncols` columns.  Returns pivot columns
// and accumulates the determinant sign/scale when requested.
std::vector<int> eliminate(Matrix& a, int ncols, bool reduced, Cyclo* det) {
  std::vector<int> piv;
  int row = 0;
  const int R = a.rows(), C = a.cols();
  for (int col = 0; col < ncols && row < R; ++col) {
    int best = -1;
    for (int i = row; i < R; ++i) {
      if (a(i, col).is_zero()) continue;
      if (best < 0) best = i;
      if (a(i, col).is_rational()) {
        best = i;
        break;
      }
    }
    if (best < 0) {
      if (det) *det = Cyclo(a.conductor());
      continue;
    }
    if (best != row) {
      for (int j = 0; j < C; ++j) std::swap(a(best, j), a(row, j));
      if (det) *det = -*det;
    }
    Cyclo pv = a(row, col);
    if (det) *det *= pv;
    Cyclo inv = pv.inv();
    for (int j = col; j < C; ++j)
      if (!a(row, j).is_zero()) a(row, j) *= inv;
    for (int i = reduced ? 0 : row + 1; i < R; ++i) {
      if (i == row || a(i, col).is_zero()) continue;
      Cyclo f = a(i, col);
      for (int j = col; j < C; ++j)
        if (!a(row, j).is_zero()) a(i, j) -= f * a(row, j);
    }
    piv.push_back(col);
    ++row;
  }
  return piv;
}

}  // namespace

std::pair<Matrix, std::vector<int>> rref(const Matrix& m) {
  Matrix a = m;
  auto piv = eliminate(a, a.cols(), true, nullptr);
  return {std::move(a), std::move(piv)};
}

int rank(const Matrix& m) {
  Matrix a = m;
  return static_cast<int>(eliminate(a, a.cols(), false, nullptr).size());
}

Matrix nullspace(const Matrix& m) {
  auto [a, piv] = rref(m);
  const int C = m.cols();
  std::vector<bool> is_piv(C, false);
  for (int p : piv) is_piv[p] = true;
  std::vector<int> free;
  for (int j = 0; j < C; ++j)
    if (!is_piv[j]) free.push_back(j);
  Matrix ns(C, static_cast<int>(free.size()), m.conductor());
  for (std::size_t k = 0; k < free.size(); ++k) {
    int f = free[k];
    ns(f, k) = Cyclo(m.conductor(), mpq_class(1));
    for (std::size_t r = 0; r < piv.size(); ++r)
      if (!a(r, f).is_zero()) ns(piv[r], k) = -a(r, f);
  }
  return ns;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw internal_error("inverse of non-square matrix");
  const int n = m.rows();
  Matrix a = Matrix::hcat(m, Matrix::identity(n, m.conductor()));
  auto piv = eliminate(a, n, true, nullptr);
  if (static_cast<int>(piv.size()) < n) throw math_error("SingularMatrix", "matrix is not invertible");
  return a.block(0, n, n, n);
}

Cyclo determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw internal_error("determinant of non-square matrix");
  Matrix a = m;
  Cyclo det(m.conductor(), mpq_class(1));
  auto piv = eliminate(a, a.cols(), false, &det);
  if (static_cast<int>(piv.size()) < m.rows()) return Cyclo(m.conductor());
  return det;
}

bool solve(const Matrix& m, const Matrix& b, Matrix& x) {
  const int n = m.cols();
  Matrix a = Matrix::hcat(m, b);
  auto piv = eliminate(a, a.cols(), true, nullptr);
  for (int p : piv)
    if (p >= n) return false;
  x = Matrix(n, b.cols(), std::max(m.conductor(), b.conductor()));
  for (std::size_t r = 0; r < piv.size(); ++r)
    for (int j = 0; j < b.cols(); ++j) x(piv[r], j) = a(r, n + j);
  return true;
}

Poly charpoly(const Matrix& m) {
  if (m.rows() != m.cols()) throw internal_error("charpoly of non-square matrix");
  const int n = m.rows();
  const int N = m.conductor();
  Matrix h = m;
  // reduce to upper Hessenberg form by similarity
  for (int j = 0; j + 2 < n; ++j) {
    int piv = -1;
    for (int i = j + 1; i < n; ++i)
      if (!h(i, j).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != j + 1) {
      for (int k = 0; k < n; ++k) std::swap(h(piv, k), h(j + 1, k));
      for (int k = 0; k < n; ++k) std::swap(h(k, piv), h(k, j + 1));
    }
    Cyclo inv = h(j + 1, j).inv();
    for (int i = j + 2; i < n; ++i) {
      if (h(i, j).is_zero()) continue;
      Cyclo u = h(i, j) * inv;
      for (int k = 0; k < n; ++k)
        if (!h(j + 1, k).is_zero()) h(i, k) -= u * h(j + 1, k);
      for (int k = 0; k < n; ++k)
        if (!h(k, i).is_zero()) h(k, j + 1) += u * h(k, i);
    }
  }
  std::vector<Poly> p(n + 1);
  const Cyclo one(N, mpq_class(1));
  p[0] = Poly::constant(one);
  for (int k = 1; k <= n; ++k) {
    p[k] = Poly::x_minus(h(k - 1, k - 1)) * p[k - 1];
    Cyclo prod = one;
    for (int i = k - 1; i >= 1; --i) {
      prod *= h(i, i - 1);
      if (prod.is_zero()) break;
      const Cyclo& hik = h(i - 1, k - 1);
      if (hik.is_zero()) continue;
      p[k] = p[k] - p[i - 1].scale(hik * prod);
    }
  }
  return p[n];
}

// ---------------------------------------------------------------- Jordan data

bool JordanBlock::operator<(const JordanBlock& o) const {
  int c = eigenvalue.compare(o.eigenvalue);
  if (c != 0) return c < 0;
  return size > o.size;
}

JordanType::JordanType(std::vector<JordanBlock> b) : blocks(std::move(b)) { normalize(); }

void JordanType::normalize() { std::sort(blocks.begin(), blocks.end()); }

int JordanType::dim() const {
  int d = 0;
  for (const auto& b : blocks) d += b.size;
  return d;
}

bool JordanType::operator<(const JordanType& o) const {
  return std::lexicographical_compare(blocks.begin(), blocks.end(), o.blocks.begin(), o.blocks.end(),
                                      [](const JordanBlock& a, const JordanBlock& b) { return a < b; });
}

std::string JordanType::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) out += ",";
    out += "[\"" + blocks[i].eigenvalue.str() + "\"," + std::to_string(blocks[i].size) + "]";
  }
  return out + "]";
}

Matrix JordanType::to_matrix(int N) const {
  Matrix m(dim(), dim(), N);
  int off = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.size; ++i) {
      m(off + i, off + i) = b.eigenvalue;
      if (i + 1 < b.size) m(off + i + 1, off + i) = Cyclo(N, mpq_class(1));
    }
    off += b.size;
  }
  return m;
}

Cyclo cyclo_embed(long n_root, int N) { return Cyclo::root(N, n_root); }

namespace {

Matrix companion_unchecked(const Poly& f) {
  const int d = f.degree();
  const int N = f.conductor();
  Matrix m(d, d, N);
  Cyclo li = f.lead().inv();
  for (int i = 0; i + 1 < d; ++i) m(i + 1, i) = Cyclo(N, mpq_class(1));
  for (int i = 0; i < d; ++i) m(i, d - 1) = -(f[i] * li);
  return m;
}

}  // namespace

Matrix companion(const Poly& f) {
  if (f.degree() < 1) throw validation_error("InvalidPolynomial", "companion needs degree >= 1");
  if (f[0].is_zero()) throw math_error("ZeroConstantTerm", "f(0) = 0 in " + f.str());
  return companion_unchecked(f);
}

JordanType jordan_decompose(const Matrix& m) {
  const int n = m.rows();
  if (n == 0) return {};
  const int N = m.conductor();
  std::vector<Cyclo> roots = split_roots(charpoly(m), N);
  std::vector<JordanBlock> blocks;
  int total = 0;
  for (const auto& xi : roots) {
    Matrix a = m - Matrix::identity(n, N).scale(xi);
    std::vector<int> rk{n};
    Matrix p = a;
    while (true) {
      int r = rank(p);
      if (r == rk.back()) break;
      rk.push_back(r);
      p = p * a;
    }
    // rk[k] = rank(a^k); blocks of size exactly k: (rk[k-1]-rk[k]) - (rk[k]-rk[k+1])
    rk.push_back(rk.back());
    for (std::size_t k = 1; k + 1 < rk.size(); ++k) {
      int cnt = (rk[k - 1] - rk[k]) - (rk[k] - rk[k + 1]);
      for (int c = 0; c < cnt; ++c) blocks.push_back({xi, static_cast<int>(k)});
      total += cnt * static_cast<int>(k);
    }
  }
  if (total != n) throw internal_error("Jordan block sizes do not add up");
  return JordanType(std::move(blocks));
}

JordanType jordan_of_power(const JordanType& j, long n) {
  std::vector<JordanBlock> b;
  for (const auto& x : j.blocks) b.push_back({x.eigenvalue.pow(n), x.size});
  return JordanType(std::move(b));
}

JordanType jordan_kron(const JordanType& a, const JordanType& b) {
  std::vector<JordanBlock> out;
  for (const auto& x : a.blocks)
    for (const auto& y : b.blocks) {
      Cyclo e = x.eigenvalue * y.eigenvalue;
      for (int k = 1; k <= std::min(x.size, y.size); ++k) out.push_back({e, x.size + y.size - 2 * k + 1});
    }
  return JordanType(std::move(out));
}

JordanType jordan_scale(const JordanType& j, const Cyclo& c) {
  std::vector<JordanBlock> b;
  for (const auto& x : j.blocks) b.push_back({x.eigenvalue * c, x.size});
  return JordanType(std::move(b));
}

// The characteristic polynomial of F_f^n is the resultant Res_y(f(y), x - y^n)
// up to the leading coefficient, so no roots are extracted here.
Poly poly_power_bracket(const Poly& f, int n) {
  if (n < 1) throw validation_error("InvalidExponent", "f^[n] needs n >= 1");
  if (f.degree() < 1) return f;
  Poly cp = charpoly(companion_unchecked(f).pow(n));
  return cp.scale(f.lead().pow(n));
}

Matrix matrix_sigma_twist(const Matrix& m, int) { return m; }

// ---------------------------------------------------------------- roots

namespace {

using i64 = long;

i64 mulmod(i64 a, i64 b, i64 m) { return static_cast<i64>((__int128)a * b % m); }

i64 powmod(i64 a, i64 e, i64 m) {
  i64 r = 1 % m;
  a %= m;
  if (a < 0) a += m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<i64> prime_factors(i64 n) {
  std::vector<i64> f;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      f.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) f.push_back(n);
  return f;
}

using ModPoly = std::vector<i64>;  // lowest first, coefficients in [0, l)

void mp_trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly mp_rem(ModPoly a, const ModPoly& b, i64 l) {
  mp_trim(a);
  const int db = static_cast<int>(b.size()) - 1;
  i64 inv = powmod(b.back(), l - 2, l);
  while (static_cast<int>(a.size()) - 1 >= db) {
    i64 c = mulmod(a.back(), inv, l);
    int sh = static_cast<int>(a.size()) - 1 - db;
    for (int j = 0; j <= db; ++j) a[sh + j] = ((a[sh + j] - mulmod(c, b[j], l)) % l + l) % l;
    mp_trim(a);
  }
  return a;
}

int mp_gcd_degree(ModPoly a, ModPoly b, i64 l) {
  mp_trim(a);
  mp_trim(b);
  while (!b.empty()) {
    ModPoly r = mp_rem(a, b, l);
    a = std::move(b);
    b = std::move(r);
  }
  return static_cast<int>(a.size()) - 1;
}

i64 mp_eval(const ModPoly& a, i64 x, i64 l) {
  i64 r = 0;
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) r = (mulmod(r, x, l) + a[i]) % l;
  return r;
}

mpz_class mod_pos(const mpz_class& a, const mpz_class& m) {
  mpz_class r = a % m;
  if (r < 0) r += m;
  return r;
}

// Integral polynomial over Z[zeta]: coefficient i is a vector of mpz of length phi.
using ZPoly = std::vector<std::vector<mpz_class>>;

std::vector<mpz_class> powers_mod(const mpz_class& G, int phi, const mpz_class& M) {
  std::vector<mpz_class> pw(phi);
  pw[0] = 1;
  for (int j = 1; j < phi; ++j) pw[j] = mod_pos(pw[j - 1] * G, M);
  return pw;
}

std::vector<mpz_class> zpoly_mod(const ZPoly& h, const std::vector<mpz_class>& gp, const mpz_class& M) {
  std::vector<mpz_class> out(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    mpz_class s = 0;
    for (std::size_t j = 0; j < h[i].size(); ++j)
      if (h[i][j] != 0) s += h[i][j] * gp[j];
    out[i] = mod_pos(s, M);
  }
  return out;
}

mpz_class eval_mod(const std::vector<mpz_class>& a, const mpz_class& x, const mpz_class& M) {
  mpz_class r = 0;
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) r = mod_pos(r * x + a[i], M);
  return r;
}

mpz_class deriv_eval_mod(const std::vector<mpz_class>& a, const mpz_class& x, const mpz_class& M) {
  mpz_class r = 0;
  for (int i = static_cast<int>(a.size()) - 1; i >= 1; --i) r = mod_pos(r * x + a[i] * i, M);
  return r;
}

// Newton lifting of a simple root modulo M.
mpz_class newton_lift(const std::vector<mpz_class>& a, mpz_class x, const mpz_class& M) {
  for (int it = 0; it < 200; ++it) {
    mpz_class v = eval_mod(a, x, M);
    if (v == 0) return x;
    mpz_class d = deriv_eval_mod(a, x, M), inv;
    if (mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), M.get_mpz_t()) == 0)
      throw internal_error("Hensel lift hit a non-invertible derivative");
    x = mod_pos(x - v * inv, M);
  }
  throw internal_error("Hensel lift did not converge");
}

mpz_class round_q(const mpq_class& q) {
  mpq_class h = q + mpq_class(1, 2);
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), h.get_num_mpz_t(), h.get_den_mpz_t());
  return r;
}

// LLL reduction (delta = 3/4) with exact rational Gram-Schmidt.
void lll(std::vector<std::vector<mpz_class>>& b) {
  const int n = static_cast<int>(b.size());
  const int m = n ? static_cast<int>(b[0].size()) : 0;
  std::vector<std::vector<mpq_class>> bs(n, std::vector<mpq_class>(m));
  std::vector<std::vector<mpq_class>> mu(n, std::vector<mpq_class>(n));
  std::vector<mpq_class> B(n);
  auto dot_zq = [&](const std::vector<mpz_class>& x, const std::vector<mpq_class>& y) {
    mpq_class s = 0;
    for (int k = 0; k < m; ++k)
      if (x[k] != 0 && y[k] != 0) s += mpq_class(x[k]) * y[k];
    return s;
  };
  auto gso = [&]() {
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < m; ++k) bs[i][k] = b[i][k];
      for (int j = 0; j < i; ++j) {
        mu[i][j] = B[j] == 0 ? mpq_class(0) : dot_zq(b[i], bs[j]) / B[j];
        if (mu[i][j] != 0)
          for (int k = 0; k < m; ++k) bs[i][k] -= mu[i][j] * bs[j][k];
      }
      B[i] = 0;
      for (int k = 0; k < m; ++k) B[i] += bs[i][k] * bs[i][k];
    }
  };
  auto size_reduce = [&](int k, int l) {
    if (abs(mu[k][l]) * 2 <= 1) return;
    mpz_class r = round_q(mu[k][l]);
    for (int c = 0; c < m; ++c) b[k][c] -= r * b[l][c];
    for (int j = 0; j < l; ++j) mu[k][j] -= r * mu[l][j];
    mu[k][l] -= r;
  };
  gso();
  int k = 1;
  int guard = 0;
  while (k < n) {
    if (++guard > 100000) throw internal_error("LLL did not terminate");
    size_reduce(k, k - 1);
    if (B[k] < (mpq_class(3, 4) - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1]) {
      std::swap(b[k], b[k - 1]);
      gso();
      k = std::max(k - 1, 1);
    } else {
      for (int l = k - 2; l >= 0; --l) size_reduce(k, l);
      ++k;
    }
  }
}

// Short c in Z^phi with sum c_j G^j = a (mod M).
std::vector<mpz_class> recover(const mpz_class& a, const std::vector<mpz_class>& gp, const mpz_class& M, int phi) {
  if (phi == 1) {
    mpz_class r = mod_pos(a, M);
    if (2 * r > M) r -= M;
    return {r};
  }
  const mpz_class K = 1;
  std::vector<std::vector<mpz_class>> b(phi + 1, std::vector<mpz_class>(phi + 1, 0));
  b[0][0] = M;
  for (int j = 1; j < phi; ++j) {
    b[j][0] = mod_pos(-gp[j], M);
    b[j][j] = 1;
  }
  b[phi][0] = mod_pos(a, M);
  b[phi][phi] = K;
  lll(b);
  for (const auto& row : b) {
    if (row[phi] == K || row[phi] == -K) {
      int s = row[phi] == K ? 1 : -1;
      std::vector<mpz_class> c(phi);
      for (int j = 0; j < phi; ++j) c[j] = s * row[j];
      return c;
    }
  }
  return {};
}

struct PrimeData {
  i64 l = 0;
  i64 G = 0;
  std::vector<i64> roots;
};

PrimeData reduce_at_prime(const ZPoly& h, int N, int phi, i64 l) {
  PrimeData pd;
  pd.l = l;
  auto pf = prime_factors(N);
  for (i64 g = 2; g < l; ++g) {
    i64 G = powmod(g, (l - 1) / N, l);
    bool ok = true;
    for (i64 r : pf)
      if (powmod(G, N / r, l) == 1) ok = false;
    if (N == 1) ok = (G == 1);
    if (ok) {
      pd.G = G;
      break;
    }
  }
  if (N == 1) pd.G = 1;
  std::vector<i64> gp(phi);
  gp[0] = 1;
  for (int j = 1; j < phi; ++j) gp[j] = mulmod(gp[j - 1], pd.G, l);
  ModPoly hb(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    mpz_class s = 0;
    for (int j = 0; j < phi; ++j) s += h[i][j] * gp[j];
    hb[i] = mod_pos(s, mpz_class(static_cast<long>(l))).get_si();
  }
  ModPoly dh;
  for (std::size_t i = 1; i < hb.size(); ++i) dh.push_back(mulmod(hb[i], static_cast<i64>(i), l));
  mp_trim(dh);
  if (mp_gcd_degree(hb, dh, l) != 0) {
    pd.G = 0;  // not square-free here
    return pd;
  }
  for (i64 x = 0; x < l; ++x)
    if (mp_eval(hb, x, l) == 0) pd.roots.push_back(x);
  return pd;
}

}  // namespace

std::vector<Cyclo> split_roots(const Poly& f_in, int conductor) {
  if (f_in.degree() < 1) return {};
  const int N = conductor > 0 ? conductor : f_in.conductor();
  const int phi = euler_phi(N);
  Poly f = f_in.monic();
  Poly g = f;
  if (f.degree() > 1) {
    Poly gd = poly_gcd(f, f.derivative());
    if (gd.degree() > 0) g = f.divmod(gd).first.monic();
  }
  const int n = g.degree();
  if (n == 1) return {Cyclo(N) - g[0]};
  mpz_class D = 1;
  for (const auto& c : g.coeffs())
    for (const auto& q : c.coeffs()) mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), q.get_den_mpz_t());
  ZPoly h(n + 1, std::vector<mpz_class>(phi));
  {
    mpz_class Dp = 1;
    for (int i = n; i >= 0; --i) {
      std::vector<mpq_class> cs = Cyclo(N, g[i].coeffs()).coeffs();
      for (int j = 0; j < phi; ++j) {
        mpq_class v = cs[j] * Dp;
        if (v.get_den() != 1) throw internal_error("root finder scaling is not integral");
        h[i][j] = v.get_num();
      }
      Dp *= D;
    }
  }
  auto nonsplit = [&]() {
    return math_error("NonSplitSpectrum", "polynomial " + f_in.str() + " does not split over Q(zeta_" +
                                               std::to_string(N) + "); enlarge the conductor");
  };
  std::vector<PrimeData> primes;
  for (i64 m = 1; primes.size() < 3 && m < 200000; ++m) {
    i64 l = 1 + static_cast<i64>(N) * m;
    if (l <= n + 1 || !is_prime(l)) continue;
    PrimeData pd = reduce_at_prime(h, N, phi, l);
    if (pd.G == 0) continue;
    if (static_cast<int>(pd.roots.size()) < n) throw nonsplit();
    primes.push_back(std::move(pd));
  }
  if (primes.empty()) throw internal_error("no usable prime for root finding");
  const PrimeData& pd = primes[0];
  const mpz_class lz = static_cast<long>(pd.l);
  std::vector<mpz_class> phi_coeffs;
  for (long c : CycloField::get(N).Phi) phi_coeffs.push_back(c);

  const Cyclo Dc(N, mpq_class(D));
  std::vector<Cyclo> roots;
  std::vector<bool> done(pd.roots.size(), false);
  mpz_class M = lz;
  while (M < mpz_class(1) << 64) M *= lz;
  mpz_class hbound = 1;
  for (const auto& c : h)
    for (const auto& x : c)
      if (abs(x) > hbound) hbound = abs(x);
  const std::size_t max_bits = 256 + 8 * static_cast<std::size_t>(phi + n) * mpz_sizeinbase(hbound.get_mpz_t(), 2);
  while (true) {
    mpz_class G = newton_lift(phi_coeffs, pd.G, M);
    auto gp = powers_mod(G, phi, M);
    auto hm = zpoly_mod(h, gp, M);
    for (std::size_t r = 0; r < pd.roots.size(); ++r) {
      if (done[r]) continue;
      mpz_class a = newton_lift(hm, pd.roots[r], M);
      auto c = recover(a, gp, M, phi);
      if (c.empty()) continue;
      std::vector<mpq_class> cq(c.begin(), c.end());
      Cyclo beta(N, cq);
      // check h(beta) == 0 exactly
      Cyclo v(N);
      for (int i = n; i >= 0; --i) v = v * beta + Cyclo(N, std::vector<mpq_class>(h[i].begin(), h[i].end()));
      if (v.is_zero()) {
        done[r] = true;
        roots.push_back(beta / Dc);
      }
    }
    if (static_cast<int>(roots.size()) == n) break;
    if (mpz_sizeinbase(M.get_mpz_t(), 2) > max_bits) throw nonsplit();
    M = M * M;
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace gwa
