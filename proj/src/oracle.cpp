#include "gwa/oracle.hpp"

#include <functional>
#include <random>

#include "gwa/subspace.hpp"

namespace gwa {

int ExplicitModule::total_dim() const {
  int d = 0;
  for (int x : dims) d += x;
  return d;
}

void ExplicitModule::check_relations() const {
  const int p = cfg.p;
  for (int k = 0; k < p; ++k) {
    const int k1 = (k + 1) % p;
    Cyclo tk = t.at(cfg, k);
    if (X[k].rows() != dims[k1] || X[k].cols() != dims[k] || Y[k].rows() != dims[k] || Y[k].cols() != dims[k1])
      throw internal_error("explicit module has inconsistent shapes at weight " + std::to_string(k));
    if (!(Y[k] * X[k] == Matrix::identity(dims[k], cfg.N).scale(tk)))
      throw internal_error("relation YX = t fails at weight " + std::to_string(k));
    if (!(X[k] * Y[k] == Matrix::identity(dims[k1], cfg.N).scale(tk)))
      throw internal_error("relation XY = sigma(t) fails at weight " + std::to_string(k1));
  }
}

ExplicitModule zero_module(const OrbitConfig& cfg, const TParam& t) {
  ExplicitModule e;
  e.cfg = cfg;
  e.t = t;
  e.dims.assign(cfg.p, 0);
  for (int k = 0; k < cfg.p; ++k) {
    e.X.emplace_back(0, 0, cfg.N);
    e.Y.emplace_back(0, 0, cfg.N);
  }
  return e;
}

ExplicitModule realize(const Module& m, const OrbitConfig& cfg) {
  validate(m, cfg);
  const int p = cfg.p;
  ExplicitModule e = zero_module(cfg, m.t);
  // vertices: (absolute position, copy) -> local index in its weight space
  struct Vtx {
    long pos;
    int s;
    int local;
  };
  std::vector<Vtx> verts;
  const int d = m.is_path() ? 1 : m.F.dim();
  const long first = m.is_path() ? m.i + 1 : 1;
  const long count = m.is_path() ? static_cast<long>(m.w.size()) + 1 : static_cast<long>(m.w.size());
  std::vector<std::vector<int>> index(count, std::vector<int>(d));
  for (long k = 0; k < count; ++k)
    for (int s = 0; s < d; ++s) {
      int wt = cfg.mod(first + k);
      index[k][s] = e.dims[wt]++;
    }
  for (int k = 0; k < p; ++k) {
    e.X[k] = Matrix(e.dims[(k + 1) % p], e.dims[k], cfg.N);
    e.Y[k] = Matrix(e.dims[k], e.dims[(k + 1) % p], cfg.N);
  }
  const long edges = static_cast<long>(m.w.size());
  Matrix Fm, Finv;
  if (m.is_cycle()) {
    Fm = m.F.to_matrix(cfg.N);
    Finv = inverse(Fm);
  }
  for (long k = 0; k < edges; ++k) {
    const long pos = first + k;
    const int wt = cfg.mod(pos);
    const char c = m.w[k];
    const bool wrap = m.is_cycle() && k + 1 == edges;
    const long nxt = wrap ? 0 : k + 1;
    Cyclo xs = c == '1' ? m.t.at(cfg, pos) : cfg.one();
    bool xon = c == '1' || c == 'x';
    bool yon = c == '1' || c == 'y';
    for (int s = 0; s < d; ++s) {
      if (!wrap) {
        if (xon) e.X[wt](index[nxt][s], index[k][s]) = xs;
        if (yon) e.Y[wt](index[k][s], index[nxt][s]) = cfg.one();
        continue;
      }
      for (int s2 = 0; s2 < d; ++s2) {
        if (xon && !Fm(s2, s).is_zero()) e.X[wt](index[nxt][s2], index[k][s]) = xs * Fm(s2, s);
        if (yon && !Finv(s2, s).is_zero()) e.Y[wt](index[k][s2], index[nxt][s]) = Finv(s2, s);
      }
    }
  }
  e.check_relations();
  return e;
}

ExplicitModule direct_sum(const ExplicitModule& a, const ExplicitModule& b) {
  const int p = a.cfg.p;
  ExplicitModule e = zero_module(a.cfg, a.t);
  for (int k = 0; k < p; ++k) e.dims[k] = a.dims[k] + b.dims[k];
  for (int k = 0; k < p; ++k) {
    const int k1 = (k + 1) % p;
    e.X[k] = Matrix(e.dims[k1], e.dims[k], a.cfg.N);
    e.Y[k] = Matrix(e.dims[k], e.dims[k1], a.cfg.N);
    for (int i = 0; i < a.dims[k1]; ++i)
      for (int j = 0; j < a.dims[k]; ++j) e.X[k](i, j) = a.X[k](i, j);
    for (int i = 0; i < b.dims[k1]; ++i)
      for (int j = 0; j < b.dims[k]; ++j) e.X[k](a.dims[k1] + i, a.dims[k] + j) = b.X[k](i, j);
    for (int i = 0; i < a.dims[k]; ++i)
      for (int j = 0; j < a.dims[k1]; ++j) e.Y[k](i, j) = a.Y[k](i, j);
    for (int i = 0; i < b.dims[k]; ++i)
      for (int j = 0; j < b.dims[k1]; ++j) e.Y[k](a.dims[k] + i, a.dims[k1] + j) = b.Y[k](i, j);
  }
  return e;
}

ExplicitModule realize(const Decomposition& d, const OrbitConfig& cfg, const TParam& t) {
  ExplicitModule e = zero_module(cfg, t);
  for (const auto& s : d.summands) {
    ExplicitModule one = realize(s.m, cfg);
    for (int c = 0; c < s.mult; ++c) e = direct_sum(e, one);
  }
  return e;
}

ExplicitModule kronecker_tensor(const ExplicitModule& a, const ExplicitModule& b) {
  if (!(a.cfg == b.cfg)) throw validation_error("ContextMismatch", "tensor of modules over different orbits");
  const int p = a.cfg.p;
  ExplicitModule e = zero_module(a.cfg, a.t * b.t);
  for (int k = 0; k < p; ++k) e.dims[k] = a.dims[k] * b.dims[k];
  for (int k = 0; k < p; ++k) {
    e.X[k] = kron(a.X[k], b.X[k]);
    e.Y[k] = kron(a.Y[k], b.Y[k]);
  }
  e.check_relations();
  return e;
}

namespace {

// Linear relation V_1 -> V_1 stored as a basis of pairs [top; bottom].
struct Relation {
  Matrix A, B;
};

Relation compose(const Relation& r, const Relation& s) {
  // {(a, c) : (a, b) in r, (b, c) in s}
  const int N = r.A.conductor();
  if (r.A.cols() == 0 || s.A.cols() == 0) return {Matrix(r.A.rows(), 0, N), Matrix(s.B.rows(), 0, N)};
  Matrix ns = nullspace(Matrix::hcat(r.B, s.A));
  Matrix lam = ns.block(0, 0, r.A.cols(), ns.cols());
  Matrix mu = ns.block(r.A.cols(), 0, s.A.cols(), ns.cols());
  Matrix both = sub::span(Matrix::vcat(r.A * lam, s.B * mu.scale(Cyclo(1, mpq_class(-1)))));
  const int n = r.A.rows();
  return {both.block(0, 0, n, both.cols()), both.block(n, 0, both.rows() - n, both.cols())};
}

Matrix rel_image(const Relation& r, const Matrix& S) {
  const int N = r.A.conductor();
  if (r.A.cols() == 0) return Matrix(r.B.rows(), 0, N);
  Matrix ns = S.cols() == 0 ? nullspace(r.A) : nullspace(Matrix::hcat(r.A, S));
  return sub::span(r.B * ns.block(0, 0, r.A.cols(), ns.cols()));
}

Matrix rel_preimage(const Relation& r, const Matrix& T) { return rel_image({r.B, r.A}, T); }

class Decomposer {
 public:
  explicit Decomposer(const ExplicitModule& e) : e_(e), p_(e.cfg.p), N_(e.cfg.N) {}

  Decomposition run() {
    Decomposition out;
    const int total = e_.total_dim();
    if (total == 0) return out;
    int accounted = 0;
    if (!e_.t.breakless()) accounted += strings(out);
    const int cap = e_.dims[1 % p_];
    for (int r = 1; accounted < total && r <= cap; ++r) accounted += bands(r, out);
    if (accounted != total)
      throw internal_error("oracle accounted for " + std::to_string(accounted) + " of " + std::to_string(total) + " dimensions");
    out.normalize();
    return out;
  }

 private:
  const ExplicitModule& e_;
  int p_, N_;

  int wt(long pos) const { return static_cast<int>(((pos % p_) + p_) % p_); }
  bool brk(long pos) const { return e_.t.is_break(pos); }

  Matrix push(long edge, char c, const Matrix& S) const {
    const int k = wt(edge);
    if (c == 'y') return sub::preimage(e_.Y[k], S);
    return sub::image(e_.X[k], S);
  }

  Matrix pull(long edge, char c, const Matrix& T) const {
    const int k = wt(edge);
    if (c == 'y') return sub::image(e_.Y[k], T);
    return sub::preimage(e_.X[k], T);
  }

  std::string letters(long edge) const { return brk(edge) ? "xy" : "1"; }

  int strings(Decomposition& out) {
    int acc = 0;
    const int total = e_.total_dim();
    for (int b = 0; b < p_; ++b) {
      if (!brk(b - 1) || e_.dims[b] == 0) continue;
      const int km = wt(b - 1);
      Matrix Bp = sub::span(nullspace(e_.Y[km]));
      Matrix Bm = sub::image(e_.X[km], sub::full(e_.dims[km], N_));
      if (sub::contains(Bm, Bp)) continue;
      std::string u;
      std::function<void(const Matrix&, const Matrix&)> dfs = [&](const Matrix& P, const Matrix& M) {
        const long e = b + static_cast<long>(u.size());
        if (brk(e)) {
          const int ke = wt(e);
          Matrix Tp = sub::span(nullspace(e_.X[ke]));
          Matrix Tm = sub::image(e_.Y[ke], sub::full(e_.dims[(ke + 1) % p_], N_));
          Matrix Cp = Tp, Cm = Tm;
          for (long j = static_cast<long>(u.size()) - 1; j >= 0; --j) {
            Cp = pull(b + j, u[j], Cp);
            Cm = pull(b + j, u[j], Cm);
          }
          int mult = sub::dim(sub::intersect(Bp, Cp)) -
                     sub::dim(sub::sum(sub::intersect(Bm, Cp), sub::intersect(Bp, Cm)));
          if (mult > 0) {
            out.add(Module::path(e_.t, wt(b - 1), u), mult);
            acc += mult * static_cast<int>(u.size() + 1);
          }
        }
        if (static_cast<int>(u.size()) >= total) return;
        for (char c : letters(e)) {
          Matrix P2 = push(e, c, P), M2 = push(e, c, M);
          if (sub::contains(M2, P2)) continue;
          u.push_back(c);
          dfs(P2, M2);
          u.pop_back();
        }
      };
      dfs(Bp, Bm);
    }
    return acc;
  }

  Relation letter_relation(long edge, char c) const {
    const int k = wt(edge);
    const int n0 = e_.dims[k], n1 = e_.dims[(k + 1) % p_];
    if (c == 'y') return {e_.Y[k], Matrix::identity(n1, N_)};
    Matrix X = e_.X[k];
    if (c == '1') X = X.scale(e_.t.at(e_.cfg, edge).inv());
    return {Matrix::identity(n0, N_), X};
  }

  int bands(int r, Decomposition& out) {
    const long L = static_cast<long>(r) * p_;
    const int n1 = e_.dims[1 % p_];
    if (n1 == 0) return 0;
    int acc = 0;
    std::string u;
    std::function<void(const Matrix&, const Matrix&)> dfs = [&](const Matrix& P, const Matrix& M) {
      if (static_cast<long>(u.size()) == L) {
        if (word_is_periodic(u, p_) || canonical_shift(u, p_).first != u) return;
        acc += band_at(u, out);
        return;
      }
      const long edge = 1 + static_cast<long>(u.size());
      for (char c : letters(edge)) {
        Matrix P2 = push(edge, c, P), M2 = push(edge, c, M);
        if (sub::contains(M2, P2)) continue;
        u.push_back(c);
        dfs(P2, M2);
        u.pop_back();
      }
    };
    dfs(sub::full(n1, N_), sub::zero(n1, N_));
    return acc;
  }

  int band_at(const std::string& u, Decomposition& out) {
    const int n = e_.dims[1 % p_];
    Relation rho{Matrix::identity(n, N_), Matrix::identity(n, N_)};
    for (std::size_t j = 0; j < u.size(); ++j) rho = compose(rho, letter_relation(1 + static_cast<long>(j), u[j]));
    auto stable = [&](Matrix S, bool forward) {
      while (true) {
        Matrix nx = forward ? rel_image(rho, S) : rel_preimage(rho, S);
        if (nx.cols() == S.cols() && sub::contains(S, nx) && sub::contains(nx, S)) return S;
        S = nx;
      }
    };
    Matrix Ep = stable(sub::full(n, N_), false);
    Matrix Em = stable(sub::full(n, N_), true);
    Matrix Zp = stable(sub::zero(n, N_), false);
    Matrix Zm = stable(sub::zero(n, N_), true);
    Matrix U = sub::intersect(Ep, Em);
    Matrix Lo = sub::sum(sub::intersect(Ep, Zm), sub::intersect(Zp, Em));
    Matrix C = sub::complement(Lo, U);
    const int w = C.cols();
    if (w == 0) return 0;
    Matrix M(w, w, N_);
    Matrix CL = Matrix::hcat(C, Lo);
    for (int j = 0; j < w; ++j) {
      // (c, v) in rho with v in E^+
      Matrix sys = Matrix::vcat(Matrix::hcat(rho.A, Matrix(n, Ep.cols(), N_)),
                                Matrix::hcat(rho.B, Ep.scale(Cyclo(1, mpq_class(-1)))));
      Matrix rhs = Matrix::vcat(C.col(j), Matrix(n, 1, N_));
      Matrix sol;
      if (!solve(sys, rhs, sol)) throw internal_error("band successor missing");
      Matrix v = rho.B * sol.block(0, 0, rho.A.cols(), 1);
      Matrix coords;
      if (!solve(CL, v, coords)) throw internal_error("band successor left the band subspace");
      for (int i = 0; i < w; ++i) M(i, j) = coords(i, 0);
    }
    JordanType J = jordan_decompose(M);
    for (const auto& b : J.blocks) out.add(Module::cycle(e_.t, u, b.eigenvalue, b.size));
    return static_cast<int>(u.size()) * w;
  }
};

// Submodule given by one subspace per weight.
ExplicitModule quotient(const ExplicitModule& e, const std::vector<Matrix>& S) {
  const int p = e.cfg.p;
  const int N = e.cfg.N;
  std::vector<Matrix> C(p), Pi(p);
  ExplicitModule q = zero_module(e.cfg, e.t);
  for (int k = 0; k < p; ++k) {
    C[k] = sub::complement(S[k], sub::full(e.dims[k], N));
    q.dims[k] = C[k].cols();
    if (e.dims[k] == 0) {
      Pi[k] = Matrix(0, 0, N);
      continue;
    }
    Matrix Q = Matrix::hcat(C[k], S[k]);
    Pi[k] = inverse(Q).block(0, 0, C[k].cols(), e.dims[k]);
  }
  for (int k = 0; k < p; ++k) {
    const int k1 = (k + 1) % p;
    q.X[k] = q.dims[k1] && q.dims[k] ? Pi[k1] * e.X[k] * C[k] : Matrix(q.dims[k1], q.dims[k], N);
    q.Y[k] = q.dims[k] && q.dims[k1] ? Pi[k] * e.Y[k] * C[k1] : Matrix(q.dims[k], q.dims[k1], N);
  }
  return q;
}

Matrix random_vector(const Matrix& basis, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-3, 3);
  const int N = basis.conductor();
  while (true) {
    Matrix c(basis.cols(), 1, N);
    for (int i = 0; i < basis.cols(); ++i) c(i, 0) = Cyclo(N, mpq_class(dist(rng)));
    Matrix v = basis * c;
    if (!v.is_zero()) return v;
  }
}

struct SimpleSub {
  std::vector<Matrix> S;
  Module m;
};

// Forward X-chain (or backward Y-chain) of v in V_start, one vector per step.
std::vector<Matrix> chain_spaces(const ExplicitModule& e, int start, const Matrix& v, int steps, bool backward) {
  const int p = e.cfg.p;
  std::vector<Matrix> S(p);
  for (int k = 0; k < p; ++k) S[k] = sub::zero(e.dims[k], e.cfg.N);
  Matrix cur = v;
  int w = start;
  for (int s = 0; s <= steps; ++s) {
    S[w] = sub::sum(S[w], cur);
    if (s == steps) break;
    if (backward) {
      int k = (w - 1 + p) % p;
      cur = e.Y[k] * cur;
      w = k;
    } else {
      cur = e.X[w] * cur;
      w = (w + 1) % p;
    }
  }
  return S;
}

SimpleSub find_simple(const ExplicitModule& e, std::mt19937_64& rng) {
  const int p = e.cfg.p;
  const int N = e.cfg.N;
  const OrbitConfig& cfg = e.cfg;
  if (e.t.breakless()) {
    const int n = e.dims[1 % p];
    Matrix M = Matrix::identity(n, N);
    for (long k = 1; k <= p; ++k) M = e.X[cfg.mod(k)].scale(e.t.at(cfg, k).inv()) * M;
    auto roots = split_roots(charpoly(M), N);
    Matrix eig = nullspace(M - Matrix::identity(n, N).scale(roots[0]));
    Matrix v = random_vector(eig, rng);
    return {chain_spaces(e, 1 % p, v, p - 1, false), Module::cycle(e.t, std::string(p, '1'), roots[0])};
  }
  // path type
  for (int i = 0; i < p; ++i) {
    if (!e.t.is_break(i)) continue;
    const int b = (i + 1) % p;
    if (e.dims[b] == 0) continue;
    long edge = i + 1;
    Matrix P = Matrix::identity(e.dims[b], N);
    while (!e.t.is_break(edge)) {
      P = e.X[cfg.mod(edge)] * P;
      ++edge;
    }
    const int s = static_cast<int>(edge - (i + 1));
    Matrix K = sub::intersect(sub::span(nullspace(e.Y[i])),
                              sub::preimage(P, sub::span(nullspace(e.X[cfg.mod(edge)]))));
    if (K.cols() == 0) continue;
    Matrix v = random_vector(K, rng);
    return {chain_spaces(e, b, v, s, false), Module::path(e.t, i, std::string(s, '1'))};
  }
  const int n = e.dims[1 % p];
  std::string wx(p, '1'), wy(p, '1');
  Cyclo norm = cfg.one();
  for (long k = 1; k <= p; ++k) {
    if (e.t.is_break(k)) {
      wx[k - 1] = 'x';
      wy[k - 1] = 'y';
    } else {
      norm *= e.t.at(cfg, k);
    }
  }
  if (n > 0) {
    Matrix MX = Matrix::identity(n, N);
    for (long k = 1; k <= p; ++k) MX = e.X[cfg.mod(k)] * MX;
    Poly cp = charpoly(MX);
    // strip the nilpotent part
    while (cp.degree() > 0 && cp[0].is_zero()) cp = Poly(std::vector<Cyclo>(cp.coeffs().begin() + 1, cp.coeffs().end()));
    if (cp.degree() > 0) {
      Cyclo xi = split_roots(cp, N)[0];
      Matrix v = random_vector(nullspace(MX - Matrix::identity(n, N).scale(xi)), rng);
      return {chain_spaces(e, 1 % p, v, p - 1, false), Module::cycle(e.t, wx, xi / norm)};
    }
    Matrix MY = Matrix::identity(n, N);
    for (long k = p; k >= 1; --k) MY = e.Y[cfg.mod(k)] * MY;
    cp = charpoly(MY);
    while (cp.degree() > 0 && cp[0].is_zero()) cp = Poly(std::vector<Cyclo>(cp.coeffs().begin() + 1, cp.coeffs().end()));
    if (cp.degree() > 0) {
      Cyclo mu = split_roots(cp, N)[0];
      Matrix v = random_vector(nullspace(MY - Matrix::identity(n, N).scale(mu)), rng);
      return {chain_spaces(e, 1 % p, v, p - 1, true), Module::cycle(e.t, wy, mu.inv())};
    }
  }
  throw internal_error("no simple submodule found");
}

}  // namespace

Decomposition oracle_decompose(const ExplicitModule& e) { return Decomposer(e).run(); }

std::vector<Module> oracle_composition_series(const ExplicitModule& e, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Module> out;
  ExplicitModule cur = e;
  while (cur.total_dim() > 0) {
    SimpleSub s = find_simple(cur, rng);
    out.push_back(s.m);
    cur = quotient(cur, s.S);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gwa
