#include "gwa/groth.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>

#include "gwa/errors.hpp"
#include "gwa/oracle.hpp"
#include "gwa/tensor.hpp"

namespace gwa {

namespace {

int md(int p, long k) { return static_cast<int>(((k % p) + p) % p); }

Cyclo lift(const Cyclo& c, const OrbitConfig& cfg) {
  if (c.is_rational() && c.conductor() != cfg.N) return Cyclo(cfg.N, c.coeffs()[0]);
  return c;
}

std::string pow_str(const std::string& g, int a) { return a == 1 ? g : g + "^" + std::to_string(a); }

std::string exps_str(const char* g, const std::vector<int>& a) {
  std::string s;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > 0) s += "*" + pow_str(std::string(g) + "[" + std::to_string(k) + "]", a[k]);
  return s;
}

}  // namespace

bool cyc_between(int p, int i, int k, int j) {
  int dk = md(p, k - i), dj = md(p, j - i);
  if (dj == 0) dj = p;
  return dk > 0 && dk < dj;
}

bool cyc_chain(int p, const std::vector<int>& v, const std::vector<bool>& strict, bool closed) {
  long sum = 0;
  for (std::size_t m = 1; m < v.size(); ++m) {
    int inc = md(p, v[m] - v[m - 1]);
    if (strict[m - 1] && inc == 0) return false;
    sum += inc;
  }
  return closed ? sum == p : sum < p;
}

// ---------------------------------------------------------------- monomials

std::vector<int> GrothMonomial::multidegree() const {
  std::vector<int> d = a;
  if (kind == GKind::XIJ) {
    d[i] += 1;
    d[j] += 1;
  }
  return d;
}

std::string GrothMonomial::key() const {
  std::string s = std::to_string(static_cast<int>(kind)) + "|" + std::to_string(i) + "," + std::to_string(j) + "|";
  for (int e : a) s += std::to_string(e) + ",";
  if (kind == GKind::U || kind == GKind::UY || kind == GKind::UYS) s += "|" + xi.str();
  return s;
}

std::string GrothMonomial::str() const {
  switch (kind) {
    case GKind::XIJ:
      return "x[" + std::to_string(i) + "," + std::to_string(j) + "]" + exps_str("x", a);
    case GKind::XPOW:
      return pow_str("x[" + std::to_string(i) + "]", a[i]);
    case GKind::U:
      return "u[" + xi.str() + "]";
    case GKind::UY:
    case GKind::UYS: {
      std::string s = exps_str(kind == GKind::UY ? "y" : "ys", a).substr(1);
      return xi.is_one() ? s : "u[" + xi.str() + "]*" + s;
    }
  }
  return "";
}

void GrothElement::add(const GrothMonomial& m, const mpq_class& c) {
  if (c == 0) return;
  auto it = terms.find(m);
  if (it == terms.end()) {
    terms.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms.erase(it);
}

void GrothElement::add(const GrothElement& e, const mpq_class& c) {
  for (const auto& [m, k] : e.terms) add(m, k * c);
}

std::string GrothElement::str() const {
  if (terms.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms) {
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    mpq_class a = abs(c);
    if (a != 1) s += a.get_str() + "*";
    s += m.str();
  }
  return s;
}

// ---------------------------------------------------------------- words

GrothWord GrothWord::unit(const OrbitConfig& cfg) {
  GrothWord w;
  w.u = cfg.one();
  w.x.assign(cfg.p, 0);
  w.y.assign(cfg.p, 0);
  w.ys.assign(cfg.p, 0);
  return w;
}

GrothWord GrothWord::operator*(const GrothWord& o) const {
  GrothWord r = *this;
  r.u = u * o.u;
  for (std::size_t k = 0; k < x.size(); ++k) {
    r.x[k] += o.x[k];
    r.y[k] += o.y[k];
    r.ys[k] += o.ys[k];
  }
  r.xij.insert(r.xij.end(), o.xij.begin(), o.xij.end());
  return r;
}

GrothWord to_word(const GrothMonomial& m, const OrbitConfig& cfg) {
  GrothWord w = GrothWord::unit(cfg);
  switch (m.kind) {
    case GKind::XIJ:
      w.xij.emplace_back(m.i, m.j);
      w.x = m.a;
      break;
    case GKind::XPOW:
      w.x = m.a;
      break;
    case GKind::U:
      w.u = lift(m.xi, cfg);
      break;
    case GKind::UY:
      w.u = lift(m.xi, cfg);
      w.y = m.a;
      break;
    case GKind::UYS:
      w.u = lift(m.xi, cfg);
      w.ys = m.a;
      break;
  }
  return w;
}

namespace {

GrothElement single(const GrothMonomial& m) {
  GrothElement e;
  e.add(m, 1);
  return e;
}

// Maximal cyclic runs of the intersection of the arcs (i, j] and (k, l], as (start break, end break).
std::vector<std::pair<int, int>> arc_runs(int p, int i, int j, int k, int l) {
  std::vector<bool> in(p, false);
  for (int s = 0; s < p; ++s) {
    bool a = s == j || cyc_between(p, i, s, j);
    bool b = s == l || cyc_between(p, k, s, l);
    in[s] = a && b;
  }
  std::vector<std::pair<int, int>> runs;
  for (int s = 0; s < p; ++s) {
    if (!in[s] || in[md(p, s - 1)]) continue;
    int e = s;
    while (in[md(p, e + 1)]) e = md(p, e + 1);
    runs.emplace_back(md(p, s - 1), e);
  }
  return runs;
}

void reduce(GrothWord w, const mpq_class& coef, GrothElement& out, const OrbitConfig& cfg) {
  const int p = cfg.p;
  if (!w.xij.empty()) {
    w.u = cfg.one();
    for (int k = 0; k < p; ++k) {
      w.x[k] += w.y[k] + w.ys[k];
      w.y[k] = w.ys[k] = 0;
    }
    // two x_ij factors collapse onto the intersection of their supports
    if (w.xij.size() >= 2) {
      auto [i, j] = w.xij.back();
      w.xij.pop_back();
      auto [k, l] = w.xij.back();
      w.xij.pop_back();
      for (auto [a, b] : arc_runs(p, i, j, k, l)) {
        GrothWord v = w;
        v.xij.emplace_back(a, b);
        std::vector<int> ends = {i, j, k, l};
        ends.erase(std::find(ends.begin(), ends.end(), a));
        ends.erase(std::find(ends.begin(), ends.end(), b));
        for (int e : ends) v.x[e] += 1;
        reduce(std::move(v), coef, out, cfg);
      }
      return;
    }
    auto [i, j] = w.xij[0];
    // x_ij against x_k with k between i and j
    for (int k = 0; k < p; ++k) {
      if (w.x[k] == 0 || !cyc_between(p, i, k, j)) continue;
      w.x[k] -= 1;
      GrothWord a = w, b = w;
      a.xij[0] = {i, k};
      a.x[j] += 1;
      b.xij[0] = {k, j};
      b.x[i] += 1;
      reduce(std::move(a), coef, out, cfg);
      reduce(std::move(b), coef, out, cfg);
      return;
    }
    GrothMonomial m;
    m.kind = GKind::XIJ;
    m.i = i;
    m.j = j;
    m.a = w.x;
    out.add(m, coef);
    return;
  }
  int xi_idx = -1;
  for (int k = 0; k < p && xi_idx < 0; ++k)
    if (w.x[k] > 0) xi_idx = k;
  if (xi_idx >= 0) {
    const int i = xi_idx;
    // against any generator at another index
    for (int j = 0; j < p; ++j) {
      if (j == i) continue;
      int* slot = w.x[j] > 0 ? &w.x[j] : w.y[j] > 0 ? &w.y[j] : w.ys[j] > 0 ? &w.ys[j] : nullptr;
      if (!slot) continue;
      *slot -= 1;
      w.x[i] -= 1;
      GrothWord a = w, b = w;
      a.xij.emplace_back(i, j);
      b.xij.emplace_back(j, i);
      reduce(std::move(a), coef, out, cfg);
      reduce(std::move(b), coef, out, cfg);
      return;
    }
    GrothMonomial m;
    m.kind = GKind::XPOW;
    m.i = i;
    m.a.assign(p, 0);
    m.a[i] = w.x[i] + w.y[i] + w.ys[i];
    out.add(m, coef);
    return;
  }
  int yi = -1, ysj = -1;
  for (int k = 0; k < p; ++k) {
    if (yi < 0 && w.y[k] > 0) yi = k;
    if (ysj < 0 && w.ys[k] > 0) ysj = k;
  }
  if (yi >= 0 && ysj >= 0) {
    w.y[yi] -= 1;
    w.ys[ysj] -= 1;
    if (yi == ysj) {
      w.x[yi] += 2;
      reduce(std::move(w), coef, out, cfg);
    } else {
      GrothWord a = w, b = w;
      a.xij.emplace_back(yi, ysj);
      b.xij.emplace_back(ysj, yi);
      reduce(std::move(a), coef, out, cfg);
      reduce(std::move(b), coef, out, cfg);
    }
    return;
  }
  GrothMonomial m;
  m.xi = w.u;
  m.a.assign(p, 0);
  if (yi >= 0) {
    m.kind = GKind::UY;
    m.a = w.y;
  } else if (ysj >= 0) {
    m.kind = GKind::UYS;
    m.a = w.ys;
  } else {
    m.kind = GKind::U;
  }
  out.add(m, coef);
}

}  // namespace

GrothElement normal_form(const GrothWord& w, const OrbitConfig& cfg) {
  GrothElement out;
  reduce(w, 1, out, cfg);
  return out;
}

GrothElement gen_u(const OrbitConfig& cfg, const Cyclo& xi) {
  if (xi.is_zero()) throw validation_error("SingularF", "u needs a nonzero scalar");
  GrothMonomial m;
  m.kind = GKind::U;
  m.a.assign(cfg.p, 0);
  m.xi = lift(xi, cfg);
  return single(m);
}

GrothElement gen_x(const OrbitConfig& cfg, int i) {
  GrothMonomial m;
  m.kind = GKind::XPOW;
  m.i = md(cfg.p, i);
  m.a.assign(cfg.p, 0);
  m.a[m.i] = 1;
  return single(m);
}

GrothElement gen_xij(const OrbitConfig& cfg, int i, int j) {
  i = md(cfg.p, i);
  j = md(cfg.p, j);
  if (i == j) throw validation_error("InvalidBreakIndex", "x[i,j] needs i != j");
  GrothMonomial m;
  m.kind = GKind::XIJ;
  m.i = i;
  m.j = j;
  m.a.assign(cfg.p, 0);
  return single(m);
}

GrothElement gen_y(const OrbitConfig& cfg, int i) {
  GrothMonomial m;
  m.kind = GKind::UY;
  m.xi = cfg.one();
  m.a.assign(cfg.p, 0);
  m.a[md(cfg.p, i)] = 1;
  return single(m);
}

GrothElement gen_ys(const OrbitConfig& cfg, int i) {
  GrothElement e = gen_y(cfg, i);
  GrothMonomial m = e.terms.begin()->first;
  m.kind = GKind::UYS;
  return single(m);
}

GrothElement groth_mul_rewrite(const GrothElement& a, const GrothElement& b, const OrbitConfig& cfg) {
  GrothElement out;
  for (const auto& [m1, c1] : a.terms)
    for (const auto& [m2, c2] : b.terms) reduce(to_word(m1, cfg) * to_word(m2, cfg), c1 * c2, out, cfg);
  return out;
}

// ---------------------------------------------------------------- module route

namespace {

std::string one_word(int p) { return std::string(static_cast<std::size_t>(p), '1'); }

// word with `letter` at every position k where a[k] > 0; position 0 is the last letter
std::string break_word(const std::vector<int>& a, char letter) {
  const int p = static_cast<int>(a.size());
  std::string w = one_word(p);
  for (int k = 0; k < p; ++k)
    if (a[k] > 0) w[md(p, k - 1)] = letter;
  return w;
}

}  // namespace

Cyclo twist_nu(const OrbitConfig& cfg, const std::vector<int>& a, char letter) {
  static std::mutex mu;
  static std::map<std::string, Cyclo> cache;
  std::string key = std::to_string(cfg.p) + "/" + std::to_string(cfg.N) + "/" + letter + "/";
  for (int e : a) key += std::to_string(e) + ",";
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const int p = cfg.p;
  ExplicitModule acc = realize(Module::cycle(TParam::one(p), one_word(p), cfg.one()), cfg);
  for (int k = 0; k < p; ++k) {
    if (a[k] == 0) continue;
    std::vector<int> e(p, 0);
    e[k] = 1;
    ExplicitModule g = realize(Module::cycle(TParam::single(p, k), break_word(e, letter), cfg.one()), cfg);
    for (int c = 0; c < a[k]; ++c) acc = kronecker_tensor(acc, g);
  }
  Decomposition d = oracle_decompose(acc);
  if (d.summands.size() != 1 || !d.summands[0].m.is_cycle() || d.summands[0].m.F.blocks.size() != 1)
    throw internal_error("product of y generators is not a single cycle");
  Cyclo nu = d.summands[0].m.F.blocks[0].eigenvalue;
  std::lock_guard<std::mutex> lk(mu);
  cache.emplace(key, nu);
  return nu;
}

Module monomial_to_module(const GrothMonomial& m, const OrbitConfig& cfg) {
  const int p = cfg.p;
  switch (m.kind) {
    case GKind::XIJ: {
      TParam t(m.multidegree());
      return Module::path(t, m.i, std::string(static_cast<std::size_t>(md(p, m.j - m.i - 1)), '1'));
    }
    case GKind::XPOW:
      return Module::path(TParam(m.a), m.i, one_word(p - 1));
    case GKind::U:
      return Module::cycle(TParam::one(p), one_word(p), lift(m.xi, cfg));
    case GKind::UY:
    case GKind::UYS: {
      char letter = m.kind == GKind::UY ? 'x' : 'y';
      return Module::cycle(TParam(m.a), break_word(m.a, letter), lift(m.xi, cfg) * twist_nu(cfg, m.a, letter));
    }
  }
  throw internal_error("bad monomial kind");
}

GrothMonomial module_to_monomial(const Module& s, const OrbitConfig& cfg) {
  const int p = cfg.p;
  if (!is_simple(s)) throw math_error("NotSimple", s.str() + " is not simple");
  GrothMonomial m;
  m.a = s.t.e;
  if (s.is_path()) {
    const int j = md(p, s.i + static_cast<long>(s.w.size()) + 1);
    m.i = s.i;
    if (j == s.i) {
      m.kind = GKind::XPOW;
      return m;
    }
    m.kind = GKind::XIJ;
    m.j = j;
    m.a[s.i] -= 1;
    m.a[j] -= 1;
    return m;
  }
  const Cyclo xi = lift(s.F.blocks[0].eigenvalue, cfg);
  const bool hx = s.w.find('x') != std::string::npos, hy = s.w.find('y') != std::string::npos;
  if (!hx && !hy) {
    m.kind = GKind::U;
    m.xi = xi;
    return m;
  }
  char letter = hx ? 'x' : 'y';
  m.kind = hx ? GKind::UY : GKind::UYS;
  m.xi = xi / twist_nu(cfg, m.a, letter);
  return m;
}

GrothElement class_of(const Decomposition& d, const OrbitConfig& cfg) {
  GrothElement out;
  for (const Module& f : composition_factors(d, cfg)) out.add(module_to_monomial(f, cfg), 1);
  return out;
}

GrothElement groth_mul_modules(const GrothElement& a, const GrothElement& b, const OrbitConfig& cfg) {
  GrothElement out;
  TensorOptions opt;
  opt.parallel = false;
  for (const auto& [m1, c1] : a.terms)
    for (const auto& [m2, c2] : b.terms) {
      TensorResult r = tensor(monomial_to_module(m1, cfg), monomial_to_module(m2, cfg), cfg, opt);
      out.add(class_of(r.decomposition, cfg), c1 * c2);
    }
  return out;
}

// ---------------------------------------------------------------- Hilbert series

long basis_dimension(int p, const std::vector<int>& d) {
  std::vector<int> supp;
  for (int k = 0; k < p; ++k)
    if (d[k] > 0) supp.push_back(k);
  if (supp.empty()) return 1;  // u
  long n = 2;                  // y-monomial and ys-monomial
  if (supp.size() == 1) return n + 1;
  for (int i : supp)
    for (int j : supp) {
      if (i == j) continue;
      bool ok = true;
      for (int k : supp)
        if (cyc_between(p, i, k, j)) ok = false;
      if (ok) ++n;
    }
  return n;
}

long hilbert_enumerated(int p, int deg) {
  long total = 0;
  std::vector<int> d(p, 0);
  // all compositions of deg into p parts
  std::function<void(int, int)> rec = [&](int k, int left) {
    if (k == p - 1) {
      d[k] = left;
      total += basis_dimension(p, d);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      d[k] = v;
      rec(k + 1, left - v);
    }
  };
  rec(0, deg);
  return total;
}

namespace {
long binom(long n, long k) {
  if (k < 0 || n < k) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r.get_si();
}
}  // namespace

long hilbert_closed_form(int p, int deg) {
  // coefficient of T^deg in -1 + (2 + pT) / (1 - T)^p
  long c = 2 * binom(deg + p - 1, p - 1) + (deg >= 1 ? p * binom(deg - 1 + p - 1, p - 1) : 0);
  return deg == 0 ? c - 1 : c;
}

// ---------------------------------------------------------------- sampling and certification

GrothMonomial random_monomial(const OrbitConfig& cfg, std::mt19937_64& rng, const std::vector<Cyclo>& xis, int maxdeg) {
  const int p = cfg.p;
  auto uni = [&](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };
  GrothMonomial m;
  m.a.assign(p, 0);
  int kind = uni(p >= 2 ? 5 : 4);
  if (kind == 4) kind = 5;  // XIJ slot
  auto spread = [&](int deg, std::vector<int>& a) {
    for (int c = 0; c < deg; ++c) a[uni(p)] += 1;
  };
  switch (kind) {
    case 0:
      m.kind = GKind::XPOW;
      m.i = uni(p);
      m.a[m.i] = 1 + uni(maxdeg);
      return m;
    case 1:
      m.kind = GKind::U;
      m.xi = lift(xis[uni(static_cast<int>(xis.size()))], cfg);
      return m;
    case 2:
    case 3:
      m.kind = kind == 2 ? GKind::UY : GKind::UYS;
      m.xi = lift(xis[uni(static_cast<int>(xis.size()))], cfg);
      spread(1 + uni(maxdeg), m.a);
      return m;
    default: {
      m.kind = GKind::XIJ;
      m.i = uni(p);
      m.j = md(p, m.i + 1 + uni(p - 1));
      int extra = uni(std::max(1, maxdeg - 1));
      for (int c = 0; c < extra; ++c) {
        int k = uni(p);
        if (!cyc_between(p, m.i, k, m.j)) m.a[k] += 1;
      }
      return m;
    }
  }
}

namespace {

using Route = GrothElement (*)(const GrothElement&, const GrothElement&, const OrbitConfig&);

GrothElement product(const std::vector<GrothElement>& fs, const OrbitConfig& cfg, Route mul) {
  GrothElement acc = fs[0];
  for (std::size_t k = 1; k < fs.size(); ++k) acc = mul(acc, fs[k], cfg);
  return acc;
}

struct Certifier {
  const OrbitConfig& cfg;
  std::vector<RelationInstance> out;

  // lhs is one product; rhs is a sum of products
  void check(const std::string& rel, const std::string& text, const std::vector<GrothElement>& lhs,
             const std::vector<std::vector<GrothElement>>& rhs) {
    RelationInstance ri;
    ri.relation = rel;
    ri.text = text;
    GrothElement lm = product(lhs, cfg, groth_mul_modules);
    GrothElement r;
    for (const auto& term : rhs) r.add(product(term, cfg, groth_mul_modules));
    ri.modules_hold = lm == r;
    ri.routes_agree = product(lhs, cfg, groth_mul_rewrite) == lm;
    out.push_back(std::move(ri));
  }
};

std::string gx(int i) { return "x[" + std::to_string(i) + "]"; }
std::string gxij(int i, int j) { return "x[" + std::to_string(i) + "," + std::to_string(j) + "]"; }
std::string gy(int i) { return "y[" + std::to_string(i) + "]"; }
std::string gys(int i) { return "ys[" + std::to_string(i) + "]"; }

}  // namespace

std::vector<RelationInstance> certify_relations(const OrbitConfig& cfg, const std::vector<Cyclo>& xis) {
  const int p = cfg.p;
  Certifier c{cfg, {}};
  auto X = [&](int i) { return gen_x(cfg, i); };
  auto XIJ = [&](int i, int j) { return gen_xij(cfg, i, j); };
  auto Y = [&](int i) { return gen_y(cfg, i); };
  auto YS = [&](int i) { return gen_ys(cfg, i); };
  auto U = [&](const Cyclo& z) { return gen_u(cfg, z); };
  auto us = [&](const Cyclo& z) { return "u[" + z.str() + "]"; };
  const GrothElement one = U(cfg.one());

  // the unit
  std::vector<std::pair<std::string, GrothElement>> gens;
  for (const auto& z : xis) gens.emplace_back(us(z), U(z));
  for (int i = 0; i < p; ++i) {
    gens.emplace_back(gx(i), X(i));
    gens.emplace_back(gy(i), Y(i));
    gens.emplace_back(gys(i), YS(i));
    for (int j = 0; j < p; ++j)
      if (i != j) gens.emplace_back(gxij(i, j), XIJ(i, j));
  }
  for (const auto& [name, g] : gens) c.check("unit", "u[1]*" + name + " = " + name, {one, g}, {{g}});
  // scalar generators multiply
  for (const auto& a : xis)
    for (const auto& b : xis) c.check("u-u", us(a) + "*" + us(b) + " = " + us(a * b), {U(a), U(b)}, {{U(a * b)}});
  // scalar generators fix the x classes
  for (const auto& a : xis)
    for (int i = 0; i < p; ++i) {
      c.check("u-x", us(a) + "*" + gx(i) + " = " + gx(i), {U(a), X(i)}, {{X(i)}});
      for (int j = 0; j < p; ++j)
        if (i != j) c.check("u-xij", us(a) + "*" + gxij(i, j) + " = " + gxij(i, j), {U(a), XIJ(i, j)}, {{XIJ(i, j)}});
    }
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) {
      if (i == j) {
        std::string rhs = " = " + gx(i) + "^2";
        c.check("same-index", gy(i) + "*" + gys(i) + rhs, {Y(i), YS(i)}, {{X(i), X(i)}});
        c.check("same-index", gx(i) + "*" + gy(i) + rhs, {X(i), Y(i)}, {{X(i), X(i)}});
        c.check("same-index", gx(i) + "*" + gys(i) + rhs, {X(i), YS(i)}, {{X(i), X(i)}});
        continue;
      }
      std::vector<std::vector<GrothElement>> rhs = {{XIJ(i, j)}, {XIJ(j, i)}};
      std::string rt = " = " + gxij(i, j) + " + " + gxij(j, i);
      c.check("distinct-index", gy(i) + "*" + gys(j) + rt, {Y(i), YS(j)}, rhs);
      c.check("distinct-index", gx(i) + "*" + gx(j) + rt, {X(i), X(j)}, rhs);
      c.check("distinct-index", gx(i) + "*" + gy(j) + rt, {X(i), Y(j)}, rhs);
      c.check("distinct-index", gx(i) + "*" + gys(j) + rt, {X(i), YS(j)}, rhs);
    }
  // x_ij against x_k with k between i and j
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j)
      for (int k = 0; k < p; ++k) {
        if (i == j || !cyc_between(p, i, k, j)) continue;
        c.check("xij-x",
                gxij(i, j) + "*" + gx(k) + " = " + gxij(i, k) + "*" + gx(j) + " + " + gxij(k, j) + "*" + gx(i),
                {XIJ(i, j), X(k)}, {{XIJ(i, k), X(j)}, {XIJ(k, j), X(i)}});
      }
  // pairs of x_ij, by the cyclic order of the four indices
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j)
      for (int k = 0; k < p; ++k)
        for (int l = 0; l < p; ++l) {
          if (i == j || k == l) continue;
          const std::string lhs = gxij(i, j) + "*" + gxij(k, l) + " = ";
          if (cyc_chain(p, {i, j, k, l, i}, {true, false, true, false}, true))
            c.check("xij-xij-zero", lhs + "0", {XIJ(i, j), XIJ(k, l)}, {});
          if (cyc_chain(p, {i, k, j, l, i}, {false, true, false, false}, true))
            c.check("xij-xij-overlap", lhs + gxij(k, j) + "*" + gx(i) + "*" + gx(l), {XIJ(i, j), XIJ(k, l)},
                    {{XIJ(k, j), X(i), X(l)}});
          if (cyc_chain(p, {i, k, l, j, i}, {false, true, false, false}, true))
            c.check("xij-xij-nested", lhs + gxij(k, l) + "*" + gx(i) + "*" + gx(j), {XIJ(i, j), XIJ(k, l)},
                    {{XIJ(k, l), X(i), X(j)}});
          if (cyc_chain(p, {i, l, k, j, i}, {true, true, true, false}, true))
            c.check("xij-xij-cross",
                    lhs + gxij(i, l) + "*" + gx(k) + "*" + gx(j) + " + " + gxij(k, j) + "*" + gx(i) + "*" + gx(l),
                    {XIJ(i, j), XIJ(k, l)}, {{XIJ(i, l), X(k), X(j)}, {XIJ(k, j), X(i), X(l)}});
        }
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j)
      for (int k = 0; k < p; ++k) {
        if (i == j) continue;
        std::string rt = " = " + gxij(i, j) + "*" + gx(k);
        c.check("xij-y", gxij(i, j) + "*" + gy(k) + rt, {XIJ(i, j), Y(k)}, {{XIJ(i, j), X(k)}});
        c.check("xij-y", gxij(i, j) + "*" + gys(k) + rt, {XIJ(i, j), YS(k)}, {{XIJ(i, j), X(k)}});
      }
  return c.out;
}

}  // namespace gwa
