#include "gwa/split.hpp"

#include <algorithm>
#include <set>

#include "gwa/errors.hpp"
#include "gwa/tensor.hpp"

namespace gwa {

namespace {

Cyclo lift(const Cyclo& c, const OrbitConfig& cfg) {
  if (c.is_rational() && c.conductor() != cfg.N) return Cyclo(cfg.N, c.coeffs()[0]);
  return c;
}

std::string ones(int n) { return std::string(static_cast<std::size_t>(n), '1'); }

std::string pow_str(const std::string& g, int a) { return a == 1 ? g : g + "^" + std::to_string(a); }

JordanType block(const Cyclo& xi, int a) { return JordanType({JordanBlock{xi, a}}); }

TParam break_at_zero(int p, int n) {
  TParam t = TParam::one(p);
  t.e[0] = n;
  return t;
}

}  // namespace

// ---------------------------------------------------------------- trivial monoid

std::string TrivialGenMonomial::str() const {
  std::string s = "u[" + xi.str() + "]";
  if (k > 0) s += "*" + pow_str("u[1,2]", k);
  return s;
}

TrivialElement trivial_mul(const TrivialMonomial& a, const TrivialMonomial& b) {
  TrivialElement out;
  const Cyclo xi = a.xi * b.xi;
  for (int k = 1; k <= std::min(a.a, b.a); ++k) out.add(TrivialMonomial{xi, a.a + b.a - (2 * k - 1)}, 1);
  return out;
}

TrivialElement trivial_mul(const TrivialElement& a, const TrivialElement& b) {
  TrivialElement out;
  for (const auto& [k1, v1] : a.terms)
    for (const auto& [k2, v2] : b.terms) out.add(trivial_mul(v1.first, v2.first), v1.second * v2.second);
  return out;
}

TrivialElement trivial_mul_modules(const TrivialElement& a, const TrivialElement& b, const OrbitConfig& cfg) {
  const int p = cfg.p;
  TrivialElement out;
  TensorOptions opt;
  opt.parallel = false;
  for (const auto& [k1, v1] : a.terms)
    for (const auto& [k2, v2] : b.terms) {
      Module m1 = Module::cycle(TParam::one(p), ones(p), block(lift(v1.first.xi, cfg), v1.first.a));
      Module m2 = Module::cycle(TParam::one(p), ones(p), block(lift(v2.first.xi, cfg), v2.first.a));
      for (const auto& s : tensor(m1, m2, cfg, opt).decomposition.summands) {
        const auto& bl = s.m.F.blocks;
        if (bl.size() != 1 || s.m.r() != 1) throw internal_error("breakless product did not split into blocks");
        out.add(TrivialMonomial{bl[0].eigenvalue, bl[0].size}, v1.second * v2.second * s.mult);
      }
    }
  return out;
}

std::vector<mpq_class> chebyshev_in_u12(int a) {
  if (a < 1) throw validation_error("InvalidJordanSize", "u(xi, a) needs a >= 1");
  std::vector<mpq_class> prev = {1}, cur = {0, 1};  // a = 1, a = 2
  if (a == 1) return prev;
  for (int k = 3; k <= a; ++k) {
    std::vector<mpq_class> nxt(cur.size() + 1, 0);
    for (std::size_t i = 0; i < cur.size(); ++i) nxt[i + 1] += cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) nxt[i] -= prev[i];
    prev = std::move(cur);
    cur = std::move(nxt);
  }
  return cur;
}

TrivialGenElement trivial_to_generators(const TrivialElement& e) {
  TrivialGenElement out;
  for (const auto& [k, v] : e.terms) {
    auto c = chebyshev_in_u12(v.first.a);
    for (std::size_t d = 0; d < c.size(); ++d) out.add(TrivialGenMonomial{v.first.xi, static_cast<int>(d)}, c[d] * v.second);
  }
  return out;
}

TrivialElement trivial_from_generators(const TrivialGenElement& e) {
  TrivialElement out;
  for (const auto& [k, v] : e.terms) {
    TrivialElement acc;
    acc.add(TrivialMonomial{v.first.xi, 1}, 1);
    TrivialElement s;
    s.add(TrivialMonomial{Cyclo(v.first.xi.conductor(), mpq_class(1)), 2}, 1);
    for (int d = 0; d < v.first.k; ++d) acc = trivial_mul(acc, s);
    out.add(acc, v.second);
  }
  return out;
}

// ---------------------------------------------------------------- ideal and quotient

bool ideal_membership(const Module& m) { return m.is_path(); }

std::string QuotientMonomial::key() const {
  return std::string(has_y ? "y" : "u") + "|" + inv.str() + "|" + std::to_string(a) + "|" + w + "|" + std::to_string(n);
}

std::string QuotientMonomial::str() const {
  // with a y present, ur[c] names the u-part by its r-th power c
  std::string s = has_y ? (inv.is_one() ? "" : "ur[" + inv.str() + "]") : "u[" + inv.str() + "]";
  std::vector<std::string> parts;
  if (!s.empty()) parts.push_back(s);
  if (a > 0) parts.push_back(pow_str("u[1,2]", a));
  if (has_y) parts.push_back(pow_str("yw[" + w + "]", n));
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "*") + p;
  return out;
}

QuotientMonomial quotient_u(const OrbitConfig& cfg, const Cyclo& xi) {
  if (xi.is_zero()) throw validation_error("SingularF", "u needs a nonzero scalar");
  QuotientMonomial m;
  m.inv = lift(xi, cfg);
  return m;
}

QuotientMonomial quotient_u12(const OrbitConfig& cfg) {
  QuotientMonomial m;
  m.inv = cfg.one();
  m.a = 1;
  return m;
}

QuotientMonomial quotient_y(const OrbitConfig& cfg, const std::string& w) {
  const int p = cfg.p;
  TParam t = break_at_zero(p, 1);
  if (w.empty() || w.size() % p != 0 || !word_valid(t, w, 1) || w.find('0') != std::string::npos)
    throw validation_error("InvalidWord", "yw needs a zero-free p-word for the break at 0");
  if (word_is_periodic(w, p)) throw validation_error("InvalidWord", "yw needs a non-periodic word");
  QuotientMonomial m;
  m.has_y = true;
  m.inv = cfg.one();
  m.w = canonical_shift(w, p).first;
  m.n = 1;
  return m;
}

QuotientElement quotient_mul(const QuotientMonomial& a, const QuotientMonomial& b, const OrbitConfig& cfg) {
  QuotientElement out;
  QuotientMonomial m;
  m.a = a.a + b.a;
  if (!a.has_y && !b.has_y) {
    m.inv = a.inv * b.inv;
  } else if (a.has_y && b.has_y) {
    if (a.w != b.w) return out;  // y classes with different words multiply to zero
    m.has_y = true;
    m.w = a.w;
    m.n = a.n + b.n;
    m.inv = a.inv * b.inv;
  } else {
    const QuotientMonomial& y = a.has_y ? a : b;
    const QuotientMonomial& u = a.has_y ? b : a;
    m.has_y = true;
    m.w = y.w;
    m.n = y.n;
    m.inv = y.inv * u.inv.pow(y.r(cfg.p));
  }
  out.add(m, 1);
  return out;
}

QuotientElement quotient_mul(const QuotientElement& a, const QuotientElement& b, const OrbitConfig& cfg) {
  QuotientElement out;
  for (const auto& [k1, v1] : a.terms)
    for (const auto& [k2, v2] : b.terms) out.add(quotient_mul(v1.first, v2.first, cfg), v1.second * v2.second);
  return out;
}

LinComb<Module> quotient_to_classes(const QuotientMonomial& m, const OrbitConfig& cfg) {
  const int p = cfg.p;
  // u(1,2)^a in the u(1,b) basis
  TrivialElement s;
  s.add(TrivialMonomial{cfg.one(), 1}, 1);
  TrivialElement u12;
  u12.add(TrivialMonomial{cfg.one(), 2}, 1);
  for (int k = 0; k < m.a; ++k) s = trivial_mul(s, u12);
  LinComb<Module> out;
  for (const auto& [k, v] : s.terms) {
    const int b = v.first.a;
    Module mod = m.has_y ? Module::cycle(break_at_zero(p, m.n), m.w, block(m.inv, b))
                         : Module::cycle(TParam::one(p), ones(p), block(m.inv, b));
    out.add(canonicalize(mod), v.second);
  }
  return out;
}

QuotientElement quotient_from_classes(const LinComb<Module>& c, const OrbitConfig& cfg) {
  const int p = cfg.p;
  QuotientElement out;
  for (const auto& [k, v] : c.terms) {
    const Module& m = v.first;
    if (!m.is_cycle() || m.F.blocks.size() != 1) throw internal_error("expected an indecomposable cycle class");
    for (int j = 1; j < p; ++j)
      if (m.t.e[j] != 0) throw validation_error("NotInMonoid", "class has a break away from 0");
    const int n = m.t.e[0];
    auto cheb = chebyshev_in_u12(m.F.blocks[0].size);
    for (std::size_t d = 0; d < cheb.size(); ++d) {
      QuotientMonomial q;
      q.inv = lift(m.F.blocks[0].eigenvalue, cfg);
      q.a = static_cast<int>(d);
      if (n > 0) {
        q.has_y = true;
        q.w = canonical_shift(m.w, p).first;
        q.n = n;
      }
      out.add(q, cheb[d] * v.second);
    }
  }
  return out;
}

QuotientElement quotient_mul_modules(const QuotientElement& a, const QuotientElement& b, const OrbitConfig& cfg) {
  TensorOptions opt;
  opt.parallel = false;
  LinComb<Module> acc;
  for (const auto& [k1, v1] : a.terms)
    for (const auto& [k2, v2] : b.terms) {
      auto c1 = quotient_to_classes(v1.first, cfg), c2 = quotient_to_classes(v2.first, cfg);
      for (const auto& [ka, ma] : c1.terms)
        for (const auto& [kb, mb] : c2.terms) {
          auto d = tensor(ma.first, mb.first, cfg, opt).decomposition;
          for (const auto& s : d.summands) {
            if (ideal_membership(s.m)) continue;
            acc.add(s.m, v1.second * v2.second * ma.second * mb.second * s.mult);
          }
        }
    }
  return quotient_from_classes(acc, cfg);
}

Cyclo quotient_u_root(const QuotientMonomial& m, const OrbitConfig& cfg) {
  const int r = m.r(cfg.p);
  if (r == 1) return m.inv;
  Poly f = Poly::monomial(cfg.one(), r) - Poly::constant(m.inv);
  try {
    auto roots = split_roots(f, cfg.N);
    return *std::min_element(roots.begin(), roots.end());
  } catch (const GwaError& e) {
    if (e.name() != "NonSplitSpectrum") throw;
    throw math_error("RootExtractionNeeded", "an " + std::to_string(r) + "-th root of " + m.inv.str() +
                                                 " is not in Q(zeta_" + std::to_string(cfg.N) +
                                                 "); try a conductor divisible by " + std::to_string(cfg.N * r));
  }
}

// ---------------------------------------------------------------- semisimple section

std::string SemisimpleMonomial::key() const {
  return std::to_string(static_cast<int>(kind)) + "|" + std::to_string(a) + "|" + (kind == SKind::X ? "" : xi.str());
}

std::string SemisimpleMonomial::str() const {
  switch (kind) {
    case SKind::U:
      return "u[" + xi.str() + "]";
    case SKind::X:
      return "xa[" + std::to_string(a) + "]";
    case SKind::Y:
      return "ya[" + std::to_string(a) + "," + xi.str() + "]";
    case SKind::YS:
      return "ysa[" + std::to_string(a) + "," + xi.str() + "]";
  }
  return "";
}

SemisimpleElement semisimple_mul(const SemisimpleMonomial& a, const SemisimpleMonomial& b, const OrbitConfig& cfg) {
  SemisimpleElement out;
  SemisimpleMonomial m;
  m.xi = cfg.one();
  const SemisimpleMonomial& lo = static_cast<int>(a.kind) <= static_cast<int>(b.kind) ? a : b;
  const SemisimpleMonomial& hi = &lo == &a ? b : a;
  if (lo.kind == SKind::U) {
    m = hi;
    if (hi.kind != SKind::X) m.xi = lo.xi * hi.xi;
  } else if (lo.kind == SKind::X) {
    m.kind = SKind::X;
    m.a = lo.a + hi.a;
  } else if (lo.kind == hi.kind) {
    m.kind = lo.kind;
    m.a = lo.a + hi.a;
    m.xi = lo.xi * hi.xi;
  } else {  // y with y*
    m.kind = SKind::X;
    m.a = lo.a + hi.a;
  }
  out.add(m, 1);
  return out;
}

SemisimpleElement semisimple_mul(const SemisimpleElement& a, const SemisimpleElement& b, const OrbitConfig& cfg) {
  SemisimpleElement out;
  for (const auto& [k1, v1] : a.terms)
    for (const auto& [k2, v2] : b.terms) out.add(semisimple_mul(v1.first, v2.first, cfg), v1.second * v2.second);
  return out;
}

Module semisimple_to_module(const SemisimpleMonomial& m, const OrbitConfig& cfg) {
  const int p = cfg.p;
  switch (m.kind) {
    case SKind::U:
      return Module::cycle(TParam::one(p), ones(p), lift(m.xi, cfg));
    case SKind::X:
      return Module::path(break_at_zero(p, m.a), 0, ones(p - 1));
    case SKind::Y:
    case SKind::YS:
      return Module::cycle(break_at_zero(p, m.a), ones(p - 1) + (m.kind == SKind::Y ? "x" : "y"), lift(m.xi, cfg));
  }
  throw internal_error("bad semisimple kind");
}

SemisimpleMonomial module_to_semisimple(const Module& s, const OrbitConfig& cfg) {
  if (!is_simple(s)) throw math_error("NotSimple", s.str() + " is not simple");
  for (int j = 1; j < cfg.p; ++j)
    if (s.t.e[j] != 0) throw validation_error("NotInMonoid", s.str() + " has a break away from 0");
  SemisimpleMonomial m;
  m.a = s.t.e[0];
  m.xi = cfg.one();
  if (s.is_path()) {
    m.kind = SKind::X;
    return m;
  }
  m.xi = lift(s.F.blocks[0].eigenvalue, cfg);
  if (m.a == 0) m.kind = SKind::U;
  else m.kind = s.w.find('x') != std::string::npos ? SKind::Y : SKind::YS;
  return m;
}

SemisimpleElement section_alpha(const Decomposition& d, const OrbitConfig& cfg) {
  SemisimpleElement out;
  for (const Module& f : composition_factors(d, cfg)) out.add(module_to_semisimple(f, cfg), 1);
  return out;
}

SemisimpleElement semisimple_mul_modules(const SemisimpleElement& a, const SemisimpleElement& b, const OrbitConfig& cfg) {
  TensorOptions opt;
  opt.parallel = false;
  SemisimpleElement out;
  for (const auto& [k1, v1] : a.terms)
    for (const auto& [k2, v2] : b.terms) {
      auto d = tensor(semisimple_to_module(v1.first, cfg), semisimple_to_module(v2.first, cfg), cfg, opt).decomposition;
      out.add(section_alpha(d, cfg), v1.second * v2.second);
    }
  return out;
}

// ---------------------------------------------------------------- sampling

std::vector<std::string> nonperiodic_words(int p, int r) {
  std::set<std::string> seen;
  for (int mask = 0; mask < (1 << r); ++mask) {
    std::string w;
    for (int k = 0; k < r; ++k) w += ones(p - 1) + ((mask >> k) & 1 ? 'y' : 'x');
    if (word_is_periodic(w, p)) continue;
    seen.insert(canonical_shift(w, p).first);
  }
  return {seen.begin(), seen.end()};
}

QuotientMonomial random_quotient_monomial(const OrbitConfig& cfg, std::mt19937_64& rng, const std::vector<Cyclo>& xis) {
  auto uni = [&](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };
  QuotientMonomial m;
  m.inv = lift(xis[uni(static_cast<int>(xis.size()))], cfg);
  m.a = uni(3);
  if (uni(3) == 0) return m;
  const int r = 1 + uni(3);
  auto ws = nonperiodic_words(cfg.p, r);
  m.has_y = true;
  m.w = ws[uni(static_cast<int>(ws.size()))];
  m.n = 1 + uni(2);
  return m;
}

SemisimpleMonomial random_semisimple_monomial(const OrbitConfig& cfg, std::mt19937_64& rng, const std::vector<Cyclo>& xis) {
  auto uni = [&](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };
  SemisimpleMonomial m;
  m.kind = static_cast<SKind>(uni(4));
  m.xi = m.kind == SKind::X ? cfg.one() : lift(xis[uni(static_cast<int>(xis.size()))], cfg);
  m.a = m.kind == SKind::U ? 0 : 1 + uni(3);
  return m;
}

}  // namespace gwa
