#include "gwa/modules.hpp"

#include <algorithm>
#include <map>

namespace gwa {

Module Module::path(TParam t, int i, std::string w) {
  Module m;
  m.kind = ModuleKind::Path;
  int p = t.p();
  m.i = ((i % p) + p) % p;
  m.t = std::move(t);
  m.w = std::move(w);
  return m;
}

Module Module::cycle(TParam t, std::string w, JordanType F) {
  Module m;
  m.kind = ModuleKind::Cycle;
  m.t = std::move(t);
  m.w = std::move(w);
  m.F = std::move(F);
  return m;
}

Module Module::cycle(TParam t, std::string w, const Cyclo& xi, int size) {
  return cycle(std::move(t), std::move(w), JordanType({{xi, size}}));
}

int Module::dim() const {
  if (is_path()) return static_cast<int>(w.size()) + 1;
  return static_cast<int>(w.size()) * F.dim();
}

std::string Module::key() const {
  if (is_path()) return "P|" + t.str() + "|" + std::to_string(i) + "|" + w;
  return "C|" + t.str() + "|" + canonical_shift(w, p()).first + "|" + F.str();
}

std::string Module::str() const {
  if (is_path()) return "V[t=" + t.str() + "; i=" + std::to_string(i) + "; w=\"" + w + "\"]";
  return "V[t=" + t.str() + "; w=\"" + w + "\"; F=" + F.str() + "]";
}

void Decomposition::add(const Module& m, int mult) {
  if (mult > 0) summands.push_back({m, mult});
}

void Decomposition::add(const Decomposition& d, int mult) {
  for (const auto& s : d.summands) add(s.m, s.mult * mult);
}

void Decomposition::normalize() {
  std::map<std::string, Summand> merged;
  for (auto& s : summands) {
    Module c = canonicalize(s.m);
    auto k = c.key();
    auto it = merged.find(k);
    if (it == merged.end())
      merged.emplace(k, Summand{c, s.mult});
    else
      it->second.mult += s.mult;
  }
  summands.clear();
  for (auto& [k, s] : merged) summands.push_back(s);
}

int Decomposition::total_dim() const {
  int d = 0;
  for (const auto& s : summands) d += s.m.dim() * s.mult;
  return d;
}

int Decomposition::count() const {
  int c = 0;
  for (const auto& s : summands) c += s.mult;
  return c;
}

bool Decomposition::operator==(const Decomposition& o) const {
  Decomposition a = *this, b = o;
  a.normalize();
  b.normalize();
  if (a.summands.size() != b.summands.size()) return false;
  for (std::size_t k = 0; k < a.summands.size(); ++k)
    if (a.summands[k].mult != b.summands[k].mult || a.summands[k].m.key() != b.summands[k].m.key()) return false;
  return true;
}

std::string Decomposition::str() const {
  if (summands.empty()) return "0";
  std::string out;
  for (const auto& s : summands) {
    if (!out.empty()) out += " + ";
    out += s.m.str();
    if (s.mult != 1) out += "^" + std::to_string(s.mult);
  }
  return out;
}

void validate(const Module& m, const OrbitConfig& cfg) {
  const int p = cfg.p;
  if (m.t.p() != p) throw validation_error("ContextMismatch", "t has " + std::to_string(m.t.p()) + " exponents, p=" + std::to_string(p));
  for (int e : m.t.e)
    if (e < 0) throw validation_error("InvalidTParam", "negative exponent");
  for (char c : m.w)
    if (!is_letter(c)) throw validation_error("InvalidWord", std::string("letter '") + c + "' is not in {0,1,x,y}");
  if (m.is_path()) {
    if (m.i < 0 || m.i >= p) throw validation_error("InvalidBreakIndex", "i out of range");
    if (!m.t.is_break(m.i)) throw validation_error("InvalidBreakIndex", "start " + std::to_string(m.i) + " is not a break");
    long end = m.i + static_cast<long>(m.w.size()) + 1;
    if (!m.t.is_break(end)) throw validation_error("InvalidBreakIndex", "end position " + std::to_string(cfg.mod(end)) + " is not a break");
    if (!word_valid(m.t, m.w, m.i + 1)) throw validation_error("InvalidWord", "letter 1 must occur exactly at non-breaks");
    return;
  }
  if (m.w.empty() || m.w.size() % p != 0) throw validation_error("InvalidWord", "cycle word length must be a positive multiple of p");
  if (!word_valid(m.t, m.w, 1)) throw validation_error("InvalidWord", "letter 1 must occur exactly at non-breaks");
  if (m.F.blocks.empty()) throw validation_error("SingularF", "empty eigen-data");
  for (const auto& b : m.F.blocks) {
    if (b.size < 1) throw validation_error("SingularF", "block size must be positive");
    if (b.eigenvalue.is_zero()) throw validation_error("SingularF", "zero eigenvalue");
    if (b.eigenvalue.conductor() != cfg.N && !b.eigenvalue.is_rational())
      throw validation_error("ContextMismatch", "eigenvalue conductor differs from the orbit's");
  }
}

std::vector<int> dimension_vector(const Module& m) {
  const int p = m.p();
  std::vector<int> d(p, 0);
  if (m.is_path()) {
    for (std::size_t k = 0; k <= m.w.size(); ++k) d[(m.i + 1 + k) % p] += 1;
  } else {
    for (int k = 0; k < p; ++k) d[k] = m.r() * m.F.dim();
  }
  return d;
}

Decomposition split_path_at_zeros(const Module& m) {
  Decomposition out;
  Module cur = m;
  while (true) {
    auto z = cur.w.find('0');
    if (z == std::string::npos) {
      out.add(cur);
      break;
    }
    out.add(Module::path(cur.t, cur.i, cur.w.substr(0, z)));
    long q = cur.i + 1 + static_cast<long>(z);
    cur = Module::path(cur.t, static_cast<int>(q % cur.p()), cur.w.substr(z + 1));
  }
  return out;
}

Module canonicalize(const Module& m) {
  if (m.is_path()) return m;
  Module c = m;
  c.w = canonical_shift(m.w, m.p()).first;
  return c;
}

Decomposition split_cycle(const Module& m, const OrbitConfig& cfg) {
  Decomposition out;
  const int p = m.p();
  auto z = m.w.find('0');
  if (z != std::string::npos) {
    // cut the circle open at the first zero
    long q = static_cast<long>(z) + 1;
    std::string w2 = m.w.substr(z + 1) + m.w.substr(0, z);
    Module pm = Module::path(m.t, static_cast<int>(q % p), w2);
    out.add(split_path_at_zeros(pm), m.F.dim());
    out.normalize();
    return out;
  }
  const int r = m.r();
  const int r0 = primitive_period(m.w, p);
  const int e = r / r0;
  const std::string base = m.w.substr(0, static_cast<std::size_t>(r0) * p);
  for (const auto& b : m.F.blocks) {
    if (e == 1) {
      out.add(Module::cycle(m.t, m.w, b.eigenvalue, b.size));
      continue;
    }
    // V(c^e, J_a(xi)) is the sum of V(c, J_a(rho)) over rho^e = xi
    std::vector<Cyclo> coeffs(e + 1, Cyclo(cfg.N));
    coeffs[0] = -b.eigenvalue;
    coeffs[e] = cfg.one();
    auto roots = split_roots(Poly(coeffs), cfg.N);
    if (static_cast<int>(roots.size()) != e) throw internal_error("x^e - xi has repeated roots");
    for (const auto& rho : roots) out.add(Module::cycle(m.t, base, rho, b.size));
  }
  out.normalize();
  return out;
}

Decomposition split_module(const Module& m, const OrbitConfig& cfg) {
  if (m.is_path()) {
    auto d = split_path_at_zeros(m);
    d.normalize();
    return d;
  }
  return split_cycle(m, cfg);
}

bool is_indecomposable(const Module& m) {
  if (m.has_zero()) return false;
  if (m.is_path()) return true;
  return m.F.blocks.size() == 1 && !word_is_periodic(m.w, m.p());
}

bool is_simple(const Module& m) {
  if (!is_indecomposable(m)) return false;
  if (m.is_path()) return m.w.find_first_not_of('1') == std::string::npos;
  if (m.F.blocks[0].size != 1) return false;
  bool hx = m.w.find('x') != std::string::npos, hy = m.w.find('y') != std::string::npos;
  if (hx && hy) return false;
  return m.r() == 1;
}

std::vector<Module> composition_factors(const Module& m, const OrbitConfig& cfg) {
  if (m.has_zero()) throw validation_error("ZeroLetterPresent", "split the module before taking composition factors");
  const int p = m.p();
  std::vector<Module> out;
  if (m.is_path()) {
    // vertices i+1 .. i+l+1; cut at directional edges
    long a = m.i + 1;
    const long last = m.i + 1 + static_cast<long>(m.w.size());
    for (long k = m.i + 1; k <= last; ++k) {
      bool cut = k == last || m.w[k - m.i - 1] != '1';
      if (cut) {
        out.push_back(Module::path(m.t, static_cast<int>((a - 1) % p), std::string(k - a, '1')));
        a = k + 1;
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  if (word_is_periodic(m.w, p) || m.F.blocks.size() > 1) {
    for (const auto& s : split_cycle(m, cfg).summands) {
      auto f = composition_factors(s.m, cfg);
      for (int c = 0; c < s.mult; ++c) out.insert(out.end(), f.begin(), f.end());
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  const bool hx = m.w.find('x') != std::string::npos, hy = m.w.find('y') != std::string::npos;
  const int d = m.F.dim();
  if (hx && hy) {
    const long n = static_cast<long>(m.w.size());
    // first directional edge, then walk once around the circle
    long first = static_cast<long>(m.w.find_first_of("xy")) + 1;
    long a = first + 1;
    for (long k = first + 1; k <= first + n; ++k) {
      char c = m.w[(k - 1) % n];
      if (c != '1') {
        Module s = Module::path(m.t, static_cast<int>((a - 1) % p), std::string(k - a, '1'));
        for (int c2 = 0; c2 < d; ++c2) out.push_back(s);
        a = k + 1;
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  for (const auto& b : m.F.blocks)
    for (int c = 0; c < b.size; ++c) out.push_back(Module::cycle(m.t, m.w, b.eigenvalue, 1));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Module> composition_factors(const Decomposition& d, const OrbitConfig& cfg) {
  std::vector<Module> out;
  for (const auto& s : d.summands) {
    auto f = composition_factors(s.m, cfg);
    for (int c = 0; c < s.mult; ++c) out.insert(out.end(), f.begin(), f.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_isomorphic(const Module& a, const Module& b) { return canonicalize(a).key() == canonicalize(b).key(); }

}  // namespace gwa
