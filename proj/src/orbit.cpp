#include "gwa/orbit.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

namespace gwa {

OrbitConfig::OrbitConfig(int p_, int N_) : p(p_), N(N_) {
  if (p < 1) throw validation_error("InvalidOrbit", "p must be positive");
  if (N < 1 || N % p != 0)
    throw validation_error("InvalidOrbit", "conductor " + std::to_string(N) + " is not a multiple of p=" + std::to_string(p));
}

Cyclo OrbitConfig::qpow(long k) const { return Cyclo::root(N, static_cast<long>(N / p) * mod(k)); }

TParam TParam::single(int p, int i, int a) {
  TParam t = one(p);
  t.e[((i % p) + p) % p] = a;
  return t;
}

bool TParam::is_break(long i) const {
  int P = p();
  return e[((i % P) + P) % P] > 0;
}

std::vector<int> TParam::breaks() const {
  std::vector<int> b;
  for (int i = 0; i < p(); ++i)
    if (e[i] > 0) b.push_back(i);
  return b;
}

TParam TParam::operator*(const TParam& o) const {
  if (p() != o.p()) throw validation_error("ContextMismatch", "t parameters for different orbit sizes");
  TParam r = *this;
  for (int i = 0; i < p(); ++i) r.e[i] += o.e[i];
  return r;
}

Cyclo TParam::at(const OrbitConfig& cfg, long k) const {
  Cyclo z = cfg.qpow(k);
  Cyclo r = cfg.one();
  for (int i = 0; i < p(); ++i)
    if (e[i] > 0) r *= (z - cfg.qpow(i)).pow(e[i]);
  return r;
}

std::string TParam::str() const {
  std::string out;
  for (int i = 0; i < p(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += ",";
    out += std::to_string(i) + ":" + std::to_string(e[i]);
  }
  return out;
}

TParam TParam::parse(const std::string& s, int p) {
  TParam t = one(p);
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < s.size() && s[pos] == ' ') ++pos;
  };
  auto num = [&]() -> long {
    skip();
    std::size_t st = pos;
    if (pos < s.size() && s[pos] == '-') ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (st == pos || (pos == st + 1 && s[st] == '-')) throw ParseError(st, "expected integer in t parameter");
    return std::stol(s.substr(st, pos - st));
  };
  skip();
  if (pos == s.size()) return t;
  while (true) {
    std::size_t at = pos;
    long i = num();
    skip();
    if (pos >= s.size() || s[pos] != ':') throw ParseError(pos, "expected ':' in t parameter");
    ++pos;
    long a = num();
    if (a < 0) throw ParseError(at, "negative exponent in t parameter");
    t.e[((i % p) + p) % p] += static_cast<int>(a);
    skip();
    if (pos == s.size()) break;
    if (s[pos] != ',') throw ParseError(pos, "expected ',' in t parameter");
    ++pos;
  }
  return t;
}

bool is_letter(char c) { return c == '0' || c == '1' || c == 'x' || c == 'y'; }

char letter_mul(char a, char b) {
  if (a == '0' || b == '0') return '0';
  if (a == '1') return b;
  if (b == '1') return a;
  return a == b ? a : '0';
}

std::string word_tensor(const std::string& w, const std::string& w2) {
  if (w.empty() || w2.empty()) return {};
  std::size_t L = std::lcm(w.size(), w2.size());
  std::string out(L, '0');
  for (std::size_t k = 0; k < L; ++k) out[k] = letter_mul(w[k % w.size()], w2[k % w2.size()]);
  return out;
}

std::string word_shift(const std::string& w, int p, long j) {
  if (w.empty()) return w;
  const long n = static_cast<long>(w.size());
  long s = ((j * p) % n + n) % n;
  return w.substr(s) + w.substr(0, s);
}

int primitive_period(const std::string& w, int p) {
  const int r = static_cast<int>(w.size()) / p;
  for (int r0 = 1; r0 < r; ++r0) {
    if (r % r0 != 0) continue;
    if (word_shift(w, p, r0) == w) return r0;
  }
  return r;
}

bool word_is_periodic(const std::string& w, int p) { return primitive_period(w, p) < static_cast<int>(w.size()) / p; }

std::pair<std::string, int> canonical_shift(const std::string& w, int p) {
  const int r = std::max<int>(1, static_cast<int>(w.size()) / p);
  std::string best = w;
  int bj = 0;
  for (int j = 1; j < r; ++j) {
    std::string s = word_shift(w, p, j);
    if (s < best) {
      best = s;
      bj = j;
    }
  }
  return {best, bj};
}

bool word_valid(const TParam& t, const std::string& w, long start) {
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (!is_letter(w[k])) return false;
    bool br = t.is_break(start + static_cast<long>(k));
    if ((w[k] == '1') == br) return false;
  }
  return true;
}

Cyclo scalar_twist_product(const OrbitConfig& cfg, const TParam& u, const std::string& w, const std::string& w2) {
  Cyclo r = cfg.one();
  if (w.empty() || w2.empty()) return r;
  std::size_t L = std::lcm(w.size(), w2.size());
  for (std::size_t j = 1; j <= L; ++j)
    if (w[(j - 1) % w.size()] == '1' && w2[(j - 1) % w2.size()] == 'x') r *= u.at(cfg, static_cast<long>(j));
  return r;
}

}  // namespace gwa
