#include "gwa/parse.hpp"

#include <cctype>
#include <functional>

#include "gwa/errors.hpp"

namespace gwa {

namespace {

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;
  std::size_t base = 0;  // added to reported offsets

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(base + pos, msg); }
  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip();
    return pos >= s.size();
  }
  char peek() {
    skip();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool eat(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  bool eat(const std::string& w) {
    skip();
    if (s.compare(pos, w.size(), w) != 0) return false;
    pos += w.size();
    return true;
  }
  long integer() {
    skip();
    std::size_t st = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits) {
      pos = st;
      fail("expected integer");
    }
    if (pos - digits > 9) {
      pos = st;
      fail("integer too large");
    }
    return std::stol(s.substr(st, pos - st));
  }
  mpz_class natural() {
    skip();
    std::size_t st = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == st) fail("expected number");
    return mpz_class(s.substr(st, pos - st));
  }
  // text up to the next top-level occurrence of one of `stops`
  std::string until(const std::string& stops) {
    std::size_t st = pos;
    int depth = 0;
    bool quoted = false;
    while (pos < s.size()) {
      char c = s[pos];
      if (c == '"') quoted = !quoted;
      if (!quoted) {
        if (depth == 0 && stops.find(c) != std::string::npos) break;
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
      }
      ++pos;
    }
    return s.substr(st, pos - st);
  }
};

Cyclo scalar_expr(Cursor& c, int N);

Cyclo scalar_atom(Cursor& c, int N) {
  char ch = c.peek();
  if (ch == '(') {
    ++c.pos;
    Cyclo v = scalar_expr(c, N);
    c.expect(')');
    return v;
  }
  if (ch == 'z') {
    ++c.pos;
    return Cyclo::root(N, 1);
  }
  if (std::isdigit(static_cast<unsigned char>(ch))) return Cyclo(N, mpq_class(c.natural()));
  c.fail("expected a rational, z, or '('");
}

Cyclo scalar_factor(Cursor& c, int N) {
  bool neg = false;
  while (c.eat('-')) neg = !neg;
  Cyclo v = scalar_atom(c, N);
  if (c.eat('^')) {
    std::size_t at = c.pos;
    long e = c.integer();
    if (e < 0 && v.is_zero()) {
      c.pos = at;
      c.fail("zero to a negative power");
    }
    v = v.pow(e);
  }
  return neg ? -v : v;
}

Cyclo scalar_term(Cursor& c, int N) {
  Cyclo v = scalar_factor(c, N);
  while (true) {
    if (c.eat('*')) {
      v *= scalar_factor(c, N);
    } else if (c.peek() == '/') {
      ++c.pos;
      std::size_t at = c.pos;
      Cyclo d = scalar_factor(c, N);
      if (d.is_zero()) {
        c.pos = at;
        c.fail("division by zero");
      }
      v /= d;
    } else {
      return v;
    }
  }
}

Cyclo scalar_expr(Cursor& c, int N) {
  Cyclo v = scalar_term(c, N);
  while (true) {
    if (c.eat('+')) v += scalar_term(c, N);
    else if (c.eat('-')) v -= scalar_term(c, N);
    else return v;
  }
}

Cyclo scalar_sub(const std::string& s, std::size_t base, int N) {
  Cursor c{s, 0, base};
  if (c.done()) c.fail("empty scalar");
  Cyclo v = scalar_expr(c, N);
  if (!c.done()) c.fail("unexpected character in scalar");
  return v;
}

std::string word_sub(const std::string& s, std::size_t base) {
  for (std::size_t k = 0; k < s.size(); ++k)
    if (!is_letter(s[k])) throw ParseError(base + k, std::string("letter '") + s[k] + "' is not one of 0, 1, x, y");
  return s;
}

JordanType jordan_from_json(const nlohmann::json& j, int N, std::size_t base) {
  if (!j.is_array()) throw ParseError(base, "F must be a list of [xi, size] pairs");
  std::vector<JordanBlock> bl;
  for (const auto& b : j) {
    if (!b.is_array() || b.size() != 2 || !b[1].is_number_integer())
      throw ParseError(base, "F entries are [xi, size]");
    Cyclo xi = b[0].is_string() ? scalar_sub(b[0].get<std::string>(), base, N)
               : b[0].is_number_integer() ? Cyclo(N, mpq_class(b[0].get<long>()))
                                          : throw ParseError(base, "eigenvalue must be a string or integer");
    int a = b[1].get<int>();
    if (a < 1) throw validation_error("InvalidJordan", "block sizes must be positive");
    bl.push_back({xi, a});
  }
  return JordanType(bl);
}

nlohmann::json json_sub(const std::string& s, std::size_t base) {
  try {
    return nlohmann::json::parse(s);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(base + (e.byte > 0 ? e.byte - 1 : 0), "malformed JSON");
  }
}

// cycle words are re-based to start at position 1
std::string rebase_cycle(const std::string& w, long start) {
  if (w.empty()) return w;
  long n = static_cast<long>(w.size());
  long m = (((1 - start) % n) + n) % n;
  return w.substr(m) + w.substr(0, m);
}

Module build_module(bool has_i, long i, bool has_F, const TParam& t, const std::string& w, bool has_start, long start,
                    JordanType F, const OrbitConfig& cfg) {
  Module m;
  if (has_i == has_F) throw validation_error("InvalidModule", "give exactly one of i (path) or F (cycle)");
  if (has_i) {
    if (has_start && start != i + 1)
      throw validation_error("InvalidModule", "path word starts at i+1=" + std::to_string(i + 1) + ", not " + std::to_string(start));
    m = Module::path(t, cfg.mod(i), w);
  } else {
    m = Module::cycle(t, has_start ? rebase_cycle(w, start) : w, std::move(F));
  }
  validate(m, cfg);
  return m;
}

}  // namespace

Cyclo parse_scalar(const std::string& s, int N) { return scalar_sub(s, 0, N); }

TParam parse_tparam(const std::string& s, int p) { return TParam::parse(s, p); }

std::string parse_word(const std::string& s) { return word_sub(s, 0); }

JordanType parse_jordan(const std::string& s, int N) { return jordan_from_json(json_sub(s, 0), N, 0); }

Module module_from_json(const nlohmann::json& j, const OrbitConfig& cfg) {
  try {
    TParam t = parse_tparam(j.at("t").get<std::string>(), cfg.p);
    const auto& jw = j.at("w");
    std::string w;
    bool has_start = false;
    long start = 0;
    if (jw.is_object()) {
      w = word_sub(jw.at("w").get<std::string>(), 0);
      if (jw.contains("start")) {
        has_start = true;
        start = jw.at("start").get<long>();
      }
    } else {
      w = word_sub(jw.get<std::string>(), 0);
    }
    bool has_i = j.contains("i");
    bool has_F = j.contains("F");
    if (j.contains("kind")) {
      std::string k = j.at("kind").get<std::string>();
      if (k != "path" && k != "cycle") throw ParseError(0, "kind must be path or cycle");
      if ((k == "path") != has_i) throw validation_error("InvalidModule", "kind does not match the given fields");
    }
    return build_module(has_i, has_i ? j.at("i").get<long>() : 0, has_F, t, w, has_start, start,
                        has_F ? jordan_from_json(j.at("F"), cfg.N, 0) : JordanType(), cfg);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("module JSON: ") + e.what());
  }
}

Module parse_module(const std::string& s, const OrbitConfig& cfg) {
  Cursor c{s};
  if (c.peek() == '{') return module_from_json(json_sub(s, 0), cfg);
  if (!c.eat('V')) c.fail("module literal starts with V[");
  c.expect('[');
  TParam t = TParam::one(cfg.p);
  bool has_t = false, has_i = false, has_w = false, has_F = false, has_start = false;
  long i = 0, start = 0;
  std::string w;
  JordanType F;
  while (true) {
    c.skip();
    std::size_t key_at = c.pos;
    std::string key = c.until("=;]");
    while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) key.pop_back();
    c.expect('=');
    c.skip();
    std::size_t val_at = c.pos;
    if (key == "t") {
      std::string v = c.until(";]");
      try {
        t = parse_tparam(v, cfg.p);
      } catch (const ParseError& e) {
        throw ParseError(val_at + e.offset, "bad t parameter");
      }
      has_t = true;
    } else if (key == "i") {
      i = c.integer();
      has_i = true;
    } else if (key == "w") {
      if (!c.eat('"')) c.fail("word must be quoted");
      std::size_t w_at = c.pos;
      std::size_t close = s.find('"', c.pos);
      if (close == std::string::npos) c.fail("unterminated word");
      w = word_sub(s.substr(c.pos, close - c.pos), w_at);
      c.pos = close + 1;
      if (c.eat('@')) {
        start = c.integer();
        has_start = true;
      }
      has_w = true;
    } else if (key == "F") {
      std::string v = c.until(";]");
      F = jordan_from_json(json_sub(v, val_at), cfg.N, val_at);
      has_F = true;
    } else {
      c.pos = key_at;
      c.fail("unknown field '" + key + "'");
    }
    if (c.eat(';')) continue;
    c.expect(']');
    break;
  }
  if (!c.done()) c.fail("trailing characters after module");
  if (!has_t) throw ParseError(0, "module needs t=");
  if (!has_w) throw ParseError(0, "module needs w=");
  return build_module(has_i, i, has_F, t, w, has_start, start, std::move(F), cfg);
}

Decomposition decomposition_from_json(const nlohmann::json& j, const OrbitConfig& cfg) {
  Decomposition d;
  try {
    const auto& list = j.is_object() ? j.at("summands") : j;
    for (const auto& s : list) {
      if (s.contains("module")) d.add(module_from_json(s.at("module"), cfg), s.value("mult", 1));
      else d.add(module_from_json(s, cfg));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("decomposition JSON: ") + e.what());
  }
  d.normalize();
  return d;
}

Decomposition parse_modules(const std::string& s, const OrbitConfig& cfg) {
  Cursor c{s};
  if (c.peek() == '{' || c.peek() == '[') {
    auto j = json_sub(s, 0);
    if (j.is_object() && !j.contains("summands")) {
      Decomposition d;
      d.add(module_from_json(j, cfg));
      return d;
    }
    return decomposition_from_json(j, cfg);
  }
  Decomposition d;
  if (c.done()) c.fail("expected a module");
  if (c.eat("0") && c.done()) return d;
  c.pos = 0;
  while (true) {
    c.skip();
    std::size_t at = c.pos;
    std::string lit = c.until("+^");
    Module m;
    try {
      m = parse_module(lit, cfg);
    } catch (const ParseError& e) {
      throw ParseError(at + e.offset, "bad module literal");
    }
    int mult = 1;
    if (c.eat('^')) {
      mult = static_cast<int>(c.integer());
      if (mult < 0) c.fail("negative multiplicity");
    }
    d.add(m, mult);
    if (c.done()) break;
    c.expect('+');
  }
  d.normalize();
  return d;
}

namespace {

// expr := term (('+'|'-') term)*; term := coeff? '*'? factor ('*' factor)*; factor := name '[' args ']' ('^' n)?
template <class E>
E parse_ring(const std::string& s, const std::function<E(const std::string&, const std::vector<std::string>&, std::size_t)>& gen,
             const std::function<E(const E&, const E&)>& mul, const std::function<E()>& unit,
             const std::function<E(const std::vector<std::pair<E, long>>&, std::size_t)>& term_hook = nullptr) {
  Cursor c{s};
  E out{};
  if (c.done()) c.fail("empty expression");
  bool first = true;
  while (!c.done()) {
    mpq_class sign = 1;
    if (c.eat('+')) {
    } else if (c.eat('-')) {
      sign = -1;
    } else if (!first) {
      c.fail("expected '+' or '-'");
    }
    first = false;
    mpq_class coeff = 1;
    bool any = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      mpz_class num = c.natural();
      coeff = mpq_class(num);
      if (c.peek() == '/') {
        ++c.pos;
        mpz_class den = c.natural();
        if (den == 0) c.fail("zero denominator");
        coeff = mpq_class(num, den);
        coeff.canonicalize();
      }
      any = true;
      if (!c.eat('*')) {
        out.add(unit(), sign * coeff);
        continue;
      }
    }
    std::size_t term_at = c.pos;
    std::vector<std::pair<E, long>> factors;
    while (true) {
      c.skip();
      std::size_t at = c.pos;
      std::string name;
      while (c.pos < s.size() && std::isalpha(static_cast<unsigned char>(s[c.pos]))) name += s[c.pos++];
      if (name.empty()) c.fail("expected a generator");
      c.expect('[');
      std::vector<std::string> args;
      while (true) {
        c.skip();
        args.push_back(c.until(",]"));
        if (c.eat(',')) continue;
        c.expect(']');
        break;
      }
      long e = 1;
      if (c.eat('^')) {
        e = c.integer();
        if (e < 0) c.fail("negative exponent");
      }
      factors.push_back({gen(name, args, at), e});
      any = true;
      if (!c.eat('*')) break;
    }
    if (!any) c.fail("empty term");
    E t;
    if (term_hook) {
      t = term_hook(factors, term_at);
    } else {
      t = unit();
      for (const auto& [g, e] : factors)
        for (long k = 0; k < e; ++k) t = mul(t, g);
    }
    out.add(t, sign * coeff);
  }
  return out;
}

int index_arg(const std::string& a, std::size_t at, int p) {
  Cursor c{a, 0, at};
  long v = c.integer();
  if (!c.done()) c.fail("expected an index");
  if (v < 0 || v >= p) throw validation_error("InvalidBreakIndex", "index " + std::to_string(v) + " outside 0.." + std::to_string(p - 1));
  return static_cast<int>(v);
}

int positive_arg(const std::string& a, std::size_t at) {
  Cursor c{a, 0, at};
  long v = c.integer();
  if (!c.done()) c.fail("expected an integer");
  if (v < 1) throw validation_error("InvalidExponent", "exponent must be at least 1");
  return static_cast<int>(v);
}

void arity(const std::string& name, const std::vector<std::string>& args, std::size_t n, std::size_t at) {
  if (args.size() != n) throw ParseError(at, name + " takes " + std::to_string(n) + " argument(s)");
}

}  // namespace

GrothElement parse_groth(const std::string& s, const OrbitConfig& cfg) {
  using E = GrothElement;
  auto gen = [&](const std::string& name, const std::vector<std::string>& args, std::size_t at) -> E {
    if (name == "u") {
      arity(name, args, 1, at);
      return gen_u(cfg, scalar_sub(args[0], at + 2, cfg.N));
    }
    if (name == "x" && args.size() == 2) return gen_xij(cfg, index_arg(args[0], at + 2, cfg.p), index_arg(args[1], at + 2, cfg.p));
    if (name == "x") {
      arity(name, args, 1, at);
      return gen_x(cfg, index_arg(args[0], at + 2, cfg.p));
    }
    if (name == "y" || name == "ys") {
      arity(name, args, 1, at);
      int i = index_arg(args[0], at + name.size() + 1, cfg.p);
      return name == "y" ? gen_y(cfg, i) : gen_ys(cfg, i);
    }
    throw ParseError(at, "unknown generator '" + name + "'");
  };
  return parse_ring<E>(s, gen, [&](const E& a, const E& b) { return groth_mul_rewrite(a, b, cfg); },
                       [&] { return gen_u(cfg, cfg.one()); });
}

TrivialElement parse_trivial(const std::string& s, const OrbitConfig& cfg) {
  using E = TrivialElement;
  auto gen = [&](const std::string& name, const std::vector<std::string>& args, std::size_t at) -> E {
    if (name != "u") throw ParseError(at, "unknown generator '" + name + "'");
    if (args.empty() || args.size() > 2) throw ParseError(at, "u takes [xi] or [xi,a]");
    Cyclo xi = scalar_sub(args[0], at + 2, cfg.N);
    if (xi.is_zero()) throw validation_error("SingularF", "u needs a nonzero scalar");
    E e;
    e.add(TrivialMonomial{xi, args.size() == 2 ? positive_arg(args[1], at + 2) : 1}, 1);
    return e;
  };
  return parse_ring<E>(s, gen, [](const E& a, const E& b) { return trivial_mul(a, b); },
                       [&] {
                         E e;
                         e.add(TrivialMonomial{cfg.one(), 1}, 1);
                         return e;
                       });
}

QuotientElement parse_quotient(const std::string& s, const OrbitConfig& cfg) {
  using E = QuotientElement;
  // generators are tagged single-term elements; the term hook assembles the monomial
  auto tag = [](const QuotientMonomial& m) {
    E e;
    e.add(m, 1);
    return e;
  };
  auto gen = [&](const std::string& name, const std::vector<std::string>& args, std::size_t at) -> E {
    if (name == "u" && args.size() == 2) {
      if (scalar_sub(args[0], at + 2, cfg.N) != cfg.one() || positive_arg(args[1], at + 2) != 2)
        throw ParseError(at, "only u[1,2] is a quotient generator");
      return tag(quotient_u12(cfg));
    }
    if (name == "u" || name == "ur") {
      arity(name, args, 1, at);
      QuotientMonomial m = quotient_u(cfg, scalar_sub(args[0], at + name.size() + 1, cfg.N));
      if (name == "ur") m.n = -1;  // marker: r-th power given directly
      return tag(m);
    }
    if (name == "yw") {
      arity(name, args, 1, at);
      return tag(quotient_y(cfg, word_sub(args[0], at + 3)));
    }
    throw ParseError(at, "unknown generator '" + name + "'");
  };
  auto hook = [&](const std::vector<std::pair<E, long>>& fs, std::size_t at) -> E {
    Cyclo u = cfg.one(), ur = cfg.one();
    bool has_ur = false, has_y = false, mixed = false;
    int a = 0, n = 0;
    std::string w;
    for (const auto& [g, e] : fs) {
      const QuotientMonomial& m = g.terms.begin()->second.first;
      if (m.has_y) {
        if (has_y && m.w != w) mixed = true;
        has_y = true;
        w = m.w;
        n += static_cast<int>(e);
      } else if (m.n == -1) {
        has_ur = true;
        ur *= m.inv.pow(e);
      } else if (m.a > 0) {
        a += static_cast<int>(e);
      } else {
        u *= m.inv.pow(e);
      }
    }
    if (has_ur && !has_y) throw ParseError(at, "ur[c] needs a yw factor in the same term");
    if (mixed) return E{};  // different yw words
    QuotientMonomial m;
    m.a = a;
    if (has_y && n > 0) {
      m.has_y = true;
      m.w = w;
      m.n = n;
      m.inv = u.pow(m.r(cfg.p)) * ur;
    } else {
      m.inv = u;
    }
    return tag(m);
  };
  return parse_ring<E>(s, gen, [&](const E& a, const E& b) { return quotient_mul(a, b, cfg); },
                       [&] { return tag(quotient_u(cfg, cfg.one())); }, hook);
}

SemisimpleElement parse_semisimple(const std::string& s, const OrbitConfig& cfg) {
  using E = SemisimpleElement;
  auto gen = [&](const std::string& name, const std::vector<std::string>& args, std::size_t at) -> E {
    SemisimpleMonomial m;
    m.xi = cfg.one();
    std::size_t off = at + name.size() + 1;
    if (name == "u") {
      arity(name, args, 1, at);
      m.kind = SKind::U;
      m.xi = scalar_sub(args[0], off, cfg.N);
    } else if (name == "xa") {
      arity(name, args, 1, at);
      m.kind = SKind::X;
      m.a = positive_arg(args[0], off);
    } else if (name == "ya" || name == "ysa") {
      arity(name, args, 2, at);
      m.kind = name == "ya" ? SKind::Y : SKind::YS;
      m.a = positive_arg(args[0], off);
      m.xi = scalar_sub(args[1], off, cfg.N);
    } else {
      throw ParseError(at, "unknown generator '" + name + "'");
    }
    if (m.xi.is_zero()) throw validation_error("SingularF", "scalars must be nonzero");
    E e;
    e.add(m, 1);
    return e;
  };
  return parse_ring<E>(s, gen, [&](const E& a, const E& b) { return semisimple_mul(a, b, cfg); },
                       [&] {
                         E e;
                         e.add(SemisimpleMonomial{SKind::U, 0, cfg.one()}, 1);
                         return e;
                       });
}

nlohmann::json module_to_json(const Module& m) {
  if (m.is_path()) return {{"kind", "path"}, {"t", m.t.str()}, {"i", m.i}, {"w", m.w}};
  return {{"kind", "cycle"}, {"t", m.t.str()}, {"w", m.w}, {"F", nlohmann::json::parse(m.F.str())}};
}

nlohmann::json decomposition_to_json(const Decomposition& d) {
  nlohmann::json s = nlohmann::json::array();
  for (const auto& x : d.summands) s.push_back({{"module", module_to_json(x.m)}, {"mult", x.mult}, {"text", x.m.str()}});
  return {{"summands", s}, {"text", d.str()}, {"dim", d.total_dim()}};
}

nlohmann::json groth_to_json(const GrothElement& e) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : e.terms) terms.push_back({{"coeff", c.get_str()}, {"monomial", m.str()}});
  return {{"text", e.str()}, {"terms", terms}};
}

}  // namespace gwa
