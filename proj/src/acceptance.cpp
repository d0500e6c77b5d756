#include "gwa/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

#include "gwa/errors.hpp"
#include "gwa/groth.hpp"
#include "gwa/oracle.hpp"
#include "gwa/parse.hpp"
#include "gwa/split.hpp"
#include "gwa/tensor.hpp"

namespace gwa {

namespace {

int uni(std::mt19937_64& rng, int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); }

std::vector<Cyclo> sample_xis(int N) {
  return {Cyclo(N, mpq_class(2)), Cyclo::root(N, 1), -Cyclo::root(N, N / 3), Cyclo(N, mpq_class(1, 3))};
}

TensorOptions serial() {
  TensorOptions o;
  o.parallel = false;
  return o;
}

struct Tally {
  long checked = 0, failed = 0;
  std::string first;
  void check(bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    if (failed++ == 0) first = what;
  }
  std::string str(const std::string& unit) const {
    std::string s = std::to_string(checked - failed) + "/" + std::to_string(checked) + " " + unit;
    if (failed) s += "; first failure: " + first;
    return s;
  }
};

// ---------------------------------------------------------------- 1

CriterionResult c1_example() {
  CriterionResult r{1, "example tensor product", false, "", 0, 1.0};
  OrbitConfig cfg(3, 3);
  Module a = parse_module("V[t=0:1,2:1; i=2; w=\"x1x\"]", cfg);
  Module b = parse_module("V[t=1:1,2:1; i=2; w=\"1yx10x1\"]", cfg);
  Decomposition want = parse_modules(
      "V[t=0:1,1:1,2:2; i=2; w=\"xyx\"] + V[t=0:1,1:1,2:2; i=2; w=\"\"] + V[t=0:1,1:1,2:2; i=2; w=\"x\"]^2 + "
      "V[t=0:1,1:1,2:2; i=1; w=\"x\"]",
      cfg);
  TensorOptions direct = serial();
  direct.presplit = false;
  Decomposition d1 = tensor(a, b, cfg, direct).decomposition;
  Decomposition d2 = tensor(a, b, cfg, serial()).decomposition;
  Decomposition d3 = oracle_decompose(kronecker_tensor(realize(a, cfg), realize(b, cfg)));
  r.pass = d1 == want && d2 == want && d3 == want;
  r.detail = "direct: " + std::string(d1 == want ? "match" : "MISMATCH " + d1.str()) +
             "; pre-split: " + (d2 == want ? "match" : "MISMATCH " + d2.str()) +
             "; oracle: " + (d3 == want ? "match" : "MISMATCH " + d3.str());
  return r;
}

// ---------------------------------------------------------------- 2

CriterionResult c2_relations(std::uint64_t seed) {
  CriterionResult r{2, "Grothendieck ring relations", false, "", 0, 120.0};
  Tally inst, rnd;
  for (int p : {2, 3, 4}) {
    OrbitConfig cfg(p, 12);
    auto xis = sample_xis(12);
    for (const auto& ri : certify_relations(cfg, xis))
      inst.check(ri.modules_hold && ri.routes_agree, "p=" + std::to_string(p) + " (" + ri.relation + ") " + ri.text);
  }
  std::mt19937_64 rng(seed);
  for (int k = 0; k < 200; ++k) {
    int p = 2 + k % 3;
    OrbitConfig cfg(p, 12);
    auto xis = sample_xis(12);
    GrothElement a, b;
    a.add(random_monomial(cfg, rng, xis, 3), 1);
    b.add(random_monomial(cfg, rng, xis, 3), 1);
    rnd.check(groth_mul_rewrite(a, b, cfg) == groth_mul_modules(a, b, cfg), a.str() + " * " + b.str());
  }
  r.pass = inst.failed == 0 && rnd.failed == 0 && inst.checked > 0;
  r.detail = inst.str("relation instances") + "; " + rnd.str("random pairs");
  return r;
}

// ---------------------------------------------------------------- 3

CriterionResult c3_hilbert() {
  CriterionResult r{3, "Hilbert series", false, "", 0, 10.0};
  Tally series, per;
  for (int p : {2, 3, 4}) {
    for (int n = 0; n <= 6; ++n)
      series.check(hilbert_enumerated(p, n) == hilbert_closed_form(p, n),
                   "p=" + std::to_string(p) + " degree " + std::to_string(n) + ": " +
                       std::to_string(hilbert_enumerated(p, n)) + " vs " + std::to_string(hilbert_closed_form(p, n)));
    std::vector<int> d(p, 0);
    std::function<void(int, int)> rec = [&](int k, int left) {
      if (k == p) {
        long want = 2;
        bool zero = true;
        for (int e : d)
          if (e > 0) {
            ++want;
            zero = false;
          }
        if (zero) want = 1;
        per.check(basis_dimension(p, d) == want, "p=" + std::to_string(p) + " multidegree mismatch");
        return;
      }
      for (int e = 0; e <= left; ++e) {
        d[k] = e;
        rec(k + 1, left - e);
      }
      d[k] = 0;
    };
    rec(0, 6);
  }
  r.pass = series.failed == 0 && per.failed == 0;
  r.detail = series.str("series coefficients") + "; " + per.str("multidegrees");
  return r;
}

// ---------------------------------------------------------------- 4

CriterionResult c4_jordan() {
  CriterionResult r{4, "Jordan block tensor rule", false, "", 0, 10.0};
  const int N = 12;
  auto xis = sample_xis(N);
  Tally t;
  for (int a = 1; a <= 6; ++a)
    for (int b = 1; b <= 6; ++b)
      for (std::size_t i = 0; i < xis.size(); ++i) {
        const Cyclo& xi = xis[i];
        const Cyclo& eta = xis[(i + 1) % xis.size()];
        TrivialElement got = trivial_mul(TrivialMonomial{xi, a}, TrivialMonomial{eta, b});
        Matrix k = kron(JordanType({JordanBlock{xi, a}}).to_matrix(N), JordanType({JordanBlock{eta, b}}).to_matrix(N));
        JordanType jt = jordan_decompose(k);
        TrivialElement want;
        for (const auto& bl : jt.blocks) want.add(TrivialMonomial{bl.eigenvalue, bl.size}, 1);
        t.check(got == want, "u[" + xi.str() + "," + std::to_string(a) + "]*u[" + eta.str() + "," + std::to_string(b) +
                                 "]: " + got.str() + " vs " + want.str());
      }
  r.pass = t.failed == 0;
  r.detail = t.str("block pairs");
  return r;
}

// ---------------------------------------------------------------- 5

int conductor_for(int p) { return p % 2 == 0 ? 2 * p : p; }

constexpr int kMaxProductDim = 200;

CriterionResult c5_oracle(std::uint64_t seed) {
  CriterionResult r{5, "tensor vs explicit-matrix oracle", false, "", 0, 300.0};
  std::mt19937_64 rng(seed + 5);
  Tally t;
  long too_big = 0, non_split = 0;
  while (t.checked < 200) {
    int p = 2 + uni(rng, 4);
    OrbitConfig cfg(p, conductor_for(p));
    Module a = random_module(cfg, random_tparam(p, rng), rng, 3 * p, 3);
    Module b = random_module(cfg, random_tparam(p, rng), rng, 3 * p, 3);
    if (a.dim() * b.dim() > kMaxProductDim) {
      ++too_big;
      continue;
    }
    Decomposition got;
    try {
      got = tensor(a, b, cfg, serial()).decomposition;
    } catch (const GwaError& e) {
      if (e.name() != "NonSplitSpectrum") throw;
      ++non_split;
      continue;
    }
    Decomposition want = oracle_decompose(kronecker_tensor(realize(a, cfg), realize(b, cfg)));
    t.check(got == want, a.str() + " (x) " + b.str() + ": " + got.str() + " vs " + want.str());
  }
  r.pass = t.failed == 0;
  r.detail = t.str("pairs") + " (resampled " + std::to_string(too_big) + " over dimension " +
             std::to_string(kMaxProductDim) + ", " + std::to_string(non_split) + " with a non-split spectrum)";
  return r;
}

// ---------------------------------------------------------------- 6

CriterionResult c6_semisimple() {
  CriterionResult r{6, "semisimple section and counterexample", false, "", 0, 30.0};
  Tally t;
  for (int p : {2, 3}) {
    OrbitConfig cfg(p, 12);
    std::vector<SemisimpleMonomial> gens;
    auto xis = sample_xis(12);
    for (const auto& xi : xis) gens.push_back({SKind::U, 0, xi});
    for (int a = 1; a <= 3; ++a) {
      gens.push_back({SKind::X, a, cfg.one()});
      for (const auto& xi : {xis[0], xis[1]}) {
        gens.push_back({SKind::Y, a, xi});
        gens.push_back({SKind::YS, a, xi});
      }
    }
    for (const auto& g1 : gens)
      for (const auto& g2 : gens) {
        Decomposition d = tensor(semisimple_to_module(g1, cfg), semisimple_to_module(g2, cfg), cfg, serial()).decomposition;
        bool single = d.summands.size() == 1 && d.summands[0].mult == 1 && is_simple(d.summands[0].m);
        SemisimpleElement table = semisimple_mul(g1, g2, cfg);
        SemisimpleElement got;
        if (single) got.add(module_to_semisimple(d.summands[0].m, cfg), 1);
        t.check(single && got == table, "p=" + std::to_string(p) + " " + g1.str() + "*" + g2.str() + " -> " + d.str());
      }
  }
  // two breaks on the orbit: the product of simples is a non-split extension
  OrbitConfig cfg(3, 3);
  Module s1 = parse_module("V[t=0:1; w=\"11x\"; F=[[\"1\",1]]]", cfg);
  Module s2 = parse_module("V[t=1:1,2:1; i=2; w=\"1\"]", cfg);
  Decomposition d = tensor(s1, s2, cfg, serial()).decomposition;
  Module want = parse_module("V[t=0:1,1:1,2:1; i=2; w=\"x\"]", cfg);
  bool counter = is_simple(s1) && is_simple(s2) && d.summands.size() == 1 && d.summands[0].mult == 1 &&
                 d.summands[0].m == want && !is_simple(want);
  Decomposition factors, want_factors;
  for (const auto& m : composition_factors(want, cfg)) factors.add(m);
  factors.normalize();
  want_factors = parse_modules("V[t=0:1,1:1,2:1; i=2; w=\"\"] + V[t=0:1,1:1,2:1; i=0; w=\"\"]", cfg);
  Decomposition oracle_factors;
  for (const auto& m : oracle_composition_series(realize(want, cfg), 1)) oracle_factors.add(m);
  oracle_factors.normalize();
  counter = counter && factors == want_factors && oracle_factors == want_factors;
  t.check(counter, "counterexample: " + d.str() + " with factors " + factors.str());
  r.pass = t.failed == 0;
  r.detail = t.str("checks (table pairs plus the two-break counterexample)");
  return r;
}

// ---------------------------------------------------------------- 7

CriterionResult c7_quotient() {
  CriterionResult r{7, "split quotient ring", false, "", 0, 30.0};
  Tally t;
  auto single = [](const QuotientMonomial& m) {
    QuotientElement e;
    e.add(m, 1);
    return e;
  };
  for (int p : {2, 3}) {
    OrbitConfig cfg(p, 12);
    auto xis = sample_xis(12);
    xis.push_back(cfg.one());
    xis.push_back(Cyclo(12, mpq_class(-1)));
    std::vector<QuotientElement> us, ys;
    for (const auto& xi : xis) us.push_back(single(quotient_u(cfg, xi)));
    us.push_back(single(quotient_u12(cfg)));
    std::vector<std::string> words;
    for (int rr = 1; rr <= 2; ++rr)
      for (const auto& w : nonperiodic_words(p, rr)) {
        words.push_back(w);
        ys.push_back(single(quotient_y(cfg, w)));
      }
    std::vector<QuotientElement> gens = us;
    gens.insert(gens.end(), ys.begin(), ys.end());
    const std::string tag = "p=" + std::to_string(p) + " ";
    // both routes on every generator pair
    for (const auto& g1 : gens)
      for (const auto& g2 : gens)
        t.check(quotient_mul(g1, g2, cfg) == quotient_mul_modules(g1, g2, cfg), tag + g1.str() + " * " + g2.str());
    QuotientElement one = single(quotient_u(cfg, cfg.one()));
    for (const auto& g : gens) t.check(quotient_mul_modules(one, g, cfg) == g, tag + "(i) on " + g.str());
    for (const auto& a : xis)
      for (const auto& b : xis)
        t.check(quotient_mul_modules(single(quotient_u(cfg, a)), single(quotient_u(cfg, b)), cfg) ==
                    single(quotient_u(cfg, a * b)),
                tag + "u-u u[" + a.str() + "]u[" + b.str() + "]");
    for (std::size_t k = 0; k < words.size(); ++k) {
      const int rr = static_cast<int>(words[k].size()) / p;
      for (const auto& xi : xis) {
        bool fixes = quotient_mul_modules(single(quotient_u(cfg, xi)), ys[k], cfg) == ys[k];
        t.check(fixes == xi.pow(rr).is_one(), tag + "u-y u[" + xi.str() + "] y[" + words[k] + "]");
      }
      for (std::size_t l = 0; l < words.size(); ++l) {
        if (canonical_shift(words[k], p).first == canonical_shift(words[l], p).first) continue;
        t.check(quotient_mul_modules(ys[k], ys[l], cfg).is_zero(), tag + "y-y y[" + words[k] + "] y[" + words[l] + "]");
      }
      // [V^{(z-1)^n}(w, x-1)] = y^n
      QuotientElement pw = ys[k];
      for (int n = 1; n <= 4; ++n) {
        if (n > 1) pw = quotient_mul_modules(pw, ys[k], cfg);
        TParam tn = TParam::one(p);
        tn.e[0] = n;
        LinComb<Module> cls;
        cls.add(Module::cycle(tn, words[k], cfg.one()), 1);
        QuotientMonomial yn = quotient_y(cfg, words[k]);
        yn.n = n;
        t.check(quotient_from_classes(cls, cfg) == pw && pw == single(yn),
                tag + "y^" + std::to_string(n) + " for " + words[k] + ": " + pw.str());
      }
    }
  }
  r.pass = t.failed == 0;
  r.detail = t.str("checks");
  return r;
}

// ---------------------------------------------------------------- 8

CriterionResult c8_graphs(std::uint64_t seed) {
  CriterionResult r{8, "graph module tensor product", false, "", 0, 60.0};
  std::mt19937_64 rng(seed + 8);
  Tally t;
  long resampled = 0;
  while (t.checked < 50) {
    int p = 2 + uni(rng, 3);
    OrbitConfig cfg(p, 12);
    GraphModule g1 = random_graph(cfg, rng, 3 * p - 1);
    GraphModule g2 = random_graph(cfg, rng, 3 * p - 1);
    if (g1.vertices.size() * g2.vertices.size() > 48) {
      ++resampled;
      continue;
    }
    Decomposition want, got;
    GraphModule prod = graph_tensor(g1, g2);
    try {
      want = tensor(graph_to_module(g1, cfg), graph_to_module(g2, cfg), cfg, serial()).decomposition;
      got = graph_to_module(prod, cfg);
    } catch (const GwaError& e) {
      if (e.name() != "NonSplitSpectrum") throw;
      ++resampled;
      continue;
    }
    Decomposition oracle = oracle_decompose(graph_to_explicit(prod, cfg));
    t.check(got == want && oracle == want, "p=" + std::to_string(p) + ": " + got.str() + " vs " + want.str());
  }
  // the figure: a 5-vertex product with edge labels x, y, x
  OrbitConfig cfg(3, 3);
  GraphModule fig = graph_tensor(figure_graph_left(cfg), figure_graph_right(cfg));
  std::string labels;
  for (const auto& c : graph_components(fig))
    for (int e : c.edges) labels += fig.edges[e].label;
  bool shape = fig.vertices.size() == 5 && fig.edges.size() == 3 && labels == "xyx";
  t.check(shape, "figure product has " + std::to_string(fig.vertices.size()) + " vertices, labels " + labels);
  r.pass = t.failed == 0;
  r.detail = t.str("checks (random pairs plus the figure)") + " (" + std::to_string(resampled) + " draws resampled)";
  return r;
}

// ---------------------------------------------------------------- 9

CriterionResult c9_axioms(std::uint64_t seed) {
  CriterionResult r{9, "ring axioms", false, "", 0, 60.0};
  std::mt19937_64 rng(seed + 9);
  Tally comm, assoc;
  for (int k = 0; k < 50; ++k) {
    int p = 2 + k % 3;
    OrbitConfig cfg(p, 12);
    auto xis = sample_xis(12);
    GrothElement a, b, c;
    a.add(random_monomial(cfg, rng, xis, 2), 1);
    b.add(random_monomial(cfg, rng, xis, 2), 1);
    c.add(random_monomial(cfg, rng, xis, 2), 1);
    auto ab = groth_mul_rewrite(a, b, cfg), ba = groth_mul_rewrite(b, a, cfg);
    comm.check(ab == ba, a.str() + " * " + b.str());
    comm.check(groth_mul_modules(a, b, cfg) == groth_mul_modules(b, a, cfg), "modules: " + a.str() + " * " + b.str());
    auto l = groth_mul_rewrite(ab, c, cfg);
    auto rr = groth_mul_rewrite(a, groth_mul_rewrite(b, c, cfg), cfg);
    auto lm = groth_mul_modules(groth_mul_modules(a, b, cfg), c, cfg);
    assoc.check(l == rr && l == lm, "(" + a.str() + ")(" + b.str() + ")(" + c.str() + ")");
  }
  r.pass = comm.failed == 0 && assoc.failed == 0;
  r.detail = comm.str("commutativity checks") + "; " + assoc.str("associativity triples");
  return r;
}

}  // namespace

TParam random_tparam(int p, std::mt19937_64& rng) {
  TParam t = TParam::one(p);
  for (int k = 0; k < p; ++k)
    if (uni(rng, 3) == 0) t.e[k] = 1 + uni(rng, 2);
  return t;
}

Module random_module(const OrbitConfig& cfg, const TParam& t, std::mt19937_64& rng, int max_len, int max_block) {
  const int p = cfg.p;
  auto br = t.breaks();
  if (!br.empty() && uni(rng, 2) == 0) {
    // a path needs breaks at i and i+len+1
    for (int attempt = 0;; ++attempt) {
      int i = br[uni(rng, static_cast<int>(br.size()))];
      int len = uni(rng, max_len + 1);
      if (!t.is_break(i + len + 1)) continue;
      std::string w;
      for (int k = 0; k < len; ++k) {
        long pos = i + 1 + k;
        w.push_back(t.is_break(pos) ? "xyx0"[uni(rng, uni(rng, 4) == 0 ? 4 : 3)] : '1');
      }
      return Module::path(t, i, w);
    }
  }
  int r = 1 + uni(rng, std::max(1, max_len / p));
  std::string w;
  for (int k = 1; k <= r * p; ++k) w.push_back(t.is_break(k) ? "xy"[uni(rng, 2)] : '1');
  const std::vector<Cyclo> evs = {cfg.one(), Cyclo(cfg.N, mpq_class(-1)), Cyclo(cfg.N, mpq_class(2)), Cyclo::root(cfg.N, 1)};
  std::vector<JordanBlock> bl;
  int nb = 1 + uni(rng, 2);
  for (int k = 0; k < nb; ++k) bl.push_back({evs[uni(rng, 4)], 1 + uni(rng, max_block)});
  return Module::cycle(t, w, JordanType(bl));
}

GraphModule random_graph(const OrbitConfig& cfg, std::mt19937_64& rng, int max_len) {
  TParam t = random_tparam(cfg.p, rng);
  Module m = random_module(cfg, t, rng, max_len, 1);
  if (m.is_path() && m.has_zero()) m = split_path_at_zeros(m).summands[0].m;
  if (m.is_cycle()) m.F = JordanType({m.F.blocks[0]});
  GraphModule g = module_to_graph(m, cfg);
  if (uni(rng, 3) == 0) {
    Module m2 = random_module(cfg, t, rng, max_len, 1);
    if (m2.is_path() && m2.has_zero()) m2 = split_path_at_zeros(m2).summands[0].m;
    if (m2.is_cycle()) m2.F = JordanType({m2.F.blocks[0]});
    g = graph_disjoint_union(g, module_to_graph(m2, cfg));
  }
  return random_rescale(g, rng, cfg);
}

CriterionResult run_criterion(int id, const AcceptanceOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    switch (id) {
      case 1: r = c1_example(); break;
      case 2: r = c2_relations(opt.seed); break;
      case 3: r = c3_hilbert(); break;
      case 4: r = c4_jordan(); break;
      case 5: r = c5_oracle(opt.seed); break;
      case 6: r = c6_semisimple(); break;
      case 7: r = c7_quotient(); break;
      case 8: r = c8_graphs(opt.seed); break;
      case 9: r = c9_axioms(opt.seed); break;
      default: throw internal_error("no criterion " + std::to_string(id));
    }
  } catch (const std::exception& e) {
    r.id = id;
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (r.limit > 0 && r.seconds > r.limit) {
    r.pass = false;
    r.detail += "; over the time budget";
  }
  return r;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt) {
  std::vector<CriterionResult> out(9);
#ifdef GWA_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) if (opt.parallel)
#endif
  for (int k = 0; k < 9; ++k) out[k] = run_criterion(k + 1, opt);
  return out;
}

std::string format_result(const CriterionResult& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2fs/%.0fs", r.seconds, r.limit);
  return std::string(r.pass ? "PASS" : "FAIL") + " criterion " + std::to_string(r.id) + " (" + r.name + ", " + buf +
         "): " + r.detail;
}

}  // namespace gwa
