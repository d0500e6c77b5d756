#include "gwa/tensor.hpp"

#include <numeric>

#ifdef GWA_HAVE_OPENMP
#include <omp.h>
#endif

namespace gwa {

bool openmp_enabled() {
#ifdef GWA_HAVE_OPENMP
  return true;
#else
  return false;
#endif
}

int openmp_threads() {
#ifdef GWA_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace {

void require_breakless(const Module& m, const char* what) {
  if (!m.is_cycle() || !m.t.breakless())
    throw validation_error("PreconditionBreaks", std::string(what) + " needs a breakless cycle module");
}

void require_trivial_eigen(const Module& m) {
  if (m.F.blocks.size() != 1 || m.F.blocks[0].size != 1 || !m.F.blocks[0].eigenvalue.is_one())
    throw validation_error("PreconditionEigenData", "cycle factor must have eigen-data x-1");
}

Decomposition finish(const Module& m, const OrbitConfig& cfg) { return split_module(m, cfg); }

// Normalized scalar picked up by the product chain: t at (1, x) positions and
// t' at (x, 1) positions.
Cyclo chain_scalar(const OrbitConfig& cfg, const TParam& t, const std::string& w, const TParam& t2,
                   const std::string& w2) {
  return scalar_twist_product(cfg, t, w, w2) * scalar_twist_product(cfg, t2, w2, w);
}

}  // namespace

Decomposition tensor_cycle_cycle(const Module& a, const Module& b, const OrbitConfig& cfg) {
  const int p = cfg.p;
  const int r1 = a.r(), r2 = b.r();
  const int d = std::gcd(r1, r2);
  const TParam tt = a.t * b.t;
  JordanType base = jordan_kron(jordan_of_power(a.F, r2 / d), jordan_of_power(b.F, r1 / d));
  Decomposition out;
  for (int j = 0; j < d; ++j) {
    std::string w2 = word_shift(b.w, p, j);
    std::string w = word_tensor(a.w, w2);
    Cyclo c = chain_scalar(cfg, a.t, a.w, b.t, w2);
    out.add(finish(Module::cycle(tt, w, jordan_scale(base, c)), cfg));
  }
  out.normalize();
  return out;
}

Decomposition tensor_cycle_cycle_nobreak(const Module& a, const Module& b, const OrbitConfig& cfg) {
  require_breakless(a, "tensor_cycle_cycle_nobreak");
  require_breakless(b, "tensor_cycle_cycle_nobreak");
  return tensor_cycle_cycle(a, b, cfg);
}

Decomposition tensor_unit_cycle(const Module& unit, const Module& c, const OrbitConfig& cfg) {
  require_breakless(unit, "tensor_unit_cycle");
  if (unit.r() != 1) throw validation_error("PreconditionBreaks", "unit factor must have word 1^p");
  require_trivial_eigen(c);
  Decomposition out = finish(Module::cycle(unit.t * c.t, c.w, jordan_of_power(unit.F, c.r())), cfg);
  return out;
}

Decomposition tensor_path_path(const Module& a, const Module& b, const OrbitConfig& cfg) {
  const int p = cfg.p;
  const TParam tt = a.t * b.t;
  const long fa = a.i + 1, la = fa + static_cast<long>(a.w.size());
  const long fb = b.i + 1, lenb = static_cast<long>(b.w.size());
  auto floor_div = [](long x, long y) { return x >= 0 ? x / y : -((-x + y - 1) / y); };
  // b is translated by multiples of p; each overlap of the two windows is one maximal chain
  const long s0 = floor_div(fa - fb - lenb + p - 1, p) * p;
  Decomposition out;
  for (long shift = s0; shift <= la - fb; shift += p) {
    const long sb = fb + shift, eb = sb + lenb;
    // overlap of [fa, la] and [sb, eb] at equal absolute positions
    long lo = std::max(fa, sb), hi = std::min(la, eb);
    if (lo > hi) continue;
    std::string w;
    for (long x = lo; x < hi; ++x) w.push_back(letter_mul(a.w[x - fa], b.w[x - sb]));
    out.add(split_path_at_zeros(Module::path(tt, static_cast<int>(cfg.mod(lo - 1)), w)));
  }
  out.normalize();
  return out;
}

Decomposition tensor_path_cycle(const Module& a, const Module& b, const OrbitConfig& cfg) {
  const int p = cfg.p;
  const TParam tt = a.t * b.t;
  const long n2 = static_cast<long>(b.w.size());
  Decomposition out;
  for (int j = 0; j < b.r(); ++j) {
    std::string w;
    for (std::size_t k = 0; k < a.w.size(); ++k) {
      long pos = a.i + 1 + static_cast<long>(k);  // absolute, 1-based on the cycle
      long idx = ((pos + static_cast<long>(j) * p - 1) % n2 + n2) % n2;
      w.push_back(letter_mul(a.w[k], b.w[idx]));
    }
    out.add(split_path_at_zeros(Module::path(tt, a.i, w)), b.F.dim());
  }
  out.normalize();
  return out;
}

Decomposition tensor_path_nobreak(const Module& a, const Module& b, const OrbitConfig& cfg) {
  require_breakless(b, "tensor_path_nobreak");
  return tensor_path_cycle(a, b, cfg);
}

Decomposition tensor_pair(const Module& a, const Module& b, const OrbitConfig& cfg) {
  if (a.p() != cfg.p || b.p() != cfg.p) throw validation_error("ContextMismatch", "module and orbit sizes differ");
  if (a.is_path() && b.is_path()) return tensor_path_path(a, b, cfg);
  if (a.is_path()) return tensor_path_cycle(a, b, cfg);
  if (b.is_path()) return tensor_path_cycle(b, a, cfg);
  return tensor_cycle_cycle(a, b, cfg);
}

TensorResult tensor(const Decomposition& a, const Decomposition& b, const OrbitConfig& cfg, const TensorOptions& opt) {
  std::vector<std::pair<const Summand*, const Summand*>> pairs;
  for (const auto& x : a.summands)
    for (const auto& y : b.summands) pairs.emplace_back(&x, &y);
  std::vector<Decomposition> parts(pairs.size());
  const long n = static_cast<long>(pairs.size());
#ifdef GWA_HAVE_OPENMP
  if (opt.parallel && n > 1) {
    std::vector<std::string> errs(pairs.size());
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < n; ++k) {
      try {
        parts[k] = tensor_pair(pairs[k].first->m, pairs[k].second->m, cfg);
      } catch (...) {
        errs[k] = "x";
      }
    }
    for (long k = 0; k < n; ++k)
      if (!errs[k].empty()) parts[k] = tensor_pair(pairs[k].first->m, pairs[k].second->m, cfg);  // rethrows serially
  } else
#endif
  {
    for (long k = 0; k < n; ++k) parts[k] = tensor_pair(pairs[k].first->m, pairs[k].second->m, cfg);
  }
  TensorResult res;
  if (!a.summands.empty() && !b.summands.empty()) res.product_t = a.summands[0].m.t * b.summands[0].m.t;
  for (long k = 0; k < n; ++k) res.decomposition.add(parts[k], pairs[k].first->mult * pairs[k].second->mult);
  res.decomposition.normalize();
  return res;
}

TensorResult tensor(const Module& a, const Module& b, const OrbitConfig& cfg, const TensorOptions& opt) {
  validate(a, cfg);
  validate(b, cfg);
  Decomposition da, db;
  auto pre = [&](const Module& m, Decomposition& d) {
    if (opt.presplit) {
      try {
        d = split_module(m, cfg);
        return;
      } catch (const GwaError& e) {
        // a path factor never needs the cycle split; cycle products rethrow later
        if (e.name() != "NonSplitSpectrum") throw;
      }
    }
    d.add(m);
  };
  pre(a, da);
  pre(b, db);
  TensorResult r = tensor(da, db, cfg, opt);
  r.product_t = a.t * b.t;
  return r;
}

}  // namespace gwa
