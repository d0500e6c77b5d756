#include "helpers.hpp"

#include "gwa/acceptance.hpp"
#include "gwa/tensor.hpp"

using namespace gwa;
using th::D;
using th::M;

namespace {

Decomposition T(const Module& a, const Module& b, const OrbitConfig& cfg, bool presplit = true) {
  TensorOptions o;
  o.presplit = presplit;
  return tensor(a, b, cfg, o).decomposition;
}

}  // namespace

TEST_CASE("worked example, both routes") {
  OrbitConfig cfg(3, 3);
  Module a = M("V[t=0:1,2:1; i=2; w=\"x1x\"]", cfg);
  Module b = M("V[t=1:1,2:1; i=2; w=\"1yx10x1\"]", cfg);
  Decomposition want = D("V[t=0:1,1:1,2:2; i=2; w=\"xyx\"] + V[t=0:1,1:1,2:2; i=2; w=\"\"] + "
                         "V[t=0:1,1:1,2:2; i=2; w=\"x\"]^2 + V[t=0:1,1:1,2:2; i=1; w=\"x\"]",
                         cfg);
  CHECK(T(a, b, cfg, false) == want);
  CHECK(T(a, b, cfg, true) == want);
  CHECK(tensor(a, b, cfg).product_t.str() == "0:1,1:1,2:2");
}

TEST_CASE("breakless cycles") {
  OrbitConfig cfg(3, 3);
  Module u = M("V[t=; w=\"111\"; F=[[\"z\",1]]]", cfg);
  Module v = M("V[t=; w=\"111\"; F=[[\"z\",1]]]", cfg);
  CHECK(T(u, v, cfg) == D("V[t=; w=\"111\"; F=[[\"z^2\",1]]]", cfg));
  Module u12 = M("V[t=; w=\"111\"; F=[[\"1\",2]]]", cfg);
  CHECK(T(u12, u12, cfg) == D("V[t=; w=\"111\"; F=[[\"1\",3]]] + V[t=; w=\"111\"; F=[[\"1\",1]]]", cfg));
}

TEST_CASE("unit cycle against a cycle") {
  OrbitConfig cfg(2, 4);
  Module u = M("V[t=; w=\"11\"; F=[[\"z\",1]]]", cfg);
  Module c = M("V[t=0:1; w=\"1x1y\"; F=[[\"1\",1]]]", cfg);
  CHECK(T(u, c, cfg) == D("V[t=0:1; w=\"1x1y\"; F=[[\"-1\",1]]]", cfg));
  Module j = M("V[t=; w=\"11\"; F=[[\"1\",2]]]", cfg);
  CHECK(T(j, c, cfg) == D("V[t=0:1; w=\"1x1y\"; F=[[\"1\",2]]]", cfg));
}

TEST_CASE("cycles with breaks") {
  OrbitConfig cfg(2, 2);
  Module a = M("V[t=0:1; w=\"1x\"; F=[[\"1\",1]]]", cfg);
  Module b = M("V[t=0:1; w=\"1y\"; F=[[\"1\",1]]]", cfg);
  CHECK(T(a, b, cfg) == D("V[t=0:2; i=0; w=\"1\"]", cfg));
}

TEST_CASE("paths") {
  OrbitConfig cfg(3, 3);
  Module e = M("V[t=0:1,1:1; i=0; w=\"\"]", cfg);
  CHECK(T(e, e, cfg) == D("V[t=0:2,1:2; i=0; w=\"\"]", cfg));
  Module xa = M("V[t=0:2; i=0; w=\"11\"]", cfg);
  Module xb = M("V[t=0:1; i=0; w=\"11\"]", cfg);
  CHECK(T(xa, xb, cfg) == D("V[t=0:3; i=0; w=\"11\"]", cfg));
}

TEST_CASE("path against cycles") {
  OrbitConfig cfg(3, 3);
  Module x = M("V[t=0:1; i=0; w=\"11\"]", cfg);
  CHECK(T(x, M("V[t=; w=\"111\"; F=[[\"z\",1]]]", cfg), cfg) == D("V[t=0:1; i=0; w=\"11\"]", cfg));
  CHECK(T(x, M("V[t=; w=\"111\"; F=[[\"1\",2]]]", cfg), cfg) == D("V[t=0:1; i=0; w=\"11\"]^2", cfg));
  Module y = M("V[t=0:1; w=\"11y\"; F=[[\"2\",1]]]", cfg);
  CHECK(T(x, y, cfg) == D("V[t=0:2; i=0; w=\"11\"]", cfg));
  OrbitConfig c2(2, 2);
  Module p = M("V[t=0:1; i=0; w=\"1\"]", c2);
  Module q = M("V[t=0:1; w=\"1x\"; F=[[\"1\",1]]]", c2);
  CHECK(T(p, q, c2) == D("V[t=0:2; i=0; w=\"1\"]", c2));
}

TEST_CASE("two breaks: a non-split product of simples") {
  OrbitConfig cfg(3, 3);
  Module s1 = M("V[t=0:1; w=\"11x\"; F=[[\"1\",1]]]", cfg);
  Module s2 = M("V[t=1:1,2:1; i=2; w=\"1\"]", cfg);
  CHECK(T(s1, s2, cfg) == D("V[t=0:1,1:1,2:1; i=2; w=\"x\"]", cfg));
}

TEST_CASE("unit and commutativity on random pairs") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 40; ++k) {
    int p = 2 + k % 3;
    OrbitConfig cfg(p, p % 2 ? p : 2 * p);
    Module a = random_module(cfg, random_tparam(p, rng), rng, 2 * p, 2);
    Module b = random_module(cfg, random_tparam(p, rng), rng, 2 * p, 2);
    Module one = Module::cycle(TParam::one(p), std::string(p, '1'), cfg.one());
    Decomposition sa, au, ab, ba;
    try {
      sa = split_module(a, cfg);
      au = T(a, one, cfg);
      ab = T(a, b, cfg);
      ba = T(b, a, cfg);
    } catch (const GwaError& e) {
      REQUIRE(e.name() == "NonSplitSpectrum");
      continue;
    }
    CHECK(au == sa);
    CHECK(ab == ba);
  }
}

TEST_CASE("serial and parallel dispatch agree") {
  OrbitConfig cfg(3, 3);
  Decomposition a = D("V[t=0:1,2:1; i=2; w=\"x1x\"] + V[t=0:1,2:1; i=0; w=\"1\"] + V[t=0:1,2:1; w=\"1xy\"; F=[[\"z\",2]]]", cfg);
  Decomposition b = D("V[t=1:1; i=1; w=\"11\"]^2 + V[t=1:1; w=\"y11\"; F=[[\"1\",1]]]", cfg);
  TensorOptions s, par;
  s.parallel = false;
  par.parallel = true;
  CHECK(tensor(a, b, cfg, s).decomposition == tensor(a, b, cfg, par).decomposition);
}
