#include "helpers.hpp"

#include "gwa/oracle.hpp"

using namespace gwa;
using th::D;
using th::M;

TEST_CASE("realizations satisfy the relations") {
  OrbitConfig cfg(3, 3);
  ExplicitModule e = realize(M("V[t=0:1,1:1; i=0; w=\"\"]", cfg), cfg);
  CHECK(e.dims == std::vector<int>{0, 1, 0});
  for (const auto& x : e.X) CHECK(x.is_zero());
  ExplicitModule u = realize(M("V[t=; w=\"111\"; F=[[\"z\",1]]]", cfg), cfg);
  CHECK(u.dims == std::vector<int>{1, 1, 1});
  // the wrap step carries the eigenvalue
  CHECK(u.X[0](0, 0) == Cyclo::root(3, 1));
  CHECK(u.X[2](0, 0) == th::Q(3, 1));
  CHECK_NOTHROW(u.check_relations());
  ExplicitModule f = realize(M("V[t=0:1; w=\"11x11y\"; F=[[\"1\",1]]]", cfg), cfg);
  CHECK(f.total_dim() == 6);
  CHECK_NOTHROW(f.check_relations());
}

TEST_CASE("Kronecker product with the unit") {
  OrbitConfig cfg(3, 3);
  Module m = M("V[t=0:1,2:1; i=2; w=\"x1x\"]", cfg);
  ExplicitModule k = kronecker_tensor(realize(m, cfg), realize(M("V[t=; w=\"111\"; F=[[\"1\",1]]]", cfg), cfg));
  CHECK(k.total_dim() == 4);
  Decomposition d;
  d.add(m);
  CHECK(oracle_decompose(k) == d);
}

TEST_CASE("oracle reproduces the worked example") {
  OrbitConfig cfg(3, 3);
  Module a = M("V[t=0:1,2:1; i=2; w=\"x1x\"]", cfg);
  Module b = M("V[t=1:1,2:1; i=2; w=\"1yx10x1\"]", cfg);
  ExplicitModule k = kronecker_tensor(realize(a, cfg), realize(b, cfg));
  CHECK(k.dims == std::vector<int>{6, 3, 2});
  CHECK(oracle_decompose(k) == D("V[t=0:1,1:1,2:2; i=2; w=\"xyx\"] + V[t=0:1,1:1,2:2; i=2; w=\"\"] + "
                                 "V[t=0:1,1:1,2:2; i=2; w=\"x\"]^2 + V[t=0:1,1:1,2:2; i=1; w=\"x\"]",
                                 cfg));
}

TEST_CASE("round trip through the oracle") {
  OrbitConfig cfg(2, 4);
  for (const char* s : {"V[t=0:1; w=\"1x1y\"; F=[[\"z\",2]]]", "V[t=0:1,1:1; i=1; w=\"yx0\"]", "V[t=; w=\"11\"; F=[[\"-1\",3]]]"}) {
    Module m = M(s, cfg);
    CHECK(oracle_decompose(realize(m, cfg)) == split_module(m, cfg));
  }
}

TEST_CASE("oracle composition series") {
  OrbitConfig cfg(3, 3);
  Module x = M("V[t=0:1,1:1,2:1; i=2; w=\"x\"]", cfg);
  Decomposition f;
  for (const auto& s : oracle_composition_series(realize(x, cfg), 7)) f.add(s);
  f.normalize();
  CHECK(f == D("V[t=0:1,1:1,2:1; i=2; w=\"\"] + V[t=0:1,1:1,2:1; i=0; w=\"\"]", cfg));
  Module s = M("V[t=0:1; i=0; w=\"11\"]", cfg);
  CHECK(oracle_composition_series(realize(s, cfg), 1).size() == 1);
}
