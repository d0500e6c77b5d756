#include "helpers.hpp"

#include "gwa/modules.hpp"

using namespace gwa;
using th::D;
using th::M;

TEST_CASE("validation") {
  OrbitConfig cfg(3, 3);
  CHECK_NOTHROW(M("V[t=0:1; i=0; w=\"11\"]", cfg));
  CHECK_NOTHROW(M("V[t=; w=\"111\"; F=[[\"z\",1]]]", cfg));
  try {
    M("V[t=0:1; w=\"111\"; F=[[\"1\",1]]]", cfg);
    FAIL("expected InvalidWord");
  } catch (const GwaError& e) {
    CHECK(e.name() == "InvalidWord");
    CHECK(e.family() == ErrorFamily::Validation);
  }
}

TEST_CASE("dimension vectors") {
  OrbitConfig cfg(3, 3);
  CHECK(dimension_vector(M("V[t=0:1,2:1; i=2; w=\"x1x\"]", cfg)) == std::vector<int>{2, 1, 1});
  CHECK(dimension_vector(M("V[t=0:1; w=\"11x11x\"; F=[[\"1\",2]]]", cfg)) == std::vector<int>{4, 4, 4});
  CHECK(dimension_vector(M("V[t=0:1,1:1; i=0; w=\"\"]", cfg)) == std::vector<int>{0, 1, 0});
}

TEST_CASE("letter 0 splits paths") {
  OrbitConfig cfg(3, 3);
  Module m = M("V[t=1:1,2:1; i=2; w=\"1yx10x1\"]", cfg);
  CHECK(split_path_at_zeros(m) == D("V[t=1:1,2:1; i=2; w=\"1yx1\"] + V[t=1:1,2:1; i=1; w=\"x1\"]", cfg));
  Module n = M("V[t=1:1,2:1; i=2; w=\"1y\"]", cfg);
  Decomposition dn = split_path_at_zeros(n);
  CHECK(dn.count() == 1);
  Module z = M("V[t=0:1; i=0; w=\"11011\"]", cfg);
  CHECK(split_path_at_zeros(z) == D("V[t=0:1; i=0; w=\"11\"]^2", cfg));
  Module one_zero = M("V[t=0:1,1:1,2:1; i=0; w=\"0\"]", cfg);
  CHECK(split_path_at_zeros(one_zero) == D("V[t=0:1,1:1,2:1; i=0; w=\"\"] + V[t=0:1,1:1,2:1; i=1; w=\"\"]", cfg));
}

TEST_CASE("cycle splitting") {
  OrbitConfig cfg(2, 2);
  Module m = M("V[t=0:1; w=\"10\"; F=[[\"1\",2]]]", cfg);
  CHECK(split_cycle(m, cfg) == D("V[t=0:1; i=0; w=\"1\"]^2", cfg));
  Module u = Module::cycle(TParam::one(2), "11", JordanType({{th::Q(2, 1), 1}, {th::Q(2, -1), 1}}));
  CHECK(split_cycle(u, cfg) == D("V[t=; w=\"11\"; F=[[\"1\",1]]] + V[t=; w=\"11\"; F=[[\"-1\",1]]]", cfg));
  OrbitConfig c4(2, 4);
  Module per = M("V[t=0:1; w=\"1x1x\"; F=[[\"-1\",1]]]", c4);
  CHECK(split_module(per, c4) == D("V[t=0:1; w=\"1x\"; F=[[\"z\",1]]] + V[t=0:1; w=\"1x\"; F=[[\"-z\",1]]]", c4));
  Module per3 = M("V[t=0:1; w=\"1x1x\"; F=[[\"2\",1]]]", c4);
  CHECK_THROWS_AS(split_module(per3, c4), GwaError);
}

TEST_CASE("simplicity") {
  OrbitConfig cfg(3, 3);
  CHECK(is_simple(M("V[t=0:1; i=0; w=\"11\"]", cfg)));
  Module u12 = M("V[t=; w=\"111\"; F=[[\"1\",2]]]", cfg);
  CHECK(is_indecomposable(u12));
  CHECK_FALSE(is_simple(u12));
  OrbitConfig c2(2, 2);
  CHECK_FALSE(is_indecomposable(M("V[t=0:1; w=\"1x1x\"; F=[[\"1\",1]]]", c2)));
}

TEST_CASE("composition factors") {
  OrbitConfig cfg(3, 3);
  Module m = M("V[t=0:1,1:1,2:2; i=2; w=\"xyx\"]", cfg);
  Decomposition f;
  for (const auto& s : composition_factors(m, cfg)) f.add(s);
  f.normalize();
  CHECK(f == D("V[t=0:1,1:1,2:2; i=2; w=\"\"]^2 + V[t=0:1,1:1,2:2; i=0; w=\"\"] + V[t=0:1,1:1,2:2; i=1; w=\"\"]", cfg));
  Module s = M("V[t=0:1; i=0; w=\"11\"]", cfg);
  CHECK(composition_factors(s, cfg).size() == 1);
}

TEST_CASE("isomorphism of rotated cycles") {
  OrbitConfig cfg(2, 2);
  Module a = M("V[t=0:1; w=\"1x1y\"; F=[[\"1\",1]]]", cfg);
  Module b = M("V[t=0:1; w=\"1y1x\"; F=[[\"1\",1]]]", cfg);
  CHECK(is_isomorphic(a, b));
  CHECK(is_isomorphic(a, a));
  CHECK_FALSE(is_isomorphic(M("V[t=0:1,1:1; i=0; w=\"\"]", cfg), M("V[t=0:1,1:1; i=1; w=\"\"]", cfg)));
}
