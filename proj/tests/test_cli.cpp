#include "helpers.hpp"

#include "gwa/render.hpp"
#include "gwa/tensor.hpp"

using namespace gwa;

TEST_CASE("scalar literals") {
  CHECK(parse_scalar("1/2-z^3", 12) == th::Q(12, 1, 2) - Cyclo::root(12, 3));
  CHECK(parse_scalar("(1+z)^2", 3) == Cyclo::root(3, 1));
  CHECK(parse_scalar("-z^-1", 5) == -Cyclo::root(5, 4));
  CHECK(parse_scalar("2*z/4", 4) == th::Q(4, 1, 2) * Cyclo::root(4, 1));
  for (const char* bad : {"", "1.5", "z^", "(1", "1/0", "w"}) CHECK_THROWS_AS(parse_scalar(bad, 4), ParseError);
  Cyclo c = parse_scalar("3/7 - 2*z^2 + z^5", 12);
  CHECK(parse_scalar(c.str(), 12) == c);
}

TEST_CASE("module literals") {
  OrbitConfig cfg(3, 3);
  Module a = parse_module("V[t=0:1,2:1; i=2; w=\"x1x\"]", cfg);
  CHECK(a.is_path());
  CHECK(a.i == 2);
  CHECK(a.w == "x1x");
  CHECK(a.t.e == std::vector<int>{1, 0, 1});
  Module u = parse_module("V[t=; w=\"111\"@1; F=[[\"1\",1]]]", cfg);
  CHECK(u == Module::cycle(TParam::one(3), "111", cfg.one()));
  // a cycle word given from position 3 is re-based to start at 1
  CHECK(parse_module("V[t=0:1; w=\"x11\"@3; F=[[\"1\",1]]]", cfg).w == "11x");
  CHECK(parse_module("V[t=0:1,2:1; i=2; w=\"x1x\"@3]", cfg) == a);
  CHECK_THROWS_AS(parse_module("V[t=0:1,2:1; i=2; w=\"x1x\"@4]", cfg), GwaError);
  CHECK(parse_module(module_to_json(a).dump(), cfg) == a);
  CHECK(parse_module(R"({"t":"0:1,2:1","i":2,"w":{"w":"x1x","start":3}})", cfg) == a);
}

TEST_CASE("parse error offsets") {
  try {
    parse_word("x1z");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset == 2);
  }
  OrbitConfig cfg(3, 3);
  try {
    parse_module("V[t=0:1; i=0; w=\"1q\"]", cfg);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset == 18);
  }
  CHECK_THROWS_AS(parse_module("V[t=0:1; i=0]", cfg), ParseError);
  CHECK_THROWS_AS(parse_module("V[t=0:1; i=0; w=\"11\"; k=1]", cfg), ParseError);
  CHECK_THROWS_AS(parse_module("V[t=0:1; i=0; w=\"11\"; F=[[\"1\",1]]]", cfg), GwaError);
}

TEST_CASE("decomposition output round-trips") {
  OrbitConfig cfg(3, 3);
  Decomposition d = tensor(parse_module("V[t=0:1,2:1; i=2; w=\"x1x\"]", cfg), parse_module("V[t=1:1,2:1; i=2; w=\"1yx10x1\"]", cfg), cfg)
                        .decomposition;
  CHECK(parse_modules(d.str(), cfg) == d);
  CHECK(parse_modules(decomposition_to_json(d).dump(), cfg) == d);
  CHECK(parse_modules("0", cfg).summands.empty());
}

TEST_CASE("ring element round trips") {
  OrbitConfig cfg(2, 4);
  QuotientElement q = parse_quotient("3*u[z]*u[1,2]^2 - yw[1x1y]^2*u[z] + 1/2*yw[1x]", cfg);
  CHECK(parse_quotient(q.str(), cfg) == q);
  SemisimpleElement s = parse_semisimple("ya[2,z] + 2*ysa[1,-1] - xa[3] + u[z^3]", cfg);
  CHECK(parse_semisimple(s.str(), cfg) == s);
  TrivialElement t = parse_trivial("u[z,3] - 5*u[1,2]", cfg);
  CHECK(parse_trivial(t.str(), cfg) == t);
  CHECK(parse_quotient("yw[1x]*yw[1y]", cfg).is_zero());
  CHECK_THROWS_AS(parse_quotient("ur[2]", cfg), ParseError);
}

TEST_CASE("rendering") {
  OrbitConfig cfg(3, 3);
  Decomposition d = tensor(parse_module("V[t=0:1,2:1; i=2; w=\"x1x\"]", cfg), parse_module("V[t=1:1,2:1; i=2; w=\"1yx10x1\"]", cfg), cfg)
                        .decomposition;
  std::string dot = render(d, cfg, RenderFormat::Dot);
  CHECK(dot == render(d, cfg, RenderFormat::Dot));
  std::size_t clusters = 0, pluses = 0;
  for (std::size_t k = dot.find("subgraph cluster_"); k != std::string::npos; k = dot.find("subgraph cluster_", k + 1)) ++clusters;
  for (std::size_t k = dot.find("⊕"); k != std::string::npos; k = dot.find("⊕", k + 1)) ++pluses;
  CHECK(clusters == 4);
  CHECK(pluses == 3);
  std::string one = render(parse_module("V[t=0:1,1:1; i=0; w=\"\"]", cfg), cfg, RenderFormat::Dot);
  CHECK(one.find("->") == std::string::npos);
  CHECK(one.find("pos=") != std::string::npos);
  std::string svg = render(d, cfg, RenderFormat::Svg);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg == render(d, cfg, RenderFormat::Svg));
  CHECK(render(d, cfg, RenderFormat::Text).find("(dim 4)") != std::string::npos);
  CHECK_THROWS_AS(parse_format("png"), ParseError);
}
