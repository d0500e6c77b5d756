#include "helpers.hpp"

#include "gwa/groth.hpp"

using namespace gwa;

namespace {

GrothElement G(const std::string& s, const OrbitConfig& cfg) { return parse_groth(s, cfg); }

}  // namespace

TEST_CASE("generators as modules") {
  OrbitConfig cfg(3, 3);
  auto mono = [&](const std::string& s) { return G(s, cfg).terms.begin()->first; };
  CHECK(monomial_to_module(mono("u[z]"), cfg) == th::M("V[t=; w=\"111\"; F=[[\"z\",1]]]", cfg));
  CHECK(monomial_to_module(mono("x[1]^2"), cfg) == th::M("V[t=1:2; i=1; w=\"11\"]", cfg));
  CHECK(monomial_to_module(mono("x[0,1]"), cfg) == th::M("V[t=0:1,1:1; i=0; w=\"\"]", cfg));
  CHECK(monomial_to_module(mono("x[0,2]"), cfg) == th::M("V[t=0:1,2:1; i=0; w=\"1\"]", cfg));
  for (const char* s : {"u[z]", "x[1]^2", "x[0,2]", "y[0]*y[2]", "u[2]*ys[1]^2"}) {
    GrothMonomial m = mono(s);
    CHECK(module_to_monomial(monomial_to_module(m, cfg), cfg) == m);
  }
}

TEST_CASE("relations by rewriting") {
  OrbitConfig cfg(3, 3);
  CHECK(G("y[0]*ys[1]", cfg) == G("x[0,1] + x[1,0]", cfg));
  CHECK(G("x[0]*x[1]", cfg) == G("x[0,1] + x[1,0]", cfg));
  CHECK(G("x[0]*y[0]", cfg) == G("x[0]^2", cfg));
  CHECK(G("y[0]*ys[0]", cfg) == G("x[0]^2", cfg));
  CHECK(G("u[z]*u[z]", cfg) == G("u[z^2]", cfg));
  CHECK(G("u[z]*x[2]", cfg) == G("x[2]", cfg));
  CHECK(G("x[0,2]*x[1]", cfg) == G("x[0,1]*x[2] + x[1,2]*x[0]", cfg));
  CHECK(G("x[0,1]*x[1,2]", cfg).is_zero());
  CHECK(G("x[0,1]*x[0,1]", cfg) == G("x[0,1]*x[0]*x[1]", cfg));
}

TEST_CASE("rewriting agrees with modules") {
  OrbitConfig cfg(3, 3);
  for (auto [a, b] : std::vector<std::pair<const char*, const char*>>{
           {"x[0]", "x[1]"}, {"u[z]", "u[z^2]"}, {"x[1]", "y[1]"}, {"y[0]", "ys[2]"}, {"x[0,2]", "x[1]"}, {"y[0]^2", "u[z]*y[1]"}})
    CHECK(groth_mul_rewrite(G(a, cfg), G(b, cfg), cfg) == groth_mul_modules(G(a, cfg), G(b, cfg), cfg));
}

TEST_CASE("relation certificate") {
  OrbitConfig cfg(2, 12);
  std::vector<Cyclo> xis = {th::Q(12, 2), Cyclo::root(12, 1)};
  auto rs = certify_relations(cfg, xis);
  CHECK(rs.size() > 20);
  for (const auto& r : rs) {
    CHECK_MESSAGE(r.modules_hold, r.relation << " " << r.text);
    CHECK_MESSAGE(r.routes_agree, r.relation << " " << r.text);
  }
}

TEST_CASE("cyclic order") {
  CHECK(cyc_between(3, 0, 1, 2));
  CHECK_FALSE(cyc_between(3, 0, 2, 1));
  CHECK(cyc_between(3, 2, 0, 1));
  CHECK(cyc_between(4, 1, 3, 1));
  CHECK_FALSE(cyc_between(4, 1, 1, 1));
  CHECK(cyc_chain(4, {0, 1, 3, 0}, {true, true, true}, true));
  CHECK_FALSE(cyc_chain(4, {0, 3, 1, 0}, {true, true, true}, true));
}

TEST_CASE("Hilbert series") {
  CHECK(basis_dimension(3, {0, 0, 0}) == 1);
  CHECK(basis_dimension(3, {1, 2, 1}) == 5);
  CHECK(basis_dimension(3, {2, 0, 0}) == 3);
  for (int p : {2, 3, 4})
    for (int n = 0; n <= 6; ++n) CHECK(hilbert_enumerated(p, n) == hilbert_closed_form(p, n));
  // -1 + (2 + 3T)/(1 - T)^3 = 1 + 9T + 21T^2 + ...
  CHECK(hilbert_closed_form(3, 0) == 1);
  CHECK(hilbert_closed_form(3, 1) == 9);
  CHECK(hilbert_closed_form(3, 2) == 21);
}

TEST_CASE("parser errors") {
  OrbitConfig cfg(3, 3);
  CHECK_THROWS_AS(G("x[", cfg), ParseError);
  CHECK_THROWS_AS(G("q[1]", cfg), ParseError);
  CHECK_THROWS_AS(G("x[5]", cfg), GwaError);
  CHECK_THROWS_AS(G("x[1,1]", cfg), GwaError);
  GrothElement e = G("2*x[0]^2 - 1/3*u[z]", cfg);
  CHECK(G(e.str(), cfg) == e);
}
