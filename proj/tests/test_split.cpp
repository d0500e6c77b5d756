#include "helpers.hpp"

#include "gwa/split.hpp"
#include "gwa/tensor.hpp"

using namespace gwa;

TEST_CASE("trivial monoid products") {
  OrbitConfig cfg(2, 12);
  auto T = [&](const std::string& s) { return parse_trivial(s, cfg); };
  CHECK(T("u[1,2]*u[1,2]") == T("u[1,3] + u[1,1]"));
  CHECK(T("u[z]*u[z^2]") == T("u[z^3]"));
  CHECK(T("u[1,3]*u[1,2]") == T("u[1,4] + u[1,2]"));
  CHECK(T("u[2,2]*u[z,3]") == T("u[2*z,4] + u[2*z,2]"));
  for (const char* a : {"u[1,3]", "u[z,2]", "u[2,4]"})
    for (const char* b : {"u[1,2]", "u[-1,3]"}) CHECK(trivial_mul(T(a), T(b)) == trivial_mul_modules(T(a), T(b), cfg));
}

TEST_CASE("polynomial presentation") {
  CHECK(chebyshev_in_u12(1) == std::vector<mpq_class>{1});
  CHECK(chebyshev_in_u12(2) == std::vector<mpq_class>{0, 1});
  CHECK(chebyshev_in_u12(3) == std::vector<mpq_class>{-1, 0, 1});
  CHECK(chebyshev_in_u12(4) == std::vector<mpq_class>{0, -2, 0, 1});
  OrbitConfig cfg(2, 12);
  TrivialElement e = parse_trivial("u[z,5] - 2*u[3,2]", cfg);
  CHECK(trivial_from_generators(trivial_to_generators(e)) == e);
}

TEST_CASE("ideal membership") {
  OrbitConfig cfg(3, 3);
  CHECK(ideal_membership(th::M("V[t=0:1; i=0; w=\"11\"]", cfg)));
  CHECK_FALSE(ideal_membership(th::M("V[t=; w=\"111\"; F=[[\"1\",2]]]", cfg)));
  Module path = th::M("V[t=0:1; i=0; w=\"11\"]", cfg);
  for (const char* s : {"V[t=; w=\"111\"; F=[[\"z\",2]]]", "V[t=0:1; w=\"11y\"; F=[[\"1\",1]]]", "V[t=2:1; i=2; w=\"11\"]"})
    for (const auto& x : tensor(path, th::M(s, cfg), cfg).decomposition.summands) CHECK(ideal_membership(x.m));
}

TEST_CASE("quotient relations") {
  OrbitConfig cfg(2, 12);
  auto Qe = [&](const std::string& s) { return parse_quotient(s, cfg); };
  CHECK(quotient_mul(Qe("yw[1x1y]"), Qe("yw[1x1x1y]"), cfg).is_zero());
  CHECK(quotient_mul(Qe("yw[1x1y]"), Qe("yw[1y1x]"), cfg) == Qe("yw[1x1y]^2"));
  CHECK(quotient_mul(Qe("u[-1]"), Qe("yw[1x1y]"), cfg) == Qe("yw[1x1y]"));
  CHECK_FALSE(quotient_mul(Qe("u[z]"), Qe("yw[1x1y]"), cfg) == Qe("yw[1x1y]"));
  CHECK(quotient_mul(Qe("u[z]"), Qe("u[z^2]"), cfg) == Qe("u[z^3]"));
  for (auto [a, b] : std::vector<std::pair<const char*, const char*>>{
           {"yw[1x1y]", "yw[1x1y]"}, {"u[z]*u[1,2]", "yw[1y]"}, {"u[1,2]^2", "u[2]"}, {"yw[1x]", "yw[1y]"}})
    CHECK(quotient_mul(Qe(a), Qe(b), cfg) == quotient_mul_modules(Qe(a), Qe(b), cfg));
}

TEST_CASE("powers of y match the modules with t = (z-1)^n") {
  OrbitConfig cfg(3, 3);
  QuotientElement y = parse_quotient("yw[11x11y]", cfg), acc = y;
  for (int n = 2; n <= 4; ++n) {
    acc = quotient_mul_modules(acc, y, cfg);
    TParam t = TParam::one(3);
    t.e[0] = n;
    LinComb<Module> c;
    c.add(Module::cycle(t, "11x11y", cfg.one()), 1);
    CHECK(quotient_from_classes(c, cfg) == acc);
  }
}

TEST_CASE("root extraction") {
  OrbitConfig cfg(2, 4);
  QuotientMonomial m = parse_quotient("ur[-1]*yw[1x1y]", cfg).terms.begin()->second.first;
  CHECK(quotient_u_root(m, cfg).pow(2) == th::Q(4, -1));
  QuotientMonomial n = parse_quotient("ur[2]*yw[1x1y]", cfg).terms.begin()->second.first;
  try {
    quotient_u_root(n, cfg);
    FAIL("expected RootExtractionNeeded");
  } catch (const GwaError& e) {
    CHECK(e.name() == "RootExtractionNeeded");
  }
}

TEST_CASE("semisimple section") {
  OrbitConfig cfg(3, 3);
  auto S = [&](const std::string& s) { return parse_semisimple(s, cfg); };
  CHECK(semisimple_mul(S("ya[1,z]"), S("ysa[2,1]"), cfg) == S("xa[3]"));
  CHECK(semisimple_mul(S("u[z]"), S("xa[2]"), cfg) == S("xa[2]"));
  CHECK(semisimple_mul(S("ya[1,z]"), S("ya[2,z]"), cfg) == S("ya[3,z^2]"));
  CHECK(semisimple_mul(S("xa[1]"), S("ysa[1,2]"), cfg) == S("xa[2]"));
  for (auto [a, b] : std::vector<std::pair<const char*, const char*>>{{"ya[1,z]", "ysa[2,1]"}, {"u[2]", "ya[1,z]"}, {"xa[2]", "xa[1]"}})
    CHECK(semisimple_mul(S(a), S(b), cfg) == semisimple_mul_modules(S(a), S(b), cfg));
  Decomposition d = th::D("V[t=; w=\"111\"; F=[[\"z\",2]]]", cfg);
  CHECK(section_alpha(d, cfg) == S("2*u[z]"));
}
