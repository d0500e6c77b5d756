#include "helpers.hpp"

#include "gwa/scalars.hpp"

using namespace gwa;
using th::Q;

TEST_CASE("roots of unity") {
  CHECK(cyclo_embed(0, 12).is_one());
  CHECK(cyclo_embed(6, 12) == Q(12, -1));
  Cyclo w = cyclo_embed(4, 12);
  CHECK((w * w + w + Q(12, 1)).is_zero());
  CHECK(Cyclo::root(12, 1).pow(12).is_one());
  CHECK(Cyclo::root(5, 2).inv() == Cyclo::root(5, 3));
  CHECK(euler_phi(12) == 4);
  CHECK(cyclotomic_poly(12) == std::vector<long>{1, 0, -1, 0, 1});
}

TEST_CASE("field arithmetic is exact") {
  Cyclo z = Cyclo::root(3, 1);
  CHECK(((Q(3, 1) + z) * (Q(3, 1) + z)) == z);  // 1 + 2z + z^2 = z
  Cyclo a = Q(12, 1, 2) - Cyclo::root(12, 3);
  CHECK(a.str() == "1/2-z^3");
  CHECK(a * a.inv() == Q(12, 1));
  CHECK((a / a).is_one());
  CHECK_THROWS_AS(Q(12, 0).inv(), GwaError);
  CHECK(Q(7, 3, 4).is_rational());
  CHECK_FALSE(Cyclo::root(7, 1).is_rational());
}

TEST_CASE("companion matrices") {
  const int N = 4;
  Poly f = Poly::x_minus(Q(N, 1));
  CHECK(companion(f) == Matrix::identity(1, N));
  Poly g = f * f;  // x^2 - 2x + 1
  Matrix c = companion(g);
  CHECK(c(0, 0) == Q(N, 0));
  CHECK(c(0, 1) == Q(N, -1));
  CHECK(c(1, 0) == Q(N, 1));
  CHECK(c(1, 1) == Q(N, 2));
  CHECK(charpoly(c) == g);
}

TEST_CASE("Jordan decomposition") {
  const int N = 2;
  CHECK(jordan_decompose(Matrix::identity(2, N)) == JordanType({{Q(N, 1), 1}, {Q(N, 1), 1}}));
  Poly f = Poly::x_minus(Q(N, 1));
  CHECK(jordan_decompose(companion(f * f)) == JordanType({{Q(N, 1), 2}}));
  Poly g = Poly::x_minus(Q(N, 1)) * Poly::x_minus(Q(N, -1));
  CHECK(jordan_decompose(companion(g)) == JordanType({{Q(N, 1), 1}, {Q(N, -1), 1}}));
}

TEST_CASE("split roots") {
  Poly f = Poly::monomial(Q(12, 1), 3) - Poly::constant(Q(12, 1));
  CHECK(split_roots(f, 12).size() == 3);
  Poly g = Poly::monomial(Q(1, 1), 2) - Poly::constant(Q(1, 2));
  CHECK_THROWS_AS(split_roots(g, 1), GwaError);
  try {
    split_roots(g, 1);
  } catch (const GwaError& e) {
    CHECK(e.name() == "NonSplitSpectrum");
    CHECK(e.family() == ErrorFamily::Math);
  }
}

TEST_CASE("power bracket") {
  const int N = 12;
  Poly f = Poly::x_minus(Q(N, 1)) * Poly::x_minus(Q(N, -1));
  CHECK(poly_power_bracket(f, 1) == f);
  Poly sq = Poly::x_minus(Q(N, 1)) * Poly::x_minus(Q(N, 1));
  CHECK(poly_power_bracket(f, 2) == sq);
  Cyclo xi = Cyclo::root(N, 1);
  Poly h = Poly::x_minus(xi).pow(2);
  CHECK(poly_power_bracket(h, 3) == Poly::x_minus(xi.pow(3)).pow(2));
}

TEST_CASE("Jordan block tensor rule") {
  const int N = 12;
  auto j = [&](int a) { return JordanType({{Q(N, 1), a}}); };
  CHECK(jordan_kron(j(2), j(2)) == JordanType({{Q(N, 1), 3}, {Q(N, 1), 1}}));
  CHECK(jordan_kron(j(3), j(2)) == JordanType({{Q(N, 1), 4}, {Q(N, 1), 2}}));
  CHECK(jordan_of_power(JordanType({{Q(N, -1), 2}}), 2) == JordanType({{Q(N, 1), 2}}));
  Matrix k = kron(j(3).to_matrix(N), j(2).to_matrix(N));
  CHECK(jordan_decompose(k) == jordan_kron(j(3), j(2)));
}

TEST_CASE("sigma twist fixes scalar matrices") {
  Poly f = Poly::x_minus(Q(3, 1));
  Matrix c = companion(f * f);
  CHECK(matrix_sigma_twist(c, 0) == c);
  CHECK(matrix_sigma_twist(c, 1) == c);
  Matrix s = Matrix::diag({Cyclo::root(3, 1)});
  CHECK(matrix_sigma_twist(s, 3) == s);
}

TEST_CASE("linear algebra") {
  const int N = 3;
  Matrix m(2, 2, N);
  m(0, 0) = Q(N, 1);
  m(0, 1) = Q(N, 2);
  m(1, 0) = Q(N, 2);
  m(1, 1) = Q(N, 4);
  CHECK(rank(m) == 1);
  CHECK(nullspace(m).cols() == 1);
  CHECK(determinant(m).is_zero());
  CHECK_THROWS_AS(inverse(m), GwaError);
  m(1, 1) = Q(N, 5);
  CHECK(m * inverse(m) == Matrix::identity(2, N));
}
