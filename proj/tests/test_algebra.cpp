#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homcat/algebra.hpp"

using namespace homcat;

TEST_CASE("graded dimensions of the three algebras") {
  CHECK(degree_dim({Kind::exterior, 2}, 1) == 2);
  CHECK(degree_dim({Kind::exterior, 3}, 2) == 3);
  CHECK(degree_dim({Kind::symmetric, 2}, 3) == 4);
  CHECK(degree_dim({Kind::exterior, 2}, -1) == 0);
  CHECK(degree_dim({Kind::exterior, 2}, 3) == 0);
  CHECK(degree_dim({Kind::symmetric, 3}, -1) == 0);
  CHECK(degree_dim({Kind::twostep, 3}, 0) == 1);
  CHECK(degree_dim({Kind::twostep, 3}, 1) == 3);
  CHECK(degree_dim({Kind::twostep, 3}, 2) == 0);
}

TEST_CASE("dimension formulas match monomial enumeration") {
  for (int nvars = 2; nvars <= 4; ++nvars)
    for (int d = 0; d <= 6; ++d) {
      CHECK(degree_dim({Kind::exterior, nvars}, d) ==
            static_cast<long>(exterior_monomials(nvars, d).size()));
      CHECK(degree_dim({Kind::symmetric, nvars}, d) ==
            static_cast<long>(symmetric_monomials(nvars, d).size()));
    }
}

TEST_CASE("total dimension of the exterior algebra is 2^(n+1)") {
  for (int nvars = 2; nvars <= 5; ++nvars) {
    long total = 0;
    for (int d = -2; d <= nvars + 2; ++d) total += degree_dim({Kind::exterior, nvars}, d);
    CHECK(total == (1L << nvars));
  }
}

TEST_CASE("Koszul signs") {
  CHECK(monomial_sign({0}, {1}) == 1);
  CHECK(monomial_sign({1}, {0}) == -1);
  CHECK(monomial_sign({0}, {0}) == 0);
  CHECK(monomial_sign({0, 2}, {1}) == -1);   // one inversion: 2 > 1
  CHECK(monomial_sign({1, 2}, {0}) == 1);    // two inversions
  CHECK(monomial_sign({}, {0, 1, 2}) == 1);
}

TEST_CASE("sign symmetry under swapping the factors") {
  const std::vector<std::vector<int>> sets = {{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}, {}};
  for (const auto& A : sets)
    for (const auto& B : sets) {
      const int ab = monomial_sign(A, B);
      const int ba = monomial_sign(B, A);
      if (ab == 0) {
        CHECK(ba == 0);
      } else {
        const int expected = (A.size() * B.size()) % 2 == 0 ? ba : -ba;
        CHECK(ab == expected);
      }
    }
}

TEST_CASE("binomial polynomial extends the Euler characteristic") {
  CHECK(binomial_poly(3, 1) == rat(4));
  CHECK(binomial_poly(-2, 1) == rat(-1));
  CHECK(binomial_poly(-1, 2) == rat(0));
  CHECK(binomial_poly(-4, 2) == rat(3));   // (e+1)(e+2)/2 at e = -4
  CHECK(binomial_poly(2, 3) == rat(10));
  for (long e = 0; e <= 6; ++e)
    for (int n = 1; n <= 3; ++n) CHECK(binomial_poly(e, n) == rat(binomial(e + n, n)));
}

TEST_CASE("relation sets cover all pairs") {
  CHECK(relations({Kind::exterior, 3}).size() == 3 + 3);
  CHECK(relations({Kind::symmetric, 3}).size() == 3);
  CHECK(relations({Kind::twostep, 3}).size() == 9);
  CHECK(kind_from_name("exterior") == Kind::exterior);
  CHECK_THROWS_AS((void)kind_from_name("spooky"), input_error);
}
