#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homcat/qlinalg.hpp"

using namespace homcat;

namespace {

RatMatrix random_matrix(Rng& rng, int rows, int cols, int mag) {
  RatMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = rng.small_int(mag);
  return m;
}

bool is_zero_vec(const std::vector<Rat>& v) {
  for (const Rat& q : v)
    if (q != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("rank and kernel on the spec cases") {
  auto id2 = RatMatrix::identity(2);
  auto rk = rank_kernel(id2);
  CHECK(rk.rank == 2);
  CHECK(rk.kernel.dim() == 0);

  auto row = RatMatrix::from_ints(1, 2, {1, 1});
  rk = rank_kernel(row);
  CHECK(rk.rank == 1);
  REQUIRE(rk.kernel.dim() == 1);
  // spanned by (1, -1): the two coordinates are negatives of each other
  CHECK(rk.kernel.basis.at(0, 0) == -rk.kernel.basis.at(1, 0));
  CHECK(rk.kernel.basis.at(0, 0) != 0);

  auto ones = RatMatrix::from_ints(3, 3, {1, 1, 1, 1, 1, 1, 1, 1, 1});
  rk = rank_kernel(ones);
  CHECK(rk.rank == 1);
  CHECK(rk.kernel.dim() == 2);
}

TEST_CASE("empty shapes are first-class") {
  RatMatrix empty(0, 3);
  auto rk = rank_kernel(empty);
  CHECK(rk.rank == 0);
  CHECK(rk.kernel.dim() == 3);
  RatMatrix tall(3, 0);
  rk = rank_kernel(tall);
  CHECK(rk.rank == 0);
  CHECK(rk.kernel.dim() == 0);
}

TEST_CASE("solve on the spec cases") {
  auto id3 = RatMatrix::identity(3);
  std::vector<Rat> b = {rat(2), rat(-5), rat(1, 3)};
  auto x = solve(id3, b);
  REQUIRE(x.has_value());
  CHECK(*x == b);

  auto row = RatMatrix::from_ints(1, 2, {1, 1});
  x = solve(row, {rat(2)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] + (*x)[1] == rat(2));

  auto zero = RatMatrix(1, 1);
  CHECK_FALSE(solve(zero, {rat(1)}).has_value());

  CHECK_THROWS_AS((void)solve(row, {rat(1), rat(2)}), input_error);
}

TEST_CASE("quotient dimensions") {
  Subspace full{3, RatMatrix::identity(3)};
  CHECK(quotient_dim(full, full) == 0);

  Subspace line{3, RatMatrix::from_ints(3, 1, {1, 2, 3})};
  CHECK(quotient_dim(full, line) == 2);

  Subspace plane{3, RatMatrix::from_ints(3, 2, {1, 0, 0, 1, 0, 0})};
  Subspace diag{3, RatMatrix::from_ints(3, 1, {1, 1, 0})};
  CHECK(quotient_dim(plane, diag) == 1);

  Subspace outside{3, RatMatrix::from_ints(3, 1, {0, 0, 1})};
  CHECK_THROWS_AS((void)quotient_dim(plane, outside), input_error);
}

TEST_CASE("random properties: rank transpose, exact kernels, solve contract") {
  Rng rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    const int rows = 1 + static_cast<int>(rng.range(0, 5));
    const int cols = 1 + static_cast<int>(rng.range(0, 5));
    RatMatrix A = random_matrix(rng, rows, cols, 3);

    auto rk = rank_kernel(A);
    CHECK(rk.rank == rank_of(A.transposed()));
    CHECK(rk.rank + rk.kernel.dim() == cols);
    for (int c = 0; c < rk.kernel.dim(); ++c)
      CHECK(is_zero_vec(A.apply(rk.kernel.basis.col(c))));

    std::vector<Rat> b(rows);
    for (int r = 0; r < rows; ++r) b[r] = rng.small_int(3);
    auto x = solve(A, b);
    if (x) {
      CHECK(A.apply(*x) == b);
    } else {
      RatMatrix Ab = A.hstack(RatMatrix(rows, 1));
      Ab.set_col(cols, b);
      CHECK(rank_of(Ab) == rk.rank + 1);
    }
  }
}

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rat("3/6") == rat(1, 2));
  CHECK(parse_rat("-4/6") == rat(-2, 3));
  CHECK(parse_rat("7") == rat(7));
  CHECK(format_rat(rat(-2, 3)) == "-2/3");
  CHECK(format_rat(rat(5)) == "5");
  CHECK_THROWS_AS((void)parse_rat("1/0"), input_error);
  CHECK_THROWS_AS((void)parse_rat("x"), input_error);
}
