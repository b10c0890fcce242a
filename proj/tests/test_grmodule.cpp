#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homcat/grmodule.hpp"

using namespace homcat;

namespace {

const AlgebraKind ext2{Kind::exterior, 2};
const AlgebraKind ext3{Kind::exterior, 3};
const AlgebraKind sym2{Kind::symmetric, 2};
const AlgebraKind two2{Kind::twostep, 2};

bool same_module(const DegreewiseModule& a, const DegreewiseModule& b) {
  if (a.is_zero() && b.is_zero()) return true;
  if (a.lo != b.lo || a.dims != b.dims) return false;
  for (int j = 0; j < a.algebra.nvars; ++j)
    for (int d = a.lo; d < a.hi(); ++d)
      if (!(a.act(j, d) == b.act(j, d))) return false;
  return true;
}

std::vector<int> dims_of(const DegreewiseModule& m) { return m.dims; }

}  // namespace

TEST_CASE("free module shapes") {
  auto R2 = construct_free(ext2, {0});
  CHECK(R2.lo == 0);
  CHECK(dims_of(R2) == std::vector<int>{1, 2, 1});
  CHECK(validate(R2).ok);

  auto R3 = construct_free(ext3, {0});
  CHECK(dims_of(R3) == std::vector<int>{1, 3, 3, 1});
  CHECK(validate(R3).ok);

  auto S = construct_free(sym2, {0}, 3);
  CHECK(dims_of(S) == std::vector<int>{1, 2, 3, 4});
  CHECK(validate(S).ok);

  auto G = construct_free(two2, {0});
  CHECK(dims_of(G) == std::vector<int>{1, 2});
  CHECK(validate(G).ok);

  auto R2two = construct_free(ext2, {0, 1});
  CHECK(validate(R2two).ok);
  CHECK(R2two.total_dim() == 8);
}

TEST_CASE("validate flags broken relations") {
  ModuleBuilder b(ext2);
  b.set_dim(0, 1);
  b.set_dim(1, 1);
  b.set_dim(2, 1);
  b.set_action(0, 0, RatMatrix::from_ints(1, 1, {1}));
  b.set_action(0, 1, RatMatrix::from_ints(1, 1, {1}));
  auto m = b.finalize();
  auto rep = validate(m);
  CHECK_FALSE(rep.ok);
  REQUIRE_FALSE(rep.violations.empty());
  CHECK(rep.violations.front().relation == "square-zero");
  CHECK(rep.violations.front().var_a == 0);
  CHECK(rep.violations.front().degree == 0);
}

TEST_CASE("simple modules") {
  auto k = construct_simple(ext2, 0);
  CHECK(k.total_dim() == 1);
  CHECK(validate(k).ok);
  CHECK(validate(construct_simple(sym2, 2)).ok);
}

TEST_CASE("shift reindexes") {
  auto k = construct_simple(ext2, 0);
  auto k3 = shift(k, 3);
  CHECK(k3.dim(-3) == 1);
  CHECK(k3.total_dim() == 1);
  CHECK(same_module(shift(k3, -3), k));

  auto R = construct_free(ext2, {0});
  CHECK(same_module(shift(R, 1), construct_free(ext2, {-1})));
}

TEST_CASE("truncation") {
  auto R = construct_free(ext2, {0});
  auto J = truncate(R, 1);
  CHECK(J.lo == 1);
  CHECK(dims_of(J) == std::vector<int>{2, 1});
  CHECK(validate(J).ok);
  CHECK(same_module(truncate(R, 0), R));
  CHECK(same_module(truncate(R, -5), R));
  CHECK(truncate(construct_simple(ext2, 0), 1).is_zero());
}

TEST_CASE("direct sums") {
  auto k = construct_simple(ext2, 0);
  auto zero = zero_module(ext2);
  CHECK(same_module(direct_sum(k, zero), k));
  auto pair = direct_sum(k, shift(k, 1));
  CHECK(pair.dim(-1) == 1);
  CHECK(pair.dim(0) == 1);
  CHECK(validate(pair).ok);
  auto R = construct_free(ext2, {0});
  CHECK(validate(direct_sum(R, truncate(R, 1))).ok);
  CHECK_THROWS_AS((void)direct_sum(k, construct_simple(sym2, 0)), input_error);
}

TEST_CASE("graded dual") {
  auto k = construct_simple(ext2, 0);
  CHECK(same_module(graded_dual(k), k));

  auto R = construct_free(ext2, {0});
  auto dualR = graded_dual(R);
  CHECK(dualR.lo == -2);
  CHECK(dims_of(dualR) == std::vector<int>{1, 2, 1});
  CHECK(validate(dualR).ok);
  CHECK(same_module(graded_dual(dualR), R));
  CHECK_THROWS_AS((void)graded_dual(construct_simple(sym2, 0)), input_error);
}

TEST_CASE("hom0 dimensions from the spec") {
  auto k = construct_simple(ext2, 0);
  auto R = construct_free(ext2, {0});
  CHECK(hom0(k, k).dim == 1);
  CHECK(hom0(R, k).dim == 1);
  CHECK(hom0(k, R).dim == 0);
  for (const auto& f : hom0(R, k).basis) CHECK(is_module_map(f));
}

TEST_CASE("hom0 dimension is shift invariant") {
  auto R = construct_free(ext2, {0});
  auto J1 = shift(truncate(R, 1), 1);
  auto k = construct_simple(ext2, 0);
  for (int i = -2; i <= 2; ++i) {
    CHECK(hom0(shift(J1, i), shift(k, i)).dim == hom0(J1, k).dim);
    CHECK(hom0(shift(k, i), shift(J1, i)).dim == hom0(k, J1).dim);
  }
}

TEST_CASE("ext1 dimensions from the spec") {
  auto k = construct_simple(ext2, 0);
  CHECK(ext1_0(k, k).dim == 0);

  // Target simple sits one degree above the source: one scalar per variable,
  // no relations in reach, no coboundaries.
  auto k_up = construct_simple(ext2, 1);
  auto e = ext1_0(k, k_up);
  CHECK(e.dim == 2);
  auto e3 = ext1_0(construct_simple(ext3, 0), construct_simple(ext3, 1));
  CHECK(e3.dim == 3);

  for (const auto& cls : e.basis) {
    auto E = realize_extension(cls);
    CHECK(validate(E).ok);
    CHECK_FALSE(extension_is_zero(cls));
    CHECK_FALSE(is_isomorphic_0(E, direct_sum(k_up, k)));
  }
  ExtensionClass zero_cls;
  zero_cls.source = k;
  zero_cls.target = k_up;
  CHECK(extension_is_zero(zero_cls));
  CHECK(is_isomorphic_0(realize_extension(zero_cls), direct_sum(k_up, k)));
}

TEST_CASE("ext1 vanishes into free exterior modules") {
  auto R = construct_free(ext2, {0});
  auto k = construct_simple(ext2, 0);
  auto J = truncate(R, 1);
  CHECK(ext1_0(k, R).dim == 0);
  CHECK(ext1_0(J, R).dim == 0);
  CHECK(ext1_0(J, shift(R, 1)).dim == 0);
  Rng rng(7);
  for (int t = 0; t < 5; ++t) {
    auto m = random_module(ext2, {{0, 2}, {1, 2}, {2, 1}}, rng.fork());
    CHECK(ext1_0(m, R).dim == 0);
    CHECK(ext1_0(m, shift(R, -1)).dim == 0);
  }
}

TEST_CASE("the rigid two-step module of the spec") {
  ModuleBuilder b(two2);
  b.set_dim(0, 2);
  b.set_dim(1, 1);
  b.set_action(0, 0, RatMatrix::from_ints(1, 2, {1, 0}));
  b.set_action(1, 0, RatMatrix::from_ints(1, 2, {0, 1}));
  auto m = b.finalize();
  CHECK(validate(m).ok);
  CHECK(ext1_0(m, m).dim == 0);
  CHECK(hom0(m, m).dim == 1);
  auto rep = end0_is_local(m);
  CHECK(rep.local);
  CHECK(rep.residue_dim == 1);
}

TEST_CASE("endomorphism locality detects decomposables") {
  auto k = construct_simple(ext2, 0);
  auto rep = end0_is_local(k);
  CHECK(rep.local);
  CHECK(rep.residue_dim == 1);
  CHECK(rep.end_dim == 1);

  auto kk = direct_sum(k, k);
  rep = end0_is_local(kk);
  CHECK_FALSE(rep.local);
  CHECK(rep.end_dim == 4);

  auto R = construct_free(ext2, {0});
  CHECK_FALSE(end0_is_local(direct_sum(k, R)).local);
  CHECK_FALSE(end0_is_local(direct_sum(k, shift(k, 1))).local);
  CHECK_THROWS_AS((void)end0_is_local(zero_module(ext2)), input_error);
}

TEST_CASE("a field acting on the module is still local") {
  // Two-step module with x_0 = identity and x_1 = a rotation: End is the
  // Gaussian rationals, a field of dimension 2 and no idempotents.
  ModuleBuilder b(two2);
  b.set_dim(0, 2);
  b.set_dim(1, 2);
  b.set_action(0, 0, RatMatrix::identity(2));
  b.set_action(1, 0, RatMatrix::from_ints(2, 2, {0, -1, 1, 0}));
  auto m = b.finalize();
  REQUIRE(validate(m).ok);
  auto rep = end0_is_local(m);
  CHECK(rep.end_dim == 2);
  CHECK(rep.residue_dim == 2);
  CHECK(rep.local);
}

TEST_CASE("stripping free summands") {
  auto R = construct_free(ext2, {0});
  auto R2 = construct_free(ext2, {0, 0});
  auto k = construct_simple(ext2, 0);

  auto s = strip_free_summands(R2);
  CHECK(s.core.is_zero());
  CHECK(s.free_part == std::vector<int>{0, 0});

  s = strip_free_summands(k);
  CHECK(same_module(s.core, k));
  CHECK(s.free_part.empty());

  s = strip_free_summands(direct_sum(k, R));
  CHECK(s.free_part == std::vector<int>{0});
  CHECK(is_isomorphic_0(s.core, k));

  s = strip_free_summands(direct_sum(shift(R, 2), direct_sum(k, R)));
  CHECK(s.free_part == std::vector<int>{-2, 0});
  CHECK(is_isomorphic_0(s.core, k));

  // Idempotence.
  auto again = strip_free_summands(s.core);
  CHECK(again.free_part.empty());
}

TEST_CASE("isomorphism testing") {
  auto k = construct_simple(ext2, 0);
  auto R = construct_free(ext2, {0});
  CHECK(is_isomorphic_0(R, shift(shift(R, 1), -1)));
  CHECK_FALSE(is_isomorphic_0(k, shift(k, 1)));
  // Self-duality of the exterior algebra: the dual of R is free again.
  CHECK(is_isomorphic_0(graded_dual(R), construct_free(ext2, {-2})));
  CHECK(is_isomorphic_0(graded_dual(construct_free(ext3, {0})), construct_free(ext3, {-3})));
}

TEST_CASE("random modules are valid and deterministic") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    auto m = random_module(two2, {{0, 2}, {1, 1}}, seed);
    CHECK(validate(m).ok);
  }
  auto a = random_module(ext2, {{0, 2}, {1, 3}, {2, 2}}, 5);
  auto b2 = random_module(ext2, {{0, 2}, {1, 3}, {2, 2}}, 5);
  CHECK(same_module(a, b2));
  CHECK(validate(a).ok);
  auto c = random_module(ext2, {{0, 1}}, 9);
  CHECK(same_module(c, construct_simple(ext2, 0)));
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    CHECK(validate(random_module(ext3, {{0, 2}, {1, 3}, {2, 2}, {3, 1}}, seed)).ok);
    CHECK(validate(random_module(sym2, {{0, 2}, {1, 3}, {2, 3}}, seed)).ok);
  }
}

TEST_CASE("window clipping") {
  auto S = construct_free(sym2, {0}, 5);
  auto clipped = clip_window(S, 3);
  CHECK(clipped.horizon == 3);
  CHECK(clipped.hi() == 3);
  CHECK(clipped.dims == std::vector<int>{1, 2, 3, 4});
  CHECK(validate(clipped).ok);
}
