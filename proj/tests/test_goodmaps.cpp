#include <doctest.h>

#include "helpers.hpp"
#include "orbk/error.hpp"
#include "orbk/goodmaps.hpp"

using namespace orbk;
using namespace orbk::test;

TEST_CASE("Z4 with g = g0^2 is not good") {
  const auto g = close(groups::z4_mixed());
  const ElementIndex g0 = find(g, rows(4, {{"z", "0"}, {"0", "-1"}}));
  const ElementIndex g0sq = g.multiply(g0, g0);
  const auto v = fixed_locus_goodness(g, g0sq);
  CHECK_FALSE(v.good);
  CHECK(v.problem.centralizer.size() == 4);
  CHECK(v.problem.kernel == std::vector<ElementIndex>{0, g0sq});
  CHECK(v.problem.quotient_order == 2);
  CHECK(v.splittings.empty());
  CHECK(goodness_via_lifts(g, g0sq) == false);

  // W = H^g is the second axis; g0 and g0^3 act there by -1 but have order 4.
  LiftProblem p;
  p.axes = {1};
  p.order = 2;
  p.character = 1;
  try {
    (void)enumerate_equivariant_lifts(g, p);
    FAIL("lifts found");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoLifts);
  }
}

TEST_CASE("Z2 + Z2 has two compatible systems") {
  const auto g = close(groups::klein_four());
  LiftProblem p;
  p.axes = {0};
  p.order = 2;
  p.character = 1;
  const auto set = enumerate_equivariant_lifts(g, p);
  const ElementIndex a = find(g, rows(1, {{"-1", "0"}, {"0", "1"}}));
  const ElementIndex ab = find(g, rows(1, {{"-1", "0"}, {"0", "-1"}}));
  std::vector<ElementIndex> expected{a, ab};
  std::sort(expected.begin(), expected.end());
  CHECK(set.lifts == expected);
  CHECK(set.classes.size() == 2);
  CHECK(set.stabilizer.size() == 2);

  for (const char* diag : {"-1", "1"}) {
    const Matrix m = std::string(diag) == "-1" ? rows(1, {{"-1", "0"}, {"0", "1"}}) : rows(1, {{"1", "0"}, {"0", "-1"}});
    const auto v = fixed_locus_goodness(g, find(g, m));
    CHECK(v.good);
    CHECK(v.problem.quotient_order == 2);
    CHECK(v.classes >= 1);
    CHECK(goodness_via_lifts(g, find(g, m)) == true);
  }
}

TEST_CASE("single lift on the whole space") {
  const auto g = close(groups::cyclic_sl2(2));
  LiftProblem p;
  p.axes = {0, 1};
  p.order = 2;
  p.character = 1;
  const auto set = enumerate_equivariant_lifts(g, p);
  CHECK(set.lifts.size() == 1);
  CHECK(set.classes.size() == 1);
}

TEST_CASE("characters must be primitive; permutations never act by -1 on an axis") {
  const auto g = close(groups::s3_permutation());
  LiftProblem p;
  p.axes = {2};
  p.order = 2;
  p.character = 0;
  CHECK_THROWS_AS(find_equivariant_lifts(g, p), Error);
  p.character = 1;
  CHECK(find_equivariant_lifts(g, p).lifts.empty());
}

TEST_CASE("trivial quotient is good") {
  const auto g = close(groups::cyclic_gl1(5));
  // every non-identity element fixes only the origin on C
  try {
    (void)fixed_locus_goodness(g, 1);
    FAIL("trivial fixed space accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TrivialFixedSpace);
  }
  const auto s3 = close(groups::s3_permutation());
  const ElementIndex t = s3.class_representative(class_with_order(s3, 2));
  const auto v = fixed_locus_goodness(s3, t);
  // t fixes its own fixed plane, so C(t) = K_t and the quotient is trivial.
  CHECK(v.problem.kernel.size() == 2);
  CHECK(v.problem.quotient_order == 1);
  CHECK(v.good);
  CHECK(v.splittings.size() == 1);
  try {
    (void)fixed_locus_goodness(s3, 0);
    FAIL("identity accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IdentityElement);
  }
}

TEST_CASE("nodal condition") {
  const auto g = close(groups::cyclic_gl1(5));
  const ElementIndex x = 1;
  CHECK(nodal_check(g, x, g.inverse(x)));
  CHECK_FALSE(nodal_check(g, x, x));
  const auto s3 = close(groups::s3_permutation());
  const ElementIndex t = s3.class_representative(class_with_order(s3, 2));
  const ElementIndex r = s3.class_representative(class_with_order(s3, 3));
  CHECK(nodal_check(s3, t, t));
  try {
    (void)nodal_check(s3, t, r);
    FAIL("orders differ");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OrderMismatch);
  }
}
