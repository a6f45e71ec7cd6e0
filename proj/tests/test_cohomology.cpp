#include <doctest.h>

#include "helpers.hpp"
#include "orbk/cohomology.hpp"
#include "orbk/error.hpp"
#include "orbk/sectors.hpp"

using namespace orbk;
using namespace orbk::test;

namespace {

GradedDimensions table(std::initializer_list<std::pair<Rational, std::size_t>> entries) {
  GradedDimensions t;
  for (const auto& [d, n] : entries) t.add(d, n);
  return t;
}

InertiaDecomposition linear(const MatrixGroupInput& in) { return inertia(close_group(in), Geometry::linear); }

}  // namespace

TEST_CASE("linear and point tables") {
  const auto s3 = inertia(close_group(groups::s3_permutation()), Geometry::point);
  CHECK(orbifold_poincare_linear(s3) == table({{0, 3}}));
  CHECK(orbifold_euler(s3) == 3);

  CHECK(orbifold_poincare_linear(linear(groups::cyclic_sl2(2))) == table({{0, 1}, {2, 1}}));
  CHECK(orbifold_poincare_linear(linear(groups::cyclic_gl1(3))) == table({{0, 1}, {q(2, 3), 1}, {q(4, 3), 1}}));
  for (unsigned n = 2; n <= 12; ++n) CHECK(orbifold_euler(linear(groups::cyclic_sl2(n))) == n);
}

TEST_CASE("weighted projective sectors") {
  const auto p111 = wps_sectors(WeightedProjectiveSpace({1, 1, 1}));
  REQUIRE(p111.size() == 1);
  CHECK(p111[0].q == 0);
  CHECK(p111[0].iota == 0);

  const auto p112 = wps_sectors(WeightedProjectiveSpace({1, 1, 2}));
  REQUIRE(p112.size() == 2);
  CHECK(p112[0].q == 0);
  CHECK(p112[1].q == q(1, 2));
  CHECK(p112[1].fixed_weights == std::vector<unsigned>{2});
  CHECK(p112[1].iota == 1);

  const auto p12 = wps_sectors(WeightedProjectiveSpace({1, 2}));
  REQUIRE(p12.size() == 2);
  CHECK(p12[1].iota == q(1, 2));

  const auto p235 = wps_sectors(WeightedProjectiveSpace({2, 3, 5}));
  std::vector<Rational> qs;
  for (const auto& s : p235) qs.push_back(s.q);
  CHECK(std::is_sorted(qs.begin(), qs.end()));
  // {0} u {1/2} u {1/3, 2/3} u {1/5 .. 4/5}
  CHECK(qs.size() == 8);
}

TEST_CASE("weighted projective tables") {
  CHECK(orbifold_poincare_wps(WeightedProjectiveSpace({1, 1, 1})) == table({{0, 1}, {2, 1}, {4, 1}}));
  CHECK(orbifold_poincare_wps(WeightedProjectiveSpace({1, 1, 2})) == table({{0, 1}, {2, 2}, {4, 1}}));
  CHECK(orbifold_poincare_wps(WeightedProjectiveSpace({1, 2})) == table({{0, 1}, {1, 1}, {2, 1}}));
  CHECK(orbifold_euler(WeightedProjectiveSpace({1, 1, 2})) == 4);
  CHECK(orbifold_euler(WeightedProjectiveSpace({1, 2})) == 3);
}

TEST_CASE("duality over the weight corpus") {
  const auto corpus = wps_corpus(10);
  CHECK(corpus.size() > 24);
  for (const auto& w : corpus) {
    const WeightedProjectiveSpace space(w);
    const auto t = orbifold_poincare_wps(space);
    CHECK(satisfies_duality(t, space.dimension()));
    CHECK(t.total() == orbifold_euler(space));
  }
  CHECK_FALSE(satisfies_duality(table({{0, 1}, {1, 1}}), 1));
}

TEST_CASE("weight validation") {
  CHECK_THROWS_AS(WeightedProjectiveSpace({1}), Error);
  CHECK_THROWS_AS(WeightedProjectiveSpace({0, 1}), Error);
  CHECK_THROWS_AS(WeightedProjectiveSpace({2, 4}), Error);
}

TEST_CASE("mckay reports") {
  for (unsigned n = 2; n <= 12; ++n) {
    const auto r = mckay_report(linear(groups::cyclic_sl2(n)));
    CHECK(r.class_count == n);
    CHECK(r.table == table({{0, 1}, {2, n - 1}}));
    CHECK(r.predicted_betti == n);
  }
  const auto q8 = mckay_report(linear(groups::quaternion()));
  CHECK(q8.class_count == 5);
  CHECK(q8.table == table({{0, 1}, {2, 4}}));
  try {
    (void)mckay_report(linear(groups::cyclic_gl1(3)));
    FAIL("non-SL accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSL);
  }
}
