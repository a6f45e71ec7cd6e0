#include <doctest.h>

#include "helpers.hpp"
#include "orbk/cohomology.hpp"
#include "orbk/error.hpp"
#include "orbk/ring.hpp"
#include "orbk/sectors.hpp"
#include "orbk/suite.hpp"

using namespace orbk;
using namespace orbk::test;

namespace {

OrbClass combo(std::initializer_list<std::pair<std::size_t, Rational>> terms) {
  OrbClass c;
  for (const auto& [s, x] : terms) c.add(s, x);
  return c;
}

}  // namespace

TEST_CASE("S3 three-point and pairing values") {
  const auto g = close(groups::s3_permutation());
  const std::size_t one = 0, t = class_with_order(g, 2), r = class_with_order(g, 3);
  CHECK(threepoint_ptG(g, t, t, r) == 1);
  CHECK(threepoint_ptG(g, t, r, t) == 1);
  CHECK(threepoint_ptG(g, t, t, t) == 0);
  CHECK(threepoint_ptG(g, t, t, one) == q(1, 2));
  CHECK(threepoint_ptG(g, r, r, one) == q(1, 3));
  CHECK(pairing_ptG(g, one, one) == q(1, 6));
  CHECK(pairing_ptG(g, t, t) == q(1, 2));
  CHECK(pairing_ptG(g, t, r) == 0);
}

TEST_CASE("point quotient products") {
  const auto s3 = close(groups::s3_permutation());
  const std::size_t t = class_with_order(s3, 2), r = class_with_order(s3, 3);
  const auto via = cup_product_ptG(s3, OrbClass::basis(t), OrbClass::basis(t));
  CHECK(via == combo({{0, 3}, {r, 3}}));
  const auto table = ring_table_ptG(s3);
  CHECK(table.product(t, t) == combo({{0, 3}, {r, 3}}));
  CHECK(table.product(t, r) == combo({{t, 2}}));
  CHECK(table.product(r, r) == combo({{0, 2}, {r, 1}}));
  const OrbClass x = combo({{t, q(1, 2)}, {r, -3}});
  CHECK(cup_product_ptG(s3, OrbClass::basis(0), x) == x);
  REQUIRE(table.gram);
  CHECK(rational_determinant(*table.gram) == q(1, 36));

  const auto z2 = close(groups::cyclic_sl2(2));
  CHECK(cup_product_ptG(z2, OrbClass::basis(1), OrbClass::basis(1)) == OrbClass::basis(0));
}

TEST_CASE("structure constants match the class-sum convolution") {
  for (const auto& entry : builtin_corpus()) {
    const auto g = close(entry.input);
    if (g.order() > 24) continue;
    const auto table = ring_table_ptG(g);
    const auto conv = oracle::class_sum_convolution(g);
    for (std::size_t a = 0; a < g.class_count(); ++a) {
      for (std::size_t b = 0; b < g.class_count(); ++b) {
        for (std::size_t d = 0; d < g.class_count(); ++d) CHECK(table.structure[a][b][d] == Rational(conv[a][b][d]));
      }
    }
  }
}

TEST_CASE("axioms on point quotients") {
  for (const auto& in : {groups::s3_permutation(), groups::quaternion(), groups::klein_four(), groups::cyclic_sl2(7)}) {
    const auto group = close_group(in);
    const auto dec = inertia(group, Geometry::point);
    const auto report = verify_ring_axioms(ring_table_ptG(*group), orbifold_poincare_linear(dec));
    for (const auto& c : report.checks) CHECK_MESSAGE(c.passed, c.name << ": " << c.counterexample);
    CHECK(report.find("frobenius") != nullptr);
    CHECK(report.find("associativity")->cases == group->class_count() * group->class_count() * group->class_count());
  }
}

TEST_CASE("abelian linear ring on C/Z3") {
  const auto dec = inertia(close_group(groups::cyclic_gl1(3)), Geometry::linear);
  const auto& g = dec.group();
  const ElementIndex z = find(g, rows(3, {{"z"}}));
  const ElementIndex z2 = g.multiply(z, z);
  const auto s = [&](ElementIndex e) { return dec.sector_of(e); };
  CHECK(cup_product_abelian_linear(dec, s(z), s(z)) == OrbClass::basis(s(z2)));
  CHECK(cup_product_abelian_linear(dec, s(z), s(z2)).is_zero());
  CHECK(cup_product_abelian_linear(dec, 0, s(z)) == OrbClass::basis(s(z)));
  const auto table = ring_table_abelian_linear(dec);
  CHECK_FALSE(table.gram.has_value());
  CHECK(verify_ring_axioms(table, orbifold_poincare_linear(dec)).passed());
}

TEST_CASE("truncated powers on C/Zn") {
  for (unsigned n = 2; n <= 9; ++n) {
    const auto dec = inertia(close_group(groups::cyclic_gl1(n)), Geometry::linear);
    const auto& g = dec.group();
    const ElementIndex zeta = g.generator_indices().front();
    const auto table = ring_table_abelian_linear(dec);
    OrbClass power = OrbClass::basis(dec.sector_of(zeta));
    ElementIndex expected = zeta;
    for (unsigned k = 2; k < n; ++k) {
      power = table.multiply(power, OrbClass::basis(dec.sector_of(zeta)));
      expected = g.multiply(expected, zeta);
      CHECK(power == OrbClass::basis(dec.sector_of(expected)));
    }
    CHECK(table.multiply(power, OrbClass::basis(dec.sector_of(zeta))).is_zero());
  }
}

TEST_CASE("abelian ring refusals") {
  const auto s3 = inertia(close_group(groups::s3_permutation()), Geometry::linear);
  try {
    (void)ring_table_abelian_linear(s3);
    FAIL("non-abelian accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonAbelian);
  }
}

TEST_CASE("rational determinant") {
  CHECK(rational_determinant({{q(1, 2), 0}, {0, q(1, 3)}}) == q(1, 6));
  CHECK(rational_determinant({{0, 1}, {1, 0}}) == -1);
  CHECK(rational_determinant({{1, 2}, {2, 4}}) == 0);
}
