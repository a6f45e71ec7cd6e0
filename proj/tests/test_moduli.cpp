#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "orbk/moduli.hpp"
#include "orbk/ring.hpp"
#include "orbk/suite.hpp"

using namespace orbk;
using namespace orbk::test;

TEST_CASE("type classification") {
  const auto s3 = close(groups::s3_permutation());
  const std::size_t t = class_with_order(s3, 2);
  const std::vector<ElementIndex> ids{0, 0, 0};
  CHECK(classify_type(s3, ids) == SectorTuple{{0, 0, 0}});
  const auto& members = s3.class_members(t);
  const std::vector<ElementIndex> two{members[0], members[1]};
  CHECK(classify_type(s3, two) == SectorTuple{{t, t}});

  const auto z4 = close(groups::z4_mixed());
  const ElementIndex g0 = find(z4, rows(4, {{"z", "0"}, {"0", "-1"}}));
  const std::vector<ElementIndex> pair{g0, z4.inverse(g0)};
  const auto type = classify_type(z4, pair);
  CHECK(type.class_indices[0] != type.class_indices[1]);
}

TEST_CASE("nonemptiness") {
  const auto s3 = close(groups::s3_permutation());
  const std::size_t t = class_with_order(s3, 2), r = class_with_order(s3, 3);
  CHECK(component_nonempty_ptG(s3, SectorTuple{{r, s3.inverse_class(r)}}));
  CHECK_FALSE(component_nonempty_ptG(s3, SectorTuple{{t, t, t}}));
  CHECK(component_nonempty_ptG(s3, SectorTuple{{t, t, r}}));
  CHECK_FALSE(component_nonempty_ptG(s3, SectorTuple{{t}}));
  CHECK(component_nonempty_ptG(s3, SectorTuple{{0}}));
}

TEST_CASE("k-point counts") {
  const auto s3 = close(groups::s3_permutation());
  const std::size_t t = class_with_order(s3, 2), r = class_with_order(s3, 3);
  CHECK(kpoint_constant_count(s3, SectorTuple{{r, r}}) == q(2, 6));
  CHECK(kpoint_constant_count(s3, SectorTuple{{t, t, r}}) == 1);
  CHECK(kpoint_constant_count(s3, SectorTuple{{t, t, t, t}}) == Rational(oracle::product_tuples(s3, {t, t, t, t})) / 6);

  const auto z2 = close(groups::cyclic_sl2(2));
  CHECK(kpoint_constant_count(z2, SectorTuple{{1, 1, 1, 1}}) == q(1, 2));
  CHECK(count_product_tuples(z2, std::vector<std::size_t>{1, 1, 1}) == 0);
}

TEST_CASE("counting engine agrees with pairing and three-point") {
  for (const auto& entry : builtin_corpus()) {
    const auto g = close(entry.input);
    if (g.order() > 24) continue;
    const std::size_t b = g.class_count();
    for (std::size_t i = 0; i < b; ++i) {
      for (std::size_t j = 0; j < b; ++j) {
        CHECK(kpoint_constant_count(g, SectorTuple{{i, j}}) == pairing_ptG(g, i, j));
        for (std::size_t k = 0; k < b; ++k) {
          const Rational count = kpoint_constant_count(g, SectorTuple{{i, j, k}});
          CHECK(count == threepoint_ptG(g, i, j, k));
          CHECK(count * static_cast<unsigned long>(g.order()) == Rational(oracle::product_tuples(g, {i, j, k})));
        }
      }
    }
  }
}

TEST_CASE("virtual dimension worked inputs") {
  CHECK(virtual_dimension({0, 0, 0, 3, {0, 0, 0}}) == 0);
  CHECK(virtual_dimension({0, 3, 0, 3, {0, 0, 0}}) == 6);
  CHECK(virtual_dimension({0, 2, 0, 3, {1, q(1, 2), q(1, 2)}}) == 0);
  CHECK(virtual_dimension({0, 1, 0, 3, {q(1, 3), q(1, 3), q(1, 3)}}) == 2 * (-2 + 3 - 1));
  CHECK(virtual_dimension({q(1, 2), 2, 1, 0, {}}) == 1);
}

TEST_CASE("virtual dimension is affine") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> small(0, 6), num(-9, 9), den(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    DimensionInput in;
    in.c1a = q(num(rng), static_cast<unsigned long>(den(rng)));
    in.complex_dim = static_cast<std::size_t>(small(rng));
    in.genus = static_cast<std::size_t>(small(rng) % 3);
    in.marks = static_cast<std::size_t>(small(rng));
    for (std::size_t i = 0; i < in.marks; ++i) in.iotas.push_back(q(small(rng), static_cast<unsigned long>(den(rng))));
    const Rational base = virtual_dimension(in);

    DimensionInput more = in;
    ++more.marks;
    more.iotas.push_back(0);
    CHECK(virtual_dimension(more) == base + 2);

    DimensionInput doubled = in;
    const std::size_t k = in.marks;
    doubled.marks += k;
    doubled.iotas.insert(doubled.iotas.end(), k, Rational(0));
    CHECK(virtual_dimension(doubled) == base + Rational(static_cast<unsigned long>(2 * k)));

    DimensionInput shifted = in;
    shifted.c1a += 1;
    CHECK(virtual_dimension(shifted) == base + 2);
  }
}
