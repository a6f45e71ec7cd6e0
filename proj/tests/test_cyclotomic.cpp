#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "orbk/error.hpp"

using namespace orbk;
using orbk::test::cyc;
using orbk::test::q;

namespace {

std::vector<Rational> coeffs(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.push_back(q(x));
  return out;
}

Cyclotomic random_element(std::mt19937& rng, unsigned n) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4), exp(0, 2 * static_cast<int>(n));
  std::vector<CyclotomicTerm> terms;
  for (int i = 0; i < 4; ++i) terms.push_back({q(num(rng), static_cast<unsigned long>(den(rng))), exp(rng)});
  return Cyclotomic::canonicalize(n, terms);
}

}  // namespace

TEST_CASE("canonical reduction modulo the cyclotomic polynomial") {
  const std::vector<CyclotomicTerm> i_squared{{q(1), 2}};
  CHECK(Cyclotomic::canonicalize(4, i_squared) == Cyclotomic::from_rational(4, -1));

  const std::vector<CyclotomicTerm> sum3{{q(1), 0}, {q(1), 1}, {q(1), 2}};
  CHECK(Cyclotomic::canonicalize(3, sum3).is_zero());

  // zeta_8 + zeta_8^7 with zeta^4 = -1 gives zeta - zeta^3.
  const std::vector<CyclotomicTerm> sqrt2{{q(1), 1}, {q(1), 7}};
  CHECK(Cyclotomic::canonicalize(8, sqrt2).coefficients() == coeffs({0, 1, 0, -1}));

  const std::vector<CyclotomicTerm> negative{{q(1), -1}};
  CHECK(Cyclotomic::canonicalize(5, negative) == Cyclotomic::root_of_unity(5, 4));
}

TEST_CASE("multiplication") {
  CHECK((Cyclotomic::root_of_unity(8, 1) * Cyclotomic::root_of_unity(8, 7)).is_one());
  CHECK(((cyc("1 + z", 3)) * cyc("1 + z^2", 3)).is_one());
  CHECK((Cyclotomic::zero(7) * cyc("3/2*z^5 + 1", 7)).is_zero());
  try {
    (void)(Cyclotomic::one(3) * Cyclotomic::one(4));
    FAIL("mixed conductors multiplied");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ConductorMismatch);
  }
}

TEST_CASE("embedding between conductors") {
  CHECK(Cyclotomic::root_of_unity(2, 1).embed(4) == Cyclotomic::from_rational(4, -1));
  CHECK(Cyclotomic::from_rational(1, q(5, 3)).embed(12) == Cyclotomic::from_rational(12, q(5, 3)));
  // zeta_3 = zeta_6^2 = zeta_6 - 1 under x^2 - x + 1.
  CHECK(Cyclotomic::root_of_unity(3, 1).embed(6).coefficients() == coeffs({-1, 1}));
  CHECK_THROWS(Cyclotomic::root_of_unity(3, 1).embed(4));
  const Cyclotomic x = cyc("2 + -1/3*z^2 + z^3", 5);
  CHECK(x.embed(15) == x);
  CHECK(x.embed(15).conductor() == 15);
}

TEST_CASE("complex conjugation") {
  CHECK(Cyclotomic::root_of_unity(4, 1).conjugate() == -Cyclotomic::root_of_unity(4, 1));
  CHECK(Cyclotomic::from_rational(9, q(3, 7)).conjugate() == Cyclotomic::from_rational(9, q(3, 7)));
  // 1 + zeta_3^2 = -zeta_3
  CHECK(cyc("1 + z", 3).conjugate().coefficients() == coeffs({0, -1}));
}

TEST_CASE("field laws on random elements") {
  std::mt19937 rng(20261014);
  for (unsigned n : {1u, 2u, 3u, 4u, 5u, 6u, 8u, 12u}) {
    for (int trial = 0; trial < 30; ++trial) {
      const Cyclotomic a = random_element(rng, n), b = random_element(rng, n), c = random_element(rng, n);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
      CHECK(a.conjugate().conjugate() == a);
      CHECK(((a - b) == Cyclotomic::zero(n)) == (a == b));
      if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
      CHECK(Cyclotomic::canonicalize(n, std::vector<CyclotomicTerm>{}).is_zero());
    }
  }
}

TEST_CASE("root of unity exponents") {
  CHECK(Cyclotomic::root_of_unity(12, 5).root_of_unity_exponent(12) == 5);
  CHECK(Cyclotomic::one(6).root_of_unity_exponent(3) == 0);
  CHECK(Cyclotomic::from_rational(4, -1).root_of_unity_exponent(2) == 1);
  CHECK_FALSE(Cyclotomic::from_rational(4, 2).root_of_unity_exponent(4).has_value());
  CHECK_FALSE(Cyclotomic::root_of_unity(8, 1).root_of_unity_exponent(4).has_value());
}

TEST_CASE("totient and cyclotomic polynomials") {
  CHECK(totient(1) == 1);
  CHECK(totient(12) == 4);
  CHECK(totient(97) == 96);
  CHECK(cyclotomic_polynomial(6) == std::vector<Integer>{1, -1, 1});
  CHECK(cyclotomic_polynomial(8) == std::vector<Integer>{1, 0, 0, 0, 1});
}

TEST_CASE("expression grammar") {
  const Cyclotomic x = cyc("1/2*z^3 + -1/2*z", 8);
  CHECK(x.coefficients() == std::vector<Rational>{0, q(-1, 2), 0, q(1, 2)});
  CHECK(cyc(" z ^ 2 ", 4) == Cyclotomic::from_rational(4, -1));
  CHECK(cyc("z^-1", 4) == Cyclotomic::root_of_unity(4, 3));
  CHECK(cyc("3 - z + z", 5) == Cyclotomic::from_rational(5, 3));
  CHECK(cyc("-1*z", 4) == -Cyclotomic::root_of_unity(4, 1));
  CHECK(cyc("1 2", 1) == Cyclotomic::from_rational(1, 12));
  CHECK(cyc("6/4", 1) == Cyclotomic::from_rational(1, q(3, 2)));

  const auto column_of = [](const char* text) {
    try {
      (void)parse_cyclotomic(text, 8);
    } catch (const ExpressionSyntaxError& e) {
      return e.column();
    }
    return std::size_t{0};
  };
  CHECK(column_of("") == 1);
  CHECK(column_of("-z") > 0);
  CHECK(column_of("1 +") == 4);
  CHECK(column_of("1/0") == 3);
  CHECK(column_of("2*") == 3);
  CHECK(column_of("z^") == 3);
  CHECK(column_of("y") == 1);
}

TEST_CASE("expressions round-trip through to_expression") {
  std::mt19937 rng(7);
  for (unsigned n : {1u, 3u, 4u, 8u, 12u}) {
    for (int trial = 0; trial < 20; ++trial) {
      const Cyclotomic a = random_element(rng, n);
      CHECK(parse_cyclotomic(a.to_expression(), n) == a);
    }
  }
  CHECK(Cyclotomic::zero(5).to_expression() == "0");
}
