#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orbk/error.hpp"
#include "orbk/rational.hpp"

namespace orbk {

namespace detail {
struct CyclotomicField;
}

/// A term c * zeta_N^e of an uncanonicalized sum.
struct CyclotomicTerm {
  Rational coefficient;
  std::int64_t exponent = 0;
};

/// Exact element of Q(zeta_N), stored in the power basis
/// 1, zeta, ..., zeta^(phi(N)-1) of Q[x]/Phi_N(x).
///
/// Every value is canonical, so equality is coefficient-wise. Values are
/// immutable; the per-conductor reduction data is shared read-only.
class Cyclotomic {
 public:
  /// Zero of Q (conductor 1).
  Cyclotomic();

  static Cyclotomic canonicalize(unsigned conductor, std::span<const CyclotomicTerm> raw);
  static Cyclotomic from_rational(unsigned conductor, const Rational& value);
  static Cyclotomic root_of_unity(unsigned conductor, std::int64_t exponent);
  static Cyclotomic zero(unsigned conductor) { return from_rational(conductor, 0); }
  static Cyclotomic one(unsigned conductor) { return from_rational(conductor, 1); }

  unsigned conductor() const noexcept;
  /// Length phi(conductor).
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  /// True when the element lies in Q.
  bool is_rational() const noexcept;
  /// The rational value; precondition is_rational().
  const Rational& rational_part() const noexcept { return coeffs_.front(); }

  Cyclotomic operator-() const;
  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic& operator+=(const Cyclotomic& other);
  Cyclotomic& operator-=(const Cyclotomic& other);
  Cyclotomic& operator*=(const Cyclotomic& other);

  Cyclotomic scaled(const Rational& factor) const;
  /// Multiplicative inverse; throws Error(InvalidArgument) on zero.
  Cyclotomic inverse() const;
  /// Complex conjugation zeta^k -> zeta^(N-k).
  Cyclotomic conjugate() const;
  /// Same element viewed in Q(zeta_M); requires conductor() | M.
  Cyclotomic embed(unsigned new_conductor) const;

  /// Exponent s in [0, order) with *this == zeta_order^s, if any.
  /// Works across conductors by lifting both sides to lcm(N, order).
  std::optional<std::int64_t> root_of_unity_exponent(std::int64_t order) const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  /// Lexicographic on coefficient vectors; conductors must match.
  friend std::strong_ordering compare(const Cyclotomic& a, const Cyclotomic& b);

  std::size_t hash() const noexcept;

  /// Rendering in the input expression grammar, e.g. "1 + -1/2*z^3".
  std::string to_expression() const;

 private:
  Cyclotomic(std::shared_ptr<const detail::CyclotomicField> field, std::vector<Rational> coeffs);
  static Cyclotomic reduce(std::shared_ptr<const detail::CyclotomicField> field,
                           std::vector<Rational>& by_exponent);

  std::shared_ptr<const detail::CyclotomicField> field_;
  std::vector<Rational> coeffs_;
};

/// Euler totient.
unsigned totient(unsigned n);

/// Coefficients of Phi_n, lowest degree first.
std::vector<Integer> cyclotomic_polynomial(unsigned n);

/// Syntax error inside a scalar expression; column is 1-based in the text.
class ExpressionSyntaxError : public Error {
 public:
  ExpressionSyntaxError(const std::string& message, std::size_t column)
      : Error(ErrorCode::SyntaxError, message), column_(column) {}
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

/// Parses the scalar expression grammar
///   expr := term (('+'|'-') term)* ; term := rational ('*' zpow)? | zpow ;
///   zpow := 'z' '^' integer | 'z' ; rational := integer ('/' positive-integer)?
/// with 'z' = zeta_conductor. Whitespace is ignored everywhere.
Cyclotomic parse_cyclotomic(std::string_view text, unsigned conductor);

}  // namespace orbk
