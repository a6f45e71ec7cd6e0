#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orbk/cohomology.hpp"
#include "orbk/fingroup.hpp"
#include "orbk/rational.hpp"
#include "orbk/report.hpp"
#include "orbk/sectors.hpp"

namespace orbk {

/// Element of H*_orb in the sector basis e_(g); zero coefficients are dropped.
class OrbClass {
 public:
  OrbClass() = default;
  static OrbClass basis(std::size_t sector);

  void add(std::size_t sector, const Rational& coefficient);
  Rational coefficient(std::size_t sector) const;
  const std::map<std::size_t, Rational>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  OrbClass scaled(const Rational& factor) const;
  friend OrbClass operator+(const OrbClass& a, const OrbClass& b);
  friend bool operator==(const OrbClass&, const OrbClass&) = default;

 private:
  std::map<std::size_t, Rational> coeffs_;
};

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Pairing and structure constants e_a * e_b = sum_d c[a][b][d] e_d over the
/// sector basis (basis position i is sector i).
struct RingTable {
  enum class Model { point_quotient, abelian_linear };

  Model model = Model::point_quotient;
  std::vector<Rational> degrees;
  /// Absent for non-compact linear quotients, where no pairing is defined.
  std::optional<RationalMatrix> gram;
  std::vector<RationalMatrix> structure;
  std::size_t unit = 0;
  std::string normalization;

  std::size_t size() const noexcept { return degrees.size(); }
  OrbClass product(std::size_t a, std::size_t b) const;
  OrbClass multiply(const OrbClass& a, const OrbClass& b) const;
  /// <a, b> from the Gram matrix; requires gram.
  Rational pair(const OrbClass& a, const OrbClass& b) const;
};

/// (1/|G|) #{(a, b, c) in C1 x C2 x C3 : abc = 1}.
Rational threepoint_ptG(const FiniteMatrixGroup& group, std::size_t c1, std::size_t c2, std::size_t c3);

/// (1/|G|) #{(a, b) in C1 x C2 : ab = 1}.
Rational pairing_ptG(const FiniteMatrixGroup& group, std::size_t c1, std::size_t c2);

/// Class-algebra table of [pt/G]: indices raised through the Gram matrix.
RingTable ring_table_ptG(const FiniteMatrixGroup& group);

OrbClass cup_product_ptG(const FiniteMatrixGroup& group, const OrbClass& a, const OrbClass& b);

/// e_g * e_h = e_gh when iota(g) + iota(h) = iota(gh), else 0. Throws
/// NonAbelian, UnsupportedGeometry.
RingTable ring_table_abelian_linear(const InertiaDecomposition& dec);

OrbClass cup_product_abelian_linear(const InertiaDecomposition& dec, std::size_t a, std::size_t b);

/// Determinant of a square rational matrix by Gaussian elimination.
Rational rational_determinant(RationalMatrix m);

/// Checks named "associativity", "unit", "supercommutativity", "degree_additivity",
/// "graded_dimensions", "nontwisted_subring", plus "frobenius", "gram_symmetric",
/// "gram_nondegenerate" when a pairing exists.
VerificationReport verify_ring_axioms(const RingTable& table, const GradedDimensions& graded);

}  // namespace orbk
