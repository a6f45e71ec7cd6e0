#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "orbk/rational.hpp"
#include "orbk/sectors.hpp"

namespace orbk {

/// Rational degree -> dimension; zero dimensions are never stored.
class GradedDimensions {
 public:
  void add(const Rational& degree, std::size_t count = 1);
  std::size_t at(const Rational& degree) const;
  const std::map<Rational, std::size_t>& entries() const noexcept { return entries_; }
  std::size_t total() const noexcept { return total_; }

  friend bool operator==(const GradedDimensions&, const GradedDimensions&) = default;

 private:
  std::map<Rational, std::size_t> entries_;
  std::size_t total_ = 0;
};

/// P(w_0, ..., w_n). Requires at least two weights, all >= 1, and
/// gcd(weights) = 1 so the orbifold is reduced.
class WeightedProjectiveSpace {
 public:
  explicit WeightedProjectiveSpace(std::vector<unsigned> weights);
  const std::vector<unsigned>& weights() const noexcept { return weights_; }
  std::size_t dimension() const noexcept { return weights_.size() - 1; }

 private:
  std::vector<unsigned> weights_;
};

struct WpsSector {
  Rational q;
  std::vector<unsigned> fixed_weights;
  Rational iota;
};

/// Age-graded table for [C^n/G] and [pt/G]: one class in degree 2*iota per sector.
GradedDimensions orbifold_poincare_linear(const InertiaDecomposition& dec);

/// Sectors q in ascending order, q = 0 first.
std::vector<WpsSector> wps_sectors(const WeightedProjectiveSpace& space);

GradedDimensions orbifold_poincare_wps(const WeightedProjectiveSpace& space);

std::size_t orbifold_euler(const InertiaDecomposition& dec);
std::size_t orbifold_euler(const WeightedProjectiveSpace& space);

struct McKayReport {
  std::size_t class_count = 0;
  GradedDimensions table;
  /// Total Betti number a crepant resolution must have.
  std::size_t predicted_betti = 0;
};

/// Throws NotSL if some element has determinant != 1, UnsupportedGeometry
/// for non-linear input.
McKayReport mckay_report(const InertiaDecomposition& dec);

/// dim H^d = dim H^(2n-d) for every degree d.
bool satisfies_duality(const GradedDimensions& table, std::size_t complex_dimension);

}  // namespace orbk
