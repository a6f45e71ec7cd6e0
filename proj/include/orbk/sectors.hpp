#pragma once

#include <cstddef>
#include <memory>
#include <string_view>
#include <vector>

#include "orbk/fingroup.hpp"
#include "orbk/rational.hpp"
#include "orbk/report.hpp"

namespace orbk {

enum class Geometry { point, linear, wps };

std::string_view to_string(Geometry g);

/// One twisted (or the nontwisted) sector of a global quotient.
struct Sector {
  std::size_t class_index = 0;
  Rational iota;
  std::size_t fixed_dim = 0;
  std::size_t inverse_sector = 0;
};

/// Inertia decomposition of [C^n/G] or [pt/G]: one sector per conjugacy
/// class, sector i belonging to class i.
class InertiaDecomposition {
 public:
  InertiaDecomposition(std::shared_ptr<const FiniteMatrixGroup> group, Geometry geometry,
                       std::vector<Sector> sectors);

  const FiniteMatrixGroup& group() const noexcept { return *group_; }
  const std::shared_ptr<const FiniteMatrixGroup>& group_ptr() const noexcept { return group_; }
  Geometry geometry() const noexcept { return geometry_; }
  const std::vector<Sector>& sectors() const noexcept { return sectors_; }
  const Sector& sector(std::size_t i) const { return sectors_.at(i); }
  /// Complex dimension of the orbifold: 0 for [pt/G], n for [C^n/G].
  std::size_t dimension() const noexcept;
  /// Sector containing element g.
  std::size_t sector_of(ElementIndex g) const { return group_->class_of(g); }

 private:
  std::shared_ptr<const FiniteMatrixGroup> group_;
  Geometry geometry_;
  std::vector<Sector> sectors_;
};

/// Sum of k/m over eigenvalues exp(2 pi i k/m), 0 <= k < m.
Rational degree_shift(const EigenvalueProfile& profile);

/// Age of a single element, for point geometry always 0.
Rational element_degree_shift(const FiniteMatrixGroup& group, ElementIndex g, Geometry geometry);

InertiaDecomposition inertia(std::shared_ptr<const FiniteMatrixGroup> group,
                             Geometry geometry = Geometry::linear);

/// Checks named "sl_integrality", "determinant_congruence", "complement_dimension",
/// "positivity", "involution".
VerificationReport check_lemma21(const InertiaDecomposition& dec);

}  // namespace orbk
