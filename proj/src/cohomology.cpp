#include "orbk/cohomology.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "orbk/error.hpp"

namespace orbk {

void GradedDimensions::add(const Rational& degree, std::size_t count) {
  if (count == 0) return;
  entries_[degree] += count;
  total_ += count;
}

std::size_t GradedDimensions::at(const Rational& degree) const {
  const auto it = entries_.find(degree);
  return it == entries_.end() ? 0 : it->second;
}

WeightedProjectiveSpace::WeightedProjectiveSpace(std::vector<unsigned> weights)
    : weights_(std::move(weights)) {
  if (weights_.size() < 2) {
    throw Error(ErrorCode::SemanticError, "weighted projective space needs at least two weights");
  }
  unsigned g = 0;
  for (unsigned w : weights_) {
    if (w == 0) throw Error(ErrorCode::SemanticError, "weights must be positive");
    g = std::gcd(g, w);
  }
  if (g != 1) {
    throw Error(ErrorCode::SemanticError, "weights have common factor " + std::to_string(g) +
                                              "; the action is not effective");
  }
}

GradedDimensions orbifold_poincare_linear(const InertiaDecomposition& dec) {
  GradedDimensions table;
  for (const auto& s : dec.sectors()) table.add(2 * s.iota);
  return table;
}

std::vector<WpsSector> wps_sectors(const WeightedProjectiveSpace& space) {
  std::set<Rational> qs;
  for (unsigned w : space.weights()) {
    for (unsigned k = 0; k < w; ++k) {
      Rational q(k, w);
      q.canonicalize();
      qs.insert(q);
    }
  }
  std::vector<WpsSector> out;
  out.reserve(qs.size());
  for (const auto& q : qs) {
    WpsSector s{q, {}, 0};
    for (unsigned w : space.weights()) {
      const Rational qw = q * w;
      if (is_integral(qw)) {
        s.fixed_weights.push_back(w);
      } else {
        s.iota += frac(qw);
      }
    }
    out.push_back(std::move(s));
  }
  return out;
}

GradedDimensions orbifold_poincare_wps(const WeightedProjectiveSpace& space) {
  GradedDimensions table;
  for (const auto& s : wps_sectors(space)) {
    // H^*(P(fixed weights); Q) has one class in each even degree 0..2d.
    for (std::size_t j = 0; j < s.fixed_weights.size(); ++j) {
      table.add(2 * s.iota + Rational(static_cast<unsigned long>(2 * j)));
    }
  }
  return table;
}

std::size_t orbifold_euler(const InertiaDecomposition& dec) { return dec.sectors().size(); }

std::size_t orbifold_euler(const WeightedProjectiveSpace& space) {
  std::size_t chi = 0;
  for (const auto& s : wps_sectors(space)) chi += s.fixed_weights.size();
  return chi;
}

McKayReport mckay_report(const InertiaDecomposition& dec) {
  if (dec.geometry() != Geometry::linear) {
    throw Error(ErrorCode::UnsupportedGeometry, "McKay check needs a linear quotient");
  }
  const auto& group = dec.group();
  for (ElementIndex g = 0; g < group.order(); ++g) {
    if (!determinant(group.element(g)).is_one()) {
      throw Error(ErrorCode::NotSL, "element " + std::to_string(g) + " (word '" +
                                        format_word(group.word(g)) + "') has determinant " +
                                        determinant(group.element(g)).to_expression());
    }
  }
  McKayReport report;
  report.class_count = group.class_count();
  report.table = orbifold_poincare_linear(dec);
  report.predicted_betti = report.class_count;
  for (const auto& [degree, dim] : report.table.entries()) {
    if (!is_integral(degree)) {
      throw Error(ErrorCode::InternalInconsistency, "non-integral degree in an SL quotient");
    }
  }
  return report;
}

bool satisfies_duality(const GradedDimensions& table, std::size_t complex_dimension) {
  const Rational top(static_cast<unsigned long>(2 * complex_dimension));
  return std::all_of(table.entries().begin(), table.entries().end(),
                     [&](const auto& entry) { return table.at(top - entry.first) == entry.second; });
}

}  // namespace orbk
