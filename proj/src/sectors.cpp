#include "orbk/sectors.hpp"

#include <string>

#include "orbk/error.hpp"

namespace orbk {

std::string_view to_string(Geometry g) {
  switch (g) {
    case Geometry::point: return "point";
    case Geometry::linear: return "linear";
    case Geometry::wps: return "wps";
  }
  return "unknown";
}

InertiaDecomposition::InertiaDecomposition(std::shared_ptr<const FiniteMatrixGroup> group,
                                           Geometry geometry, std::vector<Sector> sectors)
    : group_(std::move(group)), geometry_(geometry), sectors_(std::move(sectors)) {
  if (!group_) throw Error(ErrorCode::InvalidArgument, "inertia decomposition needs a group");
  if (geometry_ == Geometry::wps) {
    throw Error(ErrorCode::UnsupportedGeometry, "matrix-group inertia is for point or linear geometry");
  }
}

std::size_t InertiaDecomposition::dimension() const noexcept {
  return geometry_ == Geometry::point ? 0 : group_->dimension();
}

Rational degree_shift(const EigenvalueProfile& profile) {
  Rational iota = 0;
  for (std::size_t k = 0; k < profile.multiplicities.size(); ++k) {
    if (profile.multiplicities[k] == 0) continue;
    Rational term(static_cast<unsigned long>(profile.multiplicities[k] * k), static_cast<unsigned long>(profile.order));
    term.canonicalize();
    iota += term;
  }
  iota.canonicalize();
  return iota;
}

Rational element_degree_shift(const FiniteMatrixGroup& group, ElementIndex g, Geometry geometry) {
  if (geometry == Geometry::point) return 0;
  return degree_shift(eigenvalue_profile(group, g));
}

InertiaDecomposition inertia(std::shared_ptr<const FiniteMatrixGroup> group, Geometry geometry) {
  if (!group) throw Error(ErrorCode::InvalidArgument, "inertia needs a group");
  std::vector<Sector> sectors;
  sectors.reserve(group->class_count());
  for (std::size_t c = 0; c < group->class_count(); ++c) {
    Sector s;
    s.class_index = c;
    s.inverse_sector = group->inverse_class(c);
    if (geometry == Geometry::linear) {
      const auto profile = eigenvalue_profile(*group, group->class_representative(c));
      s.iota = degree_shift(profile);
      s.fixed_dim = profile.multiplicities.front();
    }
    sectors.push_back(std::move(s));
  }
  return InertiaDecomposition(std::move(group), geometry, std::move(sectors));
}

VerificationReport check_lemma21(const InertiaDecomposition& dec) {
  const FiniteMatrixGroup& group = dec.group();
  const bool point = dec.geometry() == Geometry::point;
  const std::size_t n = dec.dimension();

  VerificationReport report;
  report.subject = "degree shifting numbers";
  auto& integrality = report.add("sl_integrality");
  auto& congruence = report.add("determinant_congruence");
  auto& complement = report.add("complement_dimension");
  auto& positivity = report.add("positivity");
  auto& involution = report.add("involution");

  bool all_integral = true;
  bool all_sl = true;
  for (ElementIndex g = 0; g < group.order(); ++g) {
    const Sector& s = dec.sector(dec.sector_of(g));
    all_integral = all_integral && is_integral(s.iota);
    if (point) continue;
    const Cyclotomic det = determinant(group.element(g));
    all_sl = all_sl && det.is_one();
    const std::size_t m = group.element_order(g);
    const auto exponent = det.root_of_unity_exponent(static_cast<std::int64_t>(m));
    Rational expected;
    if (exponent) {
      expected = Rational(static_cast<long>(*exponent), static_cast<unsigned long>(m));
      expected.canonicalize();
    }
    const bool ok = exponent && frac(s.iota) == expected;
    record(congruence, ok,
           "element " + std::to_string(g) + ": det = " + det.to_expression() + ", iota = " + to_string(s.iota));
  }
  record(integrality, all_integral == all_sl,
         std::string("all iota integral: ") + (all_integral ? "yes" : "no") +
             ", all determinants 1: " + (all_sl ? "yes" : "no"));

  const auto& sectors = dec.sectors();
  for (std::size_t i = 0; i < sectors.size(); ++i) {
    const Sector& s = sectors[i];
    const Sector& inv = sectors.at(s.inverse_sector);
    const std::string where = "sector " + std::to_string(i);
    record(complement, s.iota + inv.iota == Rational(static_cast<unsigned long>(n - s.fixed_dim)),
           where + ": iota + iota(inverse) = " + to_string(s.iota + inv.iota));
    // [pt/G] has every iota 0; the equality clause needs an effective action.
    const bool zero_ok = point || ((sgn(s.iota) == 0) == (i == 0));
    record(positivity, sgn(s.iota) >= 0 && zero_ok, where + ": iota = " + to_string(s.iota));
    record(involution, inv.inverse_sector == i && inv.fixed_dim == s.fixed_dim,
           where + " <-> sector " + std::to_string(s.inverse_sector));
  }
  return report;
}

}  // namespace orbk
