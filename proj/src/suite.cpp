#include "orbk/suite.hpp"

#include <algorithm>
#include <functional>

#include "orbk/cohomology.hpp"
#include "orbk/corpus.hpp"
#include "orbk/error.hpp"
#include "orbk/goodmaps.hpp"
#include "orbk/moduli.hpp"
#include "orbk/ring.hpp"

namespace orbk {

namespace oracle {

namespace {

std::size_t class_by_matrix(const FiniteMatrixGroup& group, const Matrix& m) {
  const auto idx = group.find(m);
  if (!idx) throw Error(ErrorCode::InternalInconsistency, "product left the group");
  return group.class_of(*idx);
}

}  // namespace

std::vector<std::vector<std::vector<Integer>>> class_sum_convolution(const FiniteMatrixGroup& group) {
  const std::size_t b = group.class_count();
  std::vector<std::vector<std::vector<Integer>>> out(b, std::vector<std::vector<Integer>>(b, std::vector<Integer>(b, 0)));
  for (std::size_t ca = 0; ca < b; ++ca) {
    for (std::size_t cb = 0; cb < b; ++cb) {
      for (auto x : group.class_members(ca)) {
        for (auto y : group.class_members(cb)) {
          ++out[ca][cb][class_by_matrix(group, group.element(x) * group.element(y))];
        }
      }
      // Totals over C_d spread evenly across its members.
      for (std::size_t d = 0; d < b; ++d) out[ca][cb][d] /= static_cast<unsigned long>(group.class_members(d).size());
    }
  }
  return out;
}

Integer product_tuples(const FiniteMatrixGroup& group, const std::vector<std::size_t>& classes) {
  Integer count = 0;
  const Matrix identity = Matrix::identity(group.dimension(), group.conductor());
  std::function<void(std::size_t, const Matrix&)> rec = [&](std::size_t depth, const Matrix& acc) {
    if (depth == classes.size()) {
      if (acc == identity) ++count;
      return;
    }
    for (auto h : group.class_members(classes[depth])) rec(depth + 1, acc * group.element(h));
  };
  rec(0, identity);
  return count;
}

}  // namespace oracle

namespace {

std::string idx(std::size_t i) { return std::to_string(i); }

void check_group_structure(const FiniteMatrixGroup& g, VerificationReport& r) {
  auto& orbit = r.add("orbit_stabilizer");
  auto& partition = r.add("class_partition");
  auto& det = r.add("determinant_multiplicative");
  auto& profile = r.add("profile_power_pullback");
  auto& table = r.add("multiplication_consistent");

  const auto classes = conjugacy_classes(g);
  std::vector<int> hits(g.order(), 0);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const auto& cls = classes[c];
    record(orbit, cls.members.size() * cls.centralizer.size() == g.order(), "class " + idx(c));
    for (auto m : cls.members) ++hits[m];
    record(partition, cls.representative == cls.members.front(), "class " + idx(c) + " representative");
  }
  record(partition, std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }), "cover");
  if (g.order() <= 48) {
    for (ElementIndex h = 0; h < g.order(); ++h) {
      for (std::size_t c = 0; c < classes.size(); ++c) {
        bool same = true;
        for (auto m : classes[c].members) same = same && g.class_of(g.conjugate(h, m)) == c;
        record(partition, same, "conjugation by " + idx(h) + " on class " + idx(c));
      }
    }
  }

  const std::size_t limit = std::min<std::size_t>(g.order(), 48);
  std::vector<Cyclotomic> dets;
  for (ElementIndex a = 0; a < g.order(); ++a) dets.push_back(determinant(g.element(a)));
  for (ElementIndex a = 0; a < limit; ++a) {
    for (ElementIndex b = 0; b < limit; ++b) {
      const ElementIndex ab = g.multiply(a, b);
      record(det, dets[ab] == dets[a] * dets[b], "(" + idx(a) + ", " + idx(b) + ")");
      record(table, g.element(ab) == g.element(a) * g.element(b), "(" + idx(a) + ", " + idx(b) + ")");
    }
  }

  // Profile of g^j from the profile of g: exponent k moves to k*j scaled to the order of g^j.
  for (ElementIndex a = 0; a < limit; ++a) {
    const auto base = eigenvalue_profile(g, a);
    const std::size_t m = base.order;
    for (std::size_t j = 1; j < m; ++j) {
      const ElementIndex p = g.power(a, static_cast<std::int64_t>(j));
      const auto direct = eigenvalue_profile(g, p);
      EigenvalueProfile pulled;
      pulled.order = direct.order;
      pulled.multiplicities.assign(direct.order, 0);
      for (std::size_t k = 0; k < m; ++k) {
        const std::size_t e = (k * j) % m;
        pulled.multiplicities[e * direct.order / m] += base.multiplicities[k];
      }
      record(profile, pulled == direct, "element " + idx(a) + " power " + idx(j));
    }
  }
}

void check_cohomology(const InertiaDecomposition& dec, VerificationReport& r) {
  auto& total = r.add("total_equals_class_count");
  auto& euler = r.add("euler_equals_total");
  auto& range = r.add("degree_range");
  const auto table = orbifold_poincare_linear(dec);
  record(total, table.total() == dec.group().class_count(), "total " + idx(table.total()));
  record(euler, orbifold_euler(dec) == table.total(), "euler " + idx(orbifold_euler(dec)));
  bool sl = true;
  for (ElementIndex a = 0; a < dec.group().order(); ++a) sl = sl && determinant(dec.group().element(a)).is_one();
  for (const auto& [d, dim] : table.entries()) {
    const bool in_range = sgn(d) >= 0 && d <= Rational(static_cast<unsigned long>(2 * dec.dimension()));
    const bool even = !sl || (is_integral(d) && mpz_even_p(d.get_num_mpz_t()));
    record(range, in_range && even, "degree " + to_string(d));
  }
  if (sl && dec.geometry() == Geometry::linear) {
    auto& mckay = r.add("mckay_count");
    const auto rep = mckay_report(dec);
    record(mckay, rep.class_count == rep.table.total() && rep.predicted_betti == rep.class_count, "class count");
  }
}

void check_point_ring(const FiniteMatrixGroup& g, VerificationReport& r, const std::string& name) {
  const auto dec = inertia(std::make_shared<const FiniteMatrixGroup>(g), Geometry::point);
  const auto table = ring_table_ptG(g);
  auto axioms = verify_ring_axioms(table, orbifold_poincare_linear(dec));
  for (auto& c : axioms.checks) {
    c.name = "ptG_" + c.name;
    r.checks.push_back(std::move(c));
  }
  auto& oracle_check = r.add("ptG_convolution_oracle");
  if (g.order() <= 24) {
    const auto conv = oracle::class_sum_convolution(g);
    const std::size_t b = g.class_count();
    for (std::size_t i = 0; i < b; ++i) {
      for (std::size_t j = 0; j < b; ++j) {
        for (std::size_t d = 0; d < b; ++d) {
          record(oracle_check, table.structure[i][j][d] == Rational(conv[i][j][d]),
                 name + " c(" + idx(i) + ", " + idx(j) + "; " + idx(d) + ")");
        }
      }
    }
  }
}

void check_counting(const FiniteMatrixGroup& g, VerificationReport& r) {
  auto& k2 = r.add("kpoint2_matches_oracle");
  auto& k3 = r.add("kpoint3_matches_oracle");
  const std::size_t b = g.class_count();
  const Rational order(static_cast<unsigned long>(g.order()));
  if (g.order() > 24) return;
  for (std::size_t i = 0; i < b; ++i) {
    for (std::size_t j = 0; j < b; ++j) {
      const Rational brute2 = Rational(oracle::product_tuples(g, {i, j})) / order;
      record(k2, kpoint_constant_count(g, SectorTuple{{i, j}}) == brute2 && pairing_ptG(g, i, j) == brute2,
             "(" + idx(i) + ", " + idx(j) + ")");
      for (std::size_t k = 0; k < b; ++k) {
        const Rational brute3 = Rational(oracle::product_tuples(g, {i, j, k})) / order;
        record(k3, kpoint_constant_count(g, SectorTuple{{i, j, k}}) == brute3 && threepoint_ptG(g, i, j, k) == brute3,
               "(" + idx(i) + ", " + idx(j) + ", " + idx(k) + ")");
      }
    }
  }
  if (g.order() > 12) return;
  auto& vanish = r.add("vanishing_iff_empty");
  auto& symmetry = r.add("kpoint_permutation_symmetry");
  for (std::size_t k = 1; k <= 4; ++k) {
    std::vector<std::size_t> t(k, 0);
    while (true) {
      const SectorTuple type{t};
      const bool nonempty = component_nonempty_ptG(g, type);
      const Integer count = count_product_tuples(g, t);
      record(vanish, nonempty == (count != 0), "tuple of length " + idx(k));
      auto perm = t;
      std::sort(perm.begin(), perm.end());
      do {
        record(symmetry, count_product_tuples(g, perm) == count, "tuple of length " + idx(k));
      } while (std::next_permutation(perm.begin(), perm.end()));
      std::size_t pos = 0;
      while (pos < k && ++t[pos] == b) t[pos++] = 0;
      if (pos == k) break;
    }
  }
}

void check_goodness(const FiniteMatrixGroup& g, const InertiaDecomposition& dec, VerificationReport& r) {
  auto& agree = r.add("goodness_matches_lift_scan");
  auto& mono = r.add("lifts_are_monomorphisms");
  for (ElementIndex e = 1; e < g.order(); ++e) {
    if (dec.sector(dec.sector_of(e)).fixed_dim == 0) continue;
    const auto verdict = fixed_locus_goodness(g, e);
    const auto via_lifts = goodness_via_lifts(g, e);
    if (via_lifts) record(agree, *via_lifts == verdict.good, "element " + idx(e));
    for (const auto& s : verdict.splittings) {
      record(mono, s.image.size() == verdict.problem.quotient_order, "splitting of element " + idx(e));
    }
  }
}

}  // namespace

std::vector<VerificationReport> verify_matrix_group(const std::string& name, const MatrixGroupInput& input) {
  const auto group = close_group(input);
  const auto& g = *group;
  std::vector<VerificationReport> out;

  VerificationReport structure;
  structure.subject = name + ": group";
  check_group_structure(g, structure);
  out.push_back(std::move(structure));

  const auto dec = inertia(group, input.geometry);
  auto lemma = check_lemma21(dec);
  lemma.subject = name + ": " + lemma.subject;
  out.push_back(std::move(lemma));

  VerificationReport cohom;
  cohom.subject = name + ": cohomology";
  check_cohomology(dec, cohom);
  out.push_back(std::move(cohom));

  VerificationReport ring;
  ring.subject = name + ": rings";
  check_point_ring(g, ring, name);
  if (input.geometry == Geometry::linear && g.is_abelian()) {
    auto axioms = verify_ring_axioms(ring_table_abelian_linear(dec), orbifold_poincare_linear(dec));
    for (auto& c : axioms.checks) {
      c.name = "abelian_" + c.name;
      ring.checks.push_back(std::move(c));
    }
  }
  out.push_back(std::move(ring));

  VerificationReport counting;
  counting.subject = name + ": counting";
  check_counting(g, counting);
  out.push_back(std::move(counting));

  if (input.geometry == Geometry::linear) {
    VerificationReport good;
    good.subject = name + ": goodness";
    check_goodness(g, dec, good);
    out.push_back(std::move(good));
  }
  return out;
}

std::vector<VerificationReport> verify_wps(const std::vector<unsigned>& weights) {
  const WeightedProjectiveSpace space(weights);
  std::string name = "P(";
  for (std::size_t i = 0; i < weights.size(); ++i) name += (i ? "," : "") + std::to_string(weights[i]);
  name += ")";

  VerificationReport r;
  r.subject = name;
  auto& duality = r.add("duality");
  auto& euler = r.add("euler_equals_total");
  auto& positivity = r.add("positivity");
  auto& range = r.add("degree_range");
  auto& involution = r.add("sector_involution");
  const auto table = orbifold_poincare_wps(space);
  const std::size_t n = space.dimension();
  record(duality, satisfies_duality(table, n), name);
  record(euler, orbifold_euler(space) == table.total(), name);
  const auto sectors = wps_sectors(space);
  for (const auto& s : sectors) {
    record(positivity, sgn(s.iota) >= 0 && ((sgn(s.iota) == 0) == (sgn(s.q) == 0)), "q = " + to_string(s.q));
    // Sector 1-q is the inverse sector; the age complement mirrors the linear case.
    const Rational inv_q = sgn(s.q) == 0 ? Rational(0) : Rational(1 - s.q);
    const auto it = std::find_if(sectors.begin(), sectors.end(), [&](const WpsSector& t) { return t.q == inv_q; });
    const bool ok = it != sectors.end() && it->fixed_weights.size() == s.fixed_weights.size() &&
                    s.iota + it->iota == Rational(static_cast<unsigned long>(n + 1 - s.fixed_weights.size()));
    record(involution, ok, "q = " + to_string(s.q));
  }
  for (const auto& [d, dim] : table.entries()) {
    record(range, sgn(d) >= 0 && d <= Rational(static_cast<unsigned long>(2 * n)), "degree " + to_string(d));
  }
  return {r};
}

std::vector<VerificationReport> verify_builtin_corpus() {
  std::vector<VerificationReport> out;
  for (const auto& entry : builtin_corpus()) {
    for (auto& r : verify_matrix_group(entry.name, entry.input)) out.push_back(std::move(r));
  }
  for (const auto& w : wps_corpus(10)) {
    for (auto& r : verify_wps(w)) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace orbk
