#include "orbk/ring.hpp"

#include <algorithm>

#include <array>

#include "orbk/error.hpp"
#include "orbk/moduli.hpp"

namespace orbk {

OrbClass OrbClass::basis(std::size_t sector) {
  OrbClass c;
  c.add(sector, 1);
  return c;
}

void OrbClass::add(std::size_t sector, const Rational& coefficient) {
  if (sgn(coefficient) == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(sector, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (sgn(it->second) == 0) coeffs_.erase(it);
  }
}

Rational OrbClass::coefficient(std::size_t sector) const {
  const auto it = coeffs_.find(sector);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

OrbClass OrbClass::scaled(const Rational& factor) const {
  OrbClass out;
  for (const auto& [s, c] : coeffs_) out.add(s, c * factor);
  return out;
}

OrbClass operator+(const OrbClass& a, const OrbClass& b) {
  OrbClass out = a;
  for (const auto& [s, c] : b.coeffs_) out.add(s, c);
  return out;
}

OrbClass RingTable::product(std::size_t a, std::size_t b) const {
  OrbClass out;
  const auto& row = structure.at(a).at(b);
  for (std::size_t d = 0; d < row.size(); ++d) out.add(d, row[d]);
  return out;
}

OrbClass RingTable::multiply(const OrbClass& a, const OrbClass& b) const {
  OrbClass out;
  for (const auto& [i, ci] : a.coefficients()) {
    for (const auto& [j, cj] : b.coefficients()) out = out + product(i, j).scaled(ci * cj);
  }
  return out;
}

Rational RingTable::pair(const OrbClass& a, const OrbClass& b) const {
  if (!gram) throw Error(ErrorCode::UnsupportedGeometry, "no pairing on this model");
  Rational r = 0;
  for (const auto& [i, ci] : a.coefficients()) {
    for (const auto& [j, cj] : b.coefficients()) r += ci * cj * (*gram)[i][j];
  }
  return r;
}

Rational threepoint_ptG(const FiniteMatrixGroup& group, std::size_t c1, std::size_t c2, std::size_t c3) {
  return kpoint_constant_count(group, SectorTuple{{c1, c2, c3}});
}

Rational pairing_ptG(const FiniteMatrixGroup& group, std::size_t c1, std::size_t c2) {
  return kpoint_constant_count(group, SectorTuple{{c1, c2}});
}

namespace {

RationalMatrix rational_inverse(RationalMatrix m) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    m[i].resize(2 * n);
    m[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m[p][c]) == 0) ++p;
    if (p == n) throw Error(ErrorCode::InternalInconsistency, "degenerate Gram matrix");
    std::swap(m[p], m[c]);
    const Rational inv = 1 / m[c][c];
    for (auto& x : m[c]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || sgn(m[r][c]) == 0) continue;
      const Rational f = m[r][c];
      for (std::size_t k = 0; k < 2 * n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  RationalMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) out[i].assign(m[i].begin() + n, m[i].end());
  return out;
}

std::string describe(std::initializer_list<std::size_t> idx) {
  std::string s = "(";
  for (auto it = idx.begin(); it != idx.end(); ++it) {
    if (it != idx.begin()) s += ", ";
    s += std::to_string(*it);
  }
  return s + ")";
}

}  // namespace

Rational rational_determinant(RationalMatrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m[p][c]) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(m[r][c]) == 0) continue;
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

RingTable ring_table_ptG(const FiniteMatrixGroup& group) {
  const std::size_t b = group.class_count();
  RingTable table;
  table.model = RingTable::Model::point_quotient;
  table.degrees.assign(b, 0);
  table.unit = 0;
  table.normalization = "<e_C, e_C'> = |C|/|G| if C' = C^-1; e_C corresponds to the class sum";

  RationalMatrix gram(b, std::vector<Rational>(b));
  for (std::size_t i = 0; i < b; ++i) {
    for (std::size_t j = 0; j < b; ++j) gram[i][j] = pairing_ptG(group, i, j);
  }
  const RationalMatrix gram_inv = rational_inverse(gram);

  table.structure.assign(b, RationalMatrix(b, std::vector<Rational>(b)));
  for (std::size_t i = 0; i < b; ++i) {
    for (std::size_t j = 0; j < b; ++j) {
      std::vector<Rational> t(b);
      for (std::size_t k = 0; k < b; ++k) t[k] = threepoint_ptG(group, i, j, k);
      for (std::size_t d = 0; d < b; ++d) {
        Rational c = 0;
        for (std::size_t k = 0; k < b; ++k) {
          if (sgn(t[k]) != 0) c += t[k] * gram_inv[k][d];
        }
        table.structure[i][j][d] = c;
      }
    }
  }
  table.gram = std::move(gram);
  return table;
}

OrbClass cup_product_ptG(const FiniteMatrixGroup& group, const OrbClass& a, const OrbClass& b) {
  return ring_table_ptG(group).multiply(a, b);
}

RingTable ring_table_abelian_linear(const InertiaDecomposition& dec) {
  if (dec.geometry() != Geometry::linear) {
    throw Error(ErrorCode::UnsupportedGeometry, "age-additive product needs a linear quotient");
  }
  const auto& group = dec.group();
  if (!group.is_abelian()) {
    throw Error(ErrorCode::NonAbelian, "cup product on a non-abelian linear quotient is not determined here");
  }
  const std::size_t b = dec.sectors().size();
  RingTable table;
  table.model = RingTable::Model::abelian_linear;
  table.unit = 0;
  table.normalization = "e_g * e_h = e_gh when ages add without wrap; no pairing (non-compact)";
  for (const auto& s : dec.sectors()) table.degrees.push_back(2 * s.iota);
  table.structure.assign(b, RationalMatrix(b, std::vector<Rational>(b)));
  for (std::size_t i = 0; i < b; ++i) {
    const ElementIndex g = group.class_representative(i);
    for (std::size_t j = 0; j < b; ++j) {
      const ElementIndex h = group.class_representative(j);
      const std::size_t d = dec.sector_of(group.multiply(g, h));
      if (dec.sector(i).iota + dec.sector(j).iota == dec.sector(d).iota) table.structure[i][j][d] = 1;
    }
  }
  return table;
}

OrbClass cup_product_abelian_linear(const InertiaDecomposition& dec, std::size_t a, std::size_t b) {
  const auto& sectors = dec.sectors();
  if (a >= sectors.size() || b >= sectors.size()) {
    throw Error(ErrorCode::InvalidArgument, "sector index out of range");
  }
  return ring_table_abelian_linear(dec).product(a, b);
}

VerificationReport verify_ring_axioms(const RingTable& table, const GradedDimensions& graded) {
  const std::size_t b = table.size();
  VerificationReport report;
  report.subject = table.model == RingTable::Model::point_quotient ? "ring [pt/G]" : "ring abelian [C^n/G]";
  auto& assoc = report.add("associativity");
  auto& unit = report.add("unit");
  auto& comm = report.add("supercommutativity");
  auto& degree = report.add("degree_additivity");
  auto& dims = report.add("graded_dimensions");
  auto& nontwisted = report.add("nontwisted_subring");

  const bool integral_shifts = std::all_of(table.degrees.begin(), table.degrees.end(), [](const Rational& d) {
    return is_integral(d) && mpz_even_p(d.get_num_mpz_t());
  });
  std::vector<OrbClass> products(b * b);
  for (std::size_t i = 0; i < b; ++i) {
    for (std::size_t j = 0; j < b; ++j) products[i * b + j] = table.product(i, j);
  }
  const auto basis_times = [&](const OrbClass& x, std::size_t k, bool left) {
    OrbClass out;
    for (const auto& [i, c] : x.coefficients()) out = out + (left ? products[k * b + i] : products[i * b + k]).scaled(c);
    return out;
  };

  for (std::size_t i = 0; i < b; ++i) {
    record(unit, products[table.unit * b + i] == OrbClass::basis(i) && products[i * b + table.unit] == OrbClass::basis(i),
           "basis " + std::to_string(i));
    for (std::size_t j = 0; j < b; ++j) {
      const OrbClass& ij = products[i * b + j];
      // The graded sign rule is only asserted for integral degree shifts;
      // otherwise the product is plainly commutative.
      const Rational& di = table.degrees[i];
      const Rational& dj = table.degrees[j];
      const bool odd = integral_shifts && is_integral(di) && is_integral(dj) && mpz_odd_p(di.get_num_mpz_t()) &&
                       mpz_odd_p(dj.get_num_mpz_t());
      record(comm, ij == (odd ? products[j * b + i].scaled(-1) : products[j * b + i]), describe({i, j}));
      for (const auto& [d, c] : ij.coefficients()) {
        record(degree, table.degrees[d] == di + dj, describe({i, j, d}));
      }
      for (std::size_t k = 0; k < b; ++k) {
        const OrbClass left = basis_times(ij, k, false);
        const OrbClass right = basis_times(products[j * b + k], i, true);
        record(assoc, left == right, describe({i, j, k}));
      }
    }
  }

  GradedDimensions from_table;
  for (const auto& d : table.degrees) from_table.add(d);
  record(dims, from_table == graded, "basis degrees versus graded table");

  // The untwisted sector of a point (or contractible C^n) carries H^0 = Q.
  record(nontwisted, products[table.unit * b + table.unit] == OrbClass::basis(table.unit) &&
                         sgn(table.degrees[table.unit]) == 0,
         "e_1 * e_1");

  if (table.gram) {
    const auto& gram = *table.gram;
    auto& symmetric = report.add("gram_symmetric");
    auto& nondegenerate = report.add("gram_nondegenerate");
    auto& frobenius = report.add("frobenius");
    for (std::size_t i = 0; i < b; ++i) {
      for (std::size_t j = 0; j < b; ++j) record(symmetric, gram[i][j] == gram[j][i], describe({i, j}));
    }
    record(nondegenerate, sgn(rational_determinant(gram)) != 0, "Gram determinant");
    for (std::size_t i = 0; i < b; ++i) {
      for (std::size_t j = 0; j < b; ++j) {
        for (std::size_t k = 0; k < b; ++k) {
          const Rational lhs = table.pair(products[i * b + j], OrbClass::basis(k));
          const Rational rhs = table.pair(OrbClass::basis(i), products[j * b + k]);
          record(frobenius, lhs == rhs, describe({i, j, k}));
        }
      }
    }
  }
  return report;
}

}  // namespace orbk
