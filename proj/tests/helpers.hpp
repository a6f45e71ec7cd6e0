#pragma once

#include <algorithm>
#include <initializer_list>
#include <string>
#include <vector>

#include "orbk/corpus.hpp"
#include "orbk/cyclotomic.hpp"
#include "orbk/fingroup.hpp"
#include "orbk/matrix.hpp"

namespace orbk::test {

inline Rational q(long p, unsigned long d = 1) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

inline Cyclotomic cyc(const std::string& text, unsigned conductor) { return parse_cyclotomic(text, conductor); }

inline Matrix rows(unsigned conductor, std::initializer_list<std::initializer_list<const char*>> entries) {
  std::vector<Cyclotomic> flat;
  for (const auto& r : entries) {
    for (const char* e : r) flat.push_back(cyc(e, conductor));
  }
  return Matrix(entries.size(), conductor, std::move(flat));
}

inline FiniteMatrixGroup close(const MatrixGroupInput& in) {
  return FiniteMatrixGroup::close(in.dimension, in.conductor, in.generators);
}

inline ElementIndex find(const FiniteMatrixGroup& g, const Matrix& m) {
  const auto i = g.find(m);
  if (!i) throw Error(ErrorCode::InvalidArgument, "matrix not in group");
  return *i;
}

inline std::vector<std::size_t> class_sizes(const FiniteMatrixGroup& g) {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < g.class_count(); ++c) out.push_back(g.class_members(c).size());
  return out;
}

inline std::vector<std::size_t> sorted(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Class of S3 elements with the given order: 1 identity, 2 transpositions, 3 three-cycles.
inline std::size_t class_with_order(const FiniteMatrixGroup& g, std::size_t order) {
  for (std::size_t c = 0; c < g.class_count(); ++c) {
    if (g.element_order(g.class_representative(c)) == order) return c;
  }
  throw Error(ErrorCode::InvalidArgument, "no class of that order");
}

}  // namespace orbk::test
