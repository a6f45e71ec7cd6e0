#include "orbk/moduli.hpp"

#include <algorithm>

#include "orbk/error.hpp"

namespace orbk {

namespace {

void check_classes(const FiniteMatrixGroup& group, std::span<const std::size_t> classes) {
  for (auto c : classes) {
    if (c >= group.class_count()) {
      throw Error(ErrorCode::InvalidArgument, "class index " + std::to_string(c) + " out of range");
    }
  }
}

// All products h_1 ... h_k with h_i in the given classes, as a membership mask.
std::vector<bool> product_set(const FiniteMatrixGroup& group, std::span<const std::size_t> classes) {
  std::vector<bool> current(group.order(), false);
  current[0] = true;
  for (auto c : classes) {
    std::vector<bool> next(group.order(), false);
    for (ElementIndex x = 0; x < group.order(); ++x) {
      if (!current[x]) continue;
      for (auto h : group.class_members(c)) next[group.multiply(x, h)] = true;
    }
    current = std::move(next);
  }
  return current;
}

}  // namespace

SectorTuple classify_type(const FiniteMatrixGroup& group, std::span<const ElementIndex> elements) {
  SectorTuple t;
  for (auto g : elements) {
    if (g >= group.order()) throw Error(ErrorCode::InvalidArgument, "element index out of range");
    t.class_indices.push_back(group.class_of(g));
  }
  return t;
}

Integer count_product_tuples(const FiniteMatrixGroup& group, std::span<const std::size_t> classes) {
  check_classes(group, classes);
  std::vector<Integer> ways(group.order(), 0);
  ways[0] = 1;
  for (auto c : classes) {
    std::vector<Integer> next(group.order(), 0);
    for (ElementIndex x = 0; x < group.order(); ++x) {
      if (ways[x] == 0) continue;
      for (auto h : group.class_members(c)) next[group.multiply(x, h)] += ways[x];
    }
    ways = std::move(next);
  }
  return ways[0];
}

bool component_nonempty_ptG(const FiniteMatrixGroup& group, const SectorTuple& type) {
  const auto& cls = type.class_indices;
  if (cls.empty()) throw Error(ErrorCode::InvalidArgument, "sector tuple needs at least one mark");
  check_classes(group, cls);
  const std::size_t half = cls.size() / 2;
  const auto left = product_set(group, std::span(cls).first(half));
  const auto right = product_set(group, std::span(cls).subspan(half));
  for (ElementIndex x = 0; x < group.order(); ++x) {
    if (left[x] && right[group.inverse(x)]) return true;
  }
  return false;
}

Rational kpoint_constant_count(const FiniteMatrixGroup& group, const SectorTuple& type) {
  if (type.class_indices.size() < 2) {
    throw Error(ErrorCode::InvalidArgument, "k-point count needs k >= 2");
  }
  Rational r(count_product_tuples(group, type.class_indices), Integer(static_cast<unsigned long>(group.order())));
  r.canonicalize();
  return r;
}

Rational virtual_dimension(const DimensionInput& input) {
  if (input.iotas.size() != input.marks) {
    throw Error(ErrorCode::InvalidArgument, "expected " + std::to_string(input.marks) + " iota values, got " +
                                                std::to_string(input.iotas.size()));
  }
  Rational iota_sum = 0;
  for (const auto& iota : input.iotas) {
    if (sgn(iota) < 0) throw Error(ErrorCode::InvalidArgument, "iota values must be nonnegative");
    iota_sum += iota;
  }
  const long dim_term = (static_cast<long>(input.complex_dim) - 3) * (1 - static_cast<long>(input.genus));
  const Rational d = input.c1a + dim_term + static_cast<long>(input.marks) - iota_sum;
  return 2 * d;
}

}  // namespace orbk
