#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "orbk/fingroup.hpp"
#include "orbk/rational.hpp"

namespace orbk {

/// Conjugacy classes (X_(g1), ..., X_(gk)) hit by the marked points.
struct SectorTuple {
  std::vector<std::size_t> class_indices;
  friend bool operator==(const SectorTuple&, const SectorTuple&) = default;
};

SectorTuple classify_type(const FiniteMatrixGroup& group, std::span<const ElementIndex> elements);

/// #{(h_1, ..., h_k) in C_1 x ... x C_k : h_1 ... h_k = 1}, exact.
/// The single counting engine behind pairing, three-point and k-point numbers.
Integer count_product_tuples(const FiniteMatrixGroup& group, std::span<const std::size_t> classes);

/// Whether some choice h_i in C_i multiplies to the identity; decided by a
/// meet-in-the-middle intersection of half-products, independent of the count.
bool component_nonempty_ptG(const FiniteMatrixGroup& group, const SectorTuple& type);

/// Genus-zero, degree-zero invariant of [pt/G] with k >= 2 marks:
/// count_product_tuples / |G|.
Rational kpoint_constant_count(const FiniteMatrixGroup& group, const SectorTuple& type);

struct DimensionInput {
  Rational c1a;
  std::size_t complex_dim = 0;
  std::size_t genus = 0;
  std::size_t marks = 0;
  std::vector<Rational> iotas;
};

/// 2d with d = c1(TX).A + (dim X - 3)(1 - g) + k - sum(iotas).
/// Throws InvalidArgument when the iota count differs from the marks.
Rational virtual_dimension(const DimensionInput& input);

}  // namespace orbk
