#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "orbk/matrix.hpp"

namespace orbk {

using ElementIndex = std::size_t;
/// Product of generators, left to right, by generator position.
using Word = std::vector<std::size_t>;

inline constexpr std::size_t kDefaultCap = 100000;
/// Groups up to this order keep a full multiplication table; larger groups
/// multiply by walking words through the generator permutations.
inline constexpr std::size_t kMultiplicationTableLimit = 4096;

struct ConjugacyClass {
  ElementIndex representative = 0;
  std::vector<ElementIndex> members;
  std::vector<ElementIndex> centralizer;
  std::size_t order = 1;
};

/// multiplicities[k] is the multiplicity of the eigenvalue exp(2 pi i k / order).
struct EigenvalueProfile {
  std::size_t order = 1;
  std::vector<std::size_t> multiplicities;

  std::size_t dimension() const;
  friend bool operator==(const EigenvalueProfile&, const EigenvalueProfile&) = default;
};

/// A fully enumerated finite subgroup of GL(n, Q(zeta_N)).
///
/// Elements are stored in canonical order: the identity at index 0, then the
/// remaining elements lexicographically by their flattened coefficient
/// vectors. The order depends only on the set of elements, never on the
/// generators. Immutable after close().
class FiniteMatrixGroup {
 public:
  /// Breadth-first closure. Throws CapExceeded, NonInvertibleGenerator,
  /// NonEffectiveAction, DimensionMismatch, ConductorMismatch.
  static FiniteMatrixGroup close(std::size_t dimension, unsigned conductor,
                                 std::span<const Matrix> generators, std::size_t cap = kDefaultCap);

  std::size_t order() const noexcept { return elements_.size(); }
  std::size_t dimension() const noexcept { return dimension_; }
  unsigned conductor() const noexcept { return conductor_; }

  const Matrix& element(ElementIndex i) const { return elements_.at(i); }
  std::span<const Matrix> elements() const noexcept { return elements_; }
  std::optional<ElementIndex> find(const Matrix& m) const;

  std::size_t generator_count() const noexcept { return generators_.size(); }
  /// Index of each generator, in input order.
  const std::vector<ElementIndex>& generator_indices() const noexcept { return generators_; }

  ElementIndex multiply(ElementIndex a, ElementIndex b) const;
  ElementIndex inverse(ElementIndex a) const { return inverse_.at(a); }
  ElementIndex power(ElementIndex a, std::int64_t k) const;
  /// h g h^-1.
  ElementIndex conjugate(ElementIndex h, ElementIndex g) const;
  std::size_t element_order(ElementIndex a) const { return orders_.at(a); }

  /// Shortlex-least word over the generators (empty for the identity).
  const Word& word(ElementIndex a) const { return words_.at(a); }
  /// Throws InvalidArgument when a letter is not a generator position.
  ElementIndex evaluate(const Word& w) const;

  bool has_multiplication_table() const noexcept { return !table_.empty(); }
  bool is_abelian() const noexcept { return abelian_; }

  std::size_t class_count() const noexcept { return class_members_.size(); }
  std::size_t class_of(ElementIndex g) const { return class_of_.at(g); }
  ElementIndex class_representative(std::size_t c) const { return class_members_.at(c).front(); }
  const std::vector<ElementIndex>& class_members(std::size_t c) const { return class_members_.at(c); }
  /// Class of g^-1 for g in class c.
  std::size_t inverse_class(std::size_t c) const { return class_of(inverse(class_representative(c))); }

  std::vector<ElementIndex> centralizer(ElementIndex g) const;

 private:
  FiniteMatrixGroup() = default;

  std::size_t dimension_ = 0;
  unsigned conductor_ = 1;
  std::vector<Matrix> elements_;
  std::unordered_map<Matrix, std::uint32_t, MatrixHash> index_;
  std::vector<ElementIndex> generators_;
  // right_[k][i] = index(elements_[i] * gen_k), left_[k][i] = index(gen_k * elements_[i]).
  std::vector<std::vector<std::uint32_t>> right_, right_inv_, left_, left_inv_;
  // Breadth-first spanning tree: elements_[i] = elements_[parent_[i]] * gen_{parent_gen_[i]}.
  std::vector<std::uint32_t> bfs_order_, parent_, parent_gen_;
  std::vector<Word> words_;
  std::vector<ElementIndex> inverse_;
  std::vector<std::size_t> orders_;
  std::vector<std::uint32_t> table_;
  bool abelian_ = true;
  std::vector<std::vector<ElementIndex>> class_members_;
  std::vector<std::size_t> class_of_;
};

/// Classes sorted by representative (the canonical minimum); identity first.
std::vector<ConjugacyClass> conjugacy_classes(const FiniteMatrixGroup& group);

std::vector<ElementIndex> centralizer(const FiniteMatrixGroup& group, ElementIndex g);

/// Exact eigenvalue multiplicities from the character sums
/// mult_k = (1/m) sum_j zeta_m^(-kj) trace(g^j). Throws InternalInconsistency
/// if a multiplicity comes out non-integral or negative.
EigenvalueProfile eigenvalue_profile(const FiniteMatrixGroup& group, ElementIndex g);

/// "0.1.0" <-> {0, 1, 0}; the empty string is the identity word.
Word parse_word(std::string_view text);
std::string format_word(const Word& w);

}  // namespace orbk
