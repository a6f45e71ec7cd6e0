#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "orbk/cyclotomic.hpp"

namespace orbk {

/// Square matrix over Q(zeta_N), row-major; all entries share one conductor.
class Matrix {
 public:
  Matrix(std::size_t dimension, unsigned conductor);
  /// Row-major entries; throws DimensionMismatch / ConductorMismatch.
  Matrix(std::size_t dimension, unsigned conductor, std::vector<Cyclotomic> entries);

  static Matrix identity(std::size_t dimension, unsigned conductor);
  static Matrix diagonal(unsigned conductor, const std::vector<Cyclotomic>& diag);

  std::size_t dimension() const noexcept { return n_; }
  unsigned conductor() const noexcept { return conductor_; }
  const Cyclotomic& operator()(std::size_t row, std::size_t col) const { return entries_[row * n_ + col]; }
  void set(std::size_t row, std::size_t col, Cyclotomic value);
  const std::vector<Cyclotomic>& entries() const noexcept { return entries_; }

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) { return a.entries_ == b.entries_; }
  /// Lexicographic on the flattened canonical coefficient vectors.
  friend std::strong_ordering compare(const Matrix& a, const Matrix& b);

  bool is_identity() const;
  Cyclotomic trace() const;
  std::size_t hash() const noexcept;

  /// Same matrix over Q(zeta_M), M a multiple of conductor().
  Matrix embed(unsigned new_conductor) const;

 private:
  std::size_t n_;
  unsigned conductor_;
  std::vector<Cyclotomic> entries_;
};

/// Fraction-free (Bareiss) elimination with row pivoting.
Cyclotomic determinant(const Matrix& m);

/// Throws InvalidArgument when singular.
Matrix inverse(const Matrix& m);

/// Basis (as column vectors) of the kernel of m, in reduced echelon form.
std::vector<std::vector<Cyclotomic>> kernel_basis(const Matrix& m);

std::vector<Cyclotomic> apply(const Matrix& m, const std::vector<Cyclotomic>& v);

struct MatrixHash {
  std::size_t operator()(const Matrix& m) const noexcept { return m.hash(); }
};

}  // namespace orbk
