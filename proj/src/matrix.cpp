#include "orbk/matrix.hpp"

#include <utility>

#include "orbk/error.hpp"

namespace orbk {

Matrix::Matrix(std::size_t dimension, unsigned conductor)
    : n_(dimension), conductor_(conductor), entries_(dimension * dimension, Cyclotomic::zero(conductor)) {}

Matrix::Matrix(std::size_t dimension, unsigned conductor, std::vector<Cyclotomic> entries)
    : n_(dimension), conductor_(conductor), entries_(std::move(entries)) {
  if (entries_.size() != n_ * n_) {
    throw Error(ErrorCode::DimensionMismatch, "matrix needs " + std::to_string(n_ * n_) + " entries");
  }
  for (const auto& e : entries_) {
    if (e.conductor() != conductor_) {
      throw Error(ErrorCode::ConductorMismatch, "matrix entry has conductor " +
                                                    std::to_string(e.conductor()) + ", expected " +
                                                    std::to_string(conductor_));
    }
  }
}

Matrix Matrix::identity(std::size_t dimension, unsigned conductor) {
  Matrix m(dimension, conductor);
  for (std::size_t i = 0; i < dimension; ++i) m.entries_[i * dimension + i] = Cyclotomic::one(conductor);
  return m;
}

Matrix Matrix::diagonal(unsigned conductor, const std::vector<Cyclotomic>& diag) {
  Matrix m(diag.size(), conductor);
  for (std::size_t i = 0; i < diag.size(); ++i) m.set(i, i, diag[i]);
  return m;
}

void Matrix::set(std::size_t row, std::size_t col, Cyclotomic value) {
  if (value.conductor() != conductor_) throw Error(ErrorCode::ConductorMismatch, "matrix entry conductor");
  entries_[row * n_ + col] = std::move(value);
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.n_ != b.n_) throw Error(ErrorCode::DimensionMismatch, "matrix product dimension");
  if (a.conductor_ != b.conductor_) throw Error(ErrorCode::ConductorMismatch, "matrix product conductor");
  const std::size_t n = a.n_;
  Matrix out(n, a.conductor_);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Cyclotomic& aik = a.entries_[i * n + k];
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const Cyclotomic& bkj = b.entries_[k * n + j];
        if (bkj.is_zero()) continue;
        out.entries_[i * n + j] += aik * bkj;
      }
    }
  }
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.n_ != b.n_) throw Error(ErrorCode::DimensionMismatch, "matrix difference dimension");
  Matrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] -= b.entries_[i];
  return out;
}

std::strong_ordering compare(const Matrix& a, const Matrix& b) {
  for (std::size_t i = 0; i < a.entries_.size(); ++i) {
    const auto c = compare(a.entries_[i], b.entries_[i]);
    if (c != 0) return c;
  }
  return std::strong_ordering::equal;
}

bool Matrix::is_identity() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      const Cyclotomic& e = entries_[i * n_ + j];
      if (i == j ? !e.is_one() : !e.is_zero()) return false;
    }
  }
  return true;
}

Cyclotomic Matrix::trace() const {
  Cyclotomic t = Cyclotomic::zero(conductor_);
  for (std::size_t i = 0; i < n_; ++i) t += entries_[i * n_ + i];
  return t;
}

std::size_t Matrix::hash() const noexcept {
  std::size_t h = n_;
  for (const auto& e : entries_) h = (h * 0x100000001b3ULL) ^ e.hash();
  return h;
}

Matrix Matrix::embed(unsigned new_conductor) const {
  std::vector<Cyclotomic> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.embed(new_conductor));
  return Matrix(n_, new_conductor, std::move(out));
}

Cyclotomic determinant(const Matrix& m) {
  const std::size_t n = m.dimension();
  const unsigned N = m.conductor();
  if (n == 0) return Cyclotomic::one(N);
  std::vector<Cyclotomic> a = m.entries();
  auto at = [&](std::size_t r, std::size_t c) -> Cyclotomic& { return a[r * n + c]; };
  Cyclotomic prev = Cyclotomic::one(N);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && at(pivot, k).is_zero()) ++pivot;
    if (pivot == n) return Cyclotomic::zero(N);
    if (pivot != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(at(k, c), at(pivot, c));
      negate = !negate;
    }
    const Cyclotomic prev_inv = prev.inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        at(i, j) = (at(k, k) * at(i, j) - at(i, k) * at(k, j)) * prev_inv;
      }
      at(i, k) = Cyclotomic::zero(N);
    }
    prev = at(k, k);
  }
  Cyclotomic det = at(n - 1, n - 1);
  return negate ? -det : det;
}

namespace {

// Gauss-Jordan on an n x cols augmented array; returns pivot columns.
std::vector<std::size_t> row_reduce(std::vector<std::vector<Cyclotomic>>& rows, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const Cyclotomic inv = rows[r][c].inverse();
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const Cyclotomic f = rows[i][c];
      for (std::size_t k = 0; k < rows[i].size(); ++k) rows[i][k] -= f * rows[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Matrix inverse(const Matrix& m) {
  const std::size_t n = m.dimension();
  const unsigned N = m.conductor();
  std::vector<std::vector<Cyclotomic>> rows(n, std::vector<Cyclotomic>(2 * n, Cyclotomic::zero(N)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = m(i, j);
    rows[i][n + i] = Cyclotomic::one(N);
  }
  if (row_reduce(rows, n).size() != n) throw Error(ErrorCode::InvalidArgument, "singular matrix");
  Matrix out(n, N);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.set(i, j, rows[i][n + j]);
  }
  return out;
}

std::vector<std::vector<Cyclotomic>> kernel_basis(const Matrix& m) {
  const std::size_t n = m.dimension();
  const unsigned N = m.conductor();
  std::vector<std::vector<Cyclotomic>> rows(n, std::vector<Cyclotomic>(n, Cyclotomic::zero(N)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = m(i, j);
  }
  const auto pivots = row_reduce(rows, n);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Cyclotomic>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Cyclotomic> v(n, Cyclotomic::zero(N));
    v[free] = Cyclotomic::one(N);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Cyclotomic> apply(const Matrix& m, const std::vector<Cyclotomic>& v) {
  const std::size_t n = m.dimension();
  std::vector<Cyclotomic> out(n, Cyclotomic::zero(m.conductor()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!m(i, j).is_zero() && !v[j].is_zero()) out[i] += m(i, j) * v[j];
    }
  }
  return out;
}

}  // namespace orbk
