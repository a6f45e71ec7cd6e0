#include "orbk/corpus.hpp"

#include <numeric>

namespace orbk {

namespace groups {

namespace {

Cyclotomic z(unsigned n, std::int64_t k) { return Cyclotomic::root_of_unity(n, k); }
Cyclotomic q(unsigned n, long v) { return Cyclotomic::from_rational(n, v); }

Matrix from_ints(std::size_t n, const std::vector<long>& entries) {
  std::vector<Cyclotomic> e;
  for (long v : entries) e.push_back(q(1, v));
  return Matrix(n, 1, std::move(e));
}

}  // namespace

MatrixGroupInput cyclic_sl2(unsigned n) {
  return {2, n, Geometry::linear, {Matrix::diagonal(n, {z(n, 1), z(n, -1)})}};
}

MatrixGroupInput cyclic_gl1(unsigned n) { return {1, n, Geometry::linear, {Matrix::diagonal(n, {z(n, 1)})}}; }

MatrixGroupInput z4_mixed() { return {2, 4, Geometry::linear, {Matrix::diagonal(4, {z(4, 1), q(4, -1)})}}; }

MatrixGroupInput klein_four() {
  return {2, 1, Geometry::linear,
          {Matrix::diagonal(1, {q(1, -1), q(1, 1)}), Matrix::diagonal(1, {q(1, 1), q(1, -1)})}};
}

MatrixGroupInput s3_permutation() {
  return {3, 1, Geometry::linear,
          {from_ints(3, {0, 1, 0, 1, 0, 0, 0, 0, 1}), from_ints(3, {0, 0, 1, 1, 0, 0, 0, 1, 0})}};
}

MatrixGroupInput quaternion() {
  Matrix j(2, 4);
  j.set(0, 1, q(4, 1));
  j.set(1, 0, q(4, -1));
  return {2, 4, Geometry::linear, {Matrix::diagonal(4, {z(4, 1), z(4, 3)}), j}};
}

}  // namespace groups

std::vector<CorpusEntry> builtin_corpus() {
  std::vector<CorpusEntry> out;
  for (unsigned n = 2; n <= 12; ++n) out.push_back({"Z" + std::to_string(n) + " in SL(2)", groups::cyclic_sl2(n)});
  out.push_back({"Z3 in GL(1)", groups::cyclic_gl1(3)});
  out.push_back({"Z4 = <diag(z4, -1)>", groups::z4_mixed()});
  out.push_back({"Z2 + Z2 on C^2", groups::klein_four()});
  out.push_back({"S3 on C^3", groups::s3_permutation()});
  out.push_back({"Q8 in SU(2)", groups::quaternion()});
  for (unsigned n = 2; n <= 9; ++n) {
    if (n == 3) continue;
    out.push_back({"Z" + std::to_string(n) + " on C", groups::cyclic_gl1(n)});
  }
  return out;
}

std::vector<std::vector<unsigned>> wps_corpus(unsigned max_sum) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> current;
  auto rec = [&](auto&& self, unsigned remaining) -> void {
    if (current.size() >= 2) {
      unsigned g = 0;
      for (unsigned w : current) g = std::gcd(g, w);
      if (g == 1) out.push_back(current);
    }
    for (unsigned w = 1; w <= remaining; ++w) {
      current.push_back(w);
      self(self, remaining - w);
      current.pop_back();
    }
  };
  rec(rec, max_sum);
  return out;
}

std::shared_ptr<const FiniteMatrixGroup> close_group(const MatrixGroupInput& input, std::size_t cap) {
  return std::make_shared<const FiniteMatrixGroup>(
      FiniteMatrixGroup::close(input.dimension, input.conductor, input.generators, cap));
}

}  // namespace orbk
